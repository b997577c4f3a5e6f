#include "edgeglue/embedding.hpp"
#include "edgeglue/error.hpp"
#include "edgeglue/extremal.hpp"
#include "edgeglue/graph6.hpp"

#include <boost/crc.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace edgeglue {

namespace {

std::string crc_hex(const std::string& text) {
  boost::crc_32_type crc;
  crc.process_bytes(text.data(), text.size());
  std::ostringstream out;
  out << std::hex << std::setw(8) << std::setfill('0') << crc.checksum();
  return out.str();
}

[[noreturn]] void invariant(const std::string& message) {
  fail(ErrorCode::InvariantViolation, "record invariant: " + message);
}

}  // namespace

nlohmann::json to_json(const ExtremalRecord& r) {
  nlohmann::json forbidden = nlohmann::json::array();
  for (const auto& label : r.forbidden) forbidden.push_back(label.bytes);
  return nlohmann::json{{"kind", to_string(r.kind)},   {"forbidden", forbidden},
                        {"size", r.size},              {"value", r.value},
                        {"witness", r.witness},        {"method", to_string(r.method)},
                        {"runtime_ms", r.runtime_ms}};
}

ExtremalRecord record_from_json(const nlohmann::json& j) {
  try {
    ExtremalRecord r;
    r.kind = parse_kind(j.at("kind").get<std::string>());
    for (const auto& f : j.at("forbidden")) r.forbidden.push_back({f.get<std::string>()});
    r.size = j.at("size").get<std::vector<std::uint64_t>>();
    r.value = j.at("value").get<std::uint64_t>();
    r.witness = j.at("witness").get<std::string>();
    r.method = parse_method(j.at("method").get<std::string>());
    r.runtime_ms = j.at("runtime_ms").get<std::uint64_t>();
    return r;
  } catch (const nlohmann::json::exception& ex) {
    fail(ErrorCode::ParseError, std::string("record: ") + ex.what());
  }
}

void validate(const ExtremalRecord& r) {
  if (r.forbidden.empty()) invariant("empty forbidden set");
  LabeledGraph witness;
  try {
    witness = decode_graph6(r.witness);
  } catch (const Error&) {
    invariant("witness is not graph6");
  }
  if (witness.edge_count() != r.value) {
    invariant("witness has " + std::to_string(witness.edge_count()) + " edges, value is " +
              std::to_string(r.value));
  }
  if (r.kind == ExtremalKind::Turan) {
    if (r.size.size() != 1 || witness.vertex_count() != r.size[0]) invariant("witness size mismatch");
    for (const auto& label : r.forbidden) {
      if (!is_free(witness, decode_label(label))) invariant("witness contains a forbidden graph");
    }
  } else {
    if (r.size.size() != 2 || witness.vertex_count() != r.size[0] + r.size[1]) {
      invariant("witness size mismatch");
    }
    std::vector<Sign> signs(witness.vertex_count(), Sign::Minus);
    std::fill(signs.begin(), signs.begin() + static_cast<std::ptrdiff_t>(r.size[0]), Sign::Plus);
    SignedBipartiteGraph host;
    try {
      host = SignedBipartiteGraph::from_signing(witness, signs);
    } catch (const Error&) {
      invariant("witness has an edge inside one side");
    }
    for (const auto& label : r.forbidden) {
      if (!is_free(host, decode_signed_label(label))) invariant("witness contains the forbidden graph");
    }
  }
}

RecordStore::RecordStore(std::string path) : path_(std::move(path)) {}

std::vector<ExtremalRecord> RecordStore::load() const {
  std::vector<ExtremalRecord> out;
  std::ifstream in(path_);
  if (!in) return out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    const std::string where = path_ + ":" + std::to_string(number);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception&) {
      fail(ErrorCode::CorruptStore, where + ": not JSON");
    }
    if (!j.is_object() || !j.contains("crc") || !j.contains("record") || !j["crc"].is_string()) {
      fail(ErrorCode::CorruptStore, where + ": missing crc or record");
    }
    const auto body = j["record"].dump();
    if (crc_hex(body) != j["crc"].get<std::string>()) {
      fail(ErrorCode::CorruptStore, where + ": checksum mismatch");
    }
    try {
      out.push_back(record_from_json(j["record"]));
    } catch (const Error& e) {
      fail(ErrorCode::CorruptStore, where + ": " + e.what());
    }
  }
  return out;
}

std::optional<ExtremalRecord> RecordStore::find(ExtremalKind kind,
                                                const std::vector<CanonicalLabel>& forbidden,
                                                const std::vector<std::uint64_t>& size) const {
  for (auto& r : load()) {
    if (r.kind == kind && r.forbidden == forbidden && r.size == size) return r;
  }
  return std::nullopt;
}

bool RecordStore::store(const ExtremalRecord& r) {
  validate(r);
  if (find(r.kind, r.forbidden, r.size)) return false;
  const auto body = to_json(r).dump();
  std::ofstream out(path_, std::ios::app);
  if (!out) fail(ErrorCode::IoError, "cannot open record store '" + path_ + "' for writing");
  out << R"({"crc":")" << crc_hex(body) << R"(","record":)" << body << "}\n";
  if (!out) fail(ErrorCode::IoError, "write to record store '" + path_ + "' failed");
  return true;
}

void store_record(const std::string& path, const ExtremalRecord& r) { RecordStore(path).store(r); }

std::vector<ExtremalRecord> load_records(const std::string& path, const RecordQuery& query) {
  std::vector<ExtremalRecord> out;
  for (auto& r : RecordStore(path).load()) {
    if (query.kind && r.kind != *query.kind) continue;
    if (query.size && r.size != *query.size) continue;
    if (query.forbidden && r.forbidden != *query.forbidden) continue;
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<RatioRow> ratio_report(const SignedBipartiteGraph& h, std::span<const std::size_t> sizes,
                                   SearchMethod method, const ExtremalCaps& caps) {
  std::vector<RatioRow> rows;
  const LabeledGraph unsigned_h[1] = {h.as_labeled()};
  for (auto n : sizes) {
    RatioRow row;
    row.n = n;
    try {
      row.ex = exact_turan(n, unsigned_h, method, caps).value;
      row.z = exact_zarankiewicz(n, n, h, method, caps).value;
      if (*row.z > 0) row.ratio = Rational(*row.ex) / Rational(*row.z);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SizeExceeded) throw;
      row.skipped = true;
      row.note = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace edgeglue
