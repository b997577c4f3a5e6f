#pragma once

#include "edgeglue/canonical.hpp"
#include "edgeglue/graph.hpp"
#include "edgeglue/rational.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace edgeglue {

enum class ExtremalKind { Turan, Zarankiewicz };
enum class SearchMethod { Oracle, BranchAndBound, Cached };

std::string to_string(ExtremalKind kind);
std::string to_string(SearchMethod method);
ExtremalKind parse_kind(std::string_view text);
SearchMethod parse_method(std::string_view text);

struct ExtremalCaps {
  std::size_t turan_oracle_n = 7;
  std::size_t turan_bnb_n = 10;
  std::size_t zarankiewicz_oracle_cells = 36;
  std::size_t zarankiewicz_bnb_cells = 64;
};

struct ExtremalRecord {
  ExtremalKind kind = ExtremalKind::Turan;
  // Sorted certificates of the forbidden graphs.
  std::vector<CanonicalLabel> forbidden;
  // {n} for Turan, {m, n} for Zarankiewicz.
  std::vector<std::uint64_t> size;
  std::uint64_t value = 0;
  // graph6; Zarankiewicz witnesses list the m + vertices first.
  std::string witness;
  SearchMethod method = SearchMethod::BranchAndBound;
  std::uint64_t runtime_ms = 0;

  friend bool operator==(const ExtremalRecord&, const ExtremalRecord&) = default;
};

nlohmann::json to_json(const ExtremalRecord& r);
ExtremalRecord record_from_json(const nlohmann::json& j);

// Throws InvariantViolation unless the witness has the declared size, has
// exactly `value` edges and avoids every forbidden graph.
void validate(const ExtremalRecord& r);

// ex(n, forbidden). Throws EmptyForbiddenSet, SizeExceeded, and
// PreconditionViolated for an edgeless forbidden graph.
ExtremalRecord exact_turan(std::size_t n, std::span<const LabeledGraph> forbidden,
                           SearchMethod method = SearchMethod::BranchAndBound,
                           const ExtremalCaps& caps = {});

// z(m, n, h) over signed hosts with m + vertices and n - vertices.
ExtremalRecord exact_zarankiewicz(std::size_t m, std::size_t n, const SignedBipartiteGraph& h,
                                  SearchMethod method = SearchMethod::BranchAndBound,
                                  const ExtremalCaps& caps = {});

struct RatioRow {
  std::size_t n = 0;
  std::optional<std::uint64_t> ex;
  std::optional<std::uint64_t> z;
  // Absent when z = 0 or the row was skipped.
  std::optional<Rational> ratio;
  bool skipped = false;
  std::string note;
};

// ex(n, h) against z(n, n, signed h) for each n; a row over the caps is
// marked skipped instead of failing.
std::vector<RatioRow> ratio_report(const SignedBipartiteGraph& h, std::span<const std::size_t> sizes,
                                   SearchMethod method = SearchMethod::BranchAndBound,
                                   const ExtremalCaps& caps = {});

// Append-only JSON-lines store, one {"crc", "record"} object per line.
class RecordStore {
 public:
  explicit RecordStore(std::string path);

  // False (and nothing written) when a record with the same kind, forbidden
  // set and size is already stored. Throws InvariantViolation, IoError.
  bool store(const ExtremalRecord& r);

  // Throws CorruptStore on a checksum or format mismatch. A missing file
  // reads as empty.
  std::vector<ExtremalRecord> load() const;

  std::optional<ExtremalRecord> find(ExtremalKind kind, const std::vector<CanonicalLabel>& forbidden,
                                     const std::vector<std::uint64_t>& size) const;

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

struct RecordQuery {
  std::optional<ExtremalKind> kind;
  std::optional<std::vector<std::uint64_t>> size;
  std::optional<std::vector<CanonicalLabel>> forbidden;
};

void store_record(const std::string& path, const ExtremalRecord& r);
std::vector<ExtremalRecord> load_records(const std::string& path, const RecordQuery& query = {});

// Sorted certificates, as used for record keys.
std::vector<CanonicalLabel> forbidden_key(std::span<const LabeledGraph> forbidden);
std::vector<CanonicalLabel> forbidden_key(const SignedBipartiteGraph& h);

}  // namespace edgeglue
