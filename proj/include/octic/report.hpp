#pragma once

// Run drivers behind the CLI and the C API. Each produces a versioned JSON
// report (schema "octic-monogen/1"); every big integer is a decimal string.

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "octic/families.hpp"

namespace octic {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "octic-monogen/1";
const char* version();

Json poly_json(const ZPoly& p);
Json poly_json(const QPoly& p);
Json candidate_json(const Candidate& c);
Json family_params(const FamilySpec& spec);
Json index_report_json(const IndexReport& r);

struct RunOptions {
  unsigned jobs = 1;
  UnitChoice units = UnitChoice::Default;
  bool timings = true;
};

struct RunResult {
  Json report;
  // 0: clean run / verdict reproduced; 2: verdict mismatch; 1: validation error.
  int exit_code = 0;
};

RunResult run_verify(const std::vector<FamilySpec>& specs, const std::optional<std::vector<Candidate>>& cands,
                     const RunOptions& opts, const Json& config);
RunResult run_pipeline(const FamilySpec& spec, long bound, const RunOptions& opts, const Json& config);
RunResult run_thue(const BigInt& T, long bound, const RunOptions& opts, const Json& config);
// candidate_index < 0 dumps every candidate.
RunResult run_jpoly(const FamilySpec& spec, int candidate_index, const std::optional<QuadInt>& eps,
                    const std::optional<std::vector<Candidate>>& cands, const RunOptions& opts, const Json& config);
// Random-element identity checks: index factorization, index-form identity,
// discriminant relation.
RunResult run_oracle(const FamilySpec& spec, unsigned samples, std::uint64_t seed, const RunOptions& opts,
                     const Json& config);

// Candidate lists for the composite family (JSON lines).
struct CandidateRecord {
  long d = 0;
  long m = 0;
  Candidate candidate;
  std::size_t line = 0;
};

struct IngestRejection {
  std::size_t line = 0;
  ErrorKind kind = ErrorKind::ParseError;
  std::string message;
};

struct IngestResult {
  std::vector<CandidateRecord> accepted;
  std::vector<IngestRejection> rejected;
};

// Rows look like {"d": 3, "m": 2, "X": "1+0*w", "Y": "0", "Z": "0"}. Each row
// is checked to have relative index 1 in its (d, m) order; bad rows are
// rejected with their line number. Throws Io if the file cannot be read.
IngestResult ingest_candidates(const std::string& path);
IngestResult ingest_candidates(std::istream& in);

RunResult run_ingest(const std::string& path, const Json& config);

}  // namespace octic
