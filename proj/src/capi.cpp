#include "octic/octic.h"

#include <fstream>
#include <memory>
#include <thread>

#include "octic/parallel.hpp"
#include "octic/report.hpp"

struct octic_family {
  octic::FamilySpec spec;
};

struct octic_candidates {
  std::vector<octic::Candidate> list;
};

struct octic_report {
  std::string json;
  int exit_code = 0;
};

namespace {

thread_local std::string last_error;

octic_status status_for(octic::ErrorKind kind) {
  using K = octic::ErrorKind;
  switch (kind) {
    case K::ParseError: return OCTIC_ERR_PARSE;
    case K::Io: return OCTIC_ERR_IO;
    case K::CandidateMismatch: return OCTIC_ERR_MISMATCH;
    case K::InvalidArgument:
    case K::InvalidFamily:
    case K::NonSquarefree:
    case K::BasisMismatch:
    case K::CompositeNeedsIngest:
    case K::FieldMismatch:
    case K::RelIndexNotOne: return OCTIC_ERR_INVALID_ARGUMENT;
    case K::NotDivisible:
    case K::StructureMismatch:
    case K::ZeroPolynomial:
    case K::NotMonic:
    case K::NotPrimitive:
    case K::NotPrimitiveAbs:
    case K::NotSplit: return OCTIC_ERR_MATH;
    case K::InexactSqrt:
    case K::InexactDivision:
    case K::NonIntegerCoefficients:
    case K::WrongDegree:
    case K::Internal: return OCTIC_ERR_INTERNAL;
  }
  return OCTIC_ERR_INTERNAL;
}

template <class Fn>
octic_status guarded(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return OCTIC_OK;
  } catch (const octic::Error& e) {
    last_error = e.what();
    return status_for(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return OCTIC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return OCTIC_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw octic::Error(octic::ErrorKind::InvalidArgument, std::string(what) + " is null");
}

octic::RunOptions run_options(const octic_options* opts) {
  octic::RunOptions r;
  if (opts == nullptr) return r;
  r.jobs = opts->jobs == 0 ? octic::default_jobs() : opts->jobs;
  switch (opts->units) {
    case OCTIC_UNITS_ALL: r.units = octic::UnitChoice::All; break;
    case OCTIC_UNITS_MOD_SIGN: r.units = octic::UnitChoice::ModuloSign; break;
    default: r.units = octic::UnitChoice::Default; break;
  }
  r.timings = opts->timings != 0;
  return r;
}

octic::Json config_of(const char* config_json) {
  if (config_json == nullptr || *config_json == '\0') return octic::Json::object();
  try {
    return octic::Json::parse(config_json);
  } catch (const octic::Json::parse_error& e) {
    throw octic::Error(octic::ErrorKind::ParseError, std::string("config: ") + e.what());
  }
}

octic_report* make_report(const octic::RunResult& r) {
  auto* rep = new octic_report;
  rep->json = r.report.dump(2) + "\n";
  rep->exit_code = r.exit_code;
  return rep;
}

octic::BigInt big(const char* s, const char* what) {
  require(s, what);
  return octic::parse_bigint(s);
}

std::optional<std::vector<octic::Candidate>> cand_list(const octic_candidates* c) {
  if (c == nullptr) return std::nullopt;
  return c->list;
}

}  // namespace

extern "C" {

const char* octic_version(void) { return octic::version(); }

const char* octic_last_error(void) { return last_error.c_str(); }

const char* octic_status_name(octic_status status) {
  switch (status) {
    case OCTIC_OK: return "OK";
    case OCTIC_ERR_INVALID_ARGUMENT: return "INVALID_ARGUMENT";
    case OCTIC_ERR_PARSE: return "PARSE";
    case OCTIC_ERR_MATH: return "MATH";
    case OCTIC_ERR_MISMATCH: return "MISMATCH";
    case OCTIC_ERR_IO: return "IO";
    case OCTIC_ERR_INTERNAL: return "INTERNAL";
  }
  return "UNKNOWN";
}

void octic_options_init(octic_options* opts) {
  if (opts == nullptr) return;
  opts->jobs = 0;
  opts->units = OCTIC_UNITS_DEFAULT;
  opts->timings = 1;
}

octic_status octic_family_d4(const char* T, octic_family** out) {
  return guarded([&] {
    require(out, "out");
    *out = new octic_family{octic::FamilySpec::d4(big(T, "T"))};
  });
}

octic_status octic_family_composite(long d, long m, octic_family** out) {
  return guarded([&] {
    require(out, "out");
    *out = new octic_family{octic::FamilySpec::composite(d, m)};
  });
}

octic_status octic_family_param1(long d, const char* t1, const char* t2, octic_family** out) {
  return guarded([&] {
    require(out, "out");
    *out = new octic_family{octic::FamilySpec::param_i(d, big(t1, "t1"), big(t2, "t2"))};
  });
}

octic_status octic_family_param2(long d, const char* t1, const char* t2, octic_family** out) {
  return guarded([&] {
    require(out, "out");
    *out = new octic_family{octic::FamilySpec::param_ii(d, big(t1, "t1"), big(t2, "t2"))};
  });
}

int octic_family_hypothesis_holds(const octic_family* family) {
  return family != nullptr && family->spec.hypothesis_holds() ? 1 : 0;
}

void octic_family_free(octic_family* family) { delete family; }

octic_status octic_candidates_ingest(const char* path, octic_candidates** out, octic_report** diagnostics) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    const octic::IngestResult res = octic::ingest_candidates(std::string(path));
    auto cands = std::make_unique<octic_candidates>();
    for (const auto& r : res.accepted) cands->list.push_back(r.candidate);
    if (diagnostics != nullptr) *diagnostics = make_report(octic::run_ingest(path, octic::Json::object()));
    *out = cands.release();
  });
}

size_t octic_candidates_count(const octic_candidates* cands) { return cands == nullptr ? 0 : cands->list.size(); }

void octic_candidates_free(octic_candidates* cands) { delete cands; }

octic_status octic_index(const octic_family* family, const char* A, const char* X, const char* Y, const char* Z,
                         octic_report** out) {
  return guarded([&] {
    require(family, "family");
    require(out, "out");
    for (const char* p : {A, X, Y, Z}) require(p, "coordinate");
    const octic::QuadField& f = family->spec.field();
    const octic::OcticElement e{octic::QuadInt::parse(f, A), octic::QuadInt::parse(f, X),
                                octic::QuadInt::parse(f, Y), octic::QuadInt::parse(f, Z)};
    octic::RunResult r;
    r.report["schema"] = octic::kSchema;
    r.report["version"] = octic::version();
    r.report["command"] = "index";
    r.report["element"] = e.to_string();
    r.report["index"] = octic::index_report_json(octic::index_report(family->spec.order(), e));
    *out = make_report(r);
  });
}

octic_status octic_verify(const octic_family* const* families, size_t count, const octic_candidates* cands,
                          const char* config_json, const octic_options* opts, octic_report** out) {
  return guarded([&] {
    require(out, "out");
    if (count > 0) require(families, "families");
    std::vector<octic::FamilySpec> specs;
    for (size_t i = 0; i < count; ++i) {
      require(families[i], "family");
      specs.push_back(families[i]->spec);
    }
    *out = make_report(octic::run_verify(specs, cand_list(cands), run_options(opts), config_of(config_json)));
  });
}

octic_status octic_pipeline(const octic_family* family, long bound, const char* config_json,
                            const octic_options* opts, octic_report** out) {
  return guarded([&] {
    require(family, "family");
    require(out, "out");
    *out = make_report(octic::run_pipeline(family->spec, bound, run_options(opts), config_of(config_json)));
  });
}

octic_status octic_thue(const char* T, long bound, const char* config_json, const octic_options* opts,
                        octic_report** out) {
  return guarded([&] {
    require(out, "out");
    *out = make_report(octic::run_thue(big(T, "T"), bound, run_options(opts), config_of(config_json)));
  });
}

octic_status octic_jpoly(const octic_family* family, int candidate_index, const char* eps,
                         const octic_candidates* cands, const char* config_json, const octic_options* opts,
                         octic_report** out) {
  return guarded([&] {
    require(family, "family");
    require(out, "out");
    std::optional<octic::QuadInt> e;
    if (eps != nullptr) e = octic::QuadInt::parse(family->spec.field(), eps);
    *out = make_report(octic::run_jpoly(family->spec, candidate_index, e, cand_list(cands), run_options(opts),
                                        config_of(config_json)));
  });
}

octic_status octic_oracle(const octic_family* family, unsigned samples, uint64_t seed, const char* config_json,
                          const octic_options* opts, octic_report** out) {
  return guarded([&] {
    require(family, "family");
    require(out, "out");
    *out = make_report(octic::run_oracle(family->spec, samples, seed, run_options(opts), config_of(config_json)));
  });
}

octic_status octic_ingest(const char* path, const char* config_json, octic_report** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = make_report(octic::run_ingest(path, config_of(config_json)));
  });
}

const char* octic_report_json(const octic_report* report) { return report == nullptr ? "" : report->json.c_str(); }

int octic_report_exit_code(const octic_report* report) { return report == nullptr ? 1 : report->exit_code; }

octic_status octic_report_write(const octic_report* report, const char* path) {
  return guarded([&] {
    require(report, "report");
    require(path, "path");
    std::ofstream f(path, std::ios::binary);
    if (!f) throw octic::Error(octic::ErrorKind::Io, std::string("cannot write '") + path + "'");
    f << report->json;
    if (!f) throw octic::Error(octic::ErrorKind::Io, std::string("write failed for '") + path + "'");
  });
}

void octic_report_free(octic_report* report) { delete report; }

}  // extern "C"
