#include "octic/report.hpp"

#include <chrono>
#include <random>

namespace octic {

const char* version() { return OCTIC_VERSION; }

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

Json header(const char* command, const Json& config) {
  Json j;
  j["schema"] = kSchema;
  j["version"] = version();
  j["command"] = command;
  j["config"] = config;
  return j;
}

Json ints_json(const std::vector<BigInt>& xs) {
  Json a = Json::array();
  for (const BigInt& x : xs) a.push_back(to_string(x));
  return a;
}

Json verdict_json(const Verdict& v, const FamilySpec& spec, bool timings) {
  Json j;
  j["family"] = to_string(spec.kind());
  j["params"] = family_params(spec);
  j["candidate"] = candidate_json(v.candidate);
  j["eps"] = v.eps.to_string();
  j["degree"] = v.degree;
  j["divisibility"] = to_string(v.divisibility);
  j["pib_solutions"] = ints_json(v.pib_solutions);
  j["status"] = to_string(v.status);
  j["rel_index"] = to_string(v.rel_index);
  j["value_gcd"] = to_string(v.value_gcd);
  if (timings) j["timings"] = Json{{"seconds", v.seconds}};
  return j;
}

Json theorem_json(const TheoremReport& rep, const FamilySpec& spec, bool timings) {
  Json j;
  j["family"] = to_string(spec.kind());
  j["params"] = family_params(spec);
  j["hypothesis"] = spec.hypothesis();
  j["hypothesis_holds"] = rep.hypothesis_holds;
  j["status"] = to_string(rep.status);
  j["notes"] = rep.notes;
  Json vs = Json::array();
  for (const Verdict& v : rep.verdicts) vs.push_back(verdict_json(v, spec, timings));
  j["verdicts"] = vs;
  return j;
}

// Whether a theorem report contradicts the published claim for its family.
bool theorem_mismatch(const TheoremReport& rep, const FamilySpec& spec) {
  if (rep.status == VerdictStatus::PibFound) return true;
  if (!rep.hypothesis_holds || spec.kind() == FamilyKind::Composite) return false;
  for (const Verdict& v : rep.verdicts) {
    if (v.divisibility != 16) return true;
  }
  return false;
}

Json thue_json(const ThueSolution& s) {
  return Json{{"P", s.P.to_string()}, {"Q", s.Q.to_string()}, {"unit", s.unit.to_string()}};
}

// The six classes (1,0), (0,1), (1, +-(1+i)T), ((1+i)T, +-1) in canonical form.
std::vector<std::pair<QuadInt, QuadInt>> expected_thue_classes(const BigInt& T) {
  const QuadField& f = make_field(1, BasisKind::Sqrt);
  const QuadInt t(f, T, T);
  std::vector<std::pair<QuadInt, QuadInt>> out{
      canonical_pair(f.one(), f.zero()), canonical_pair(f.zero(), f.one()), canonical_pair(f.one(), t),
      canonical_pair(f.one(), -t),       canonical_pair(t, f.one()),        canonical_pair(t, -f.one()),
  };
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.second != y.second) return x.second < y.second;
    return x.first < y.first;
  });
  return out;
}

}  // namespace

Json poly_json(const ZPoly& p) {
  Json a = Json::array();
  for (const BigInt& c : p.coeffs()) a.push_back(to_string(c));
  return a;
}

Json poly_json(const QPoly& p) {
  Json a = Json::array();
  for (const QuadInt& c : p.coeffs()) a.push_back(c.to_string());
  return a;
}

Json candidate_json(const Candidate& c) {
  return Json{{"X", c.X.to_string()}, {"Y", c.Y.to_string()}, {"Z", c.Z.to_string()}, {"label", c.label}};
}

Json family_params(const FamilySpec& spec) {
  Json j;
  j["d"] = spec.d();
  j["basis"] = to_string(spec.field().basis());
  switch (spec.kind()) {
    case FamilyKind::D4: j["T"] = to_string(spec.T()); break;
    case FamilyKind::Composite: j["m"] = spec.m(); break;
    case FamilyKind::ParamI:
    case FamilyKind::ParamII:
      j["t1"] = to_string(spec.t().a());
      j["t2"] = to_string(spec.t().b());
      break;
  }
  j["g"] = poly_json(spec.order().g());
  return j;
}

Json index_report_json(const IndexReport& r) {
  return Json{{"rel_index", to_string(r.rel_index)},
              {"j_value", to_string(r.j_value)},
              {"abs_index", to_string(r.abs_index)},
              {"primitive_rel", r.primitive_rel},
              {"primitive_abs", r.primitive_abs}};
}

RunResult run_verify(const std::vector<FamilySpec>& specs, const std::optional<std::vector<Candidate>>& cands,
                     const RunOptions& opts, const Json& config) {
  const auto start = Clock::now();
  RunResult out{header("verify", config), 0};
  std::vector<TheoremReport> reports;
  if (cands) {
    // Composite lists carry their own (d, m); run each instance on the
    // candidates that live in its field.
    for (const FamilySpec& s : specs) {
      std::vector<Candidate> mine;
      for (const Candidate& c : *cands) {
        if (&c.X.field() == &s.field()) mine.push_back(c);
      }
      reports.push_back(verify_theorem(s, VerifyOptions{opts.jobs, opts.units, mine}));
    }
  } else {
    reports = verify_grid(specs, VerifyOptions{opts.jobs, opts.units, std::nullopt});
  }
  Json results = Json::array();
  bool mismatch = false;
  bool all_no_pib = true;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    results.push_back(theorem_json(reports[i], specs[i], opts.timings));
    mismatch = mismatch || theorem_mismatch(reports[i], specs[i]);
    all_no_pib = all_no_pib && reports[i].status == VerdictStatus::NoPib;
  }
  out.report["results"] = results;
  out.report["status"] = mismatch ? "MISMATCH" : (all_no_pib ? "NO_PIB" : "HYPOTHESIS_UNMET");
  if (opts.timings) out.report["timings"] = Json{{"total_seconds", since(start)}};
  out.exit_code = mismatch ? 2 : 0;
  return out;
}

RunResult run_pipeline(const FamilySpec& spec, long bound, const RunOptions& opts, const Json& config) {
  const auto start = Clock::now();
  RunResult out{header("pipeline", config), 0};
  const PipelineReport rep = relative_pipeline(spec, bound, opts.jobs);
  Json stages;
  Json uv = Json::array();
  for (const UVSolution& s : rep.uv) {
    uv.push_back(Json{{"U", s.U.to_string()}, {"V", s.V.to_string()}, {"eps", s.eps.to_string()}});
  }
  stages["uv_solutions"] = uv;
  Json thue = Json::array();
  for (const ThueSolution& s : rep.thue) thue.push_back(thue_json(s));
  stages["thue_classes"] = thue;
  Json par = Json::array();
  for (std::size_t i = 0; i < rep.parametrized.size(); ++i) {
    Json c = candidate_json(rep.parametrized[i]);
    c["rel_index"] = to_string(rep.parametrized_rel_index[i]);
    par.push_back(c);
  }
  stages["parametrized"] = par;
  Json classes = Json::array(), missing = Json::array(), extra = Json::array();
  for (const Candidate& c : rep.classes) classes.push_back(candidate_json(c));
  for (const Candidate& c : rep.missing) missing.push_back(candidate_json(c));
  for (const Candidate& c : rep.extra) extra.push_back(candidate_json(c));
  stages["relative_generator_classes"] = classes;
  stages["missing_from_search"] = missing;
  stages["extra_classes"] = extra;
  stages["matches_printed_list"] = rep.matches;
  stages["theorem"] = theorem_json(rep.theorem, spec, opts.timings);
  out.report["bound"] = bound;
  out.report["stages"] = stages;
  const bool mismatch = (spec.hypothesis_holds() && !rep.matches) || theorem_mismatch(rep.theorem, spec);
  out.report["status"] = mismatch ? "MISMATCH" : to_string(rep.theorem.status);
  if (opts.timings) {
    out.report["timings"] = Json{{"uv_seconds", rep.seconds_uv},
                                 {"thue_seconds", rep.seconds_thue},
                                 {"classes_seconds", rep.seconds_classes},
                                 {"verify_seconds", rep.seconds_verify},
                                 {"total_seconds", since(start)}};
  }
  out.exit_code = mismatch ? 2 : 0;
  return out;
}

RunResult run_thue(const BigInt& T, long bound, const RunOptions& opts, const Json& config) {
  const auto start = Clock::now();
  RunResult out{header("thue", config), 0};
  const std::vector<ThueSolution> sols = thue_bounded_search(T, bound, opts.jobs);
  Json arr = Json::array();
  for (const ThueSolution& s : sols) arr.push_back(thue_json(s));
  out.report["T"] = to_string(T);
  out.report["bound"] = bound;
  out.report["solutions"] = arr;

  std::vector<std::pair<QuadInt, QuadInt>> found;
  for (const ThueSolution& s : sols) found.emplace_back(s.P, s.Q);
  const auto expected = expected_thue_classes(T);
  const bool applicable = abs(T) > 11 && BigInt(bound) >= abs(T);
  const bool equal = found == expected;
  out.report["matches_published_list"] = equal;
  out.report["status"] = !applicable ? "INFORMATIONAL" : (equal ? "MATCH" : "MISMATCH");
  if (opts.timings) out.report["timings"] = Json{{"total_seconds", since(start)}};
  out.exit_code = (applicable && !equal) ? 2 : 0;
  return out;
}

RunResult run_jpoly(const FamilySpec& spec, int candidate_index, const std::optional<QuadInt>& eps,
                    const std::optional<std::vector<Candidate>>& cands, const RunOptions& opts, const Json& config) {
  const auto start = Clock::now();
  RunResult out{header("jpoly", config), 0};
  const std::vector<Candidate> all = cands ? *cands : candidates(spec);
  if (candidate_index >= static_cast<int>(all.size())) {
    throw Error(ErrorKind::InvalidArgument, "candidate index out of range (have " + std::to_string(all.size()) + ")");
  }
  std::vector<QuadInt> units = eps ? std::vector<QuadInt>{*eps} : units_for(spec, opts.units);
  Json arr = Json::array();
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (candidate_index >= 0 && static_cast<int>(i) != candidate_index) continue;
    for (const QuadInt& u : units) {
      const JPoly jp = jpoly(spec, all[i], u);
      Json j;
      j["family"] = to_string(spec.kind());
      j["params"] = family_params(spec);
      j["candidate"] = candidate_json(all[i]);
      j["eps"] = u.to_string();
      j["degree"] = jp.poly.degree();
      j["sign_normalization"] = jp.sign_flip;
      j["poly"] = poly_json(jp.poly);
      j["divisible_by_16"] = divisibility_verdict(jp.poly, 16);
      j["value_gcd"] = to_string(value_gcd(jp.poly));
      arr.push_back(j);
    }
  }
  out.report["results"] = arr;
  out.report["status"] = "OK";
  if (opts.timings) out.report["timings"] = Json{{"total_seconds", since(start)}};
  return out;
}

RunResult run_oracle(const FamilySpec& spec, unsigned samples, std::uint64_t seed, const RunOptions& opts,
                     const Json& config) {
  const auto start = Clock::now();
  RunResult out{header("oracle", config), 0};
  const QuadField& f = spec.field();
  const RelQuarticOrder& order = spec.order();
  const ResolventForms forms = resolvent_forms(order.g());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-3, 3);
  auto rnd = [&]() { return QuadInt(f, coord(rng), coord(rng)); };

  std::size_t factorization_ok = 0, factorization_checked = 0;
  std::size_t form_ok = 0;
  Json failures = Json::array();
  for (unsigned s = 0; s < samples; ++s) {
    const OcticElement e{rnd(), rnd(), rnd(), rnd()};
    // Index-form identity.
    const BigInt form = index_form_eval(forms, e.X, e.Y, e.Z).norm();
    BigInt ri = 0;
    bool prim = true;
    try {
      ri = rel_index(order, e);
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::NotPrimitive) throw;
      prim = false;
    }
    if ((prim && form == ri) || (!prim && sgn(form) == 0)) {
      ++form_ok;
    } else {
      failures.push_back(Json{{"check", "index_form"}, {"element", e.to_string()}});
    }
    // Index factorization on primitive elements.
    const IndexReport r = index_report(order, e);
    if (r.primitive_abs) {
      ++factorization_checked;
      if (r.abs_index == r.rel_index * r.j_value && r.rel_index == ri && r.j_value == j_value(order, e)) {
        ++factorization_ok;
      } else {
        failures.push_back(Json{{"check", "factorization"}, {"element", e.to_string()}});
      }
    }
  }
  const DiscRelation dr = disc_relation(order);
  out.report["family"] = to_string(spec.kind());
  out.report["params"] = family_params(spec);
  out.report["samples"] = samples;
  out.report["seed"] = std::to_string(seed);
  out.report["index_form_identity"] = Json{{"ok", form_ok}, {"checked", samples}};
  out.report["index_factorization"] = Json{{"ok", factorization_ok}, {"checked", factorization_checked}};
  out.report["disc_relation"] = Json{{"holds", dr.holds},
                                     {"gram_disc", to_string(dr.gram_disc)},
                                     {"formula_disc", to_string(dr.formula_disc)},
                                     {"octic_disc", to_string(dr.octic_disc)},
                                     {"j_theta", to_string(dr.j_theta)}, {"theta_shifted", dr.theta_shifted}};
  out.report["failures"] = failures;
  const bool ok = failures.empty() && dr.holds;
  out.report["status"] = ok ? "OK" : "MISMATCH";
  if (opts.timings) out.report["timings"] = Json{{"total_seconds", since(start)}};
  out.exit_code = ok ? 0 : 2;
  return out;
}

RunResult run_ingest(const std::string& path, const Json& config) {
  RunResult out{header("ingest", config), 0};
  const IngestResult res = ingest_candidates(path);
  Json acc = Json::array(), rej = Json::array();
  for (const CandidateRecord& r : res.accepted) {
    Json j = candidate_json(r.candidate);
    j["d"] = r.d;
    j["m"] = r.m;
    j["line"] = r.line;
    acc.push_back(j);
  }
  for (const IngestRejection& r : res.rejected) {
    rej.push_back(Json{{"line", r.line}, {"error", to_string(r.kind)}, {"message", r.message}});
  }
  out.report["path"] = path;
  out.report["accepted"] = acc;
  out.report["rejected"] = rej;
  out.report["status"] = res.rejected.empty() ? "OK" : "REJECTED_ROWS";
  out.exit_code = res.rejected.empty() ? 0 : 1;
  return out;
}

}  // namespace octic
