#include "octic/families.hpp"

#include <chrono>
#include <numeric>

#include "octic/parallel.hpp"

namespace octic {

const char* to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::D4: return "d4";
    case FamilyKind::Composite: return "composite";
    case FamilyKind::ParamI: return "param1";
    case FamilyKind::ParamII: return "param2";
  }
  return "unknown";
}

const char* to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::NoPib: return "NO_PIB";
    case VerdictStatus::PibFound: return "PIB_FOUND";
    case VerdictStatus::HypothesisUnmet: return "HYPOTHESIS_UNMET";
  }
  return "UNKNOWN";
}

namespace {

QPoly qpoly(const QuadField& f, std::vector<QuadInt> cs) { return QPoly(f.zero(), std::move(cs)); }

const QuadField& param_field(long d) {
  // -d = 2, 3 mod 4  <=>  d = 2, 1 mod 4
  if (d < 1 || !(d % 4 == 1 || d % 4 == 2)) {
    throw Error(ErrorKind::InvalidFamily, "parametric families need -d = 2, 3 (mod 4), got d = " + std::to_string(d));
  }
  return make_field(d, BasisKind::Sqrt);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

FamilySpec FamilySpec::d4(const BigInt& T) {
  if (sgn(T) == 0) throw Error(ErrorKind::InvalidFamily, "D4 family needs T != 0");
  const QuadField& f = make_field(1, BasisKind::Sqrt);
  QPoly g = qpoly(f, {f.one(), f.zero(), QuadInt(f, 0, -2 * T * T), f.zero(), f.one()});
  return FamilySpec(FamilyKind::D4, f, RelQuarticOrder(std::move(g)), T, QuadInt(f, T, T), 0);
}

FamilySpec FamilySpec::composite(long d, long m) {
  static const long allowed[] = {3, 7, 11, 19, 43, 67, 163};
  if (std::find(std::begin(allowed), std::end(allowed), d) == std::end(allowed)) {
    throw Error(ErrorKind::InvalidFamily, "composite family needs d in {3,7,11,19,43,67,163}");
  }
  if (m <= 1 || m > 5000 || !(m % 4 == 2 || m % 4 == 3) || std::gcd(d, m) != 1) {
    throw Error(ErrorKind::InvalidFamily, "composite family needs 1 < m <= 5000, m = 2,3 (mod 4), gcd(d,m) = 1");
  }
  const QuadField& f = make_field(d, BasisKind::Half);
  QPoly g = qpoly(f, {f.from_int(-m), f.zero(), f.zero(), f.zero(), f.one()});
  return FamilySpec(FamilyKind::Composite, f, RelQuarticOrder(std::move(g)), 0, f.zero(), m);
}

FamilySpec FamilySpec::param_i(long d, const BigInt& t1, const BigInt& t2) {
  const QuadField& f = param_field(d);
  QuadInt t(f, t1, t2);
  if (t.is_zero()) throw Error(ErrorKind::InvalidFamily, "family I needs t != 0");
  QPoly g = qpoly(f, {f.one(), f.zero(), -(t * t), f.zero(), f.one()});
  return FamilySpec(FamilyKind::ParamI, f, RelQuarticOrder(std::move(g)), 0, t, 0);
}

FamilySpec FamilySpec::param_ii(long d, const BigInt& t1, const BigInt& t2) {
  const QuadField& f = param_field(d);
  QuadInt t(f, t1, t2);
  if (t.is_zero()) throw Error(ErrorKind::InvalidFamily, "family II needs t != 0");
  const QuadInt four_t = f.from_int(4) * t;
  QPoly g = qpoly(f, {f.one(), four_t, f.from_int(6) * t + f.from_int(2), -four_t, f.one()});
  return FamilySpec(FamilyKind::ParamII, f, RelQuarticOrder(std::move(g)), 0, t, 0);
}

bool FamilySpec::hypothesis_holds() const {
  switch (kind_) {
    case FamilyKind::D4: return abs(T_) > 11;
    case FamilyKind::Composite: return true;
    case FamilyKind::ParamI: return t_.norm() > BigInt(245) * 245;
    case FamilyKind::ParamII: return t_.norm() > BigInt(1544803) * 1544803;
  }
  return false;
}

std::string FamilySpec::hypothesis() const {
  switch (kind_) {
    case FamilyKind::D4: return "|T| > 11";
    case FamilyKind::Composite: return "none (candidate list is external)";
    case FamilyKind::ParamI: return "|t| > 245";
    case FamilyKind::ParamII: return "|t| > 1544803";
  }
  return "";
}

std::string FamilySpec::name() const {
  switch (kind_) {
    case FamilyKind::D4: return "d4(T=" + to_string(T_) + ")";
    case FamilyKind::Composite: return "composite(d=" + std::to_string(d()) + ",m=" + std::to_string(m_) + ")";
    case FamilyKind::ParamI: return "param1(d=" + std::to_string(d()) + ",t=" + t_.to_string() + ")";
    case FamilyKind::ParamII: return "param2(d=" + std::to_string(d()) + ",t=" + t_.to_string() + ")";
  }
  return "";
}

std::vector<Candidate> candidates(const FamilySpec& spec) {
  const QuadField& f = spec.field();
  const QuadInt zero = f.zero();
  const QuadInt one = f.one();
  const QuadInt& t = spec.t();
  switch (spec.kind()) {
    case FamilyKind::D4:
    case FamilyKind::ParamI: {
      // D4 is family I over Z[i] with t = (1+i)T: t^2 = 2iT^2, 1 - t^4 = 1 + 4T^4.
      const QuadInt t2 = t * t;
      const QuadInt c3 = one - t2 * t2;
      return {
          {one, zero, zero, "xi"},
          {-t2, zero, one, "-t^2 xi + xi^3"},
          {c3, t, t2, "(1-t^4) xi + t xi^2 + t^2 xi^3"},
          {c3, -t, t2, "(1-t^4) xi - t xi^2 + t^2 xi^3"},
          {zero, t, one, "t xi^2 + xi^3"},
          {zero, -t, one, "-t xi^2 + xi^3"},
      };
    }
    case FamilyKind::ParamII:
      return {
          {one, zero, zero, "xi"},
          {f.from_int(6) * t + f.from_int(2), -(f.from_int(4) * t), one, "(6t+2) xi - 4t xi^2 + xi^3"},
      };
    case FamilyKind::Composite:
      break;
  }
  throw Error(ErrorKind::CompositeNeedsIngest, "composite candidates come from an ingested list");
}

JPoly jpoly(const FamilySpec& spec, const Candidate& cand, const QuadInt& eps) {
  const QuadField& f = spec.field();
  if (&eps.field() != &f || !eps.is_unit()) throw Error(ErrorKind::InvalidArgument, "eps must be a unit of M");
  const QPoly qzero(f.zero());
  auto lift = [&](const QuadInt& c) { return QPoly::constant(c); };

  // g and alpha over the ring Z_M[a2].
  const UPoly<QPoly> g = map_coeffs(spec.order().g(), qzero, lift);
  const QPoly a2_mu2 = QPoly(f.zero(), {f.zero(), f.w()});
  const std::array<QPoly, 4> coords{a2_mu2, lift(eps * cand.X), lift(eps * cand.Y), lift(eps * cand.Z)};
  const UPoly<QPoly> h = element_char_poly(g, coords);
  const QPoly res = resultant(h, conj_coeffs(h));

  ZPoly p = map_coeffs(res, BigInt(0), [&](const QuadInt& c) {
    if (!c.is_rational()) throw Error(ErrorKind::NonIntegerCoefficients, "Res(h, conj h) coefficient " + c.to_string());
    const BigInt dm2 = BigInt(f.discriminant()) * f.discriminant();
    if (!mpz_divisible_p(c.a().get_mpz_t(), dm2.get_mpz_t())) {
      throw Error(ErrorKind::NonIntegerCoefficients, "coefficient not divisible by D_M^2");
    }
    return BigInt(c.a() / dm2);
  });
  if (p.degree() != 16) {
    throw Error(ErrorKind::WrongDegree, "J polynomial has degree " + std::to_string(p.degree()) + ", expected 16");
  }
  JPoly out{p, spec.name(), cand, eps, 1};
  if (sgn(p.lead()) < 0) {
    out.poly = -p;
    out.sign_flip = -1;
  }
  return out;
}

bool divisibility_verdict(const ZPoly& p, const BigInt& modulus) {
  if (modulus < 2) throw Error(ErrorKind::InvalidArgument, "modulus must be >= 2");
  for (BigInt a = 0; a < modulus; ++a) {
    BigInt v = evaluate(p, a);
    if (!mpz_divisible_p(v.get_mpz_t(), modulus.get_mpz_t())) return false;
  }
  return true;
}

BigInt value_gcd(const ZPoly& p) {
  BigInt g = 0;
  for (long a = 0; a <= std::max(p.degree(), 0); ++a) {
    BigInt v = evaluate(p, BigInt(a));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  return g;
}

std::vector<BigInt> pib_search(const JPoly& jp) {
  std::vector<BigInt> out = integer_root_search(jp.poly, 1);
  for (const BigInt& a : integer_root_search(jp.poly, -1)) out.push_back(a);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<QuadInt> units_for(const FamilySpec& spec, UnitChoice choice) {
  switch (choice) {
    case UnitChoice::All: return spec.field().units();
    case UnitChoice::ModuloSign: return spec.field().units_mod_sign();
    case UnitChoice::Default:
      return spec.kind() == FamilyKind::D4 ? spec.field().units_mod_sign() : spec.field().units();
  }
  return spec.field().units();
}

namespace {

Verdict compute_verdict(const FamilySpec& spec, const Candidate& cand, const QuadInt& eps) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v{cand, eps, 0, BigInt(0), BigInt(0), BigInt(0), {}, VerdictStatus::NoPib, 0.0};
  try {
    v.rel_index = rel_index(spec.order(), cand.element(spec.field().zero()));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotPrimitive) throw;
    v.rel_index = 0;
  }
  const JPoly jp = jpoly(spec, cand, eps);
  v.degree = jp.poly.degree();
  v.divisibility = divisibility_verdict(jp.poly, 16) ? 16 : 1;
  v.value_gcd = value_gcd(jp.poly);
  v.pib_solutions = pib_search(jp);
  if (!v.pib_solutions.empty()) {
    v.status = VerdictStatus::PibFound;
  } else {
    v.status = spec.hypothesis_holds() ? VerdictStatus::NoPib : VerdictStatus::HypothesisUnmet;
  }
  v.seconds = seconds_since(start);
  return v;
}

std::vector<std::string> family_notes(const FamilySpec& spec) {
  switch (spec.kind()) {
    case FamilyKind::D4:
      return {"hypothesis enforced as |T| > 11, negative T included"};
    case FamilyKind::ParamI:
      return {"all six listed relative generators are checked"};
    case FamilyKind::Composite:
      return {"only ingested candidates are checked; completeness of the composite verdict is not claimed"};
    case FamilyKind::ParamII:
      return {};
  }
  return {};
}

}  // namespace

std::vector<TheoremReport> verify_grid(const std::vector<FamilySpec>& specs, const VerifyOptions& options) {
  struct Task {
    std::size_t spec;
    Candidate cand;
    QuadInt eps;
  };
  std::vector<Task> tasks;
  std::vector<std::size_t> first_task(specs.size());
  for (std::size_t s = 0; s < specs.size(); ++s) {
    first_task[s] = tasks.size();
    const std::vector<Candidate> cands = options.candidates ? *options.candidates : candidates(specs[s]);
    for (const Candidate& c : cands) {
      if (&c.X.field() != &specs[s].field()) throw Error(ErrorKind::FieldMismatch, "candidate field differs from family field");
      for (const QuadInt& u : units_for(specs[s], options.units)) tasks.push_back(Task{s, c, u});
    }
  }
  std::vector<std::optional<Verdict>> results(tasks.size());
  parallel_for(tasks.size(), options.jobs, [&](std::size_t i) {
    results[i] = compute_verdict(specs[tasks[i].spec], tasks[i].cand, tasks[i].eps);
  });

  std::vector<TheoremReport> out(specs.size());
  for (std::size_t s = 0; s < specs.size(); ++s) {
    TheoremReport& rep = out[s];
    rep.hypothesis_holds = specs[s].hypothesis_holds();
    rep.notes = family_notes(specs[s]);
    const std::size_t end = s + 1 < specs.size() ? first_task[s + 1] : tasks.size();
    bool found = false;
    for (std::size_t i = first_task[s]; i < end; ++i) {
      found = found || !results[i]->pib_solutions.empty();
      rep.verdicts.push_back(std::move(*results[i]));
    }
    rep.status = found ? VerdictStatus::PibFound
                       : (rep.hypothesis_holds ? VerdictStatus::NoPib : VerdictStatus::HypothesisUnmet);
  }
  return out;
}

TheoremReport verify_theorem(const FamilySpec& spec, const VerifyOptions& options) {
  return verify_grid({spec}, options).front();
}

PipelineReport relative_pipeline(const FamilySpec& spec, long bound, unsigned jobs) {
  if (spec.kind() != FamilyKind::D4) throw Error(ErrorKind::InvalidArgument, "relative_pipeline runs on the D4 family");
  const QuadField& f = spec.field();
  const RelQuarticOrder& order = spec.order();
  PipelineReport rep;

  auto start = std::chrono::steady_clock::now();
  const ResolventForms forms = resolvent_forms(order.g());
  rep.uv = solve_uv_split(forms, split_biquadratic(order.g()), f);
  rep.seconds_uv = seconds_since(start);

  start = std::chrono::steady_clock::now();
  rep.thue = thue_bounded_search(spec.T(), bound, jobs);
  rep.seconds_thue = seconds_since(start);

  start = std::chrono::steady_clock::now();
  for (const ThueSolution& s : rep.thue) {
    const auto [X, Y, Z] = parametrize_d4(s.P, s.Q, spec.T());
    Candidate c{X, Y, Z, "P=" + s.P.to_string() + ",Q=" + s.Q.to_string()};
    BigInt ri = 0;
    try {
      ri = rel_index(order, c.element(f.zero()));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotPrimitive) throw;
    }
    rep.parametrized.push_back(c);
    rep.parametrized_rel_index.push_back(ri);
    if (ri != 1) continue;
    bool known = false;
    for (const Candidate& k : rep.classes) {
      known = known || are_equivalent(c.element(f.zero()), k.element(f.zero()), Equivalence::Rel);
    }
    if (!known) rep.classes.push_back(c);
  }
  const std::vector<Candidate> printed = candidates(spec);
  auto contains = [&](const std::vector<Candidate>& list, const Candidate& c) {
    for (const Candidate& k : list) {
      if (are_equivalent(c.element(f.zero()), k.element(f.zero()), Equivalence::Rel)) return true;
    }
    return false;
  };
  for (const Candidate& c : printed) {
    if (!contains(rep.classes, c)) rep.missing.push_back(c);
  }
  for (const Candidate& c : rep.classes) {
    if (!contains(printed, c)) rep.extra.push_back(c);
  }
  rep.matches = rep.missing.empty() && rep.extra.empty();
  rep.seconds_classes = seconds_since(start);
  if (!rep.extra.empty() && spec.hypothesis_holds()) {
    throw Error(ErrorKind::CandidateMismatch,
                "search found " + std::to_string(rep.extra.size()) + " relative generator class(es) outside the printed list");
  }

  start = std::chrono::steady_clock::now();
  rep.theorem = verify_theorem(spec, VerifyOptions{jobs, UnitChoice::Default, std::nullopt});
  rep.seconds_verify = seconds_since(start);
  return rep;
}

}  // namespace octic
