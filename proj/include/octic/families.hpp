#pragma once

// The three applications of the relative-to-absolute pipeline:
//   D4        g = x^4 - 2iT^2 x^2 + 1 over Z[i]
//   COMPOSITE g = x^4 - m over Z_M, M = Q(i sqrt d), HALF basis
//   PARAM_I   g = x^4 - t^2 x^2 + 1, t in Z_M
//   PARAM_II  g = x^4 - 4t x^3 + (6t+2) x^2 + 4t x + 1, t in Z_M
// For a relative generator alpha0 and a unit eps, J(a2 mu2 + eps alpha0) is
// an integer polynomial in a2 of degree 16; alpha generates a power integral
// basis iff that polynomial takes the value +-1 (the relative index is 1).

#include <optional>
#include <string>
#include <vector>

#include "octic/indexcore.hpp"
#include "octic/quartsolve.hpp"

namespace octic {

enum class FamilyKind { D4, Composite, ParamI, ParamII };

const char* to_string(FamilyKind kind);

class FamilySpec {
 public:
  static FamilySpec d4(const BigInt& T);
  static FamilySpec composite(long d, long m);
  static FamilySpec param_i(long d, const BigInt& t1, const BigInt& t2);
  static FamilySpec param_ii(long d, const BigInt& t1, const BigInt& t2);

  FamilyKind kind() const { return kind_; }
  const QuadField& field() const { return *field_; }
  const RelQuarticOrder& order() const { return order_; }
  long d() const { return field_->d(); }
  long m() const { return m_; }
  const BigInt& T() const { return T_; }
  // Family parameter t (D4: (1+i)T).
  const QuadInt& t() const { return t_; }

  // T > 11 in absolute value; |t| > 245; |t| > 1544803; COMPOSITE always.
  bool hypothesis_holds() const;
  std::string hypothesis() const;
  std::string name() const;

 private:
  FamilySpec(FamilyKind kind, const QuadField& field, RelQuarticOrder order, BigInt T, QuadInt t, long m)
      : kind_(kind), field_(&field), order_(std::move(order)), T_(std::move(T)), t_(std::move(t)), m_(m) {}

  FamilyKind kind_;
  const QuadField* field_;
  RelQuarticOrder order_;
  BigInt T_;
  QuadInt t_;
  long m_;
};

struct Candidate {
  QuadInt X, Y, Z;
  std::string label;

  OcticElement element(const QuadInt& A) const { return {A, X, Y, Z}; }
};

// The printed relative generator lists, signs expanded. Throws
// CompositeNeedsIngest for COMPOSITE (its list is external data).
std::vector<Candidate> candidates(const FamilySpec& spec);

struct JPoly {
  ZPoly poly;
  std::string family;
  Candidate candidate;
  QuadInt eps;
  // poly carries the sign of Res(h, conj h) / D_M^2 normalized to a positive
  // leading coefficient; J(a2) = |poly(a2)|.
  int sign_flip = 1;
};

// Symbolic J in a2 for alpha = a2 mu2 + eps (X xi + Y xi^2 + Z xi^3).
// Throws NonIntegerCoefficients or WrongDegree on internal inconsistencies.
JPoly jpoly(const FamilySpec& spec, const Candidate& candidate, const QuadInt& eps);

// Every value p(a), a in Z, is divisible by modulus (decided on a = 0..modulus-1).
bool divisibility_verdict(const ZPoly& p, const BigInt& modulus);

// gcd of p(a) over all integers a (= gcd of p(0..deg p)).
BigInt value_gcd(const ZPoly& p);

// Every a2 with |J(a2)| = 1 (searches +1 and -1).
std::vector<BigInt> pib_search(const JPoly& jp);

enum class VerdictStatus { NoPib, PibFound, HypothesisUnmet };

const char* to_string(VerdictStatus s);

struct Verdict {
  Candidate candidate;
  QuadInt eps;
  int degree = 0;
  BigInt rel_index;       // of the candidate itself
  BigInt divisibility;    // 16 when all values are divisible by 16, else 1
  BigInt value_gcd;
  std::vector<BigInt> pib_solutions;
  VerdictStatus status = VerdictStatus::NoPib;
  double seconds = 0;
};

enum class UnitChoice {
  Default,    // {1, i} for D4 (units modulo sign), the full unit group otherwise
  All,
  ModuloSign,
};

struct VerifyOptions {
  unsigned jobs = 1;
  UnitChoice units = UnitChoice::Default;
  // When set, replaces candidates(spec) (COMPOSITE requires this).
  std::optional<std::vector<Candidate>> candidates;
};

struct TheoremReport {
  std::vector<Verdict> verdicts;
  bool hypothesis_holds = false;
  VerdictStatus status = VerdictStatus::NoPib;
  std::vector<std::string> notes;
};

std::vector<QuadInt> units_for(const FamilySpec& spec, UnitChoice choice);

TheoremReport verify_theorem(const FamilySpec& spec, const VerifyOptions& options = {});

// Several instances at once; tasks are flattened over (instance, candidate,
// eps) so the pool stays busy on a grid. Output order matches input order.
std::vector<TheoremReport> verify_grid(const std::vector<FamilySpec>& specs, const VerifyOptions& options = {});

struct PipelineReport {
  std::vector<UVSolution> uv;
  std::vector<ThueSolution> thue;
  std::vector<Candidate> parametrized;   // one per Thue class
  std::vector<BigInt> parametrized_rel_index;
  std::vector<Candidate> classes;        // parametrized, deduplicated by REL-equivalence
  std::vector<Candidate> missing;        // printed candidates not found within the bound
  std::vector<Candidate> extra;          // found classes not in the printed list
  bool matches = false;
  TheoremReport theorem;
  double seconds_uv = 0, seconds_thue = 0, seconds_classes = 0, seconds_verify = 0;
};

// Steps 1 and 2 end to end for D4. Throws CandidateMismatch when the search
// finds a class outside the printed list although |T| > 11.
PipelineReport relative_pipeline(const FamilySpec& spec, long bound, unsigned jobs = 1);

}  // namespace octic
