#pragma once

#include <optional>
#include <variant>

#include "linhyp/factor.hpp"
#include "linhyp/polynomial.hpp"

namespace linhyp {

// Canonical variable context [X1..Xm, Y, Z, T].
VarsPtr datum_vars(unsigned m);
std::vector<std::string> x_names(unsigned m);

// The datum A = k[X1..Xm, Y, Z, T] / (H), H = alpha*Y - f - h, with f != 0
// and alpha not in k.  All members share the canonical context.
struct HypersurfaceDatum {
  FieldPtr field;
  unsigned m = 1;
  VarsPtr vars;
  Polynomial alpha;  // in X1..Xm, nonconstant
  Polynomial f;      // in Z, T, nonzero
  Polynomial h;      // in X1..Xm, Z, T
  Polynomial H;      // derived: alpha*Y - f - h
};

// construct_datum resolves degenerate alpha immediately: a unit alpha gives a
// polynomial ring, alpha = 0 with h = 0 leaves a plane-curve cylinder.
struct ConstructOutcome {
  std::optional<HypersurfaceDatum> datum;
  std::string verdict;  // set instead of `datum` for degenerate alpha
};

ConstructOutcome construct_datum(FieldPtr field, unsigned m, const Polynomial& alpha,
                                 const Polynomial& f, const Polynomial& h);

// The divisibility condition: every prime factor of alpha divides h.
struct CondReport {
  bool holds = false;
  Factorization alpha_factors;
  std::vector<bool> divides;  // aligned with alpha_factors.factors
};

CondReport check_cond(const HypersurfaceDatum& datum, std::uint64_t seed = 1);

// Nested divisibility structure of alpha along an ordered coordinate system,
// possibly after a shift into an extension field.
struct RDivisibility {
  FieldPtr field;                       // field of the shift entries
  std::vector<FElem> shift;             // lambda, aligned with `order`
  std::vector<std::string> order;       // permutation of X1..Xm
  std::vector<unsigned> r;              // all >= 1
  std::vector<Polynomial> alpha_chain;  // alpha_1..alpha_m over `field`
  FElem unit;                           // alpha_{m+1}, nonzero constant

  // alpha(X + lambda) restricted to the working coordinates.
  Polynomial shifted_alpha;
};

struct RDivFailure {
  std::size_t index = 0;  // 1-based position in `order` where the power is 0
  std::string reason;
};

using RDivResult = std::variant<RDivisibility, RDivFailure>;

// Decomposes alpha (over `field`, in variables X1..Xm inside the datum
// context) along `order` after shifting by `lambda` (entries over
// shift_field, which must be the alpha field or a simple extension of it).
RDivResult rdiv_decompose(const Polynomial& alpha, const std::vector<std::string>& order,
                          const FieldPtr& shift_field, const std::vector<FElem>& lambda);
RDivResult rdiv_decompose(const Polynomial& alpha, const std::vector<std::string>& order);

// Replays the nested expansion; true iff it reproduces alpha(X + lambda).
bool rdiv_replay(const Polynomial& alpha, const RDivisibility& rd);

// Bounded search for a shift and order making alpha r-divisible with every
// r_i > 1 and each lambda_i separable.  m = 1 searches the multiple-root
// structure exactly (adjoining one root of degree <= 4 if needed); m > 1 tries
// coordinatewise multiple roots of specializations.  Not exhaustive.
std::optional<RDivisibility> find_shifted_rdiv(const Polynomial& alpha, bool require_gt1,
                                               std::uint64_t seed = 1);

// Hypothesis classifier for the characteristic-zero pipeline.
enum class TheoremBCaseId { I, IIa, IIb, IIc, none };

struct TheoremBCase {
  TheoremBCaseId id = TheoremBCaseId::none;
  Factorization alpha_factors;
  std::vector<std::size_t> witness;  // factor indices backing the case
};

TheoremBCase classify_theoremB(const HypersurfaceDatum& datum, std::uint64_t seed = 1);

// Jacobian regularity tests (perfect coefficient fields).
bool is_regular_planecurve(const Polynomial& f);
bool is_regular_hypersurface(const HypersurfaceDatum& datum);

// Factoriality of A, decided through the residue rings of the prime factors
// of alpha.  Never returns a wrong boolean; `unknown` marks residue fields
// outside the supported tower.
struct UfdReport {
  Tri verdict = Tri::unknown;
  std::string reason;
};

UfdReport ufd_check(const HypersurfaceDatum& datum, std::uint64_t seed = 1);

// Fibration criterion via a separable residue field at a prime containing
// alpha.  Defined in coordinates.cpp (the line test in characteristic zero is
// coordinate recognition); a verified line witness settles characteristic p.
struct LineWitness;  // see charp.hpp

struct FibrationReport {
  Tri verdict = Tri::unknown;
  std::string premise;  // which residue certificate / line decision was used
};

FibrationReport fibration_check(const HypersurfaceDatum& datum,
                                const LineWitness* witness = nullptr, std::uint64_t seed = 1);

}  // namespace linhyp
