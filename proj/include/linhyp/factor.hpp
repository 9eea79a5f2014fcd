#pragma once

#include <cstdint>
#include <vector>

#include "linhyp/polynomial.hpp"

namespace linhyp {

enum class Tri { yes, no, unknown };

// Complete factorization: input == unit * prod factors[i]^exp[i], factors
// irreducible, monic under the canonical term order, pairwise non-associate,
// deterministically sorted.
struct Factorization {
  FElem unit;
  std::vector<std::pair<Polynomial, unsigned>> factors;

  Polynomial reassemble(const FieldPtr& f, const VarsPtr& vars) const;
};

struct SquarefreeDecomposition {
  FElem unit;
  std::vector<std::pair<Polynomial, unsigned>> parts;  // squarefree, pairwise coprime, monic

  Polynomial reassemble(const FieldPtr& f, const VarsPtr& vars) const;
};

// Squarefree decomposition over any supported (perfect) field, including
// p-th-power descent in characteristic p.
SquarefreeDecomposition squarefree_decompose(const Polynomial& p);

// Factors p completely over its declared field.  Randomized choices (finite
// field splitting, multivariate evaluation points) are driven by `seed`.
// Throws on zero or unit input; throws inconclusive_error if the bounded
// multivariate point search is exhausted.
Factorization factor(const Polynomial& p, std::uint64_t seed = 1);

bool is_irreducible(const Polynomial& p, std::uint64_t seed = 1);

// Simple extension with the irreducibility of the minimal polynomial verified.
FieldPtr make_simple_extension(FieldPtr base, const std::string& generator,
                               const Polynomial& minpoly_univariate, std::uint64_t seed = 1);

// Decides irreducibility over the algebraic closure for polynomials in at
// most two variables.  Never wrong; `unknown` when the decision would need an
// unsupported field construction.
Tri absolutely_irreducible(const Polynomial& p, std::uint64_t seed = 1);

// Roots of p in its own coefficient field (from the linear factors), sorted
// canonically.  p must be univariate in `var`.
std::vector<FElem> roots_in_field(const Polynomial& p, const std::string& var,
                                  std::uint64_t seed = 1);

}  // namespace linhyp
