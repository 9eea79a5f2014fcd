#pragma once

#include <variant>
#include <vector>

#include "linhyp/polynomial.hpp"

namespace linhyp {

// Invertible affine move on (Z, T): Z -> a*Z + b*T + e, T -> c*Z + d*T + f,
// with ad - bc != 0.
struct AffineMove {
  FElem a, b, e;
  FElem c, d, f;
};

// Triangular move: `target` (Z or T) maps to target + addend(other variable);
// the other variable is fixed.
struct TriangularMove {
  std::string target;  // "Z" or "T"
  Polynomial addend;   // univariate in the other variable
};

using ElementaryMove = std::variant<AffineMove, TriangularMove>;

// A composable automorphism of k[Z,T] given as an ordered list of elementary
// moves.  apply() folds the moves left to right:
// apply([m1, m2], p) = m2(m1(p)) as substitutions, i.e. the ring map of m1
// followed by the ring map of m2.
class PlanarAutomorphism {
 public:
  PlanarAutomorphism() = default;
  explicit PlanarAutomorphism(FieldPtr field) : field_(std::move(field)) {}

  static PlanarAutomorphism identity(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  const std::vector<ElementaryMove>& moves() const { return moves_; }
  bool empty() const { return moves_.empty(); }

  void push_affine(const AffineMove& mv);
  void push_triangular(const std::string& target, const Polynomial& addend);
  void push(const ElementaryMove& mv);
  void append(const PlanarAutomorphism& other);

  PlanarAutomorphism inverse() const;

  // Image of p (a polynomial in Z and T, possibly with spectator variables
  // fixed pointwise) under the composite substitution.
  Polynomial apply(const Polynomial& p) const;

  // Images of the coordinates.
  Polynomial image_of(const Polynomial& var_poly) const { return apply(var_poly); }

 private:
  FieldPtr field_;
  std::vector<ElementaryMove> moves_;
};

// Random tame automorphism: up to max_moves alternating affine/triangular
// moves, addend degree <= max_addend_deg, small integer coefficients.
PlanarAutomorphism random_tame_automorphism(const FieldPtr& field, const VarsPtr& vars,
                                            std::uint64_t seed, int max_moves = 4,
                                            int max_addend_deg = 4, int coeff_bound = 3);

}  // namespace linhyp
