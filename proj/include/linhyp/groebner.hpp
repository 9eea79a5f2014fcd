#pragma once

#include <vector>

#include "linhyp/polynomial.hpp"

namespace linhyp {

// Monomial order with an explicit variable priority list (highest first).
struct MonomialOrder {
  enum class Type { lex, grevlex };
  Type type = Type::grevlex;
  std::vector<std::string> priority;  // empty: context order

  static MonomialOrder lex(std::vector<std::string> priority = {}) {
    return {Type::lex, std::move(priority)};
  }
  static MonomialOrder grevlex(std::vector<std::string> priority = {}) {
    return {Type::grevlex, std::move(priority)};
  }
};

struct GroebnerBasis {
  std::vector<Polynomial> generators;  // reduced: monic, auto-reduced
  MonomialOrder order;
  bool reduced = true;
};

// Reduced Groebner basis via Buchberger with the standard pair criteria.
GroebnerBasis groebner(const std::vector<Polynomial>& gens, const MonomialOrder& order);

// Full normal form of p modulo the basis.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& basis);

// True iff the ideal generated is proper (reduced basis is not {1}).
bool ideal_is_proper(const std::vector<Polynomial>& gens);

// Sylvester resultant with respect to `var`.  If exactly one argument is
// constant in var, returns that argument raised to the other's var-degree;
// both constant is an error.
Polynomial resultant(const Polynomial& p, const Polynomial& q, const std::string& var);

}  // namespace linhyp
