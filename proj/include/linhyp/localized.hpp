#pragma once

#include <vector>

#include "linhyp/polynomial.hpp"

namespace linhyp {

// An element of a localization k[vars][1/g1, ..., 1/gk]: a numerator together
// with exponents of the declared inverted generators.  Construction reduces to
// canonical form: the numerator shares no inverted generator with positive
// remaining exponent.
class LocalizedElement {
 public:
  LocalizedElement(Polynomial numerator, std::vector<std::pair<Polynomial, unsigned>> denom);

  const Polynomial& numerator() const { return num_; }
  const std::vector<std::pair<Polynomial, unsigned>>& denominators() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  LocalizedElement operator*(const LocalizedElement& o) const;

 private:
  void canonicalize();

  Polynomial num_;
  std::vector<std::pair<Polynomial, unsigned>> den_;
};

// x-adic order: the i with e = var^i * p, var not dividing p in the localized
// ring.  `var` must itself be one of the inverted generators (or simply a
// variable not dividing any other denominator).  Throws on the zero element.
long valuation(const LocalizedElement& e, const std::string& var);

}  // namespace linhyp
