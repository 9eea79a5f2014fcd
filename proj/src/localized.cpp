#include "linhyp/localized.hpp"

namespace linhyp {

LocalizedElement::LocalizedElement(Polynomial numerator,
                                   std::vector<std::pair<Polynomial, unsigned>> denom)
    : num_(std::move(numerator)), den_(std::move(denom)) {
  for (const auto& [g, e] : den_) {
    if (g.is_zero() || g.is_constant()) throw error("inverted generator must be a nonconstant polynomial");
  }
  canonicalize();
}

void LocalizedElement::canonicalize() {
  if (num_.is_zero()) {
    for (auto& [g, e] : den_) e = 0;
    return;
  }
  for (auto& [g, e] : den_) {
    while (e > 0 && num_.divisible_by(g)) {
      num_ = num_.div_exact(g);
      --e;
    }
  }
}

LocalizedElement LocalizedElement::operator*(const LocalizedElement& o) const {
  std::vector<std::pair<Polynomial, unsigned>> den = den_;
  for (const auto& [g, e] : o.den_) {
    bool merged = false;
    for (auto& [h, d] : den) {
      if (h == g) {
        d += e;
        merged = true;
        break;
      }
    }
    if (!merged) den.emplace_back(g, e);
  }
  return LocalizedElement(num_ * o.num_, std::move(den));
}

long valuation(const LocalizedElement& e, const std::string& var) {
  if (e.is_zero()) throw error("the zero element has no valuation");
  const Polynomial& num = e.numerator();
  long denom_exp = 0;
  for (const auto& [g, k] : e.denominators()) {
    Polynomial v = Polynomial::variable(g.field(), g.vars(), var);
    if (g == v) {
      denom_exp += static_cast<long>(k);
    } else if (k > 0 && g.order_in(var) > 0) {
      throw error("inverted generator " + g.to_string() + " is divisible by " + var);
    }
  }
  return static_cast<long>(num.order_in(var)) - denom_exp;
}

}  // namespace linhyp
