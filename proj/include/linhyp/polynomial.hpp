#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "linhyp/field.hpp"
#include "linhyp/upoly.hpp"

namespace linhyp {

// Ordered variable context shared between polynomials.
using VarList = std::vector<std::string>;
using VarsPtr = std::shared_ptr<const VarList>;

VarsPtr make_vars(VarList names);

// Exponent vector; length always equals the variable list length.
using Expts = std::vector<unsigned>;

// Degree of the zero polynomial.  Distinct from every attainable degree.
inline constexpr long kDegNegInf = std::numeric_limits<long>::min();

// Sparse exact multivariate polynomial over a Field.  Terms are kept in a
// map ordered lexicographically on exponent vectors; this canonical order
// drives deterministic printing and leading-term extraction.  Values are
// immutable in spirit: all operations return fresh polynomials.
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial zero(FieldPtr f, VarsPtr vars);
  static Polynomial constant(FieldPtr f, VarsPtr vars, const FElem& c);
  static Polynomial from_int(FieldPtr f, VarsPtr vars, long long n);
  static Polynomial variable(FieldPtr f, VarsPtr vars, const std::string& name);
  static Polynomial monomial(FieldPtr f, VarsPtr vars, const Expts& e, const FElem& c);

  const FieldPtr& field() const { return field_; }
  const VarsPtr& vars() const { return vars_; }
  const std::map<Expts, FElem>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_unit() const { return is_constant() && !is_zero(); }
  FElem constant_value() const;  // requires is_constant()

  long total_degree() const;     // kDegNegInf for zero
  long degree_in(const std::string& var) const;
  long degree_in(std::size_t var_index) const;
  // Variables actually occurring (positive exponent somewhere).
  std::vector<std::string> support_vars() const;
  bool uses_only(const std::vector<std::string>& allowed) const;
  std::size_t var_index(const std::string& name) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scale(const FElem& c) const;
  Polynomial pow(unsigned long e) const;
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Throws not_divisible if o does not divide exactly.
  Polynomial div_exact(const Polynomial& o) const;
  bool divisible_by(const Polynomial& o) const;

  // Simultaneous substitution.  Unbound variables map to themselves; all
  // images (and the result) live in `target` (defaults to this context).
  Polynomial substitute(const std::map<std::string, Polynomial>& bindings) const;
  Polynomial derivative(const std::string& var) const;

  // Re-express over a different variable context (a superset or reordering;
  // all used variables must exist in the target list).
  Polynomial with_vars(const VarsPtr& target) const;
  // Coefficient embedding into an extension of this field (or same field).
  Polynomial map_field(const FieldPtr& bigger) const;

  // Views as a univariate polynomial in `var` with Polynomial coefficients.
  std::map<unsigned, Polynomial> coeffs_in(const std::string& var) const;
  Polynomial coeff_of(const std::string& var, unsigned k) const;
  // Exponent of the highest power of `var` dividing this (0 if var absent).
  unsigned order_in(const std::string& var) const;

  // Dense univariate extraction; requires support within {var}.
  UPoly to_upoly(const std::string& var) const;
  static Polynomial from_upoly(FieldPtr f, VarsPtr vars, const std::string& var, const UPoly& u);

  // Total-degree leading form and weighted leading form (weights per var;
  // returns the sum of terms of maximal weighted degree).
  Polynomial leading_form() const;
  Polynomial weighted_leading_form(const std::vector<long>& weights, long* wdeg = nullptr) const;
  long weighted_degree(const std::vector<long>& weights) const;

  FElem evaluate(const std::vector<FElem>& point) const;
  // Leading term under the canonical lex order (last map entry).
  std::pair<Expts, FElem> leading_term() const;
  FElem leading_coefficient() const;
  Polynomial monic() const;  // scale so canonical leading coefficient is 1

  std::string to_string() const;  // canonical grammar-compatible form

 private:
  void insert_term(const Expts& e, const FElem& c);
  void check_compatible(const Polynomial& o) const;

  FieldPtr field_;
  VarsPtr vars_;
  std::map<Expts, FElem> terms_;
};

// Multivariate gcd, normalized so the canonical leading coefficient is 1
// (zero if both inputs are zero).
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);
// Content of `a` seen in k[rest][var]: gcd of the coefficients.
Polynomial poly_content_in(const Polynomial& a, const std::string& var);

}  // namespace linhyp
