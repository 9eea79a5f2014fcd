#pragma once

// Dense univariate polynomial helpers over a Field.  Coefficient vectors are
// little-endian (index = exponent) and normalized: no trailing zeros, the zero
// polynomial is the empty vector.  These back both extension-field arithmetic
// and the univariate factorization engines.

#include <vector>

#include "linhyp/field.hpp"

namespace linhyp {

using UPoly = std::vector<FElem>;

void uv_normalize(const Field& K, UPoly& a);
long uv_deg(const UPoly& a);  // -1 for zero
bool uv_is_zero(const UPoly& a);
UPoly uv_from_coeffs(const Field& K, std::vector<FElem> cs);
UPoly uv_constant(const Field& K, const FElem& c);
UPoly uv_x(const Field& K);  // the monomial x

UPoly uv_add(const Field& K, const UPoly& a, const UPoly& b);
UPoly uv_sub(const Field& K, const UPoly& a, const UPoly& b);
UPoly uv_neg(const Field& K, const UPoly& a);
UPoly uv_mul(const Field& K, const UPoly& a, const UPoly& b);
UPoly uv_scale(const Field& K, const UPoly& a, const FElem& c);
// Quotient and remainder; b must be nonzero.
void uv_divmod(const Field& K, const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
UPoly uv_mod(const Field& K, const UPoly& a, const UPoly& b);
UPoly uv_div_exact(const Field& K, const UPoly& a, const UPoly& b);
UPoly uv_monic(const Field& K, const UPoly& a);
UPoly uv_gcd(const Field& K, const UPoly& a, const UPoly& b);  // monic (or zero)
// g = gcd = s*a + t*b, g monic unless both inputs zero.
void uv_ext_gcd(const Field& K, const UPoly& a, const UPoly& b, UPoly& g, UPoly& s, UPoly& t);
UPoly uv_derivative(const Field& K, const UPoly& a);
FElem uv_eval(const Field& K, const UPoly& a, const FElem& x);
UPoly uv_pow_mod(const Field& K, const UPoly& a, const mpz_class& e, const UPoly& mod);
// a(x + c)
UPoly uv_shift(const Field& K, const UPoly& a, const FElem& c);
bool uv_equal(const Field& K, const UPoly& a, const UPoly& b);

}  // namespace linhyp
