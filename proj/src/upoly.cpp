#include "linhyp/upoly.hpp"

namespace linhyp {

void uv_normalize(const Field& K, UPoly& a) {
  while (!a.empty() && K.is_zero(a.back())) a.pop_back();
}

long uv_deg(const UPoly& a) { return static_cast<long>(a.size()) - 1; }

bool uv_is_zero(const UPoly& a) { return a.empty(); }

UPoly uv_from_coeffs(const Field& K, std::vector<FElem> cs) {
  uv_normalize(K, cs);
  return cs;
}

UPoly uv_constant(const Field& K, const FElem& c) {
  if (K.is_zero(c)) return {};
  return {c};
}

UPoly uv_x(const Field& K) { return {K.zero(), K.one()}; }

UPoly uv_add(const Field& K, const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), K.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = K.add(r[i], b[i]);
  uv_normalize(K, r);
  return r;
}

UPoly uv_neg(const Field& K, const UPoly& a) {
  UPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = K.neg(a[i]);
  return r;
}

UPoly uv_sub(const Field& K, const UPoly& a, const UPoly& b) { return uv_add(K, a, uv_neg(K, b)); }

UPoly uv_mul(const Field& K, const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, K.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (K.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = K.add(r[i + j], K.mul(a[i], b[j]));
  }
  uv_normalize(K, r);
  return r;
}

UPoly uv_scale(const Field& K, const UPoly& a, const FElem& c) {
  if (K.is_zero(c)) return {};
  UPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = K.mul(a[i], c);
  uv_normalize(K, r);
  return r;
}

void uv_divmod(const Field& K, const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.empty()) throw error("univariate division by zero");
  r = a;
  uv_normalize(K, r);
  if (r.size() < b.size()) {
    q.clear();
    return;
  }
  q.assign(r.size() - b.size() + 1, K.zero());
  FElem lb = K.inv(b.back());
  while (r.size() >= b.size()) {
    FElem c = K.mul(r.back(), lb);
    std::size_t shift = r.size() - b.size();
    q[shift] = c;
    // The leading term cancels exactly, so r strictly shrinks.
    for (std::size_t i = 0; i < b.size(); ++i)
      r[shift + i] = K.sub(r[shift + i], K.mul(c, b[i]));
    uv_normalize(K, r);
  }
  uv_normalize(K, q);
}

UPoly uv_mod(const Field& K, const UPoly& a, const UPoly& b) {
  UPoly q, r;
  uv_divmod(K, a, b, q, r);
  return r;
}

UPoly uv_div_exact(const Field& K, const UPoly& a, const UPoly& b) {
  UPoly q, r;
  uv_divmod(K, a, b, q, r);
  if (!r.empty()) throw not_divisible();
  return q;
}

UPoly uv_monic(const Field& K, const UPoly& a) {
  if (a.empty()) return a;
  return uv_scale(K, a, K.inv(a.back()));
}

UPoly uv_gcd(const Field& K, const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  uv_normalize(K, x);
  uv_normalize(K, y);
  while (!y.empty()) {
    UPoly r = uv_mod(K, x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return uv_monic(K, x);
}

void uv_ext_gcd(const Field& K, const UPoly& a, const UPoly& b, UPoly& g, UPoly& s, UPoly& t) {
  UPoly r0 = a, r1 = b;
  UPoly s0 = uv_constant(K, K.one()), s1 = {};
  UPoly t0 = {}, t1 = uv_constant(K, K.one());
  uv_normalize(K, r0);
  uv_normalize(K, r1);
  while (!r1.empty()) {
    UPoly q, r;
    uv_divmod(K, r0, r1, q, r);
    UPoly s2 = uv_sub(K, s0, uv_mul(K, q, s1));
    UPoly t2 = uv_sub(K, t0, uv_mul(K, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  g = r0;
  s = s0;
  t = t0;
  if (!g.empty()) {
    FElem c = K.inv(g.back());
    g = uv_scale(K, g, c);
    s = uv_scale(K, s, c);
    t = uv_scale(K, t, c);
  }
}

UPoly uv_derivative(const Field& K, const UPoly& a) {
  if (a.size() <= 1) return {};
  UPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i)
    r[i - 1] = K.mul(a[i], K.from_int(static_cast<long long>(i)));
  uv_normalize(K, r);
  return r;
}

FElem uv_eval(const Field& K, const UPoly& a, const FElem& x) {
  FElem r = K.zero();
  for (std::size_t i = a.size(); i-- > 0;) r = K.add(K.mul(r, x), a[i]);
  return r;
}

UPoly uv_pow_mod(const Field& K, const UPoly& a, const mpz_class& e, const UPoly& mod) {
  UPoly r = uv_constant(K, K.one());
  UPoly b = uv_mod(K, a, mod);
  mpz_class k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) r = uv_mod(K, uv_mul(K, r, b), mod);
    b = uv_mod(K, uv_mul(K, b, b), mod);
    k >>= 1;
  }
  return r;
}

UPoly uv_shift(const Field& K, const UPoly& a, const FElem& c) {
  // Horner: a(x+c)
  UPoly r;
  UPoly xc = {c, K.one()};
  for (std::size_t i = a.size(); i-- > 0;)
    r = uv_add(K, uv_mul(K, r, xc), uv_constant(K, a[i]));
  return r;
}

bool uv_equal(const Field& K, const UPoly& a, const UPoly& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!K.equal(a[i], b[i])) return false;
  return true;
}

}  // namespace linhyp
