#include "linhyp/factor.hpp"

#include <algorithm>
#include <optional>

#include "linhyp/groebner.hpp"
#include "linhyp/linalg.hpp"
#include "linhyp/rng.hpp"

namespace linhyp {

namespace {

// ---------------------------------------------------------------------------
// Shared helpers

FElem random_elem(const Field& K, Rng& rng) {
  switch (K.kind()) {
    case Field::Kind::rationals:
      return K.from_int(rng.range(-20, 20));
    case Field::Kind::prime:
      return K.from_int(static_cast<long long>(rng.below(K.prime_modulus())));
    case Field::Kind::extension: {
      std::vector<FElem> v;
      for (std::size_t i = 0; i < K.extension_degree(); ++i)
        v.push_back(random_elem(*K.base(), rng));
      return FElem{std::move(v)};
    }
  }
  return K.zero();
}

bool uv_squarefree(const Field& K, const UPoly& f) {
  UPoly d = uv_derivative(K, f);
  if (uv_is_zero(d)) return uv_deg(f) <= 0;
  return uv_deg(uv_gcd(K, f, d)) == 0;
}

// All elements of a small finite field, in a deterministic order.
std::vector<FElem> all_field_elements(const Field& K) {
  std::vector<FElem> out;
  if (K.kind() == Field::Kind::prime) {
    for (std::uint64_t i = 0; i < K.prime_modulus(); ++i)
      out.push_back(K.from_int(static_cast<long long>(i)));
    return out;
  }
  const Field& B = *K.base();
  std::vector<FElem> base_elems = all_field_elements(B);
  std::size_t d = K.extension_degree();
  std::vector<std::size_t> digits(d, 0);
  while (true) {
    std::vector<FElem> v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = base_elems[digits[i]];
    out.push_back(FElem{v});
    std::size_t i = 0;
    while (i < d && ++digits[i] == base_elems.size()) digits[i++] = 0;
    if (i == d) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Univariate factorization over finite fields (F_p and F_{p^e}):
// distinct-degree then equal-degree splitting.

std::vector<UPoly> ff_edf(const Field& K, const UPoly& g, long d, Rng& rng) {
  if (uv_deg(g) == d) return {g};
  const mpz_class q = K.order();
  std::vector<UPoly> out;
  UPoly first, second;
  while (true) {
    UPoly a(static_cast<std::size_t>(uv_deg(g)), K.zero());
    for (auto& c : a) c = random_elem(K, rng);
    uv_normalize(K, a);
    if (uv_deg(a) < 1) continue;
    UPoly b;
    if (K.characteristic() == 2) {
      // Trace map over F_2 splits equal-degree products in characteristic 2.
      unsigned long bits = mpz_sizeinbase(q.get_mpz_t(), 2) - 1;  // q = 2^e -> e
      unsigned long m = bits * static_cast<unsigned long>(d);
      UPoly t = a;
      b = a;
      for (unsigned long i = 1; i < m; ++i) {
        t = uv_mod(K, uv_mul(K, t, t), g);
        b = uv_add(K, b, t);
      }
    } else {
      mpz_class e;
      mpz_pow_ui(e.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d));
      e = (e - 1) / 2;
      b = uv_pow_mod(K, a, e, g);
      b = uv_sub(K, b, uv_constant(K, K.one()));
    }
    UPoly c = uv_gcd(K, b, g);
    if (uv_deg(c) > 0 && uv_deg(c) < uv_deg(g)) {
      first = c;
      second = uv_div_exact(K, g, c);
      break;
    }
  }
  for (const auto& part : ff_edf(K, first, d, rng)) out.push_back(part);
  for (const auto& part : ff_edf(K, second, d, rng)) out.push_back(part);
  return out;
}

std::vector<UPoly> ff_factor_squarefree(const Field& K, const UPoly& fin, Rng& rng) {
  UPoly f = uv_monic(K, fin);
  std::vector<UPoly> out;
  if (uv_deg(f) <= 0) return out;
  if (uv_deg(f) == 1) return {f};
  const mpz_class q = K.order();
  UPoly x = uv_x(K);
  UPoly h = uv_mod(K, x, f);
  long d = 0;
  while (uv_deg(f) >= 2 * (d + 1)) {
    ++d;
    h = uv_pow_mod(K, h, q, f);
    UPoly g = uv_gcd(K, uv_sub(K, h, x), f);
    if (uv_deg(g) > 0) {
      for (const auto& part : ff_edf(K, g, d, rng)) out.push_back(part);
      f = uv_div_exact(K, f, g);
      h = uv_mod(K, h, f);
    }
  }
  if (uv_deg(f) > 0) out.push_back(f);
  return out;
}

// ---------------------------------------------------------------------------
// Univariate factorization over Q (Zassenhaus: reduce mod p, Hensel lift,
// subset recombination).

struct ZPoly {
  std::vector<mpz_class> c;  // little-endian, normalized
};

void zz_normalize(ZPoly& a) {
  while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
}

long zz_deg(const ZPoly& a) { return static_cast<long>(a.c.size()) - 1; }

ZPoly zz_mul(const ZPoly& a, const ZPoly& b) {
  if (a.c.empty() || b.c.empty()) return {};
  ZPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  zz_normalize(r);
  return r;
}

mpz_class zz_content(const ZPoly& a) {
  mpz_class g = 0;
  for (const auto& v : a.c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

// Exact division over Q given integer inputs; nullopt if not divisible.
std::optional<ZPoly> zz_divide(const ZPoly& a, const ZPoly& b) {
  auto Q = Field::rationals();
  UPoly ua, ub;
  for (const auto& v : a.c) ua.push_back(Q->from_mpz(v));
  for (const auto& v : b.c) ub.push_back(Q->from_mpz(v));
  uv_normalize(*Q, ua);
  uv_normalize(*Q, ub);
  if (ub.empty()) return std::nullopt;
  UPoly q, r;
  uv_divmod(*Q, ua, ub, q, r);
  if (!r.empty()) return std::nullopt;
  ZPoly out;
  for (const auto& v : q) {
    const mpq_class& x = std::get<mpq_class>(v.rep);
    if (x.get_den() != 1) return std::nullopt;
    out.c.push_back(x.get_num());
  }
  zz_normalize(out);
  return out;
}

UPoly zz_to_fp(const Field& Fp, const ZPoly& a) {
  UPoly r;
  for (const auto& v : a.c) r.push_back(Fp.from_mpz(v));
  uv_normalize(Fp, r);
  return r;
}

mpz_class balance(const mpz_class& v, const mpz_class& m) {
  mpz_class r = v % m;
  if (r < 0) r += m;
  if (2 * r > m) r -= m;
  return r;
}

// Lifts f == lc * prod(monic g_i) from mod p to mod p^steps (linear lifting).
std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<UPoly>& gs, std::uint64_t p,
                               unsigned steps) {
  auto Fp = Field::prime(p);
  const std::size_t r = gs.size();
  // Bezout data mod p: sigma_i * prod_{l != i} g_l == 1 (mod g_i).
  std::vector<UPoly> sigma(r);
  for (std::size_t i = 0; i < r; ++i) {
    UPoly h = uv_constant(*Fp, Fp->one());
    for (std::size_t l = 0; l < r; ++l)
      if (l != i) h = uv_mod(*Fp, uv_mul(*Fp, h, gs[l]), gs[i]);
    UPoly g, s, t;
    uv_ext_gcd(*Fp, h, gs[i], g, s, t);
    sigma[i] = uv_mod(*Fp, s, gs[i]);
  }
  mpz_class lc = f.c.back();
  FElem lcinv = Fp->inv(Fp->from_mpz(lc));

  std::vector<ZPoly> G(r);
  for (std::size_t i = 0; i < r; ++i)
    for (const auto& cv : gs[i]) G[i].c.push_back(mpz_class(std::get<std::uint64_t>(cv.rep)));

  mpz_class pj = p;
  for (unsigned j = 1; j < steps; ++j) {
    ZPoly prod;
    prod.c = {mpz_class(1)};
    for (const auto& g : G) prod = zz_mul(prod, g);
    ZPoly err = prod;
    for (auto& v : err.c) v = -lc * v;
    for (std::size_t i = 0; i < f.c.size(); ++i) {
      if (err.c.size() <= i) err.c.resize(i + 1, mpz_class(0));
      err.c[i] += f.c[i];
    }
    zz_normalize(err);
    for (auto& v : err.c) v /= pj;  // exact by the invariant
    UPoly e = zz_to_fp(*Fp, err);
    e = uv_scale(*Fp, e, lcinv);
    for (std::size_t i = 0; i < r; ++i) {
      UPoly gi = zz_to_fp(*Fp, G[i]);
      // Only the residue mod p of G_i matters for the correction.
      UPoly di = uv_mod(*Fp, uv_mul(*Fp, sigma[i], e), gs[i]);
      for (std::size_t t = 0; t < di.size(); ++t) {
        mpz_class add = pj * mpz_class(std::get<std::uint64_t>(di[t].rep));
        if (G[i].c.size() <= t) G[i].c.resize(t + 1, mpz_class(0));
        G[i].c[t] += add;
      }
      zz_normalize(G[i]);
    }
    pj *= p;
  }
  return G;
}

std::vector<UPoly> q_factor_squarefree(const FieldPtr& Q, const UPoly& fin, Rng& rng);

// Rational univariate dispatch (squarefree monic input, degree >= 1).
std::vector<UPoly> uv_factor_squarefree(const FieldPtr& K, const UPoly& f, Rng& rng);

std::vector<UPoly> q_factor_squarefree(const FieldPtr& Q, const UPoly& fin, Rng& rng) {
  (void)rng;
  UPoly f = uv_monic(*Q, fin);
  if (uv_deg(f) == 1) return {f};
  // Clear denominators to a primitive integer polynomial with positive lc.
  mpz_class den = 1;
  for (const auto& v : f) {
    const mpq_class& x = std::get<mpq_class>(v.rep);
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
  }
  ZPoly F;
  for (const auto& v : f) {
    const mpq_class& x = std::get<mpq_class>(v.rep);
    F.c.push_back(mpz_class(x.get_num() * (den / x.get_den())));
  }
  zz_normalize(F);
  mpz_class cont = zz_content(F);
  if (cont != 0)
    for (auto& v : F.c) v /= cont;
  if (F.c.back() < 0)
    for (auto& v : F.c) v = -v;

  const long n = zz_deg(F);
  static const std::uint64_t kPrimes[] = {3,   5,   7,   11,  13,  17,  19,  23,  29,  31,
                                          37,  41,  43,  47,  53,  59,  61,  67,  71,  73,
                                          79,  83,  89,  97,  101, 103, 107, 109, 113, 127,
                                          131, 137, 139, 149, 151, 157, 163, 167, 173, 179};
  std::uint64_t p = 0;
  std::vector<UPoly> gs;
  for (std::uint64_t cand : kPrimes) {
    if (mpz_divisible_ui_p(F.c.back().get_mpz_t(), static_cast<unsigned long>(cand))) continue;
    auto Fp = Field::prime(cand);
    UPoly fp = zz_to_fp(*Fp, F);
    if (uv_deg(fp) != n) continue;
    if (!uv_squarefree(*Fp, fp)) continue;
    p = cand;
    Rng ffrng(0x5eedULL ^ cand);
    gs = ff_factor_squarefree(*Fp, uv_monic(*Fp, fp), ffrng);
    break;
  }
  if (p == 0) throw inconclusive_error("factorization inconclusive: no good reduction prime");
  if (gs.size() == 1) return {f};

  // Landau-Mignotte style bound on factor coefficients.
  mpz_class height = 0;
  for (const auto& v : F.c) {
    mpz_class a = abs(v);
    if (a > height) height = a;
  }
  mpz_class bound = height * abs(F.c.back()) * (n + 1);
  mpz_class two_n;
  mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(n + 1));
  bound *= two_n;
  unsigned steps = 1;
  mpz_class pk = p;
  while (pk <= 2 * bound) {
    pk *= p;
    ++steps;
  }

  std::vector<ZPoly> lifted = hensel_lift(F, gs, p, steps);

  // Subset recombination with exact division tests.
  std::vector<std::size_t> live(lifted.size());
  for (std::size_t i = 0; i < live.size(); ++i) live[i] = i;
  std::vector<ZPoly> found;
  std::size_t s = 1;
  while (2 * s <= live.size()) {
    std::vector<std::size_t> combo(s);
    for (std::size_t i = 0; i < s; ++i) combo[i] = i;
    bool advanced = true;
    bool restart = false;
    while (advanced) {
      ZPoly cand;
      cand.c = {mpz_class(F.c.back())};
      for (std::size_t i : combo) cand = zz_mul(cand, lifted[live[i]]);
      for (auto& v : cand.c) v = balance(v, pk);
      zz_normalize(cand);
      mpz_class cc = zz_content(cand);
      if (cc != 0)
        for (auto& v : cand.c) v /= cc;
      if (!cand.c.empty() && cand.c.back() < 0)
        for (auto& v : cand.c) v = -v;
      auto quot = zz_divide(F, cand);
      if (quot && zz_deg(cand) >= 1) {
        found.push_back(cand);
        F = *quot;
        std::vector<std::size_t> next_live;
        for (std::size_t i = 0; i < live.size(); ++i)
          if (std::find(combo.begin(), combo.end(), i) == combo.end())
            next_live.push_back(live[i]);
        live = next_live;
        restart = true;
        break;
      }
      // advance combination
      advanced = false;
      for (std::size_t i = s; i-- > 0;) {
        if (combo[i] + (s - i) < live.size()) {
          ++combo[i];
          for (std::size_t j = i + 1; j < s; ++j) combo[j] = combo[j - 1] + 1;
          advanced = true;
          break;
        }
      }
    }
    if (restart) {
      s = 1;
      continue;
    }
    ++s;
  }
  if (zz_deg(F) >= 1) found.push_back(F);

  std::vector<UPoly> out;
  for (const auto& g : found) {
    UPoly u;
    for (const auto& v : g.c) u.push_back(Q->from_mpz(v));
    uv_normalize(*Q, u);
    out.push_back(uv_monic(*Q, u));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Trager's norm method over Q(theta).

std::vector<UPoly> qext_factor_squarefree(const FieldPtr& K, const UPoly& fin, Rng& rng) {
  UPoly f = uv_monic(*K, fin);
  if (uv_deg(f) == 1) return {f};
  const FieldPtr& Q = K->base();
  const auto& mp = K->minpoly();
  auto vars2 = make_vars({"x_", "y_"});
  // Minimal polynomial as a bivariate in y_.
  Polynomial mu = Polynomial::zero(Q, vars2);
  for (std::size_t l = 0; l < mp.size(); ++l)
    mu = mu + Polynomial::monomial(Q, vars2, {0, static_cast<unsigned>(l)}, mp[l]);

  for (int trial = 0; trial < 64; ++trial) {
    long long sv = (trial % 2 == 0) ? trial / 2 : -(trial / 2 + 1);
    FElem shift = K->mul(K->from_int(-sv), K->generator());
    UPoly g = uv_shift(*K, f, shift);  // f(x - s*theta)
    // Replace theta by y_ to build G(x_, y_).
    Polynomial G = Polynomial::zero(Q, vars2);
    for (std::size_t j = 0; j < g.size(); ++j) {
      const auto& coeff = std::get<std::vector<FElem>>(g[j].rep);
      for (std::size_t l = 0; l < coeff.size(); ++l)
        G = G + Polynomial::monomial(Q, vars2, {static_cast<unsigned>(j), static_cast<unsigned>(l)},
                                     coeff[l]);
    }
    Polynomial Npoly = resultant(mu, G, "y_");
    UPoly N = Npoly.to_upoly("x_");
    if (uv_deg(N) != uv_deg(f) * static_cast<long>(K->extension_degree())) continue;
    if (!uv_squarefree(*Q, N)) continue;
    std::vector<UPoly> nf = q_factor_squarefree(Q, uv_monic(*Q, N), rng);
    std::vector<UPoly> out;
    for (const auto& Ni : nf) {
      UPoly NiK;
      for (const auto& c : Ni) NiK.push_back(K->embed(*Q, c));
      UPoly hi = uv_gcd(*K, g, NiK);
      if (uv_deg(hi) < 1) continue;
      out.push_back(uv_monic(*K, uv_shift(*K, hi, K->neg(shift))));
    }
    if (!out.empty()) return out;
  }
  throw inconclusive_error("factorization inconclusive: no squarefree norm found");
}

std::vector<UPoly> uv_factor_squarefree(const FieldPtr& K, const UPoly& f, Rng& rng) {
  switch (K->kind()) {
    case Field::Kind::rationals:
      return q_factor_squarefree(K, f, rng);
    case Field::Kind::prime:
      return ff_factor_squarefree(*K, uv_monic(*K, f), rng);
    case Field::Kind::extension:
      if (K->characteristic() == 0) return qext_factor_squarefree(K, f, rng);
      return ff_factor_squarefree(*K, uv_monic(*K, f), rng);
  }
  throw error("unreachable");
}

// ---------------------------------------------------------------------------
// Squarefree decomposition (multivariate, perfect fields).

Polynomial pth_root(const Polynomial& f) {
  const Field& K = *f.field();
  std::uint64_t p = K.characteristic();
  mpz_class e = K.order() / p;  // c -> c^(q/p) is the inverse Frobenius
  Polynomial r = Polynomial::zero(f.field(), f.vars());
  for (const auto& [ex, c] : f.terms()) {
    Expts ne(ex.size());
    for (std::size_t i = 0; i < ex.size(); ++i) {
      if (ex[i] % p != 0) throw error("polynomial is not a p-th power");
      ne[i] = ex[i] / static_cast<unsigned>(p);
    }
    r = r + Polynomial::monomial(f.field(), f.vars(), ne, K.pow(c, e));
  }
  return r;
}

std::vector<std::pair<Polynomial, unsigned>> sqf_impl(const Polynomial& fin) {
  std::vector<std::pair<Polynomial, unsigned>> parts;
  Polynomial f = fin;
  if (f.is_constant()) return parts;
  const Field& K = *f.field();
  // d = gcd(f, all partial derivatives)
  Polynomial d = Polynomial::zero(f.field(), f.vars());
  bool any_nonzero_partial = false;
  for (const auto& v : f.support_vars()) {
    Polynomial pd = f.derivative(v);
    if (!pd.is_zero()) any_nonzero_partial = true;
    d = poly_gcd(d, pd);
  }
  if (!any_nonzero_partial) {
    // Every partial vanishes: f is a p-th power.
    Polynomial g = pth_root(f);
    auto inner = sqf_impl(g);
    for (auto& [q, m] : inner) parts.emplace_back(q, m * static_cast<unsigned>(K.characteristic()));
    return parts;
  }
  d = poly_gcd(d, f);
  Polynomial w = f.div_exact(d);
  unsigned i = 1;
  while (!w.is_constant()) {
    Polynomial y = poly_gcd(w, d);
    Polynomial part = w.div_exact(y);
    if (!part.is_constant()) parts.emplace_back(part.monic(), i);
    w = y;
    d = d.div_exact(y);
    ++i;
  }
  if (!d.is_constant()) {
    // Leftover carries only multiplicities divisible by char; recurse on the root.
    Polynomial g = pth_root(d);
    auto inner = sqf_impl(g);
    for (auto& [q, m] : inner) parts.emplace_back(q, m * static_cast<unsigned>(K.characteristic()));
  }
  return parts;
}

// ---------------------------------------------------------------------------
// Multivariate factorization: evaluate the auxiliary variables, factor the
// univariate image, lift (x1..xs)-adically, recombine, verify by division.

struct AuxInfo {
  std::size_t main;              // index of the main variable
  std::vector<std::size_t> aux;  // indices of the remaining active variables
};

long aux_degree_of(const Expts& e, const std::vector<std::size_t>& aux) {
  long d = 0;
  for (std::size_t i : aux) d += e[i];
  return d;
}

Polynomial trunc_aux(const Polynomial& p, const std::vector<std::size_t>& aux, long J) {
  Polynomial r = Polynomial::zero(p.field(), p.vars());
  for (const auto& [e, c] : p.terms())
    if (aux_degree_of(e, aux) < J) r = r + Polynomial::monomial(p.field(), p.vars(), e, c);
  return r;
}

// Power series inverse of L (unit constant term) modulo aux-degree J.
Polynomial series_inverse(const Polynomial& L, const std::vector<std::size_t>& aux, long J) {
  const Field& K = *L.field();
  Expts zero_e(L.vars()->size(), 0);
  FElem l0 = K.zero();
  auto it = L.terms().find(zero_e);
  if (it != L.terms().end()) l0 = it->second;
  if (K.is_zero(l0)) throw error("series inverse of a non-unit");
  Polynomial B = Polynomial::constant(L.field(), L.vars(), K.inv(l0));
  Polynomial two = Polynomial::from_int(L.field(), L.vars(), 2);
  long t = 1;
  while (t < J) {
    t = std::min(2 * t, J);
    B = trunc_aux(B * (two - L * B), aux, t);
  }
  return B;
}

std::vector<Polynomial> factor_squarefree_poly(const Polynomial& p, Rng& rng, bool allow_ext);

// Squarefree primitive (w.r.t. main var) input using >= 2 variables.
std::vector<Polynomial> factor_multivar(const Polynomial& P0, const AuxInfo& info, Rng& rng,
                                        bool allow_ext) {
  const FieldPtr& Kp = P0.field();
  const Field& K = *Kp;
  const VarsPtr& vars = P0.vars();
  const std::string xname = (*vars)[info.main];
  const long n = P0.degree_in(info.main);

  // Candidate evaluation points for the auxiliary variables.
  auto lc = P0.coeff_of(xname, static_cast<unsigned>(n));
  std::vector<std::vector<FElem>> tried;
  bool finite = K.is_finite();
  mpz_class fsize = finite ? K.order() : mpz_class(0);
  bool small_field = finite && fsize < 64;

  std::vector<FElem> elems;
  unsigned long exhaustive_total = 0;
  if (small_field) {
    elems = all_field_elements(K);
    unsigned long total = 1;
    for (std::size_t i = 0; i < info.aux.size(); ++i) {
      if (total > 4096) {
        total = 0;
        break;
      }
      total *= elems.size();
    }
    exhaustive_total = total;
  }
  auto make_point = [&](int attempt) -> std::optional<std::vector<FElem>> {
    std::vector<FElem> pt;
    if (exhaustive_total != 0) {
      // Enumerate all tuples deterministically before giving up.
      if (static_cast<unsigned long>(attempt) >= exhaustive_total) return std::nullopt;
      unsigned long code = static_cast<unsigned long>(attempt);
      for (std::size_t i = 0; i < info.aux.size(); ++i) {
        pt.push_back(elems[code % elems.size()]);
        code /= elems.size();
      }
      return pt;
    }
    if (attempt >= 32) return std::nullopt;
    long span = 4 + attempt;
    for (std::size_t i = 0; i < info.aux.size(); ++i) {
      if (finite)
        pt.push_back(random_elem(K, rng));
      else
        pt.push_back(K.from_int(rng.range(-span, span)));
    }
    return pt;
  };

  for (int attempt = 0;; ++attempt) {
    auto maybe_pt = make_point(attempt);
    if (!maybe_pt) break;
    const std::vector<FElem>& pt = *maybe_pt;
    // lc must not vanish and the specialization must stay squarefree.
    std::map<std::string, Polynomial> eval;
    for (std::size_t i = 0; i < info.aux.size(); ++i)
      eval.emplace((*vars)[info.aux[i]], Polynomial::constant(Kp, vars, pt[i]));
    Polynomial lc_at = lc.substitute(eval);
    if (lc_at.is_zero()) continue;
    Polynomial u_poly = P0.substitute(eval);
    UPoly u = u_poly.to_upoly(xname);
    if (uv_deg(u) != n) continue;
    if (!uv_squarefree(K, u)) continue;

    // Translate the point to the origin.
    std::map<std::string, Polynomial> fwd, back;
    for (std::size_t i = 0; i < info.aux.size(); ++i) {
      const std::string& yn = (*vars)[info.aux[i]];
      Polynomial yv = Polynomial::variable(Kp, vars, yn);
      fwd.emplace(yn, yv + Polynomial::constant(Kp, vars, pt[i]));
      back.emplace(yn, yv - Polynomial::constant(Kp, vars, pt[i]));
    }
    Polynomial Pt = P0.substitute(fwd);
    long D = 0;
    for (const auto& [e, c] : Pt.terms()) D = std::max(D, aux_degree_of(e, info.aux));
    const long J = D + 1;

    std::vector<UPoly> us = uv_factor_squarefree(Kp, uv_monic(K, u), rng);
    if (us.size() == 1) return {P0};

    // Monicize modulo aux-degree J.
    Polynomial Lt = Pt.coeff_of(xname, static_cast<unsigned>(n));
    Polynomial Linv = series_inverse(Lt, info.aux, J);
    Polynomial Pmon = trunc_aux(Pt * Linv, info.aux, J);

    // Bezout basis for the univariate factors.
    const std::size_t r = us.size();
    std::vector<UPoly> sigma(r);
    for (std::size_t i = 0; i < r; ++i) {
      UPoly h = uv_constant(K, K.one());
      for (std::size_t l = 0; l < r; ++l)
        if (l != i) h = uv_mod(K, uv_mul(K, h, us[l]), us[i]);
      UPoly g, s, t;
      uv_ext_gcd(K, h, us[i], g, s, t);
      sigma[i] = uv_mod(K, s, us[i]);
    }

    std::vector<Polynomial> lifted;
    for (const auto& ui : us) lifted.push_back(Polynomial::from_upoly(Kp, vars, xname, ui));

    for (long j = 1; j < J; ++j) {
      Polynomial prod = Polynomial::from_int(Kp, vars, 1);
      for (const auto& g : lifted) prod = trunc_aux(prod * g, info.aux, J);
      Polynomial E = Pmon - prod;
      // Group the aux-degree-j part by aux monomial.
      std::map<Expts, UPoly> groups;
      for (const auto& [e, c] : E.terms()) {
        if (aux_degree_of(e, info.aux) != j) continue;
        Expts beta = e;
        unsigned xexp = beta[info.main];
        beta[info.main] = 0;
        auto it2 = groups.find(beta);
        if (it2 == groups.end()) it2 = groups.emplace(beta, UPoly{}).first;
        UPoly& up = it2->second;
        if (up.size() <= xexp) up.resize(xexp + 1, K.zero());
        up[xexp] = K.add(up[xexp], c);
      }
      for (auto& [beta, e_up] : groups) {
        uv_normalize(K, e_up);
        if (e_up.empty()) continue;
        for (std::size_t i = 0; i < r; ++i) {
          UPoly di = uv_mod(K, uv_mul(K, sigma[i], e_up), us[i]);
          if (di.empty()) continue;
          Polynomial add = Polynomial::zero(Kp, vars);
          for (std::size_t t = 0; t < di.size(); ++t) {
            if (K.is_zero(di[t])) continue;
            Expts e = beta;
            e[info.main] = static_cast<unsigned>(t);
            add = add + Polynomial::monomial(Kp, vars, e, di[t]);
          }
          lifted[i] = lifted[i] + add;
        }
      }
    }

    // Recombine subsets; every candidate is verified by exact division.
    Polynomial rem = Pt;
    Polynomial remLc = Lt;
    std::vector<std::size_t> live(r);
    for (std::size_t i = 0; i < r; ++i) live[i] = i;
    std::vector<Polynomial> found;
    std::size_t s = 1;
    while (2 * s <= live.size()) {
      std::vector<std::size_t> combo(s);
      for (std::size_t i = 0; i < s; ++i) combo[i] = i;
      bool restart = false;
      while (true) {
        Polynomial cand = remLc;
        for (std::size_t i : combo) cand = trunc_aux(cand * lifted[live[i]], info.aux, J);
        if (!cand.is_zero()) {
          Polynomial cont = poly_content_in(cand, xname);
          if (!cont.is_zero() && !cont.is_unit()) cand = cand.div_exact(cont);
          cand = cand.monic();
          if (cand.degree_in(info.main) >= 1 && rem.divisible_by(cand)) {
            found.push_back(cand);
            rem = rem.div_exact(cand);
            remLc = rem.coeff_of(xname, static_cast<unsigned>(rem.degree_in(info.main)));
            std::vector<std::size_t> nl;
            for (std::size_t i = 0; i < live.size(); ++i)
              if (std::find(combo.begin(), combo.end(), i) == combo.end())
                nl.push_back(live[i]);
            live = nl;
            restart = true;
            break;
          }
        }
        bool advanced = false;
        for (std::size_t i = s; i-- > 0;) {
          if (combo[i] + (s - i) < live.size()) {
            ++combo[i];
            for (std::size_t j2 = i + 1; j2 < s; ++j2) combo[j2] = combo[j2 - 1] + 1;
            advanced = true;
            break;
          }
        }
        if (!advanced) break;
      }
      if (restart) {
        s = 1;
        continue;
      }
      ++s;
    }
    if (rem.degree_in(info.main) >= 1) found.push_back(rem.monic());

    // Translate back and hand the factors out.
    std::vector<Polynomial> out;
    for (const auto& g : found) out.push_back(g.substitute(back).monic());
    return out;
  }

  // Point search exhausted.  Over a small finite field, retry over an
  // extension and descend by grouping conjugate factors.
  if (allow_ext && finite) {
    std::uint64_t pchar = K.characteristic();
    auto Fp = Field::prime(pchar);
    std::size_t e1 = K.extension_degree();
    for (std::size_t mult : {2, 3}) {
      std::size_t e2 = e1 * mult;
      // Random monic irreducible of degree e2 over F_p.
      FieldPtr K2;
      for (int t = 0; t < 200 && !K2; ++t) {
        UPoly mp(e2 + 1, Fp->zero());
        mp[e2] = Fp->one();
        for (std::size_t i = 0; i < e2; ++i) mp[i] = random_elem(*Fp, rng);
        Rng sub(rng.next());
        if (!uv_squarefree(*Fp, mp)) continue;
        auto fs = ff_factor_squarefree(*Fp, mp, sub);
        if (fs.size() == 1) K2 = Field::extension_unchecked(Fp, "w_", mp);
      }
      if (!K2) continue;
      // Embedding K -> K2.
      FElem theta_img = K2->zero();
      if (K.kind() == Field::Kind::extension) {
        UPoly mpK;
        for (const auto& c : K.minpoly()) mpK.push_back(K2->embed(*Fp, c));
        Rng sub(rng.next());
        auto fs = ff_factor_squarefree(*K2, mpK, sub);
        std::optional<FElem> root;
        for (const auto& lf : fs)
          if (uv_deg(lf) == 1) {
            FElem cand = K2->neg(lf[0]);
            if (!root || K2->cmp(cand, *root) < 0) root = cand;
          }
        if (!root) continue;
        theta_img = *root;
      }
      auto embed_elem = [&](const FElem& c) -> FElem {
        if (K.kind() == Field::Kind::prime) return K2->embed(*Fp, c);
        const auto& v = std::get<std::vector<FElem>>(c.rep);
        FElem acc = K2->zero();
        FElem powt = K2->one();
        for (std::size_t i = 0; i < v.size(); ++i) {
          acc = K2->add(acc, K2->mul(K2->embed(*Fp, v[i]), powt));
          powt = K2->mul(powt, theta_img);
        }
        return acc;
      };
      Polynomial P2 = Polynomial::zero(K2, vars);
      for (const auto& [e, c] : P0.terms())
        P2 = P2 + Polynomial::monomial(K2, vars, e, embed_elem(c));
      std::vector<Polynomial> fs2 = factor_squarefree_poly(P2, rng, /*allow_ext=*/false);
      // Group into orbits under the relative Frobenius c -> c^{|K|}.
      mpz_class q1 = K.order();
      auto frob_poly = [&](const Polynomial& g) {
        Polynomial r2 = Polynomial::zero(K2, vars);
        for (const auto& [e, c] : g.terms())
          r2 = r2 + Polynomial::monomial(K2, vars, e, K2->pow(c, q1));
        return r2.monic();
      };
      // Unembedding: solve over F_p in the basis (theta_img^i * w_^j).
      std::size_t d2 = K2->extension_degree();
      auto unembed_elem = [&](const FElem& c) -> FElem {
        const auto& v = std::get<std::vector<FElem>>(c.rep);
        if (K.kind() == Field::Kind::prime) {
          for (std::size_t i = 1; i < v.size(); ++i)
            if (!Fp->is_zero(v[i])) throw error("conjugate product did not descend");
          return v.empty() ? K.zero() : v[0];
        }
        Matrix A(d2, std::vector<FElem>(e1, Fp->zero()));
        FElem powt = K2->one();
        for (std::size_t i = 0; i < e1; ++i) {
          const auto& col = std::get<std::vector<FElem>>(powt.rep);
          for (std::size_t rrow = 0; rrow < d2; ++rrow) A[rrow][i] = col[rrow];
          powt = K2->mul(powt, theta_img);
        }
        std::vector<FElem> b(v.begin(), v.end());
        b.resize(d2, Fp->zero());
        auto sol = solve_linear(*Fp, A, b);
        if (!sol) throw error("conjugate product did not descend");
        std::vector<FElem> kv = *sol;
        kv.resize(e1, Fp->zero());
        return FElem{kv};
      };
      std::vector<bool> used(fs2.size(), false);
      std::vector<Polynomial> out;
      for (std::size_t i = 0; i < fs2.size(); ++i) {
        if (used[i]) continue;
        Polynomial orbit_prod = fs2[i];
        used[i] = true;
        Polynomial cur = frob_poly(fs2[i]);
        while (cur != fs2[i]) {
          bool matched = false;
          for (std::size_t j2 = 0; j2 < fs2.size(); ++j2) {
            if (used[j2] || !(fs2[j2] == cur)) continue;
            used[j2] = true;
            orbit_prod = orbit_prod * cur;
            matched = true;
            break;
          }
          if (!matched) throw error("Frobenius orbit did not close");
          cur = frob_poly(cur);
        }
        Polynomial down = Polynomial::zero(Kp, vars);
        for (const auto& [e, c] : orbit_prod.terms())
          down = down + Polynomial::monomial(Kp, vars, e, unembed_elem(c));
        out.push_back(down.monic());
      }
      return out;
    }
  }
  throw inconclusive_error("factorization inconclusive: evaluation point search exhausted");
}

// Factors a squarefree nonconstant polynomial into irreducibles (monic).
std::vector<Polynomial> factor_squarefree_poly(const Polynomial& p, Rng& rng, bool allow_ext) {
  const FieldPtr& Kp = p.field();
  auto sup = p.support_vars();
  if (sup.empty()) throw error("cannot factor a constant");
  if (sup.size() == 1) {
    UPoly u = p.to_upoly(sup[0]);
    std::vector<Polynomial> out;
    for (const auto& g : uv_factor_squarefree(Kp, uv_monic(*Kp, u), rng))
      out.push_back(Polynomial::from_upoly(Kp, p.vars(), sup[0], g));
    return out;
  }

  // Homogeneous bivariate: dehomogenize to a univariate problem.
  if (sup.size() == 2) {
    long d = p.total_degree();
    bool homog = true;
    for (const auto& [e, c] : p.terms()) {
      long s = 0;
      for (unsigned x : e) s += x;
      if (s != d) homog = false;
    }
    if (homog) {
      const std::string &u = sup[0], &v = sup[1];
      Polynomial pu = p.substitute({{v, Polynomial::from_int(Kp, p.vars(), 1)}});
      UPoly up = pu.to_upoly(u);
      std::vector<Polynomial> out;
      long drop = d - uv_deg(up);
      if (drop > 0) out.push_back(Polynomial::variable(Kp, p.vars(), v));
      // Rehomogenize each univariate factor with respect to v.
      for (const auto& g : uv_factor_squarefree(Kp, uv_monic(*Kp, up), rng)) {
        Polynomial gh = Polynomial::zero(Kp, p.vars());
        long dg = uv_deg(g);
        std::size_t ui = p.var_index(u), vi = p.var_index(v);
        for (std::size_t k2 = 0; k2 < g.size(); ++k2) {
          if (Kp->is_zero(g[k2])) continue;
          Expts e(p.vars()->size(), 0);
          e[ui] = static_cast<unsigned>(k2);
          e[vi] = static_cast<unsigned>(dg - static_cast<long>(k2));
          gh = gh + Polynomial::monomial(Kp, p.vars(), e, g[k2]);
        }
        out.push_back(gh.monic());
      }
      return out;
    }
  }

  // General multivariate: try candidate main variables by increasing degree;
  // a field extension is used only after every candidate exhausts its points.
  std::vector<std::string> cands = sup;
  std::sort(cands.begin(), cands.end(), [&](const std::string& a, const std::string& b) {
    long da = p.degree_in(a), db = p.degree_in(b);
    if (da != db) return da < db;
    return p.var_index(a) < p.var_index(b);
  });
  for (int phase = 0; phase < (allow_ext ? 2 : 1); ++phase) {
    for (const auto& mname : cands) {
      try {
        Polynomial cont = poly_content_in(p, mname);
        std::vector<Polynomial> out;
        Polynomial pp = p;
        if (!cont.is_zero() && !cont.is_unit()) {
          pp = p.div_exact(cont);
          for (const auto& g : factor_squarefree_poly(cont, rng, allow_ext)) out.push_back(g);
        }
        AuxInfo info;
        info.main = pp.var_index(mname);
        for (const auto& v : pp.support_vars())
          if (v != mname) info.aux.push_back(pp.var_index(v));
        if (info.aux.empty()) {
          UPoly u = pp.to_upoly(mname);
          for (const auto& g : uv_factor_squarefree(Kp, uv_monic(*Kp, u), rng))
            out.push_back(Polynomial::from_upoly(Kp, p.vars(), mname, g));
          return out;
        }
        for (const auto& g : factor_multivar(pp, info, rng, /*allow_ext=*/phase == 1))
          out.push_back(g);
        return out;
      } catch (const inconclusive_error&) {
        continue;  // next main variable or next phase
      }
    }
  }
  throw inconclusive_error("factorization inconclusive: evaluation point search exhausted");
}

void sort_factors(std::vector<std::pair<Polynomial, unsigned>>& fs) {
  std::sort(fs.begin(), fs.end(), [](const auto& a, const auto& b) {
    long da = a.first.total_degree(), db = b.first.total_degree();
    if (da != db) return da < db;
    if (a.first.terms().size() != b.first.terms().size())
      return a.first.terms().size() < b.first.terms().size();
    auto ia = a.first.terms().begin();
    auto ib = b.first.terms().begin();
    const Field& K = *a.first.field();
    for (; ia != a.first.terms().end(); ++ia, ++ib) {
      if (ia->first != ib->first) return ia->first < ib->first;
      int c = K.cmp(ia->second, ib->second);
      if (c != 0) return c < 0;
    }
    return a.second < b.second;
  });
}

}  // namespace

Polynomial Factorization::reassemble(const FieldPtr& f, const VarsPtr& vars) const {
  Polynomial p = Polynomial::constant(f, vars, unit);
  for (const auto& [g, e] : factors) p = p * g.pow(e);
  return p;
}

Polynomial SquarefreeDecomposition::reassemble(const FieldPtr& f, const VarsPtr& vars) const {
  Polynomial p = Polynomial::constant(f, vars, unit);
  for (const auto& [g, e] : parts) p = p * g.pow(e);
  return p;
}

SquarefreeDecomposition squarefree_decompose(const Polynomial& p) {
  if (p.is_zero()) throw error("squarefree decomposition of zero");
  SquarefreeDecomposition out;
  out.parts = sqf_impl(p);
  // Merge parts sharing a multiplicity, then normalize.
  std::map<unsigned, Polynomial> merged;
  for (const auto& [q, m] : out.parts) {
    auto it = merged.find(m);
    if (it == merged.end())
      merged.emplace(m, q);
    else
      it->second = it->second * q;
  }
  out.parts.clear();
  for (const auto& [m, q] : merged) out.parts.emplace_back(q.monic(), m);
  sort_factors(out.parts);
  Polynomial prod = Polynomial::from_int(p.field(), p.vars(), 1);
  for (const auto& [q, m] : out.parts) prod = prod * q.pow(m);
  out.unit = p.div_exact(prod).constant_value();
  return out;
}

Factorization factor(const Polynomial& p, std::uint64_t seed) {
  if (p.is_zero()) throw error("cannot factor zero");
  if (p.is_constant()) throw error("cannot factor a unit");
  Rng rng(seed ? seed : 1);
  Factorization out;
  SquarefreeDecomposition sq = squarefree_decompose(p);
  std::vector<std::pair<Polynomial, unsigned>> fs;
  for (const auto& [part, mult] : sq.parts) {
    for (const auto& g : factor_squarefree_poly(part, rng, /*allow_ext=*/true)) {
      Polynomial gm = g.monic();
      bool merged = false;
      for (auto& [h, e] : fs)
        if (h == gm) {
          e += mult;
          merged = true;
          break;
        }
      if (!merged) fs.emplace_back(gm, mult);
    }
  }
  sort_factors(fs);
  out.factors = std::move(fs);
  Polynomial prod = Polynomial::from_int(p.field(), p.vars(), 1);
  for (const auto& [g, e] : out.factors) prod = prod * g.pow(e);
  out.unit = p.div_exact(prod).constant_value();
  return out;
}

bool is_irreducible(const Polynomial& p, std::uint64_t seed) {
  if (p.is_zero() || p.is_constant()) return false;
  Factorization f = factor(p, seed);
  return f.factors.size() == 1 && f.factors[0].second == 1;
}

FieldPtr make_simple_extension(FieldPtr base, const std::string& generator,
                               const Polynomial& minpoly_univariate, std::uint64_t seed) {
  auto sup = minpoly_univariate.support_vars();
  if (sup.size() != 1) throw error("minimal polynomial must be univariate");
  if (!is_irreducible(minpoly_univariate, seed))
    throw error("minimal polynomial is not irreducible over the base field");
  UPoly mp = minpoly_univariate.monic().to_upoly(sup[0]);
  return Field::extension_unchecked(std::move(base), generator, std::move(mp));
}

std::vector<FElem> roots_in_field(const Polynomial& p, const std::string& var,
                                  std::uint64_t seed) {
  const Field& K = *p.field();
  UPoly u = p.to_upoly(var);
  if (uv_deg(u) < 1) return {};
  std::vector<FElem> roots;
  Factorization f = factor(p, seed);
  for (const auto& [g, e] : f.factors) {
    if (g.total_degree() != 1) continue;
    UPoly gu = g.to_upoly(var);
    if (uv_deg(gu) != 1) continue;  // linear in some other variable
    roots.push_back(K.neg(K.div(gu[0], gu[1])));
  }
  std::sort(roots.begin(), roots.end(),
            [&K](const FElem& a, const FElem& b) { return K.cmp(a, b) < 0; });
  return roots;
}

Tri absolutely_irreducible(const Polynomial& p, std::uint64_t seed) {
  if (p.is_zero() || p.is_constant()) throw error("absolute irreducibility needs a nonconstant input");
  auto sup = p.support_vars();
  if (sup.size() > 2) return Tri::unknown;
  if (!is_irreducible(p, seed)) return Tri::no;
  if (sup.size() == 1) return p.total_degree() == 1 ? Tri::yes : Tri::no;

  const std::string &zu = sup[0], &zv = sup[1];
  long du = p.degree_in(zu), dv = p.degree_in(zv);
  long g = du;
  while (dv != 0) {
    long t = g % dv;
    g = dv;
    dv = t;
  }
  if (g == 1) return Tri::yes;

  const FieldPtr& Kp = p.field();
  const Field& K = *Kp;
  // Look for a specialization with a squarefree full-degree fiber; a root of
  // it is a smooth point, and the component through a smooth point is defined
  // over the residue field of that root.
  struct Probe {
    std::string main, other;
  };
  for (const Probe& pr : {Probe{zu, zv}, Probe{zv, zu}}) {
    long dmain = p.degree_in(pr.main);
    for (int ci = 0; ci < 40; ++ci) {
      long long cval = (ci % 2 == 0) ? ci / 2 : -(ci / 2 + 1);
      FElem c = K.from_int(cval);
      if (K.is_finite() && static_cast<unsigned long>(ci) >= K.order().get_ui()) break;
      Polynomial h = p.substitute({{pr.other, Polynomial::constant(Kp, p.vars(), c)}});
      if (h.is_zero() || h.degree_in(pr.main) != dmain) continue;
      UPoly hu = h.to_upoly(pr.main);
      if (!uv_squarefree(K, hu)) continue;
      Factorization hf = factor(h, seed);
      // Smallest-degree irreducible factor gives the cheapest residue field.
      const Polynomial* best = nullptr;
      for (const auto& fe : hf.factors)
        if (!best || fe.first.total_degree() < best->total_degree()) best = &fe.first;
      if (!best) continue;
      long dmu = best->total_degree();
      if (dmu == 1) return Tri::yes;
      if (K.kind() == Field::Kind::extension) return Tri::unknown;
      if (dmu > 8) return Tri::unknown;
      FieldPtr L;
      try {
        L = make_simple_extension(Kp, "w_", *best, seed);
      } catch (const error&) {
        return Tri::unknown;
      }
      Polynomial pL = p.map_field(L);
      try {
        return is_irreducible(pL, seed) ? Tri::yes : Tri::no;
      } catch (const inconclusive_error&) {
        return Tri::unknown;
      }
    }
  }
  return Tri::unknown;
}

}  // namespace linhyp
