#include "linhyp/coordinates.hpp"
#include <functional>

#include <algorithm>
#include <set>

#include "linhyp/charp.hpp"
#include "linhyp/groebner.hpp"

namespace linhyp {

namespace {

void require_planar(const Polynomial& f) {
  if (!f.uses_only({"Z", "T"})) throw error("expected a polynomial in Z and T only");
}

// Extracts (c, gamma) with u = c*(var + gamma)^d for a univariate u of degree
// d, by a coefficient ratio (with p-power deflation in characteristic p) and
// a reconstruction check.  No gcd computations: this sits on the hot path of
// the reduction loop where degrees reach the hundreds.
std::optional<std::pair<FElem, FElem>> pure_shift_power(const Polynomial& u,
                                                        const std::string& var) {
  const FieldPtr& K = u.field();
  long d = u.degree_in(var);
  if (d < 1) return std::nullopt;
  Polynomial lead = u.coeff_of(var, static_cast<unsigned>(d));
  if (!lead.is_constant()) return std::nullopt;
  FElem c = lead.constant_value();
  // d = p^a * d' with p not dividing d'.
  std::uint64_t p = K->characteristic();
  long a = 0;
  long dprime = d;
  if (p != 0)
    while (dprime % static_cast<long>(p) == 0) {
      dprime /= static_cast<long>(p);
      ++a;
    }
  long step = 1;
  for (long i = 0; i < a; ++i) step *= static_cast<long>(p);
  // In a pure power all exponents are multiples of p^a.
  Polynomial next = u.coeff_of(var, static_cast<unsigned>(d - step));
  if (!next.is_constant()) return std::nullopt;
  FElem ratio = K->div(next.constant_value(), K->mul(c, K->from_int(dprime)));
  // ratio = gamma^(p^a); invert the Frobenius over the perfect field.
  FElem gamma = ratio;
  if (a > 0) {
    mpz_class e = K->order() / p;  // x -> x^(q/p) inverts x -> x^p
    for (long i = 0; i < a; ++i) gamma = K->pow(gamma, e);
  }
  Polynomial xv = Polynomial::variable(K, u.vars(), var);
  Polynomial rebuilt = (xv + Polynomial::constant(K, u.vars(), gamma))
                           .pow(static_cast<unsigned long>(d))
                           .scale(c);
  if (rebuilt == u) return std::make_pair(c, gamma);
  return std::nullopt;
}

// If L (a nonzero homogeneous form of degree d in Z, T) is c*(Z + w*T)^d or
// c*T^d, returns the witness; otherwise nullopt.  Complete over perfect
// fields: a single projective root of an irreducible form is rational.
struct PurePower {
  bool ell_is_T = false;
  FElem w;  // ell = Z + w*T when !ell_is_T
  FElem c;
};

std::optional<PurePower> pure_linear_power(const Polynomial& L, long d) {
  const FieldPtr& K = L.field();
  Polynomial Z = Polynomial::variable(K, L.vars(), "Z");
  Polynomial T = Polynomial::variable(K, L.vars(), "T");
  // Pure T^d?
  if (L.degree_in("Z") == 0) {
    Polynomial cT = L.coeff_of("T", static_cast<unsigned>(d));
    if (!cT.is_constant()) return std::nullopt;
    if (L == T.pow(static_cast<unsigned long>(d)).scale(cT.constant_value()))
      return PurePower{true, K->zero(), cT.constant_value()};
    return std::nullopt;
  }
  // Dehomogenize: u(s) = L(s, 1); a pure power needs the Z^d term.
  Polynomial u = L.substitute({{"T", Polynomial::from_int(K, L.vars(), 1)}});
  if (u.degree_in("Z") != d) return std::nullopt;
  auto cw = pure_shift_power(u, "Z");
  if (!cw) return std::nullopt;
  Polynomial rebuilt = (Z + T.scale(cw->second)).pow(static_cast<unsigned long>(d)).scale(cw->first);
  if (rebuilt == L) return PurePower{false, cw->second, cw->first};
  return std::nullopt;
}

// Affine move nu with nu(Z + w*T) = T, used to rotate the leading form onto T.
AffineMove rotate_to_T(const Field& K, const FElem& w) {
  // Z -> -w*Z + T, T -> Z;  (Z + wT) -> (-wZ + T) + wZ = T; det = -1.
  AffineMove m;
  m.a = K.neg(w);
  m.b = K.one();
  m.e = K.zero();
  m.c = K.one();
  m.d = K.zero();
  m.f = K.zero();
  return m;
}

// Final affine move sending the degree-one polynomial aZ + bT + e to T.
AffineMove normalize_linear(const Field& K, const FElem& a, const FElem& b, const FElem& e) {
  AffineMove m;
  if (!K.is_zero(b)) {
    // Z -> Z, T -> (-a/b) Z + (1/b) T - e/b.
    m.a = K.one();
    m.b = K.zero();
    m.e = K.zero();
    m.c = K.neg(K.div(a, b));
    m.d = K.inv(b);
    m.f = K.neg(K.div(e, b));
  } else {
    // Z -> (1/a) T - e/a, T -> Z.
    m.a = K.zero();
    m.b = K.inv(a);
    m.e = K.neg(K.div(e, a));
    m.c = K.one();
    m.d = K.zero();
    m.f = K.zero();
  }
  return m;
}

std::vector<long> zt_weights(const Polynomial& p, long wz, long wt) {
  std::vector<long> w(p.vars()->size(), 0);
  w[p.var_index("Z")] = wz;
  w[p.var_index("T")] = wt;
  return w;
}

}  // namespace

Polynomial apply_automorphism(const PlanarAutomorphism& sigma, const Polynomial& p) {
  require_planar(p);
  return sigma.apply(p);
}

VariableDecision is_variable(const Polynomial& f) {
  require_planar(f);
  if (f.is_constant()) throw error("constant input");
  const FieldPtr& K = f.field();
  VariableDecision dec;
  PlanarAutomorphism sigma(K);
  Polynomial cur = f;
  Polynomial Zv = Polynomial::variable(K, f.vars(), "Z");
  Polynomial Tv = Polynomial::variable(K, f.vars(), "T");

  for (int iter = 0;; ++iter) {
    if (iter > 64) {
      dec.obstruction = "input-too-large";
      dec.iterations = iter;
      return dec;
    }
    long d = cur.total_degree();
    if (d == 1) {
      FElem a = cur.coeff_of("Z", 1).constant_value();
      FElem b = cur.coeff_of("T", 1).constant_value();
      FElem e = cur.substitute({{"Z", Polynomial::zero(K, f.vars())},
                                {"T", Polynomial::zero(K, f.vars())}})
                    .constant_value();
      AffineMove fin = normalize_linear(*K, a, b, e);
      sigma.push_affine(fin);
      if (!(sigma.apply(f) == Tv)) throw error("internal: accepted automorphism failed to verify");
      dec.is_var = true;
      dec.sigma = sigma;
      dec.complement = sigma.inverse().apply(Zv);
      dec.iterations = iter;
      return dec;
    }

    Polynomial L = cur.leading_form();
    auto pure = pure_linear_power(L, d);
    if (!pure) {
      dec.obstruction = "leading-form-not-pure-power";
      dec.obstruction_form = L;
      dec.iterations = iter;
      return dec;
    }
    if (!pure->ell_is_T) {
      AffineMove rot = rotate_to_T(*K, pure->w);
      sigma.push_affine(rot);
      PlanarAutomorphism one(K);
      one.push_affine(rot);
      cur = one.apply(cur);
    }
    long n = cur.degree_in("T");
    long m = cur.degree_in("Z");
    if (m == 0 || n % m != 0) {
      // m = 0 means f is univariate of degree >= 2 (0 divides nothing positive).
      dec.obstruction = "bidegree-nondivisible";
      dec.bidegree_m = m;
      dec.bidegree_n = n;
      dec.obstruction_form = cur.leading_form();
      dec.iterations = iter;
      return dec;
    }
    long q = n / m;
    long wdeg = 0;
    Polynomial fw = cur.weighted_leading_form(zt_weights(cur, q, 1), &wdeg);
    auto stall = [&](const Polynomial& form) {
      dec.obstruction = "reduction-stalled";
      dec.obstruction_form = form;
      dec.bidegree_m = m;
      dec.bidegree_n = n;
      dec.iterations = iter;
      return dec;
    };
    if (wdeg != n) return stall(fw);  // support sticks out above the edge
    // fw must be c*(Z + gamma*T^q)^m.
    Polynomial u = fw.substitute({{"T", Polynomial::from_int(K, f.vars(), 1)}});
    if (u.degree_in("Z") != m) return stall(fw);
    auto cg = pure_shift_power(u, "Z");
    if (!cg) return stall(fw);
    FElem c = cg->first;
    FElem gamma = cg->second;
    Polynomial rebuilt =
        (Zv + Tv.pow(static_cast<unsigned long>(q)).scale(gamma)).pow(static_cast<unsigned long>(m)).scale(c);
    if (!(rebuilt == fw)) return stall(fw);
    // gamma != 0 is automatic: fw contains the T^n term with coefficient c*gamma^m.
    Polynomial addend = Tv.pow(static_cast<unsigned long>(q)).scale(K->neg(gamma));
    sigma.push_triangular("Z", addend);
    PlanarAutomorphism one(K);
    one.push_triangular("Z", addend);
    cur = one.apply(cur);
    // Total degree strictly drops after each edge kill.
  }
}

Polynomial complement(const Polynomial& f) {
  VariableDecision dec = is_variable(f);
  if (!dec.is_var) throw error("complement of a non-variable (" + dec.obstruction + ")");
  return dec.complement;
}

bool linear_form_coordinate(const Polynomial& f, std::uint64_t seed) {
  require_planar(f);
  if (f.is_constant()) throw error("constant input");
  if (f.degree_in("T") > 1) throw error("f is not of the shape a0(Z) + a1(Z)*T");
  Polynomial a1 = f.coeff_of("T", 1);
  Polynomial a0 = f.coeff_of("T", 0);
  // A reducible polynomial is never a coordinate.
  if (!is_irreducible(f, seed)) return false;
  if (a1.is_zero()) return a0.total_degree() == 1;
  return a1.is_constant();
}

std::optional<CoordinatePair> coordinate_pair_witness(const VariableDecision& dec,
                                                      const Polynomial& g) {
  if (!dec.is_var) return std::nullopt;
  require_planar(g);
  const FieldPtr& K = g.field();
  Polynomial w = dec.sigma.apply(g);
  if (w.degree_in("Z") != 1) return std::nullopt;
  Polynomial c1 = w.coeff_of("Z", 1);
  if (!c1.is_constant()) return std::nullopt;  // mixed Z*T^j terms
  FElem c = c1.constant_value();
  Polynomial q = w.coeff_of("Z", 0);  // in k[T]

  auto uv = make_vars({"U", "V"});
  Polynomial U = Polynomial::variable(K, uv, "U");
  Polynomial V = Polynomial::variable(K, uv, "V");
  Polynomial qU = q.substitute({{"T", U}, {"Z", Polynomial::zero(K, uv)}});
  Polynomial zimg = (V - qU).scale(K->inv(c));
  Polynomial sz = dec.sigma.apply(Polynomial::variable(K, g.vars(), "Z"));
  Polynomial st = dec.sigma.apply(Polynomial::variable(K, g.vars(), "T"));
  CoordinatePair out;
  out.P = sz.substitute({{"Z", zimg}, {"T", U}});
  out.Q = st.substitute({{"Z", zimg}, {"T", U}});
  return out;
}

LinearizableResult linearizable_probe(const Polynomial& f, int depth, std::uint64_t seed) {
  require_planar(f);
  if (f.is_constant()) throw error("constant input");
  const FieldPtr& K = f.field();
  LinearizableResult res;

  auto in_shape = [&](const Polynomial& p) -> std::optional<bool> {
    // Returns swap-needed flag when p is linear in T or Z.
    if (p.degree_in("T") <= 1) return false;
    if (p.degree_in("Z") <= 1) return true;
    return std::nullopt;
  };

  // Depth counts greedy reduction blocks; nodes bound the whole search.
  int budget = 500;
  std::set<std::string> visited;
  std::optional<PlanarAutomorphism> found;
  std::function<void(const Polynomial&, PlanarAutomorphism, int)> dfs =
      [&](const Polynomial& cur, PlanarAutomorphism sigma, int left) {
        if (found || budget-- <= 0) return;
        if (auto sw = in_shape(cur)) {
          if (*sw) {
            AffineMove swap;
            swap.a = K->zero();
            swap.b = K->one();
            swap.e = K->zero();
            swap.c = K->one();
            swap.d = K->zero();
            swap.f = K->zero();
            sigma.push_affine(swap);
          }
          found = sigma;
          return;
        }
        if (!visited.insert(cur.to_string()).second) return;
        if (left <= 0) return;
        // Greedy reduction blocks for both orientations.
        for (const auto& [uname, vname] : std::vector<std::pair<std::string, std::string>>{
                 {"Z", "T"}, {"T", "Z"}}) {
          Polynomial work = cur;
          PlanarAutomorphism ext = sigma;
          bool progressed = false;
          for (int steps = 0; steps < 24; ++steps) {
            long dv = work.degree_in(vname);
            bool moved = false;
            for (long q = dv; q >= 1 && !moved; --q) {
              long wdeg = 0;
              std::vector<long> wts = zt_weights(work, uname == "Z" ? q : 1,
                                                 uname == "Z" ? 1 : q);
              Polynomial fw = work.weighted_leading_form(wts, &wdeg);
              // Roots of the slice polynomial in the main variable propose kills.
              Polynomial slice = fw.substitute(
                  {{vname, Polynomial::from_int(K, f.vars(), 1)}});
              if (slice.degree_in(uname) < 1) continue;
              for (const FElem& root : roots_in_field(slice, uname, seed)) {
                // The slice root is -gamma for an edge form c*(u + gamma*v^q)^e,
                // so u -> u + root*v^q removes it.
                if (K->is_zero(root)) continue;
                Polynomial vvar = Polynomial::variable(K, f.vars(), vname);
                Polynomial addend = vvar.pow(static_cast<unsigned long>(q)).scale(root);
                PlanarAutomorphism kill(K);
                kill.push_triangular(uname, addend);
                Polynomial next = kill.apply(work);
                long before = work.total_degree();
                long after = next.total_degree();
                std::size_t tbefore = work.terms().size();
                std::size_t tafter = next.terms().size();
                if (after < before || (after == before && tafter < tbefore)) {
                  work = next;
                  ext.push_triangular(uname, addend);
                  progressed = true;
                  moved = true;
                  break;
                }
              }
            }
            if (!moved) break;
          }
          if (progressed) dfs(work, ext, left - 1);
          if (found) return;
        }
        // Affine rotation proposal from a pure-power leading form.
        Polynomial L = cur.leading_form();
        auto pure = pure_linear_power(L, cur.total_degree());
        if (pure && !pure->ell_is_T) {
          AffineMove rot = rotate_to_T(*K, pure->w);
          PlanarAutomorphism one(K);
          one.push_affine(rot);
          PlanarAutomorphism ext = sigma;
          ext.push_affine(rot);
          dfs(one.apply(cur), ext, left);
        }
      };
  dfs(f, PlanarAutomorphism::identity(K), depth);

  if (found) {
    res.verdict = Tri::yes;
    res.sigma = *found;
    Polynomial img = found->apply(f);
    if (img.degree_in("T") > 1) throw error("internal: linearization did not verify");
    res.note = "coordinate change with deg_T <= 1 found";
    return res;
  }

  // Rejection route: a singular, absolutely irreducible fiber.
  Polynomial fz = f.derivative("Z");
  Polynomial ft = f.derivative("T");
  if (fz.is_zero() && ft.is_zero()) {
    res.note = "all partial derivatives vanish";
    return res;
  }
  std::vector<Polynomial> crit = {fz, ft};
  if (!ideal_is_proper(crit)) {
    res.note = "no critical points: the probe criterion does not apply";
    return res;
  }
  // Eliminate Z, T from (f - C_, f_Z, f_T) to find the critical values.
  auto cvars = make_vars({"Z", "T", "C_"});
  Polynomial fC = f.with_vars(cvars) - Polynomial::variable(K, cvars, "C_");
  std::vector<Polynomial> gens = {fC, fz.with_vars(cvars), ft.with_vars(cvars)};
  GroebnerBasis gb = groebner(gens, MonomialOrder::lex({"Z", "T", "C_"}));
  std::optional<Polynomial> mu;
  for (const auto& g : gb.generators)
    if (g.uses_only({"C_"})) mu = g;
  if (!mu) {
    res.note = "critical values are not zero-dimensional";
    return res;
  }
  for (const FElem& c : roots_in_field(*mu, "C_", seed)) {
    Polynomial fc = f - Polynomial::constant(K, f.vars(), c);
    if (!ideal_is_proper({fc, fz, ft})) continue;
    if (absolutely_irreducible(fc, seed) == Tri::yes) {
      res.verdict = Tri::no;
      res.has_singular_value = true;
      res.singular_value = c;
      res.note = "fiber at the critical value is absolutely irreducible and singular";
      return res;
    }
  }
  res.note = "no decisive critical fiber found (bounded search)";
  return res;
}

FibrationReport fibration_check(const HypersurfaceDatum& datum, const LineWitness* witness,
                                std::uint64_t seed) {
  FibrationReport rep;
  const FieldPtr& K = datum.field;
  Factorization af = factor(datum.alpha, seed);
  // Hunt for a prime containing alpha whose residue field is separable over k
  // and reachable by the supported tower.
  std::string residue;
  for (const auto& [p, e] : af.factors) {
    auto sup = p.support_vars();
    if (sup.size() == 1) {
      Polynomial dp = p.derivative(sup[0]);
      if (!dp.is_zero() && poly_gcd(p, dp).is_unit()) {
        residue = "separable factor " + p.to_string() + " in " + sup[0];
        break;
      }
      continue;
    }
    // Specialize all but one variable at small values and look for a
    // separable univariate slice.
    for (const auto& keep : sup) {
      for (long long c = -2; c <= 2 && residue.empty(); ++c) {
        std::map<std::string, Polynomial> at;
        for (const auto& v : sup)
          if (v != keep) at.emplace(v, Polynomial::from_int(K, p.vars(), c));
        Polynomial slice = p.substitute(at);
        if (slice.is_zero() || slice.is_constant()) continue;
        Polynomial ds = slice.derivative(keep);
        if (ds.is_zero()) continue;
        if (!roots_in_field(slice, keep, seed).empty()) {
          residue = "rational point on " + p.to_string();
          break;
        }
        Factorization sf = factor(slice, seed);
        for (const auto& [mu, me] : sf.factors) {
          Polynomial dmu = mu.derivative(keep);
          if (mu.total_degree() <= 8 && !dmu.is_zero() && poly_gcd(mu, dmu).is_unit()) {
            residue = "separable specialization point on " + p.to_string();
            break;
          }
        }
      }
      if (!residue.empty()) break;
    }
    if (!residue.empty()) break;
  }
  if (residue.empty()) {
    rep.verdict = Tri::unknown;
    rep.premise = "no separable residue certificate found (bounded search)";
    return rep;
  }
  rep.premise = residue;

  if (K->characteristic() == 0) {
    VariableDecision dec = is_variable(datum.f);
    rep.verdict = dec.is_var ? Tri::yes : Tri::no;
    rep.premise += dec.is_var ? "; f is a coordinate" : "; f is not a coordinate (" + dec.obstruction + ")";
    return rep;
  }
  // Characteristic p: a verified witness or a coordinate certifies the line.
  if (witness != nullptr && verify_line_witness(datum.f, *witness, -1, seed) == Tri::yes) {
    rep.verdict = Tri::yes;
    rep.premise += "; line witness verified";
    return rep;
  }
  VariableDecision dec = is_variable(datum.f);
  if (dec.is_var) {
    rep.verdict = Tri::yes;
    rep.premise += "; f is a coordinate";
    return rep;
  }
  rep.verdict = Tri::unknown;
  rep.premise += "; line status unresolved in positive characteristic";
  return rep;
}

}  // namespace linhyp
