#include "linhyp/hypersurface.hpp"

#include <algorithm>

#include "linhyp/groebner.hpp"
#include "linhyp/rng.hpp"

namespace linhyp {

std::vector<std::string> x_names(unsigned m) {
  std::vector<std::string> xs;
  for (unsigned i = 1; i <= m; ++i) xs.push_back("X" + std::to_string(i));
  return xs;
}

VarsPtr datum_vars(unsigned m) {
  std::vector<std::string> vs = x_names(m);
  vs.push_back("Y");
  vs.push_back("Z");
  vs.push_back("T");
  return make_vars(std::move(vs));
}

ConstructOutcome construct_datum(FieldPtr field, unsigned m, const Polynomial& alpha_in,
                                 const Polynomial& f_in, const Polynomial& h_in) {
  if (m == 0) throw error("m must be positive");
  VarsPtr vars = datum_vars(m);
  Polynomial alpha = alpha_in.with_vars(vars);
  Polynomial f = f_in.with_vars(vars);
  Polynomial h = h_in.with_vars(vars);
  std::vector<std::string> xs = x_names(m);
  std::vector<std::string> xzt = xs;
  xzt.push_back("Z");
  xzt.push_back("T");
  if (!alpha.uses_only(xs)) throw error("alpha must involve only X1..Xm");
  if (!f.uses_only({"Z", "T"})) throw error("f must involve only Z and T");
  if (!h.uses_only(xzt)) throw error("h must involve only X1..Xm, Z, T");
  if (f.is_zero()) throw error("f must be nonzero");

  ConstructOutcome out;
  if (alpha.is_zero()) {
    if (!h.is_zero()) throw error("alpha = 0 forces h = 0");
    out.verdict =
        "A = k[X1..Xm][Z,T]/(f): a polynomial ring exactly when f is a line in k[Z,T]";
    return out;
  }
  if (alpha.is_constant()) {
    out.verdict = "A = k^[" + std::to_string(m + 2) + "] (alpha is a unit)";
    return out;
  }
  // Irreducibility of H = alpha*Y - (f + h): the content over k[X,Z,T] must
  // be trivial.
  Polynomial v = f + h;
  if (!poly_gcd(alpha, v).is_unit())
    throw error("H is reducible: alpha and f + h share a factor");

  HypersurfaceDatum d;
  d.field = std::move(field);
  d.m = m;
  d.vars = vars;
  d.alpha = alpha;
  d.f = f;
  d.h = h;
  d.H = alpha * Polynomial::variable(d.field, vars, "Y") - f - h;
  out.datum = std::move(d);
  return out;
}

CondReport check_cond(const HypersurfaceDatum& datum, std::uint64_t seed) {
  CondReport rep;
  rep.alpha_factors = factor(datum.alpha, seed);
  rep.holds = true;
  for (const auto& [p, e] : rep.alpha_factors.factors) {
    bool d = datum.h.is_zero() || datum.h.divisible_by(p);
    rep.divides.push_back(d);
    if (!d) rep.holds = false;
  }
  return rep;
}

namespace {

// Shifts alpha by lambda over the (possibly extended) field.
Polynomial shift_alpha(const Polynomial& alpha, const std::vector<std::string>& order,
                       const FieldPtr& shift_field, const std::vector<FElem>& lambda) {
  Polynomial a = alpha;
  if (!alpha.field()->same(*shift_field)) a = alpha.map_field(shift_field);
  std::map<std::string, Polynomial> subst;
  for (std::size_t i = 0; i < order.size(); ++i) {
    Polynomial xi = Polynomial::variable(shift_field, a.vars(), order[i]);
    subst.emplace(order[i], xi + Polynomial::constant(shift_field, a.vars(), lambda[i]));
  }
  return a.substitute(subst);
}

}  // namespace

RDivResult rdiv_decompose(const Polynomial& alpha, const std::vector<std::string>& order) {
  std::vector<FElem> zero(order.size(), alpha.field()->zero());
  return rdiv_decompose(alpha, order, alpha.field(), zero);
}

RDivResult rdiv_decompose(const Polynomial& alpha, const std::vector<std::string>& order,
                          const FieldPtr& shift_field, const std::vector<FElem>& lambda) {
  if (alpha.is_zero()) throw error("alpha must be nonzero");
  if (lambda.size() != order.size()) throw error("shift length must match the order");
  RDivisibility rd;
  rd.field = shift_field;
  rd.shift = lambda;
  rd.order = order;
  rd.shifted_alpha = shift_alpha(alpha, order, shift_field, lambda);

  Polynomial cur = rd.shifted_alpha;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0) {
      cur = cur.substitute({{order[i - 1], Polynomial::zero(shift_field, cur.vars())}});
      // X_{i-1} does not divide alpha_{i-1}, so the substitution is nonzero.
    }
    unsigned ri = cur.order_in(order[i]);
    if (ri == 0) return RDivFailure{i + 1, "required power of " + order[i] + " is 0"};
    Polynomial xi = Polynomial::variable(shift_field, cur.vars(), order[i]);
    cur = cur.div_exact(xi.pow(ri));
    rd.r.push_back(ri);
    rd.alpha_chain.push_back(cur);
  }
  Polynomial last =
      cur.substitute({{order.back(), Polynomial::zero(shift_field, cur.vars())}});
  if (!last.is_constant()) throw error("internal: trailing quotient is not constant");
  rd.unit = last.constant_value();
  return rd;
}

bool rdiv_replay(const Polynomial& alpha, const RDivisibility& rd) {
  Polynomial shifted = shift_alpha(alpha, rd.order, rd.field, rd.shift);
  if (!(shifted == rd.shifted_alpha)) return false;
  Polynomial cur = shifted;
  for (std::size_t i = 0; i < rd.order.size(); ++i) {
    if (i > 0) cur = cur.substitute({{rd.order[i - 1], Polynomial::zero(rd.field, cur.vars())}});
    Polynomial xi = Polynomial::variable(rd.field, cur.vars(), rd.order[i]);
    Polynomial expect = xi.pow(rd.r[i]) * rd.alpha_chain[i];
    if (!(cur == expect)) return false;
    if (rd.alpha_chain[i].divisible_by(xi)) return false;
    cur = rd.alpha_chain[i];
  }
  Polynomial last = cur.substitute({{rd.order.back(), Polynomial::zero(rd.field, cur.vars())}});
  if (!last.is_constant()) return false;
  return rd.field->equal(last.constant_value(), rd.unit) && !rd.field->is_zero(rd.unit);
}

namespace {

bool all_gt1(const std::vector<unsigned>& r) {
  return std::all_of(r.begin(), r.end(), [](unsigned x) { return x > 1; });
}

std::vector<std::vector<std::string>> permutations_of(const std::vector<std::string>& xs) {
  std::vector<std::string> sorted = xs;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::vector<std::string>> out;
  do {
    out.push_back(sorted);
  } while (std::next_permutation(sorted.begin(), sorted.end()) && out.size() < 24);
  return out;
}

}  // namespace

std::optional<RDivisibility> find_shifted_rdiv(const Polynomial& alpha, bool require_gt1,
                                               std::uint64_t seed) {
  if (alpha.is_zero() || alpha.is_constant()) throw error("alpha must be nonconstant");
  const FieldPtr& K = alpha.field();
  auto xs = alpha.support_vars();
  // Variables the datum declares but alpha does not use can never carry a
  // positive power, so only the used ones may appear in the order.
  auto orders = permutations_of(xs);
  auto accept = [&](const RDivResult& res) -> std::optional<RDivisibility> {
    if (const auto* rd = std::get_if<RDivisibility>(&res)) {
      if (!require_gt1 || all_gt1(rd->r)) return *rd;
    }
    return std::nullopt;
  };

  // Unshifted attempts first.
  for (const auto& ord : orders) {
    if (auto got = accept(rdiv_decompose(alpha, ord))) return got;
  }

  if (xs.size() == 1) {
    const std::string& x = xs[0];
    auto sq = squarefree_decompose(alpha);
    for (const auto& [part, mult] : sq.parts) {
      if (mult < 2 && require_gt1) continue;
      // Rational multiple roots.
      for (const FElem& root : roots_in_field(part, x, seed)) {
        auto res = rdiv_decompose(alpha, {x}, K, {root});
        if (auto got = accept(res)) return got;
      }
      // Roots in a small extension, one shift at a time; the minimal
      // polynomial must be separable.
      if (K->kind() == Field::Kind::extension) continue;
      Factorization pf = factor(part, seed);
      for (const auto& [mu, e] : pf.factors) {
        long d = mu.total_degree();
        if (d < 2 || d > 4) continue;
        Polynomial dmu = mu.derivative(x);
        if (dmu.is_zero() || !poly_gcd(mu, dmu).is_unit()) continue;  // inseparable
        FieldPtr L;
        try {
          L = make_simple_extension(K, "l1", mu, seed);
        } catch (const error&) {
          continue;
        }
        auto res = rdiv_decompose(alpha, {x}, L, {L->generator()});
        if (auto got = accept(res)) return got;
      }
    }
    return std::nullopt;
  }

  // m > 1: coordinatewise candidates from multiple roots of specializations
  // at the origin.  Bounded and documented as incomplete.
  std::map<std::string, std::vector<FElem>> cands;
  for (const auto& x : xs) {
    std::map<std::string, Polynomial> at0;
    for (const auto& y : xs)
      if (y != x) at0.emplace(y, Polynomial::zero(K, alpha.vars()));
    Polynomial spec = alpha.substitute(at0);
    std::vector<FElem> list = {K->zero()};
    if (!spec.is_zero() && !spec.is_constant()) {
      auto sq = squarefree_decompose(spec);
      for (const auto& [part, mult] : sq.parts) {
        if (mult < 2) continue;
        for (const FElem& root : roots_in_field(part, x, seed)) list.push_back(root);
      }
    }
    cands.emplace(x, std::move(list));
  }
  for (const auto& ord : orders) {
    std::vector<std::size_t> idx(ord.size(), 0);
    int budget = 64;
    while (budget-- > 0) {
      std::vector<FElem> lambda;
      for (std::size_t i = 0; i < ord.size(); ++i) lambda.push_back(cands[ord[i]][idx[i]]);
      auto res = rdiv_decompose(alpha, ord, K, lambda);
      if (auto got = accept(res)) return got;
      std::size_t i = 0;
      while (i < ord.size() && ++idx[i] == cands[ord[i]].size()) idx[i++] = 0;
      if (i == ord.size()) break;
    }
  }
  return std::nullopt;
}

TheoremBCase classify_theoremB(const HypersurfaceDatum& datum, std::uint64_t seed) {
  if (datum.field->characteristic() != 0)
    throw error("the case classifier applies in characteristic zero only");
  TheoremBCase out;
  out.alpha_factors = factor(datum.alpha, seed);
  const auto& fs = out.alpha_factors.factors;

  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].second == 1) {
      out.id = TheoremBCaseId::I;
      out.witness = {i};
      return out;
    }
  }
  for (std::size_t i = 0; i < fs.size(); ++i) {
    Polynomial sq = fs[i].first.pow(2);
    if (!datum.h.is_zero() && datum.h.divisible_by(sq)) {
      out.id = TheoremBCaseId::IIa;
      out.witness = {i};
      return out;
    }
    if (datum.h.is_zero()) {  // every power divides 0
      out.id = TheoremBCaseId::IIa;
      out.witness = {i};
      return out;
    }
  }
  std::vector<std::string> xs = x_names(datum.m);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    std::vector<Polynomial> gens = {fs[i].first};
    for (const auto& x : xs) gens.push_back(fs[i].first.derivative(x));
    if (ideal_is_proper(gens)) {
      out.id = TheoremBCaseId::IIb;
      out.witness = {i};
      return out;
    }
  }
  if (fs.size() >= 2) {
    for (std::size_t i = 0; i < fs.size(); ++i) {
      for (std::size_t j = i + 1; j < fs.size(); ++j) {
        if (ideal_is_proper({fs[i].first, fs[j].first})) {
          out.id = TheoremBCaseId::IIc;
          out.witness = {i, j};
          return out;
        }
      }
    }
  }
  out.id = TheoremBCaseId::none;
  return out;
}

bool is_regular_planecurve(const Polynomial& f) {
  if (f.is_zero()) throw error("f must be nonzero");
  std::vector<Polynomial> gens = {f, f.derivative("Z"), f.derivative("T")};
  return !ideal_is_proper(gens);
}

bool is_regular_hypersurface(const HypersurfaceDatum& datum) {
  std::vector<Polynomial> gens = {datum.H, datum.alpha};  // H_Y = alpha
  for (const auto& x : x_names(datum.m)) gens.push_back(datum.H.derivative(x));
  gens.push_back(datum.H.derivative("Z"));
  gens.push_back(datum.H.derivative("T"));
  return !ideal_is_proper(gens);
}

UfdReport ufd_check(const HypersurfaceDatum& datum, std::uint64_t seed) {
  UfdReport rep;
  if (datum.f.is_constant()) {
    rep.verdict = Tri::yes;
    rep.reason = "f is a unit: A is a localization of a polynomial ring";
    return rep;
  }
  Factorization ff = factor(datum.f, seed);
  if (ff.factors.size() > 1 || ff.factors[0].second > 1) {
    rep.verdict = Tri::no;
    rep.reason = "f is reducible in k[Z,T]";
    return rep;
  }
  Tri abs = absolutely_irreducible(datum.f, seed);
  if (abs == Tri::yes) {
    rep.verdict = Tri::yes;
    rep.reason = "f is absolutely irreducible";
    return rep;
  }
  // f is irreducible over k but possibly splits over the residue field of a
  // prime factor of alpha; examine each factor.
  Factorization af = factor(datum.alpha, seed);
  bool unknown = false;
  for (const auto& [p, e] : af.factors) {
    auto sup = p.support_vars();
    if (sup.size() != 1) {
      unknown = true;
      continue;
    }
    long d = p.total_degree();
    if (d == 1) continue;  // residue field is k; f stays irreducible
    if (datum.field->kind() == Field::Kind::extension || d > 8) {
      unknown = true;
      continue;
    }
    FieldPtr L;
    try {
      L = make_simple_extension(datum.field, "r1", p, seed);
    } catch (const error&) {
      unknown = true;
      continue;
    }
    Polynomial fL = datum.f.map_field(L);
    try {
      if (!is_irreducible(fL, seed)) {
        rep.verdict = Tri::no;
        rep.reason = "f splits over the residue field of " + p.to_string();
        return rep;
      }
    } catch (const inconclusive_error&) {
      unknown = true;
    }
  }
  if (unknown) {
    rep.verdict = Tri::unknown;
    rep.reason = "a residue field lies outside the supported tower";
  } else {
    rep.verdict = Tri::yes;
    rep.reason = "f remains prime modulo every prime factor of alpha";
  }
  return rep;
}

}  // namespace linhyp
