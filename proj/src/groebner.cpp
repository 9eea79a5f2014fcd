#include "linhyp/groebner.hpp"

#include <algorithm>
#include <optional>

namespace linhyp {

namespace {

// Indices into the context variable list, highest priority first.
std::vector<std::size_t> priority_indices(const Polynomial& sample, const MonomialOrder& ord) {
  const auto& vars = *sample.vars();
  std::vector<std::size_t> idx;
  if (ord.priority.empty()) {
    idx.resize(vars.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return idx;
  }
  for (const auto& name : ord.priority) idx.push_back(sample.var_index(name));
  // Unlisted variables go last in context order.
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (std::find(idx.begin(), idx.end(), i) == idx.end()) idx.push_back(i);
  return idx;
}

struct OrderCtx {
  MonomialOrder::Type type;
  std::vector<std::size_t> idx;

  int cmp(const Expts& a, const Expts& b) const {
    if (type == MonomialOrder::Type::lex) {
      for (std::size_t i : idx) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      }
      return 0;
    }
    long da = 0, db = 0;
    for (std::size_t i : idx) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    // grevlex: larger exponent in the least significant position loses.
    for (std::size_t k = idx.size(); k-- > 0;) {
      std::size_t i = idx[k];
      if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
  }
};

std::pair<Expts, FElem> leading(const Polynomial& p, const OrderCtx& ord) {
  auto it = p.terms().begin();
  auto best = it;
  for (++it; it != p.terms().end(); ++it)
    if (ord.cmp(it->first, best->first) > 0) best = it;
  return {best->first, best->second};
}

bool mono_divides(const Expts& a, const Expts& b) {  // a | b
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Expts mono_lcm(const Expts& a, const Expts& b) {
  Expts r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool mono_coprime(const Expts& a, const Expts& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

Polynomial reduce_full(const Polynomial& p, const std::vector<Polynomial>& basis,
                       const std::vector<std::pair<Expts, FElem>>& lts, const OrderCtx& ord) {
  Polynomial rem = Polynomial::zero(p.field(), p.vars());
  Polynomial cur = p;
  const Field& K = *p.field();
  while (!cur.is_zero()) {
    auto [lt, lc] = leading(cur, ord);
    bool reduced = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!mono_divides(lts[i].first, lt)) continue;
      Expts q(lt.size());
      for (std::size_t j = 0; j < lt.size(); ++j) q[j] = lt[j] - lts[i].first[j];
      FElem c = K.div(lc, lts[i].second);
      cur = cur - Polynomial::monomial(p.field(), p.vars(), q, c) * basis[i];
      reduced = true;
      break;
    }
    if (!reduced) {
      Polynomial t = Polynomial::monomial(p.field(), p.vars(), lt, lc);
      rem = rem + t;
      cur = cur - t;
    }
  }
  return rem;
}

}  // namespace

GroebnerBasis groebner(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
  if (gens.empty()) throw error("empty generator list");
  std::vector<Polynomial> basis;
  for (const auto& g : gens)
    if (!g.is_zero()) basis.push_back(g);
  GroebnerBasis out{{}, order, true};
  if (basis.empty()) return out;  // zero ideal

  OrderCtx ord{order.type, priority_indices(basis.front(), order)};
  std::vector<std::pair<Expts, FElem>> lts;
  for (const auto& g : basis) lts.push_back(leading(g, ord));

  struct Pair {
    std::size_t i, j;
    Expts lcm;
  };
  std::vector<Pair> pairs;
  auto push_pairs_with = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i)
      pairs.push_back({i, j, mono_lcm(lts[i].first, lts[j].first)});
  };
  for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_with(j);

  while (!pairs.empty()) {
    // Normal selection: smallest lcm first keeps the computation tame.
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k)
      if (ord.cmp(pairs[k].lcm, pairs[best].lcm) < 0) best = k;
    Pair pr = pairs[best];
    pairs.erase(pairs.begin() + static_cast<long>(best));

    // Coprime leading terms reduce to zero automatically.
    if (mono_coprime(lts[pr.i].first, lts[pr.j].first)) continue;
    // Chain criterion: a third leading term dividing the lcm, with both of its
    // pairs already processed, makes this pair redundant.
    bool chained = false;
    for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!mono_divides(lts[k].first, pr.lcm)) continue;
      bool pending = false;
      for (const auto& q : pairs) {
        if (q.i == std::min(pr.i, k) && q.j == std::max(pr.i, k)) pending = true;
        if (q.i == std::min(pr.j, k) && q.j == std::max(pr.j, k)) pending = true;
      }
      if (!pending) chained = true;
    }
    if (chained) continue;

    const Field& K = *basis.front().field();
    Expts qi(pr.lcm.size()), qj(pr.lcm.size());
    for (std::size_t t = 0; t < pr.lcm.size(); ++t) {
      qi[t] = pr.lcm[t] - lts[pr.i].first[t];
      qj[t] = pr.lcm[t] - lts[pr.j].first[t];
    }
    Polynomial spoly =
        Polynomial::monomial(basis.front().field(), basis.front().vars(), qi,
                             K.inv(lts[pr.i].second)) *
            basis[pr.i] -
        Polynomial::monomial(basis.front().field(), basis.front().vars(), qj,
                             K.inv(lts[pr.j].second)) *
            basis[pr.j];
    Polynomial nf = reduce_full(spoly, basis, lts, ord);
    if (!nf.is_zero()) {
      basis.push_back(nf);
      lts.push_back(leading(nf, ord));
      push_pairs_with(basis.size() - 1);
    }
  }

  // Minimalize: drop generators whose leading term another one divides.
  std::vector<bool> keep(basis.size(), true);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size() && keep[i]; ++j) {
      if (i == j || !keep[j]) continue;
      if (mono_divides(lts[j].first, lts[i].first) && lts[j].first != lts[i].first) keep[i] = false;
      if (lts[j].first == lts[i].first && j < i) keep[i] = false;
    }
  }
  std::vector<Polynomial> minimal;
  std::vector<std::pair<Expts, FElem>> min_lts;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (keep[i]) {
      minimal.push_back(basis[i]);
      min_lts.push_back(lts[i]);
    }
  // Inter-reduce tails and make monic.
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    std::vector<std::pair<Expts, FElem>> others_lts;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) {
        others.push_back(minimal[j]);
        others_lts.push_back(min_lts[j]);
      }
    Polynomial r = others.empty() ? minimal[i] : reduce_full(minimal[i], others, others_lts, ord);
    const Field& K = *r.field();
    FElem lc = leading(r, ord).second;
    reduced.push_back(r.scale(K.inv(lc)));
  }
  // Canonical output order: leading monomials descending.
  std::vector<std::size_t> perm(reduced.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return ord.cmp(leading(reduced[a], ord).first, leading(reduced[b], ord).first) > 0;
  });
  for (std::size_t i : perm) out.generators.push_back(reduced[i]);
  return out;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& basis) {
  if (basis.generators.empty()) return p;
  OrderCtx ord{basis.order.type, priority_indices(basis.generators.front(), basis.order)};
  std::vector<std::pair<Expts, FElem>> lts;
  for (const auto& g : basis.generators) lts.push_back(leading(g, ord));
  return reduce_full(p, basis.generators, lts, ord);
}

bool ideal_is_proper(const std::vector<Polynomial>& gens) {
  GroebnerBasis gb = groebner(gens, MonomialOrder::grevlex());
  for (const auto& g : gb.generators)
    if (g.is_unit()) return false;
  return true;
}

Polynomial resultant(const Polynomial& p, const Polynomial& q, const std::string& var) {
  if (p.is_zero() || q.is_zero()) throw error("resultant of a zero polynomial");
  long dp = p.degree_in(var);
  long dq = q.degree_in(var);
  if (dp == 0 && dq == 0) throw error("resultant degenerate: both arguments constant in " + var);
  if (dp == 0) return p.pow(static_cast<unsigned long>(dq));
  if (dq == 0) return q.pow(static_cast<unsigned long>(dp));

  // Sylvester matrix with polynomial entries; fraction-free Bareiss elimination.
  auto cp = p.coeffs_in(var);
  auto cq = q.coeffs_in(var);
  auto zero = Polynomial::zero(p.field(), p.vars());
  auto coeff = [&](const std::map<unsigned, Polynomial>& m, long k) -> Polynomial {
    auto it = m.find(static_cast<unsigned>(k));
    return it == m.end() ? zero : it->second;
  };
  std::size_t n = static_cast<std::size_t>(dp + dq);
  // Rows carry the coefficients in ascending order.
  std::vector<std::vector<Polynomial>> M(n, std::vector<Polynomial>(n, zero));
  for (long r = 0; r < dq; ++r)
    for (long k = 0; k <= dp; ++k) M[r][r + k] = coeff(cp, k);
  for (long r = 0; r < dp; ++r)
    for (long k = 0; k <= dq; ++k) M[dq + r][r + k] = coeff(cq, k);

  Polynomial denom = Polynomial::from_int(p.field(), p.vars(), 1);
  int sign = 1;
  for (std::size_t col = 0; col + 1 < n; ++col) {
    std::size_t piv = col;
    while (piv < n && M[piv][col].is_zero()) ++piv;
    if (piv == n) return zero;  // singular: resultant vanishes
    if (piv != col) {
      std::swap(M[piv], M[col]);
      sign = -sign;
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      for (std::size_t c = col + 1; c < n; ++c) {
        Polynomial t = M[r][c] * M[col][col] - M[r][col] * M[col][c];
        M[r][c] = t.div_exact(denom);
      }
      M[r][col] = zero;
    }
    denom = M[col][col];
  }
  Polynomial res = M[n - 1][n - 1];
  if (sign < 0) res = -res;
  return res;
}

}  // namespace linhyp
