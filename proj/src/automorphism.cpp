#include "linhyp/automorphism.hpp"

#include "linhyp/rng.hpp"

namespace linhyp {

PlanarAutomorphism PlanarAutomorphism::identity(FieldPtr field) {
  return PlanarAutomorphism(std::move(field));
}

void PlanarAutomorphism::push_affine(const AffineMove& mv) {
  const Field& K = *field_;
  FElem det = K.sub(K.mul(mv.a, mv.d), K.mul(mv.b, mv.c));
  if (K.is_zero(det)) throw error("affine move is not invertible");
  moves_.push_back(mv);
}

void PlanarAutomorphism::push_triangular(const std::string& target, const Polynomial& addend) {
  if (target != "Z" && target != "T") throw error("triangular target must be Z or T");
  std::string other = target == "Z" ? "T" : "Z";
  if (!addend.uses_only({other}))
    throw error("triangular addend must be univariate in the other variable");
  moves_.push_back(TriangularMove{target, addend});
}

void PlanarAutomorphism::push(const ElementaryMove& mv) {
  if (const auto* a = std::get_if<AffineMove>(&mv))
    push_affine(*a);
  else
    push_triangular(std::get<TriangularMove>(mv).target, std::get<TriangularMove>(mv).addend);
}

void PlanarAutomorphism::append(const PlanarAutomorphism& other) {
  for (const auto& mv : other.moves_) push(mv);
}

PlanarAutomorphism PlanarAutomorphism::inverse() const {
  PlanarAutomorphism inv(field_);
  const Field& K = *field_;
  for (auto it = moves_.rbegin(); it != moves_.rend(); ++it) {
    if (const auto* a = std::get_if<AffineMove>(&*it)) {
      // Invert [a b; c d] and the translation.
      FElem det = K.sub(K.mul(a->a, a->d), K.mul(a->b, a->c));
      FElem di = K.inv(det);
      AffineMove m;
      m.a = K.mul(a->d, di);
      m.b = K.neg(K.mul(a->b, di));
      m.c = K.neg(K.mul(a->c, di));
      m.d = K.mul(a->a, di);
      // translation: -M^{-1} * (e, f)
      m.e = K.neg(K.add(K.mul(m.a, a->e), K.mul(m.b, a->f)));
      m.f = K.neg(K.add(K.mul(m.c, a->e), K.mul(m.d, a->f)));
      inv.push_affine(m);
    } else {
      const auto& t = std::get<TriangularMove>(*it);
      inv.push_triangular(t.target, -t.addend);
    }
  }
  return inv;
}

Polynomial PlanarAutomorphism::apply(const Polynomial& p) const {
  Polynomial cur = p;
  const FieldPtr& K = field_;
  for (const auto& mv : moves_) {
    Polynomial Z = Polynomial::variable(K, cur.vars(), "Z");
    Polynomial T = Polynomial::variable(K, cur.vars(), "T");
    std::map<std::string, Polynomial> subst;
    if (const auto* a = std::get_if<AffineMove>(&mv)) {
      subst.emplace("Z", Z.scale(a->a) + T.scale(a->b) +
                             Polynomial::constant(K, cur.vars(), a->e));
      subst.emplace("T", Z.scale(a->c) + T.scale(a->d) +
                             Polynomial::constant(K, cur.vars(), a->f));
    } else {
      const auto& t = std::get<TriangularMove>(mv);
      Polynomial add = t.addend.with_vars(cur.vars());
      if (t.target == "Z")
        subst.emplace("Z", Z + add);
      else
        subst.emplace("T", T + add);
    }
    cur = cur.substitute(subst);
  }
  return cur;
}

PlanarAutomorphism random_tame_automorphism(const FieldPtr& field, const VarsPtr& vars,
                                            std::uint64_t seed, int max_moves,
                                            int max_addend_deg, int coeff_bound) {
  Rng rng(seed);
  PlanarAutomorphism sigma(field);
  int moves = 1 + static_cast<int>(rng.below(max_moves));
  const Field& K = *field;
  for (int i = 0; i < moves; ++i) {
    if (rng.below(2) == 0) {
      AffineMove m;
      do {
        m.a = K.from_int(rng.range(-coeff_bound, coeff_bound));
        m.b = K.from_int(rng.range(-coeff_bound, coeff_bound));
        m.c = K.from_int(rng.range(-coeff_bound, coeff_bound));
        m.d = K.from_int(rng.range(-coeff_bound, coeff_bound));
      } while (K.is_zero(K.sub(K.mul(m.a, m.d), K.mul(m.b, m.c))));
      m.e = K.from_int(rng.range(-coeff_bound, coeff_bound));
      m.f = K.from_int(rng.range(-coeff_bound, coeff_bound));
      sigma.push_affine(m);
    } else {
      std::string target = rng.below(2) == 0 ? "Z" : "T";
      std::string other = target == "Z" ? "T" : "Z";
      Polynomial add = Polynomial::zero(field, vars);
      Polynomial ov = Polynomial::variable(field, vars, other);
      int deg = 1 + static_cast<int>(rng.below(max_addend_deg));
      for (int d = 0; d <= deg; ++d) {
        long long c = rng.range(-coeff_bound, coeff_bound);
        if (d == deg && c == 0) c = 1;
        add = add + ov.pow(d).scale(K.from_int(c));
      }
      sigma.push_triangular(target, add);
    }
  }
  return sigma;
}

}  // namespace linhyp
