#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "linhyp/hypersurface.hpp"
#include "linhyp/rng.hpp"

using namespace linhyp;

namespace {

HypersurfaceDatum russell_cubic() {
  auto Q = Field::rationals();
  auto vars = datum_vars(1);
  Polynomial X = Polynomial::variable(Q, vars, "X1");
  Polynomial Z = Polynomial::variable(Q, vars, "Z");
  Polynomial T = Polynomial::variable(Q, vars, "T");
  auto out = construct_datum(Q, 1, X.pow(2), Z.pow(2) + T.pow(3), -X);
  return *out.datum;
}

}  // namespace

TEST_CASE("construct_datum validations and degenerate verdicts") {
  auto Q = Field::rationals();
  auto vars = datum_vars(1);
  Polynomial X = Polynomial::variable(Q, vars, "X1");
  Polynomial Z = Polynomial::variable(Q, vars, "Z");
  Polynomial zero = Polynomial::zero(Q, vars);

  // Unit alpha: immediate verdict.
  auto unit = construct_datum(Q, 1, Polynomial::from_int(Q, vars, 3), Z, zero);
  CHECK_FALSE(unit.datum.has_value());
  CHECK(unit.verdict == "A = k^[3] (alpha is a unit)");

  // f = 0 rejected.
  CHECK_THROWS_AS(construct_datum(Q, 1, X, zero, zero), error);
  // alpha = 0 with h != 0 rejected.
  CHECK_THROWS_AS(construct_datum(Q, 1, zero, Z, X), error);
  // alpha = 0 with h = 0: cylinder verdict.
  auto cyl = construct_datum(Q, 1, zero, Z, zero);
  CHECK_FALSE(cyl.datum.has_value());
  // variable-set violations.
  CHECK_THROWS_AS(construct_datum(Q, 1, Z, Z, zero), error);
  CHECK_THROWS_AS(construct_datum(Q, 1, X, X, zero), error);
  // Reducible H: alpha = X1, f = Z, h = X1*Z - Z makes f + h = X1*Z.
  CHECK_THROWS_AS(construct_datum(Q, 1, X, Z, X * Z - Z), error);

  // Russell cubic datum builds and H has the right shape.
  HypersurfaceDatum d = russell_cubic();
  Polynomial Y = Polynomial::variable(Q, d.vars, "Y");
  Polynomial T = Polynomial::variable(Q, d.vars, "T");
  Polynomial Zd = Polynomial::variable(Q, d.vars, "Z");
  Polynomial Xd = Polynomial::variable(Q, d.vars, "X1");
  CHECK(d.H == Xd.pow(2) * Y - Zd.pow(2) - T.pow(3) + Xd);
}

TEST_CASE("check_cond") {
  auto Q = Field::rationals();
  HypersurfaceDatum d = russell_cubic();
  auto rep = check_cond(d);
  CHECK(rep.holds);  // X divides -X

  auto vars2 = datum_vars(2);
  Polynomial x1 = Polynomial::variable(Q, vars2, "X1");
  Polynomial x2 = Polynomial::variable(Q, vars2, "X2");
  Polynomial Z2 = Polynomial::variable(Q, vars2, "Z");
  auto d2 = construct_datum(Q, 2, x1 * x2.pow(2), Z2, x1);
  auto rep2 = check_cond(*d2.datum);
  CHECK_FALSE(rep2.holds);  // X2 does not divide X1

  // h = 0 passes vacuously.
  auto d3 = construct_datum(Q, 1, Polynomial::variable(Q, datum_vars(1), "X1"),
                            Polynomial::variable(Q, datum_vars(1), "Z"),
                            Polynomial::zero(Q, datum_vars(1)));
  CHECK(check_cond(*d3.datum).holds);
}

TEST_CASE("rdiv_decompose reproduces the two worked examples") {
  auto Q = Field::rationals();
  auto vars = datum_vars(1);
  Polynomial X = Polynomial::variable(Q, vars, "X1");
  Polynomial one = Polynomial::from_int(Q, vars, 1);

  // X^2 (1+X)^2 is (2)-divisible in {X}.
  auto res = rdiv_decompose(X.pow(2) * (one + X).pow(2), {"X1"});
  auto* rd = std::get_if<RDivisibility>(&res);
  REQUIRE(rd != nullptr);
  CHECK(rd->r == std::vector<unsigned>{2});
  CHECK(rd->alpha_chain[0] == (one + X).pow(2));
  CHECK(Q->equal(rd->unit, Q->one()));
  CHECK(rdiv_replay(X.pow(2) * (one + X).pow(2), *rd));

  // X1 X2^2 (X1 + X2^2): (1,4) in (X1, X2) and (2,2) in (X2, X1).
  auto vars2 = datum_vars(2);
  Polynomial x1 = Polynomial::variable(Q, vars2, "X1");
  Polynomial x2 = Polynomial::variable(Q, vars2, "X2");
  Polynomial alpha = x1 * x2.pow(2) * (x1 + x2.pow(2));

  auto res12 = rdiv_decompose(alpha, {"X1", "X2"});
  auto* rd12 = std::get_if<RDivisibility>(&res12);
  REQUIRE(rd12 != nullptr);
  CHECK(rd12->r == std::vector<unsigned>{1, 4});
  CHECK(rdiv_replay(alpha, *rd12));

  auto res21 = rdiv_decompose(alpha, {"X2", "X1"});
  auto* rd21 = std::get_if<RDivisibility>(&res21);
  REQUIRE(rd21 != nullptr);
  CHECK(rd21->r == std::vector<unsigned>{2, 2});
  CHECK(rdiv_replay(alpha, *rd21));

  // X1 + X2 fails at index 1.
  auto resf = rdiv_decompose(x1 + x2, {"X1", "X2"});
  auto* fail = std::get_if<RDivFailure>(&resf);
  REQUIRE(fail != nullptr);
  CHECK(fail->index == 1);
}

TEST_CASE("find_shifted_rdiv") {
  auto Q = Field::rationals();
  auto vars = datum_vars(1);
  Polynomial X = Polynomial::variable(Q, vars, "X1");
  Polynomial one = Polynomial::from_int(Q, vars, 1);

  // (X-1)^2 (X+2)^3: shifted multiple roots.
  Polynomial alpha = (X - one).pow(2) * (X + one + one).pow(3);
  auto rd = find_shifted_rdiv(alpha, true);
  REQUIRE(rd.has_value());
  CHECK(rd->r.size() == 1);
  CHECK(rd->r[0] >= 2);
  CHECK(rdiv_replay(alpha, *rd));

  // X^2 (1+X)^2: lambda = 0 works.
  auto rd2 = find_shifted_rdiv(X.pow(2) * (one + X).pow(2), true);
  REQUIRE(rd2.has_value());
  CHECK(Q->is_zero(rd2->shift[0]));
  CHECK(rd2->r[0] == 2);

  // X1 + X2: no multiple structure anywhere.
  auto vars2 = datum_vars(2);
  Polynomial x1 = Polynomial::variable(Q, vars2, "X1");
  Polynomial x2 = Polynomial::variable(Q, vars2, "X2");
  CHECK_FALSE(find_shifted_rdiv(x1 + x2, true).has_value());

  // Irrational multiple root: (X^2 - 2)^2 needs one extension step.
  Polynomial a3 = (X.pow(2) - one - one).pow(2);
  auto rd3 = find_shifted_rdiv(a3, true);
  REQUIRE(rd3.has_value());
  CHECK(rd3->field->kind() == Field::Kind::extension);
  CHECK(rd3->r[0] == 2);
  CHECK(rdiv_replay(a3, *rd3));
}

TEST_CASE("classify_theoremB") {
  auto Q = Field::rationals();

  // alpha = X1 (exponent 1, any h with X1 | h): case I.
  auto vars = datum_vars(1);
  Polynomial X = Polynomial::variable(Q, vars, "X1");
  Polynomial Z = Polynomial::variable(Q, vars, "Z");
  auto dI = construct_datum(Q, 1, X, Z, X * Z);
  CHECK(classify_theoremB(*dI.datum).id == TheoremBCaseId::I);

  // Russell cubic: none of the cases apply.
  CHECK(classify_theoremB(russell_cubic()).id == TheoremBCaseId::none);

  // alpha = X1^2 (1+X2^2)^2 with h = X1(1+X2^2): case IIc.
  auto vars2 = datum_vars(2);
  Polynomial x1 = Polynomial::variable(Q, vars2, "X1");
  Polynomial x2 = Polynomial::variable(Q, vars2, "X2");
  Polynomial Z2 = Polynomial::variable(Q, vars2, "Z");
  Polynomial T2 = Polynomial::variable(Q, vars2, "T");
  Polynomial one2 = Polynomial::from_int(Q, vars2, 1);
  Polynomial beta = one2 + x2.pow(2);
  auto dIIc =
      construct_datum(Q, 2, x1.pow(2) * beta.pow(2), Z2 * T2 + Z2 + T2, x1 * beta);
  auto cls = classify_theoremB(*dIIc.datum);
  CHECK(cls.id == TheoremBCaseId::IIc);

  // char p rejected.
  auto F5 = Field::prime(5);
  auto vars5 = datum_vars(1);
  Polynomial X5 = Polynomial::variable(F5, vars5, "X1");
  Polynomial Z5 = Polynomial::variable(F5, vars5, "Z");
  auto dp = construct_datum(F5, 1, X5, Z5, Polynomial::zero(F5, vars5));
  CHECK_THROWS_AS(classify_theoremB(*dp.datum), error);
}

TEST_CASE("classifier case is invariant under factor permutation") {
  // The factor list order is canonical, so instead conjugate the datum by a
  // variable swap, which permutes the factors' roles.
  auto Q = Field::rationals();
  auto vars2 = datum_vars(2);
  Polynomial x1 = Polynomial::variable(Q, vars2, "X1");
  Polynomial x2 = Polynomial::variable(Q, vars2, "X2");
  Polynomial Z2 = Polynomial::variable(Q, vars2, "Z");
  Polynomial one2 = Polynomial::from_int(Q, vars2, 1);
  Polynomial beta = one2 + x2.pow(2);
  auto d1 = construct_datum(Q, 2, x1.pow(2) * beta.pow(2), Z2, x1 * beta);
  Polynomial beta1 = one2 + x1.pow(2);
  auto d2 = construct_datum(Q, 2, x2.pow(2) * beta1.pow(2), Z2, x2 * beta1);
  CHECK(classify_theoremB(*d1.datum).id == classify_theoremB(*d2.datum).id);
}

TEST_CASE("regularity tests") {
  auto Q = Field::rationals();
  auto vars = datum_vars(1);
  Polynomial Z = Polynomial::variable(Q, vars, "Z");
  Polynomial T = Polynomial::variable(Q, vars, "T");
  Polynomial one = Polynomial::from_int(Q, vars, 1);

  CHECK(is_regular_planecurve(Z + T.pow(2)));
  CHECK_FALSE(is_regular_planecurve(Z.pow(2) + T.pow(3)));
  CHECK(is_regular_planecurve(one + Z.pow(2)));

  // Russell cubic is regular.
  CHECK(is_regular_hypersurface(russell_cubic()));

  // alpha = X^2, f = Z^2, h = 0: singular at (0, y, 0, 0).
  Polynomial X = Polynomial::variable(Q, vars, "X1");
  auto dsing = construct_datum(Q, 1, X.pow(2), Z.pow(2), Polynomial::zero(Q, vars));
  CHECK_FALSE(is_regular_hypersurface(*dsing.datum));
}

TEST_CASE("regularity lemmas as properties on random conforming data") {
  auto Q = Field::rationals();
  Rng rng(2025);
  int done = 0;
  for (int k = 0; done < 25 && k < 400; ++k) {
    // Build alpha from small factors, h divisible by all of them.
    auto vars = datum_vars(1);
    Polynomial X = Polynomial::variable(Q, vars, "X1");
    Polynomial Z = Polynomial::variable(Q, vars, "Z");
    Polynomial T = Polynomial::variable(Q, vars, "T");
    Polynomial a1 = X + Polynomial::from_int(Q, vars, rng.range(-2, 2));
    unsigned e1 = 1 + static_cast<unsigned>(rng.below(2));
    Polynomial alpha = a1.pow(e1);
    Polynomial g = Polynomial::from_int(Q, vars, rng.range(-2, 2)) +
                   Z.scale(Q->from_int(rng.range(-2, 2))) +
                   T.scale(Q->from_int(rng.range(-2, 2)));
    Polynomial h = a1 * g;
    Polynomial f = Polynomial::zero(Q, vars);
    int shape = static_cast<int>(rng.below(3));
    if (shape == 0) f = Z + T.pow(2);
    if (shape == 1) f = Z.pow(2) + T.pow(3);
    if (shape == 2) f = Z * T + Polynomial::from_int(Q, vars, rng.range(1, 3));
    ConstructOutcome out;
    try {
      out = construct_datum(Q, 1, alpha, f, h);
    } catch (const error&) {
      continue;
    }
    if (!out.datum) continue;
    const HypersurfaceDatum& d = *out.datum;
    if (!check_cond(d).holds) continue;
    // Sufficiency: regular plane curve forces a regular hypersurface.
    if (is_regular_planecurve(d.f)) CHECK(is_regular_hypersurface(d));
    // Necessity under a classifier case.
    if (classify_theoremB(d).id != TheoremBCaseId::none && is_regular_hypersurface(d))
      CHECK(is_regular_planecurve(d.f));
    ++done;
  }
  CHECK(done == 25);
}

TEST_CASE("ufd_check") {
  auto Q = Field::rationals();
  auto vars = datum_vars(1);
  Polynomial X = Polynomial::variable(Q, vars, "X1");
  Polynomial Z = Polynomial::variable(Q, vars, "Z");
  Polynomial T = Polynomial::variable(Q, vars, "T");
  Polynomial one = Polynomial::from_int(Q, vars, 1);

  // (1+X^2) Y - (1+Z^2): not a UFD, detected over the residue field Q(i).
  auto d1 = construct_datum(Q, 1, one + X.pow(2), one + Z.pow(2), Polynomial::zero(Q, vars));
  auto rep1 = ufd_check(*d1.datum);
  CHECK(rep1.verdict == Tri::no);

  // Absolutely irreducible f: UFD.
  auto d2 = construct_datum(Q, 1, X.pow(2), Z.pow(2) + T.pow(3), -X);
  CHECK(ufd_check(*d2.datum).verdict == Tri::yes);

  // f a unit.
  auto d3 = construct_datum(Q, 1, X, Polynomial::from_int(Q, vars, 5), Polynomial::zero(Q, vars));
  CHECK(ufd_check(*d3.datum).verdict == Tri::yes);

  // f reducible: never a UFD.
  auto d4 = construct_datum(Q, 1, X, Z * T, Polynomial::zero(Q, vars));
  CHECK(ufd_check(*d4.datum).verdict == Tri::no);

  // Linear factor of alpha keeps f irreducible: UFD even without absolute
  // irreducibility.
  auto d5 = construct_datum(Q, 1, X, one + Z.pow(2), Polynomial::zero(Q, vars));
  CHECK(ufd_check(*d5.datum).verdict == Tri::yes);
}

TEST_CASE("ufd_check never contradicts the necessary condition") {
  auto Q = Field::rationals();
  Rng rng(99);
  int done = 0;
  for (int k = 0; done < 30 && k < 300; ++k) {
    auto vars = datum_vars(1);
    Polynomial X = Polynomial::variable(Q, vars, "X1");
    Polynomial Z = Polynomial::variable(Q, vars, "Z");
    Polynomial T = Polynomial::variable(Q, vars, "T");
    Polynomial alpha = X.pow(1 + rng.below(2));
    Polynomial f = Polynomial::zero(Q, vars);
    for (int t = 0; t < 3; ++t) {
      Expts e(vars->size(), 0);
      e[vars->size() - 2] = static_cast<unsigned>(rng.below(3));
      e[vars->size() - 1] = static_cast<unsigned>(rng.below(3));
      f = f + Polynomial::monomial(Q, vars, e, Q->from_int(rng.range(-2, 2)));
    }
    if (f.is_zero()) continue;
    ConstructOutcome out;
    try {
      out = construct_datum(Q, 1, alpha, f, X * (Z + T));
    } catch (const error&) {
      continue;
    }
    if (!out.datum || !check_cond(*out.datum).holds) continue;
    auto rep = ufd_check(*out.datum);
    if (rep.verdict == Tri::yes) {
      // Necessary condition: f irreducible over k or a unit.
      CHECK((out.datum->f.is_constant() || is_irreducible(out.datum->f)));
    }
    ++done;
  }
  CHECK(done == 30);
}
