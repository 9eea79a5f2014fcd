#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "linhyp/factor.hpp"
#include "linhyp/groebner.hpp"
#include "linhyp/rng.hpp"

using namespace linhyp;

namespace {

Polynomial random_poly(FieldPtr f, VarsPtr vars, Rng& rng, int max_terms, int max_exp,
                       int coeff_range) {
  Polynomial p = Polynomial::zero(f, vars);
  int terms = 1 + static_cast<int>(rng.below(max_terms));
  for (int t = 0; t < terms; ++t) {
    Expts e(vars->size());
    for (auto& x : e) x = static_cast<unsigned>(rng.below(max_exp + 1));
    p = p + Polynomial::monomial(f, vars, e, f->from_int(rng.range(-coeff_range, coeff_range)));
  }
  return p;
}

}  // namespace

TEST_CASE("groebner basics") {
  auto Q = Field::rationals();
  auto vars = make_vars({"Z", "T"});
  Polynomial Z = Polynomial::variable(Q, vars, "Z");
  Polynomial T = Polynomial::variable(Q, vars, "T");
  Polynomial one = Polynomial::from_int(Q, vars, 1);

  // {Z, T} is already a basis.
  auto gb = groebner({Z, T}, MonomialOrder::lex({"Z", "T"}));
  REQUIRE(gb.generators.size() == 2);
  CHECK(gb.generators[0] == Z);
  CHECK(gb.generators[1] == T);

  // Contains a unit.
  auto gb1 = groebner({Z + T.pow(2), one}, MonomialOrder::lex({"Z", "T"}));
  REQUIRE(gb1.generators.size() == 1);
  CHECK(gb1.generators[0].is_unit());

  CHECK_THROWS_AS(groebner({}, MonomialOrder::lex()), error);
}

TEST_CASE("the cusp ideal with its partials is proper") {
  auto Q = Field::rationals();
  auto vars = make_vars({"Z", "T"});
  Polynomial Z = Polynomial::variable(Q, vars, "Z");
  Polynomial T = Polynomial::variable(Q, vars, "T");
  Polynomial f = Z.pow(2) + T.pow(3);
  // (f, 2Z, 3T^2) vanishes at the origin.
  std::vector<Polynomial> gens = {f, f.derivative("Z"), f.derivative("T")};
  CHECK(ideal_is_proper(gens));
  auto gb = groebner(gens, MonomialOrder::grevlex());
  Polynomial one = Polynomial::from_int(Q, vars, 1);
  CHECK_FALSE(normal_form(one, gb).is_zero());
}

TEST_CASE("proper and improper ideals") {
  auto Q = Field::rationals();
  auto vars = make_vars({"X1", "X2"});
  Polynomial x1 = Polynomial::variable(Q, vars, "X1");
  Polynomial x2 = Polynomial::variable(Q, vars, "X2");
  Polynomial one = Polynomial::from_int(Q, vars, 1);
  // (X1, 1+X2^2): quotient is Q(i), a nonzero ring.
  CHECK(ideal_is_proper({x1, one + x2.pow(2)}));
  // (X, 1) is improper.
  CHECK_FALSE(ideal_is_proper({x1, one}));
}

TEST_CASE("normal form is idempotent and membership matches division") {
  auto Q = Field::rationals();
  auto vars = make_vars({"X", "Z"});
  Rng rng(11);
  for (int k = 0; k < 20; ++k) {
    Polynomial P = random_poly(Q, vars, rng, 3, 3, 3);
    if (P.is_zero() || P.is_constant()) continue;
    auto gb = groebner({P}, MonomialOrder::grevlex());
    Polynomial g = random_poly(Q, vars, rng, 3, 3, 3);
    Polynomial nf = normal_form(g, gb);
    CHECK(normal_form(nf, gb) == nf);
    // Principal ideal membership == exact divisibility.
    Polynomial mult = random_poly(Q, vars, rng, 2, 2, 2);
    Polynomial member = P * mult;
    CHECK(normal_form(member, gb).is_zero());
    CHECK(member.divisible_by(P));
    if (!normal_form(g, gb).is_zero()) CHECK_FALSE(g.divisible_by(P));
  }
}

TEST_CASE("ideal properness invariant under linear change of variables") {
  auto Q = Field::rationals();
  auto vars = make_vars({"X1", "X2"});
  Rng rng(17);
  Polynomial x1 = Polynomial::variable(Q, vars, "X1");
  Polynomial x2 = Polynomial::variable(Q, vars, "X2");
  for (int k = 0; k < 10; ++k) {
    Polynomial a = random_poly(Q, vars, rng, 3, 2, 3);
    Polynomial b = random_poly(Q, vars, rng, 3, 2, 3);
    if (a.is_zero() || b.is_zero()) continue;
    bool before = ideal_is_proper({a, b});
    // Random invertible triangular change.
    long long c = rng.range(-3, 3);
    std::map<std::string, Polynomial> chg = {
        {"X1", x1 + Polynomial::from_int(Q, vars, c) * x2}, {"X2", x2}};
    bool after = ideal_is_proper({a.substitute(chg), b.substitute(chg)});
    CHECK(before == after);
  }
}

TEST_CASE("resultants") {
  auto Q = Field::rationals();
  auto vars = make_vars({"Z", "T"});
  Polynomial Z = Polynomial::variable(Q, vars, "Z");
  Polynomial T = Polynomial::variable(Q, vars, "T");

  // res_T(T - Z, T + Z) = -2Z  (2x2 Sylvester)
  CHECK(resultant(T - Z, T + Z, "T") == Polynomial::from_int(Q, vars, -2) * Z);

  // res_Z(Z^2 + T^3, 2Z) = 4T^3
  CHECK(resultant(Z.pow(2) + T.pow(3), Polynomial::from_int(Q, vars, 2) * Z, "Z") ==
        Polynomial::from_int(Q, vars, 4) * T.pow(3));

  // One argument constant in the variable.
  Polynomial a1 = Z.pow(3) + Polynomial::from_int(Q, vars, 1);
  Polynomial lin = a1 * T + Z;
  CHECK(resultant(lin, a1, "T") == a1);
  CHECK_THROWS_AS(resultant(Z, Z + Polynomial::from_int(Q, vars, 1), "T"), error);

  // Shared root forces a zero resultant.
  CHECK(resultant((T - Z) * (T + Z), T - Z, "T").is_zero());
}
