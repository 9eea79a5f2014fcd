#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "linhyp/localized.hpp"
#include "linhyp/polynomial.hpp"
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
    long long c = rng.range(-coeff_range, coeff_range);
    p = p + Polynomial::monomial(f, vars, e, f->from_int(c));
  }
  return p;
}

}  // namespace

TEST_CASE("binomial identity (X+1)^2") {
  auto Q = Field::rationals();
  auto vars = make_vars({"X"});
  Polynomial X = Polynomial::variable(Q, vars, "X");
  Polynomial one = Polynomial::from_int(Q, vars, 1);
  Polynomial sq = (X + one) * (X + one);
  Polynomial expect = X * X + Polynomial::from_int(Q, vars, 2) * X + one;
  CHECK(sq == expect);
}

TEST_CASE("exact divide X^2(1+X)^2 by X^2") {
  auto Q = Field::rationals();
  auto vars = make_vars({"X"});
  Polynomial X = Polynomial::variable(Q, vars, "X");
  Polynomial one = Polynomial::from_int(Q, vars, 1);
  Polynomial p = X.pow(2) * (one + X).pow(2);
  Polynomial q = p.div_exact(X.pow(2));
  CHECK(q == (one + X).pow(2));
  CHECK_THROWS_AS((X + one).div_exact(X), not_divisible);
}

TEST_CASE("additive inverse gives zero") {
  auto Q = Field::rationals();
  auto vars = make_vars({"X"});
  Polynomial X = Polynomial::variable(Q, vars, "X");
  Polynomial one = Polynomial::from_int(Q, vars, 1);
  CHECK(((X + one) + (-(X + one))).is_zero());
  CHECK((X - X).total_degree() == kDegNegInf);
}

TEST_CASE("substitution: X1 -> 0 in X1*X2^2*(X1+X2^2)") {
  auto Q = Field::rationals();
  auto vars = make_vars({"X1", "X2"});
  Polynomial x1 = Polynomial::variable(Q, vars, "X1");
  Polynomial x2 = Polynomial::variable(Q, vars, "X2");
  Polynomial p = x1 * x2.pow(2) * (x1 + x2.pow(2));
  // alpha_1 = X2^2*(X1+X2^2); alpha_1 at X1=0 is X2^4
  Polynomial a1 = p.div_exact(x1);
  Polynomial a1_at0 = a1.substitute({{"X1", Polynomial::zero(Q, vars)}});
  CHECK(a1_at0 == x2.pow(4));
}

TEST_CASE("substitution: identity and triangular") {
  auto Q = Field::rationals();
  auto vars = make_vars({"Z", "T"});
  Polynomial Z = Polynomial::variable(Q, vars, "Z");
  Polynomial T = Polynomial::variable(Q, vars, "T");
  Polynomial p = Z.pow(2) + T.pow(3);
  CHECK(p.substitute({}) == p);
  Polynomial q = (T + Z.pow(2)).substitute({{"T", T - Z.pow(2)}});
  CHECK(q == T);
}

TEST_CASE("derivative: power rule, char p, partials") {
  auto Q = Field::rationals();
  auto vars = make_vars({"Z", "T"});
  Polynomial Z = Polynomial::variable(Q, vars, "Z");
  Polynomial T = Polynomial::variable(Q, vars, "T");
  CHECK((Z.pow(2) + T.pow(3)).derivative("Z") == Polynomial::from_int(Q, vars, 2) * Z);

  auto F5 = Field::prime(5);
  auto v2 = make_vars({"T"});
  Polynomial Tp = Polynomial::variable(F5, v2, "T");
  CHECK(Tp.pow(5).derivative("T").is_zero());

  auto v4 = make_vars({"X", "Y", "Z", "T"});
  Polynomial X4 = Polynomial::variable(Q, v4, "X");
  Polynomial Y4 = Polynomial::variable(Q, v4, "Y");
  Polynomial Z4 = Polynomial::variable(Q, v4, "Z");
  Polynomial T4 = Polynomial::variable(Q, v4, "T");
  Polynomial russell = X4.pow(2) * Y4 + X4 + Z4.pow(2) + T4.pow(3);
  CHECK(russell.derivative("Y") == X4.pow(2));
}

TEST_CASE("substitution respects composition on random triples") {
  auto Q = Field::rationals();
  auto vars = make_vars({"Z", "T"});
  Rng rng(2024);
  for (int k = 0; k < 25; ++k) {
    Polynomial p = random_poly(Q, vars, rng, 4, 3, 3);
    Polynomial i1 = random_poly(Q, vars, rng, 3, 2, 2);
    Polynomial i2 = random_poly(Q, vars, rng, 3, 2, 2);
    Polynomial j1 = random_poly(Q, vars, rng, 3, 2, 2);
    Polynomial j2 = random_poly(Q, vars, rng, 3, 2, 2);
    std::map<std::string, Polynomial> sigma = {{"Z", i1}, {"T", i2}};
    std::map<std::string, Polynomial> tau = {{"Z", j1}, {"T", j2}};
    // (p after sigma) after tau == p after (sigma composed with tau)
    Polynomial lhs = p.substitute(sigma).substitute(tau);
    std::map<std::string, Polynomial> comp = {{"Z", i1.substitute(tau)}, {"T", i2.substitute(tau)}};
    Polynomial rhs = p.substitute(comp);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("derivative is a derivation on random pairs") {
  auto F7 = Field::prime(7);
  auto vars = make_vars({"Z", "T"});
  Rng rng(7);
  for (int k = 0; k < 25; ++k) {
    Polynomial a = random_poly(F7, vars, rng, 4, 4, 6);
    Polynomial b = random_poly(F7, vars, rng, 4, 4, 6);
    Polynomial lhs = (a * b).derivative("T");
    Polynomial rhs = a * b.derivative("T") + b * a.derivative("T");
    CHECK(lhs == rhs);
  }
}

TEST_CASE("exact-divide of products recovers the factor") {
  auto Q = Field::rationals();
  auto vars = make_vars({"X", "Z"});
  Rng rng(99);
  for (int k = 0; k < 30; ++k) {
    Polynomial a = random_poly(Q, vars, rng, 3, 3, 4);
    Polynomial b = random_poly(Q, vars, rng, 3, 3, 4);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK((a * b).div_exact(b) == a);
  }
}

TEST_CASE("multivariate gcd") {
  auto Q = Field::rationals();
  auto vars = make_vars({"X", "Z"});
  Polynomial X = Polynomial::variable(Q, vars, "X");
  Polynomial Z = Polynomial::variable(Q, vars, "Z");
  Polynomial one = Polynomial::from_int(Q, vars, 1);
  Polynomial a = (X + Z) * (X - Z);
  Polynomial b = (X + Z) * (X + one);
  CHECK(poly_gcd(a, b) == (X + Z));
  // coprime
  CHECK(poly_gcd(X + one, Z + one) == one);
  Rng rng(5);
  for (int k = 0; k < 15; ++k) {
    Polynomial g = random_poly(Q, vars, rng, 2, 2, 2);
    Polynomial u = random_poly(Q, vars, rng, 2, 2, 2);
    Polynomial v = random_poly(Q, vars, rng, 2, 2, 2);
    if (g.is_zero() || u.is_zero() || v.is_zero()) continue;
    Polynomial d = poly_gcd(g * u, g * v);
    CHECK((g * u).divisible_by(d));
    CHECK((g * v).divisible_by(d));
    CHECK(d.divisible_by(poly_gcd(d, g)));
    CHECK(poly_gcd(d, g) == g.monic());
  }
}

TEST_CASE("localized valuation") {
  auto Q = Field::rationals();
  auto vars = make_vars({"x", "z", "t"});
  Polynomial x = Polynomial::variable(Q, vars, "x");
  Polynomial z = Polynomial::variable(Q, vars, "z");
  Polynomial t = Polynomial::variable(Q, vars, "t");
  Polynomial one = Polynomial::from_int(Q, vars, 1);

  LocalizedElement a(x.pow(3) * (z + one), {});
  CHECK(valuation(a, "x") == 3);

  LocalizedElement b(z.pow(2) + t.pow(3), {{x, 2}});
  CHECK(valuation(b, "x") == -2);

  // F/(x^d alpha1(x)) with F(0,z,t) != 0 has valuation -d
  Polynomial alpha1 = one + x;
  Polynomial F = z.pow(2) + t.pow(3) + x * z;
  LocalizedElement c(F, {{x, 2}, {alpha1, 1}});
  CHECK(valuation(c, "x") == -2);

  LocalizedElement zero(Polynomial::zero(Q, vars), {{x, 1}});
  CHECK_THROWS_AS(valuation(zero, "x"), error);
}

TEST_CASE("valuation is additive on products") {
  auto Q = Field::rationals();
  auto vars = make_vars({"x", "z"});
  Rng rng(31337);
  Polynomial x = Polynomial::variable(Q, vars, "x");
  for (int k = 0; k < 50; ++k) {
    Polynomial pa = random_poly(Q, vars, rng, 3, 3, 3);
    Polynomial pb = random_poly(Q, vars, rng, 3, 3, 3);
    if (pa.is_zero() || pb.is_zero()) continue;
    unsigned da = rng.below(3), db = rng.below(3);
    LocalizedElement a(pa, {{x, da}});
    LocalizedElement b(pb, {{x, db}});
    CHECK(valuation(a * b, "x") == valuation(a, "x") + valuation(b, "x"));
  }
}

TEST_CASE("canonical printing") {
  auto Q = Field::rationals();
  auto vars = make_vars({"X", "Z"});
  Polynomial X = Polynomial::variable(Q, vars, "X");
  Polynomial Z = Polynomial::variable(Q, vars, "Z");
  Polynomial p = X.pow(2) * Z - Polynomial::from_int(Q, vars, 3);
  CHECK(p.to_string() == "X^2*Z-3");
  CHECK(Polynomial::zero(Q, vars).to_string() == "0");
  Polynomial q = -X + Z.scale(Q->from_mpq(mpq_class(1, 2)));
  CHECK(q.to_string() == "-X+1/2*Z");
}
