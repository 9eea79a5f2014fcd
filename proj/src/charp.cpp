#include "linhyp/charp.hpp"

#include "linhyp/coordinates.hpp"
#include "linhyp/linalg.hpp"

namespace linhyp {

bool asanuma_params_valid(const AsanumaParams& params, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (params.r < 1 || params.e < 1 || params.s < 1) return fail("r, e, s must be positive");
  mpz_class pe, sp;
  mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(params.p), params.e);
  sp = mpz_class(static_cast<unsigned long>(params.s)) * static_cast<unsigned long>(params.p);
  if (mpz_divisible_p(sp.get_mpz_t(), pe.get_mpz_t()))
    return fail("p^e divides s*p");
  if (mpz_divisible_p(pe.get_mpz_t(), sp.get_mpz_t()))
    return fail("s*p divides p^e");
  return true;
}

HypersurfaceDatum make_asanuma_datum(const AsanumaParams& params) {
  auto F = Field::prime(params.p);  // validates primality
  if (params.r < 1 || params.e < 1 || params.s < 1) throw error("r, e, s must be positive");
  mpz_class pe, sp;
  mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(params.p), params.e);
  sp = mpz_class(static_cast<unsigned long>(params.s)) * static_cast<unsigned long>(params.p);
  if (pe > 65536 || sp > 65536) throw error("exponent overflow");
  VarsPtr vars = datum_vars(1);
  Polynomial X = Polynomial::variable(F, vars, "X1");
  Polynomial Z = Polynomial::variable(F, vars, "Z");
  Polynomial T = Polynomial::variable(F, vars, "T");
  Polynomial alpha = X.pow(params.r);
  Polynomial f = -(Z.pow(pe.get_ui()) + T + T.pow(sp.get_ui()));
  Polynomial h = Polynomial::zero(F, vars);
  ConstructOutcome out = construct_datum(F, 1, alpha, f, h);
  return *out.datum;
}

HypersurfaceDatum make_asanuma(const AsanumaParams& params) {
  std::string why;
  if (!asanuma_params_valid(params, &why)) throw error("invalid parameters: " + why);
  return make_asanuma_datum(params);
}

Tri verify_line_witness(const Polynomial& f, const LineWitness& witness, long degree_bound,
                        std::uint64_t seed) {
  if (f.is_constant()) throw error("f must be nonconstant");
  if (!f.uses_only({"Z", "T"})) throw error("f must involve only Z and T");
  if (!witness.a.uses_only({"U"}) || !witness.b.uses_only({"U"}))
    throw error("witness components must be univariate in U");
  const FieldPtr& K = f.field();
  auto uvars = make_vars({"U"});
  Polynomial a = witness.a.with_vars(uvars);
  Polynomial b = witness.b.with_vars(uvars);
  // (1) The parametrization lies on the curve.
  Polynomial fa = f.substitute({{"Z", a}, {"T", b}});
  if (!fa.is_zero()) return Tri::no;
  // (2) f is irreducible over k.
  if (!is_irreducible(f, seed)) return Tri::no;
  // (3) U is a polynomial in a and b, up to the degree bound.
  long da = std::max<long>(a.total_degree(), 0);
  long db = std::max<long>(b.total_degree(), 0);
  long bound = degree_bound >= 0 ? degree_bound : da * db + 8;
  std::vector<std::pair<unsigned, unsigned>> monos;
  for (long i = 0; i * std::max<long>(da, 1) <= bound + da; ++i)
    for (long j = 0; j * std::max<long>(db, 1) <= bound + db; ++j) {
      long deg = i * da + j * db;
      if (deg <= bound) monos.emplace_back(static_cast<unsigned>(i), static_cast<unsigned>(j));
      if (monos.size() > 4096) return Tri::unknown;
    }
  // Columns: coefficient vectors of a^i b^j in U; rhs: U itself.
  std::size_t rows = static_cast<std::size_t>(bound) + 1;
  Matrix A(rows, std::vector<FElem>(monos.size(), K->zero()));
  std::vector<Polynomial> pow_a = {Polynomial::from_int(K, uvars, 1)};
  std::vector<Polynomial> pow_b = {Polynomial::from_int(K, uvars, 1)};
  for (std::size_t c = 0; c < monos.size(); ++c) {
    auto [i, j] = monos[c];
    while (pow_a.size() <= i) pow_a.push_back(pow_a.back() * a);
    while (pow_b.size() <= j) pow_b.push_back(pow_b.back() * b);
    Polynomial m = pow_a[i] * pow_b[j];
    if (m.total_degree() > bound) continue;
    for (const auto& [e, cf] : m.terms()) A[e[0]][c] = cf;
  }
  std::vector<FElem> rhs(rows, K->zero());
  if (rows > 1) rhs[1] = K->one();  // the polynomial U
  if (solve_linear(*K, A, rhs)) return Tri::yes;
  return Tri::unknown;
}

namespace {

Premise cond_premise(const HypersurfaceDatum& datum, const CondReport& cond) {
  Premise p;
  p.id = "cond";
  p.kind = "all-divide";
  p.args = {"alpha-primes", "h"};
  p.status = cond.holds ? Premise::Status::verified : Premise::Status::failed;
  p.detail = "every prime factor of alpha divides h";
  (void)datum;
  return p;
}

Premise factorization_premise() {
  Premise p;
  p.id = "alpha-factorization";
  p.kind = "factorization";
  p.args = {"alpha", "alpha-primes", "alpha-unit"};
  p.status = Premise::Status::verified;
  p.detail = "unit * product of the listed primes reproduces alpha";
  return p;
}

void store_alpha_factorization(Certificate& cert, const HypersurfaceDatum& datum,
                               const Factorization& af) {
  std::vector<Polynomial> primes;
  for (const auto& [q, e] : af.factors)
    for (unsigned k = 0; k < e; ++k) primes.push_back(q);
  cert.witnesses.emplace("alpha", datum.alpha);
  cert.witnesses.emplace("alpha-primes", primes);
  cert.witnesses.emplace("alpha-unit",
                         Polynomial::constant(datum.field, datum.vars, af.unit));
}

Premise line_premise(const LineEvidence& evidence, Tri verified) {
  Premise p;
  p.id = "f-is-a-line";
  if (evidence.witness != nullptr) {
    p.kind = "line-witness";
    p.args = {"f", "witness-a", "witness-b"};
    p.status = verified == Tri::yes ? Premise::Status::verified : Premise::Status::failed;
    p.detail = "parametrization witness for k[Z,T]/(f) = k^[1]";
  } else {
    p.kind = "asserted";
    p.args = {};
    p.status = Premise::Status::asserted;
    p.detail = "line property supplied as an external assertion, not machine-checked";
  }
  return p;
}

}  // namespace

Certificate stable_poly_certificate(const HypersurfaceDatum& datum, const LineEvidence& evidence,
                                    std::uint64_t seed) {
  if (evidence.witness == nullptr && !evidence.asserted)
    throw error("no certificate: line evidence is missing");
  CondReport cond = check_cond(datum, seed);
  if (!cond.holds) throw error("no certificate: a prime factor of alpha does not divide h");
  Tri verified = Tri::unknown;
  if (evidence.witness != nullptr) {
    verified = verify_line_witness(datum.f, *evidence.witness, -1, seed);
    if (verified == Tri::no) throw error("no certificate: the line witness is invalid");
    if (verified == Tri::unknown)
      throw inconclusive_error("no certificate: line witness membership bound exhausted");
  }

  Certificate cert;
  cert.claim = "A^[1] = k^[" + std::to_string(datum.m + 3) + "]";
  cert.field = datum.field;
  cert.seed = seed;
  cert.rule = "stable-polynomiality";
  store_alpha_factorization(cert, datum, cond.alpha_factors);
  cert.witnesses.emplace("f", datum.f);
  cert.witnesses.emplace("h", datum.h);
  if (evidence.witness != nullptr) {
    cert.witnesses.emplace("witness-a", evidence.witness->a);
    cert.witnesses.emplace("witness-b", evidence.witness->b);
  }
  cert.premises.push_back(factorization_premise());
  cert.premises.push_back(cond_premise(datum, cond));
  cert.premises.push_back(line_premise(evidence, verified));
  return cert;
}

Certificate zcp_report(const HypersurfaceDatum& datum, const LineEvidence& evidence,
                       std::uint64_t seed) {
  if (datum.field->characteristic() == 0)
    throw error("the cancellation family lives in positive characteristic");
  auto rdiv = find_shifted_rdiv(datum.alpha, /*require_gt1=*/true, seed);
  if (!rdiv) throw error("hypotheses not met: alpha is not r-divisible with every r_i > 1");
  CondReport cond = check_cond(datum, seed);
  if (!cond.holds) throw error("hypotheses not met: a prime factor of alpha does not divide h");
  VariableDecision dec = is_variable(datum.f);
  if (dec.is_var)
    throw error("trivial instance: f is a coordinate, so no counterexample arises");

  Certificate stable = stable_poly_certificate(datum, evidence, seed);

  Certificate cert;
  cert.claim = "A is a counterexample to cancellation: A^[1] = k^[" +
               std::to_string(datum.m + 3) + "] but A != k^[" + std::to_string(datum.m + 2) +
               "], and A is a nontrivial A^2-fibration over E";
  cert.field = datum.field;
  cert.seed = seed;
  cert.rule = "zcp-counterexample";
  store_alpha_factorization(cert, datum, cond.alpha_factors);
  cert.witnesses.emplace("f", datum.f);
  cert.witnesses.emplace("h", datum.h);
  cert.witnesses.emplace("rdiv-order", [&] {
    std::string s;
    for (const auto& v : rdiv->order) s += (s.empty() ? "" : ",") + v;
    return s;
  }());
  {
    std::string rs;
    for (unsigned ri : rdiv->r) rs += (rs.empty() ? "" : ",") + std::to_string(ri);
    cert.witnesses.emplace("rdiv-r", rs);
    std::vector<Polynomial> chain = rdiv->alpha_chain;
    cert.witnesses.emplace("rdiv-chain", chain);
    std::vector<Polynomial> shift;
    for (const auto& l : rdiv->shift)
      shift.push_back(Polynomial::constant(rdiv->field, datum.vars, l));
    cert.witnesses.emplace("rdiv-shift", shift);
    cert.witnesses.emplace("rdiv-unit",
                           Polynomial::constant(rdiv->field, datum.vars, rdiv->unit));
  }

  cert.premises.push_back(factorization_premise());
  cert.premises.push_back(cond_premise(datum, cond));
  {
    Premise p;
    p.id = "r-divisibility";
    p.kind = "rdiv";
    p.args = {"alpha", "rdiv-order", "rdiv-r", "rdiv-chain", "rdiv-shift", "rdiv-unit"};
    p.status = Premise::Status::verified;
    std::string rs;
    for (unsigned ri : rdiv->r) rs += (rs.empty() ? "" : ",") + std::to_string(ri);
    p.detail = "alpha is (" + rs + ")-divisible with every exponent > 1";
    cert.premises.push_back(p);
  }
  {
    Premise p;
    p.id = "f-not-a-coordinate";
    p.kind = "variable-rejection";
    p.args = {"f"};
    p.status = Premise::Status::verified;
    p.detail = "obstruction: " + dec.obstruction;
    cert.premises.push_back(p);
  }
  if (evidence.witness != nullptr) {
    cert.witnesses.emplace("witness-a", evidence.witness->a);
    cert.witnesses.emplace("witness-b", evidence.witness->b);
  }
  cert.premises.push_back(line_premise(evidence, Tri::yes));
  // Fold in the stable-polynomiality conclusion as a premise chain reference.
  {
    Premise p;
    p.id = "stable-polynomiality";
    p.kind = "subcertificate";
    p.args = {};
    p.status = stable.all_premises_hold() ? Premise::Status::verified : Premise::Status::failed;
    p.detail = stable.claim;
    cert.premises.push_back(p);
  }
  return cert;
}

}  // namespace linhyp
