#pragma once

#include "linhyp/certificate.hpp"
#include "linhyp/hypersurface.hpp"

namespace linhyp {

// Parameters of the positive-characteristic threefold family
// X^r Y + Z^(p^e) + T + T^(sp).  The divisibility conditions (p^e and sp not
// dividing each other) back the nontriviality claims; r >= 2 backs the
// cancellation counterexample.
struct AsanumaParams {
  std::uint64_t p = 2;
  unsigned r = 2, e = 1, s = 1;
};

// Validates the standing divisibility conditions.
bool asanuma_params_valid(const AsanumaParams& params, std::string* why = nullptr);

// Strict constructor: enforces the divisibility conditions.
HypersurfaceDatum make_asanuma(const AsanumaParams& params);

// Relaxed constructor: only primality/positivity are required.  The
// exponential-map machinery is meaningful for any parameters; the ZCP claims
// are not.
HypersurfaceDatum make_asanuma_datum(const AsanumaParams& params);

// A polynomial parametrization certifying that f is a line:
// f(a(U), b(U)) = 0, f irreducible, and U in k[a, b].
struct LineWitness {
  Polynomial a;  // univariate in U
  Polynomial b;  // univariate in U
};

// Three-valued: yes certifies k[Z,T]/(f) = k^[1]; `unknown` means the
// membership bound was exhausted (never treated as a refutation).
// The default bound is deg(a)*deg(b) + 8.
Tri verify_line_witness(const Polynomial& f, const LineWitness& witness, long degree_bound = -1,
                        std::uint64_t seed = 1);

// Evidence that f is a line: either a verified witness or an explicit
// external assertion (recorded as an `asserted` premise, never verified).
struct LineEvidence {
  const LineWitness* witness = nullptr;
  bool asserted = false;
};

// Premises-only certificate for A^[1] = k^[m+3] (the stable isomorphism is
// not constructed).
Certificate stable_poly_certificate(const HypersurfaceDatum& datum, const LineEvidence& evidence,
                                    std::uint64_t seed = 1);

// The cancellation counterexample certificate: A is not k^[m+2], not E^[2],
// yet A^[1] = k^[m+3] and A is a nontrivial fibration.  Requires the
// hypotheses of the r-divisibility pipeline, characteristic p, line evidence,
// and a rejecting variable decision for f (the internal consistency guard).
Certificate zcp_report(const HypersurfaceDatum& datum, const LineEvidence& evidence,
                       std::uint64_t seed = 1);

}  // namespace linhyp
