#pragma once

#include <optional>

#include "linhyp/automorphism.hpp"
#include "linhyp/certificate.hpp"
#include "linhyp/hypersurface.hpp"

namespace linhyp {

// Outcome of the elementary-reduction recognizer for f in k[Z,T].
//
// Accepted: `sigma` maps f exactly to T and `complement` g = sigma^{-1}(Z)
// satisfies k[f, g] = k[Z, T].  Rejected: `obstruction` names the reason and
// `obstruction_form` stores the form that failed (replayable).
struct VariableDecision {
  bool is_var = false;
  PlanarAutomorphism sigma;
  Polynomial complement;
  std::string obstruction;  // leading-form-not-pure-power | bidegree-nondivisible |
                            // reduction-stalled | input-too-large
  Polynomial obstruction_form;
  long bidegree_m = -1;
  long bidegree_n = -1;
  int iterations = 0;
};

VariableDecision is_variable(const Polynomial& f);

// Complement g with k[f,g] = k[Z,T]; throws if f is not a variable.
Polynomial complement(const Polynomial& f);

// Image of p under sigma.
Polynomial apply_automorphism(const PlanarAutomorphism& sigma, const Polynomial& p);

// For f = a0(Z) + a1(Z)T irreducible: true iff f is a coordinate, decided by
// the unit-group reduction (a1 = 0 with a0 linear, or a1 a nonzero constant).
bool linear_form_coordinate(const Polynomial& f, std::uint64_t seed = 1);

// P, Q in k[U, V] with Z = P(f, g) and T = Q(f, g); empty when (f, g) is not
// a coordinate pair.
struct CoordinatePair {
  Polynomial P, Q;
};
std::optional<CoordinatePair> coordinate_pair_witness(const VariableDecision& dec,
                                                      const Polynomial& g);

// Bounded search for a coordinate change making f linear in one variable,
// with a sound rejection certificate from a singular absolutely irreducible
// fiber.  Three-valued by design.
struct LinearizableResult {
  Tri verdict = Tri::unknown;
  PlanarAutomorphism sigma;        // when linearizable: sigma(f) = a0(Z) + a1(Z)T
  bool has_singular_value = false;
  FElem singular_value;            // when not-linearizable: the critical value c
  std::string note;
};

LinearizableResult linearizable_probe(const Polynomial& f, int depth = 3,
                                      std::uint64_t seed = 1);

// --- decision pipelines (implemented in pipelines.cpp) ---------------------

// Constructive polynomial-ring certificate from a coordinate pair (f, g).
Certificate russell_sathaye_certificate(const HypersurfaceDatum& datum, const Polynomial& g,
                                        std::uint64_t seed = 1);

// Equivalence pipeline in characteristic zero.  `statements` carries the
// seven statements in order (i)..(vii).
struct StatementReport {
  std::string id;
  Tri truth = Tri::unknown;
  std::string premise_status;
};

struct PipelineResult {
  enum class Outcome { decided, hypotheses_not_met, inconclusive } outcome =
      Outcome::hypotheses_not_met;
  std::string verdict;
  std::vector<StatementReport> statements;
  std::vector<Certificate> certificates;
};

PipelineResult decide_theoremB(const HypersurfaceDatum& datum, std::uint64_t seed = 1);

// Equivalence pipeline for r-divisible alpha (any characteristic);
// statements (i)..(v) unconditional, (vi)..(xiv) by equivalence with
// premise-status notes.  `lambda_evidence` supplies a shift when the bounded
// search would not find one; `asserted_line` feeds the char-p branch.
struct TheoremDOptions {
  std::optional<RDivisibility> lambda_evidence;
  const LineWitness* line_witness = nullptr;
  bool asserted_line = false;
};

PipelineResult decide_theoremD(const HypersurfaceDatum& datum, const TheoremDOptions& opts = {},
                               std::uint64_t seed = 1);

}  // namespace linhyp
