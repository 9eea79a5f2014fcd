#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "linhyp/automorphism.hpp"
#include "linhyp/polynomial.hpp"

namespace linhyp {

// A named replay input: polynomials, automorphisms, polynomial lists, labels
// and integers cover every pipeline.
using Witness =
    std::variant<Polynomial, PlanarAutomorphism, std::vector<Polynomial>, std::string, long long>;

struct Premise {
  std::string id;    // short human label
  std::string kind;  // replay dispatcher key (see replay.cpp)
  std::vector<std::string> args;  // witness names consumed by the replay
  enum class Status { verified, failed, asserted } status = Status::failed;
  std::string detail;
};

// A verdict with premises and witnesses.  Every premise marked `verified`
// must replay from the stored witnesses alone; `asserted` marks an input the
// caller supplied as an external assertion, never machine-checked.
struct Certificate {
  std::string claim;
  FieldPtr field;
  std::vector<Premise> premises;
  std::map<std::string, Witness> witnesses;
  std::uint64_t seed = 0;
  std::string rule;  // decision-rule identifier, documented in the README

  const Polynomial& poly(const std::string& name) const;
  const PlanarAutomorphism& automorphism(const std::string& name) const;
  const std::vector<Polynomial>& poly_list(const std::string& name) const;
  const std::string& label(const std::string& name) const;
  long long integer(const std::string& name) const;

  bool all_premises_hold() const;  // no premise in `failed` state
};

// Re-checks one premise from the stored witnesses; returns the recomputed
// status (asserted premises replay as asserted).
Premise::Status replay_premise(const Certificate& cert, const Premise& premise);

// True iff every premise replays to the status recorded in the certificate.
bool replay_certificate(const Certificate& cert);

}  // namespace linhyp
