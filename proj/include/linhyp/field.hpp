#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "linhyp/error.hpp"

namespace linhyp {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Field element storage.  Interpretation depends on the owning Field:
// rationals -> mpq_class, prime field -> residue in [0,p), simple extension ->
// dense coefficient vector over the base field, reduced mod the minimal
// polynomial (length == extension degree).
struct FElem {
  std::variant<mpq_class, std::uint64_t, std::vector<FElem>> rep{std::uint64_t{0}};
};

// An exact coefficient field: Q, F_p (p prime, p < 2^31) or a simple
// extension of one of those by a monic irreducible polynomial.  Towers never
// nest: the base of an extension is always Q or F_p.
class Field : public std::enable_shared_from_this<Field> {
 public:
  enum class Kind { rationals, prime, extension };

  static FieldPtr rationals();
  static FieldPtr prime(std::uint64_t p);
  // Callers that cannot vouch for irreducibility should use
  // make_simple_extension (factor.hpp), which verifies it.
  static FieldPtr extension_unchecked(FieldPtr base, std::string generator,
                                      std::vector<FElem> monic_minpoly);

  Kind kind() const { return kind_; }
  std::uint64_t characteristic() const;
  std::uint64_t prime_modulus() const { return p_; }
  const FieldPtr& base() const { return base_; }
  const std::string& generator_name() const { return gen_name_; }
  // Monic minimal polynomial, coefficients c0..c_d with c_d == 1.
  const std::vector<FElem>& minpoly() const { return minpoly_; }
  std::size_t extension_degree() const { return minpoly_.empty() ? 1 : minpoly_.size() - 1; }
  // Number of elements as p^d for finite fields; throws for char 0.
  mpz_class order() const;

  bool same(const Field& other) const;
  bool is_finite() const { return characteristic() != 0; }

  FElem zero() const;
  FElem one() const;
  FElem from_int(long long n) const;
  FElem from_mpz(const mpz_class& n) const;
  FElem from_mpq(const mpq_class& q) const;
  FElem generator() const;  // extension fields only
  // Embeds an element of the base field (or of this field itself).
  FElem embed(const Field& from, const FElem& a) const;

  FElem add(const FElem& a, const FElem& b) const;
  FElem sub(const FElem& a, const FElem& b) const;
  FElem mul(const FElem& a, const FElem& b) const;
  FElem neg(const FElem& a) const;
  FElem inv(const FElem& a) const;
  FElem div(const FElem& a, const FElem& b) const;
  FElem pow(const FElem& a, const mpz_class& e) const;

  bool is_zero(const FElem& a) const;
  bool is_one(const FElem& a) const;
  bool equal(const FElem& a, const FElem& b) const;
  // Canonical total order on elements, used only for deterministic output.
  int cmp(const FElem& a, const FElem& b) const;

  std::string to_string(const FElem& a) const;
  std::string describe() const;  // field spec string, e.g. "Q", "F:7", "Q(i):i^2+1"

 private:
  Field() = default;

  Kind kind_ = Kind::rationals;
  std::uint64_t p_ = 0;            // prime kind (and base modulus for extensions of F_p)
  FieldPtr base_;                  // extension kind
  std::string gen_name_;           // extension kind
  std::vector<FElem> minpoly_;     // extension kind, monic
};

}  // namespace linhyp
