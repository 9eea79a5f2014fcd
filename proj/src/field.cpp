#include "linhyp/field.hpp"

#include <sstream>

#include "linhyp/upoly.hpp"

namespace linhyp {

namespace {

bool is_prime_u64(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw error("division by zero in F_p");
  long long t = 0, nt = 1;
  long long r = static_cast<long long>(p), nr = static_cast<long long>(a);
  while (nr != 0) {
    long long q = r / nr;
    long long tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += static_cast<long long>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

FieldPtr Field::rationals() {
  static FieldPtr q = [] {
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = Kind::rationals;
    return FieldPtr(f);
  }();
  return q;
}

FieldPtr Field::prime(std::uint64_t p) {
  if (p >= (1ULL << 31)) throw error("prime modulus must be < 2^31");
  if (!is_prime_u64(p)) throw error("modulus is not prime");
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = Kind::prime;
  f->p_ = p;
  return f;
}

FieldPtr Field::extension_unchecked(FieldPtr base, std::string generator,
                                    std::vector<FElem> monic_minpoly) {
  if (!base) throw error("extension needs a base field");
  if (base->kind() == Kind::extension)
    throw error("extension towers deeper than one step are not supported");
  uv_normalize(*base, monic_minpoly);
  if (uv_deg(monic_minpoly) < 2) throw error("minimal polynomial must have degree >= 2");
  if (!base->is_one(monic_minpoly.back())) throw error("minimal polynomial must be monic");
  if (generator.empty()) throw error("generator name must be nonempty");
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = Kind::extension;
  f->base_ = std::move(base);
  f->p_ = f->base_->prime_modulus();
  f->gen_name_ = std::move(generator);
  f->minpoly_ = std::move(monic_minpoly);
  return f;
}

std::uint64_t Field::characteristic() const {
  switch (kind_) {
    case Kind::rationals: return 0;
    case Kind::prime: return p_;
    case Kind::extension: return base_->characteristic();
  }
  return 0;
}

mpz_class Field::order() const {
  if (characteristic() == 0) throw error("field of characteristic zero is infinite");
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p_),
                static_cast<unsigned long>(extension_degree()));
  return q;
}

bool Field::same(const Field& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case Kind::rationals: return true;
    case Kind::prime: return p_ == other.p_;
    case Kind::extension: {
      if (gen_name_ != other.gen_name_) return false;
      if (!base_->same(*other.base_)) return false;
      if (minpoly_.size() != other.minpoly_.size()) return false;
      for (std::size_t i = 0; i < minpoly_.size(); ++i)
        if (!base_->equal(minpoly_[i], other.minpoly_[i])) return false;
      return true;
    }
  }
  return false;
}

FElem Field::zero() const {
  switch (kind_) {
    case Kind::rationals: return FElem{mpq_class(0)};
    case Kind::prime: return FElem{std::uint64_t{0}};
    case Kind::extension: return FElem{std::vector<FElem>(extension_degree(), base_->zero())};
  }
  return {};
}

FElem Field::one() const { return from_int(1); }

FElem Field::from_int(long long n) const {
  switch (kind_) {
    case Kind::rationals: return FElem{mpq_class(static_cast<long>(n))};
    case Kind::prime: {
      long long r = n % static_cast<long long>(p_);
      if (r < 0) r += static_cast<long long>(p_);
      return FElem{static_cast<std::uint64_t>(r)};
    }
    case Kind::extension: {
      std::vector<FElem> v(extension_degree(), base_->zero());
      v[0] = base_->from_int(n);
      return FElem{std::move(v)};
    }
  }
  return {};
}

FElem Field::from_mpz(const mpz_class& n) const {
  switch (kind_) {
    case Kind::rationals: return FElem{mpq_class(n)};
    case Kind::prime: {
      mpz_class r = n % static_cast<long>(p_);
      if (r < 0) r += static_cast<long>(p_);
      return FElem{static_cast<std::uint64_t>(r.get_ui())};
    }
    case Kind::extension: {
      std::vector<FElem> v(extension_degree(), base_->zero());
      v[0] = base_->from_mpz(n);
      return FElem{std::move(v)};
    }
  }
  return {};
}

FElem Field::from_mpq(const mpq_class& q) const {
  switch (kind_) {
    case Kind::rationals: {
      mpq_class c(q);
      c.canonicalize();
      return FElem{c};
    }
    case Kind::prime: {
      FElem num = from_mpz(q.get_num());
      FElem den = from_mpz(q.get_den());
      return div(num, den);
    }
    case Kind::extension: {
      std::vector<FElem> v(extension_degree(), base_->zero());
      v[0] = base_->from_mpq(q);
      return FElem{std::move(v)};
    }
  }
  return {};
}

FElem Field::generator() const {
  if (kind_ != Kind::extension) throw error("generator() on a non-extension field");
  std::vector<FElem> v(extension_degree(), base_->zero());
  v[1] = base_->one();
  return FElem{std::move(v)};
}

FElem Field::embed(const Field& from, const FElem& a) const {
  if (same(from)) return a;
  if (kind_ == Kind::extension && base_->same(from)) {
    std::vector<FElem> v(extension_degree(), base_->zero());
    v[0] = a;
    return FElem{std::move(v)};
  }
  throw field_mismatch("cannot embed element between unrelated fields");
}

namespace {
// Reduce a coefficient vector (length may exceed degree) mod the monic minpoly.
std::vector<FElem> ext_reduce(const Field& base, const std::vector<FElem>& mp,
                              std::vector<FElem> v) {
  std::size_t d = mp.size() - 1;
  for (std::size_t i = v.size(); i-- > d;) {
    if (base.is_zero(v[i])) continue;
    FElem c = v[i];
    // v -= c * x^(i-d) * mp
    for (std::size_t j = 0; j < mp.size(); ++j)
      v[i - d + j] = base.sub(v[i - d + j], base.mul(c, mp[j]));
  }
  v.resize(d, base.zero());
  return v;
}
}  // namespace

FElem Field::add(const FElem& a, const FElem& b) const {
  switch (kind_) {
    case Kind::rationals: return FElem{std::get<mpq_class>(a.rep) + std::get<mpq_class>(b.rep)};
    case Kind::prime:
      return FElem{addmod(std::get<std::uint64_t>(a.rep), std::get<std::uint64_t>(b.rep), p_)};
    case Kind::extension: {
      const auto& va = std::get<std::vector<FElem>>(a.rep);
      const auto& vb = std::get<std::vector<FElem>>(b.rep);
      std::vector<FElem> v(extension_degree());
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = base_->add(va[i], vb[i]);
      return FElem{std::move(v)};
    }
  }
  return {};
}

FElem Field::sub(const FElem& a, const FElem& b) const { return add(a, neg(b)); }

FElem Field::neg(const FElem& a) const {
  switch (kind_) {
    case Kind::rationals: return FElem{-std::get<mpq_class>(a.rep)};
    case Kind::prime:
      return FElem{submod(0, std::get<std::uint64_t>(a.rep), p_)};
    case Kind::extension: {
      const auto& va = std::get<std::vector<FElem>>(a.rep);
      std::vector<FElem> v(extension_degree());
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = base_->neg(va[i]);
      return FElem{std::move(v)};
    }
  }
  return {};
}

FElem Field::mul(const FElem& a, const FElem& b) const {
  switch (kind_) {
    case Kind::rationals: return FElem{std::get<mpq_class>(a.rep) * std::get<mpq_class>(b.rep)};
    case Kind::prime:
      return FElem{mulmod(std::get<std::uint64_t>(a.rep), std::get<std::uint64_t>(b.rep), p_)};
    case Kind::extension: {
      const auto& va = std::get<std::vector<FElem>>(a.rep);
      const auto& vb = std::get<std::vector<FElem>>(b.rep);
      std::vector<FElem> prod(2 * extension_degree() - 1, base_->zero());
      for (std::size_t i = 0; i < va.size(); ++i) {
        if (base_->is_zero(va[i])) continue;
        for (std::size_t j = 0; j < vb.size(); ++j)
          prod[i + j] = base_->add(prod[i + j], base_->mul(va[i], vb[j]));
      }
      return FElem{ext_reduce(*base_, minpoly_, std::move(prod))};
    }
  }
  return {};
}

FElem Field::inv(const FElem& a) const {
  switch (kind_) {
    case Kind::rationals: {
      const auto& q = std::get<mpq_class>(a.rep);
      if (q == 0) throw error("division by zero");
      return FElem{1 / q};
    }
    case Kind::prime: return FElem{invmod(std::get<std::uint64_t>(a.rep), p_)};
    case Kind::extension: {
      if (is_zero(a)) throw error("division by zero");
      UPoly av = std::get<std::vector<FElem>>(a.rep);
      uv_normalize(*base_, av);
      UPoly g, s, t;
      uv_ext_gcd(*base_, av, minpoly_, g, s, t);
      if (uv_deg(g) != 0) throw error("minimal polynomial is not irreducible (inverse failed)");
      // g is monic constant 1, so s is the inverse mod minpoly.
      s = uv_mod(*base_, s, minpoly_);
      s.resize(extension_degree(), base_->zero());
      return FElem{std::move(s)};
    }
  }
  return {};
}

FElem Field::div(const FElem& a, const FElem& b) const { return mul(a, inv(b)); }

FElem Field::pow(const FElem& a, const mpz_class& e) const {
  if (e < 0) return pow(inv(a), -e);
  FElem r = one();
  FElem b = a;
  mpz_class k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) r = mul(r, b);
    b = mul(b, b);
    k >>= 1;
  }
  return r;
}

bool Field::is_zero(const FElem& a) const {
  switch (kind_) {
    case Kind::rationals: return std::get<mpq_class>(a.rep) == 0;
    case Kind::prime: return std::get<std::uint64_t>(a.rep) == 0;
    case Kind::extension: {
      for (const auto& c : std::get<std::vector<FElem>>(a.rep))
        if (!base_->is_zero(c)) return false;
      return true;
    }
  }
  return false;
}

bool Field::is_one(const FElem& a) const { return equal(a, one()); }

bool Field::equal(const FElem& a, const FElem& b) const { return is_zero(sub(a, b)); }

int Field::cmp(const FElem& a, const FElem& b) const {
  switch (kind_) {
    case Kind::rationals:
      return mpq_cmp(std::get<mpq_class>(a.rep).get_mpq_t(), std::get<mpq_class>(b.rep).get_mpq_t());
    case Kind::prime: {
      auto x = std::get<std::uint64_t>(a.rep), y = std::get<std::uint64_t>(b.rep);
      return x < y ? -1 : (x > y ? 1 : 0);
    }
    case Kind::extension: {
      const auto& va = std::get<std::vector<FElem>>(a.rep);
      const auto& vb = std::get<std::vector<FElem>>(b.rep);
      for (std::size_t i = va.size(); i-- > 0;) {
        int c = base_->cmp(va[i], vb[i]);
        if (c != 0) return c;
      }
      return 0;
    }
  }
  return 0;
}

std::string Field::to_string(const FElem& a) const {
  switch (kind_) {
    case Kind::rationals: {
      const auto& q = std::get<mpq_class>(a.rep);
      return q.get_str();
    }
    case Kind::prime: return std::to_string(std::get<std::uint64_t>(a.rep));
    case Kind::extension: {
      const auto& v = std::get<std::vector<FElem>>(a.rep);
      std::ostringstream out;
      bool first = true;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (base_->is_zero(v[i])) continue;
        std::string c = base_->to_string(v[i]);
        if (!first) {
          if (!c.empty() && c[0] == '-') {
            out << '-';
            c = c.substr(1);
          } else {
            out << '+';
          }
        }
        first = false;
        if (i == 0) {
          out << c;
        } else {
          if (c != "1") {
            if (c == "-1")
              out << '-';
            else
              out << c << '*';
          }
          out << gen_name_;
          if (i > 1) out << '^' << i;
        }
      }
      if (first) return "0";
      return out.str();
    }
  }
  return {};
}

std::string Field::describe() const {
  switch (kind_) {
    case Kind::rationals: return "Q";
    case Kind::prime: return "F:" + std::to_string(p_);
    case Kind::extension: {
      std::ostringstream out;
      out << base_->describe() << '(' << gen_name_ << "):";
      // Print the minimal polynomial in the CLI grammar.
      bool first = true;
      for (std::size_t i = minpoly_.size(); i-- > 0;) {
        if (base_->is_zero(minpoly_[i])) continue;
        std::string c = base_->to_string(minpoly_[i]);
        if (!first) {
          if (!c.empty() && c[0] == '-') {
            out << '-';
            c = c.substr(1);
          } else {
            out << '+';
          }
        }
        first = false;
        if (i == 0) {
          out << c;
        } else {
          if (c != "1") {
            if (c == "-1")
              out << '-';
            else
              out << c << '*';
          }
          out << gen_name_;
          if (i > 1) out << '^' << i;
        }
      }
      return out.str();
    }
  }
  return {};
}

}  // namespace linhyp
