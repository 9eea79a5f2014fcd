#include "linhyp/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace linhyp {

VarsPtr make_vars(VarList names) { return std::make_shared<const VarList>(std::move(names)); }

Polynomial Polynomial::zero(FieldPtr f, VarsPtr vars) {
  Polynomial p;
  p.field_ = std::move(f);
  p.vars_ = std::move(vars);
  return p;
}

Polynomial Polynomial::constant(FieldPtr f, VarsPtr vars, const FElem& c) {
  Polynomial p = zero(std::move(f), std::move(vars));
  if (!p.field_->is_zero(c)) p.terms_.emplace(Expts(p.vars_->size(), 0), c);
  return p;
}

Polynomial Polynomial::from_int(FieldPtr f, VarsPtr vars, long long n) {
  FElem c = f->from_int(n);
  return constant(std::move(f), std::move(vars), c);
}

Polynomial Polynomial::variable(FieldPtr f, VarsPtr vars, const std::string& name) {
  Polynomial p = zero(std::move(f), std::move(vars));
  Expts e(p.vars_->size(), 0);
  e[p.var_index(name)] = 1;
  p.terms_.emplace(std::move(e), p.field_->one());
  return p;
}

Polynomial Polynomial::monomial(FieldPtr f, VarsPtr vars, const Expts& e, const FElem& c) {
  Polynomial p = zero(std::move(f), std::move(vars));
  if (e.size() != p.vars_->size()) throw error("exponent vector length mismatch");
  if (!p.field_->is_zero(c)) p.terms_.emplace(e, c);
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Expts& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
}

FElem Polynomial::constant_value() const {
  if (terms_.empty()) return field_->zero();
  if (!is_constant()) throw error("polynomial is not constant");
  return terms_.begin()->second;
}

long Polynomial::total_degree() const {
  if (terms_.empty()) return kDegNegInf;
  long d = 0;
  for (const auto& [e, c] : terms_) {
    long s = 0;
    for (unsigned x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

long Polynomial::degree_in(const std::string& var) const { return degree_in(var_index(var)); }

long Polynomial::degree_in(std::size_t i) const {
  if (terms_.empty()) return kDegNegInf;
  long d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<long>(e[i]));
  return d;
}

std::vector<std::string> Polynomial::support_vars() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    for (const auto& [e, c] : terms_)
      if (e[i] > 0) {
        out.push_back((*vars_)[i]);
        break;
      }
  }
  return out;
}

bool Polynomial::uses_only(const std::vector<std::string>& allowed) const {
  for (const auto& v : support_vars())
    if (std::find(allowed.begin(), allowed.end(), v) == allowed.end()) return false;
  return true;
}

std::size_t Polynomial::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < vars_->size(); ++i)
    if ((*vars_)[i] == name) return i;
  throw error("unknown variable: " + name);
}

void Polynomial::insert_term(const Expts& e, const FElem& c) {
  if (field_->is_zero(c)) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second = field_->add(it->second, c);
    if (field_->is_zero(it->second)) terms_.erase(it);
  }
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (!field_ || !o.field_ || !field_->same(*o.field_))
    throw field_mismatch("polynomials over different fields");
  if (vars_ != o.vars_ && *vars_ != *o.vars_)
    throw field_mismatch("polynomials over different variable lists");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.insert_term(e, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, c] : r.terms_) c = field_->neg(c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r = zero(field_, vars_);
  Expts e(vars_->size());
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.insert_term(e, field_->mul(ca, cb));
    }
  }
  return r;
}

Polynomial Polynomial::scale(const FElem& c) const {
  if (field_->is_zero(c)) return zero(field_, vars_);
  Polynomial r = *this;
  for (auto& [e, v] : r.terms_) v = field_->mul(v, c);
  return r;
}

Polynomial Polynomial::pow(unsigned long e) const {
  Polynomial r = from_int(field_, vars_, 1);
  Polynomial b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  check_compatible(o);
  if (terms_.size() != o.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt) {
    if (it->first != jt->first) return false;
    if (!field_->equal(it->second, jt->second)) return false;
  }
  return true;
}

std::pair<Expts, FElem> Polynomial::leading_term() const {
  if (terms_.empty()) throw error("zero polynomial has no leading term");
  auto it = std::prev(terms_.end());
  return {it->first, it->second};
}

FElem Polynomial::leading_coefficient() const { return leading_term().second; }

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scale(field_->inv(leading_coefficient()));
}

Polynomial Polynomial::div_exact(const Polynomial& o) const {
  check_compatible(o);
  if (o.is_zero()) throw error("division by the zero polynomial");
  Polynomial q = zero(field_, vars_);
  Polynomial r = *this;
  auto [eb, cb] = o.leading_term();
  FElem cbinv = field_->inv(cb);
  while (!r.is_zero()) {
    auto [ea, ca] = r.leading_term();
    Expts e(ea.size());
    for (std::size_t i = 0; i < ea.size(); ++i) {
      if (ea[i] < eb[i]) throw not_divisible();
      e[i] = ea[i] - eb[i];
    }
    FElem c = field_->mul(ca, cbinv);
    Polynomial t = monomial(field_, vars_, e, c);
    q = q + t;
    r = r - t * o;
  }
  return q;
}

bool Polynomial::divisible_by(const Polynomial& o) const {
  try {
    div_exact(o);
    return true;
  } catch (const not_divisible&) {
    return false;
  }
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& bindings) const {
  // Determine the target context from the images (they must all agree);
  // identity images are created for unbound variables.
  VarsPtr target = vars_;
  FieldPtr tfield = field_;
  for (const auto& [name, img] : bindings) {
    var_index(name);  // validates the bound symbol
    target = img.vars();
    tfield = img.field();
  }
  std::vector<Polynomial> images;
  images.reserve(vars_->size());
  for (const auto& v : *vars_) {
    auto it = bindings.find(v);
    if (it != bindings.end()) {
      images.push_back(it->second);
      images.back().check_compatible(images.front());
    } else {
      images.push_back(variable(tfield, target, v));
    }
  }
  Polynomial r = zero(tfield, target);
  // Memoized powers keep repeated exponents cheap.
  std::vector<std::vector<Polynomial>> powers(vars_->size());
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(from_int(tfield, target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  for (const auto& [e, c] : terms_) {
    Polynomial t = constant(tfield, target, tfield->embed(*field_, c));
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) t = t * power(i, e[i]);
    r = r + t;
  }
  return r;
}

Polynomial Polynomial::derivative(const std::string& var) const {
  std::size_t i = var_index(var);
  Polynomial r = zero(field_, vars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    FElem nc = field_->mul(c, field_->from_int(e[i]));
    if (field_->is_zero(nc)) continue;
    Expts ne = e;
    ne[i] -= 1;
    r.insert_term(ne, nc);
  }
  return r;
}

Polynomial Polynomial::with_vars(const VarsPtr& target) const {
  std::vector<std::optional<std::size_t>> where(vars_->size());
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    for (std::size_t j = 0; j < target->size(); ++j)
      if ((*vars_)[i] == (*target)[j]) {
        where[i] = j;
        break;
      }
  }
  Polynomial r = zero(field_, target);
  for (const auto& [e, c] : terms_) {
    Expts ne(target->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!where[i]) throw error("variable " + (*vars_)[i] + " missing from target context");
      ne[*where[i]] = e[i];
    }
    r.insert_term(ne, c);
  }
  return r;
}

Polynomial Polynomial::map_field(const FieldPtr& bigger) const {
  Polynomial r = zero(bigger, vars_);
  for (const auto& [e, c] : terms_) r.insert_term(e, bigger->embed(*field_, c));
  return r;
}

std::map<unsigned, Polynomial> Polynomial::coeffs_in(const std::string& var) const {
  std::size_t i = var_index(var);
  std::map<unsigned, Polynomial> out;
  for (const auto& [e, c] : terms_) {
    unsigned k = e[i];
    auto it = out.find(k);
    if (it == out.end()) it = out.emplace(k, zero(field_, vars_)).first;
    Expts ne = e;
    ne[i] = 0;
    it->second.insert_term(ne, c);
  }
  return out;
}

Polynomial Polynomial::coeff_of(const std::string& var, unsigned k) const {
  std::size_t i = var_index(var);
  Polynomial r = zero(field_, vars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] != k) continue;
    Expts ne = e;
    ne[i] = 0;
    r.insert_term(ne, c);
  }
  return r;
}

unsigned Polynomial::order_in(const std::string& var) const {
  std::size_t i = var_index(var);
  if (terms_.empty()) throw error("zero polynomial has no order");
  unsigned m = std::numeric_limits<unsigned>::max();
  for (const auto& [e, c] : terms_) m = std::min(m, e[i]);
  return m;
}

UPoly Polynomial::to_upoly(const std::string& var) const {
  std::size_t i = var_index(var);
  UPoly u(static_cast<std::size_t>(std::max<long>(degree_in(i), -1) + 1), field_->zero());
  for (const auto& [e, c] : terms_) {
    for (std::size_t j = 0; j < e.size(); ++j)
      if (j != i && e[j] != 0) throw error("polynomial is not univariate in " + var);
    u[e[i]] = c;
  }
  uv_normalize(*field_, u);
  return u;
}

Polynomial Polynomial::from_upoly(FieldPtr f, VarsPtr vars, const std::string& var,
                                  const UPoly& u) {
  Polynomial p = zero(std::move(f), std::move(vars));
  std::size_t i = p.var_index(var);
  Expts e(p.vars_->size(), 0);
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (p.field_->is_zero(u[k])) continue;
    e[i] = static_cast<unsigned>(k);
    p.insert_term(e, u[k]);
  }
  return p;
}

Polynomial Polynomial::leading_form() const {
  std::vector<long> w(vars_->size(), 1);
  return weighted_leading_form(w);
}

long Polynomial::weighted_degree(const std::vector<long>& weights) const {
  if (terms_.empty()) return kDegNegInf;
  long best = std::numeric_limits<long>::min();
  for (const auto& [e, c] : terms_) {
    long s = 0;
    for (std::size_t i = 0; i < e.size(); ++i) s += weights[i] * static_cast<long>(e[i]);
    best = std::max(best, s);
  }
  return best;
}

Polynomial Polynomial::weighted_leading_form(const std::vector<long>& weights, long* wdeg) const {
  Polynomial r = zero(field_, vars_);
  if (terms_.empty()) {
    if (wdeg) *wdeg = kDegNegInf;
    return r;
  }
  long best = weighted_degree(weights);
  if (wdeg) *wdeg = best;
  for (const auto& [e, c] : terms_) {
    long s = 0;
    for (std::size_t i = 0; i < e.size(); ++i) s += weights[i] * static_cast<long>(e[i]);
    if (s == best) r.insert_term(e, c);
  }
  return r;
}

FElem Polynomial::evaluate(const std::vector<FElem>& point) const {
  if (point.size() != vars_->size()) throw error("evaluation point arity mismatch");
  FElem acc = field_->zero();
  for (const auto& [e, c] : terms_) {
    FElem t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) t = field_->mul(t, field_->pow(point[i], e[i]));
    acc = field_->add(acc, t);
  }
  return acc;
}

namespace {

// Renders a coefficient as a grammar `factor` (parenthesized when composite).
std::string coeff_factor(const Field& K, const FElem& c) {
  std::string s = K.to_string(c);
  bool atom = !s.empty() && s.find('+') == std::string::npos &&
              s.find('-', 1) == std::string::npos && s.find('*') == std::string::npos;
  // A leading '-' is handled by the caller via sign splitting, so a bare
  // negative number still needs parentheses unless the caller stripped it.
  if (atom) return s;
  return "(" + s + ")";
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Descending canonical order: largest exponent vector first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string cs = field_->to_string(c);
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (first) {
      if (neg) out << '-';
    } else {
      out << (neg ? '-' : '+');
    }
    first = false;
    bool any_var = std::any_of(e.begin(), e.end(), [](unsigned x) { return x != 0; });
    bool coeff_is_one = (cs == "1");
    bool printed = false;
    if (!coeff_is_one || !any_var) {
      FElem abs_c = neg ? field_->neg(c) : c;
      out << coeff_factor(*field_, abs_c);
      printed = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (printed) out << '*';
      out << (*vars_)[i];
      if (e[i] > 1) out << '^' << e[i];
      printed = true;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Multivariate gcd (primitive PRS, recursing on the number of variables).

namespace {

// Chooses the last variable with a positive degree in either input.
std::optional<std::size_t> pick_main_var(const Polynomial& a, const Polynomial& b) {
  const auto& vars = *a.vars();
  for (std::size_t i = vars.size(); i-- > 0;) {
    if (a.degree_in(i) > 0 || b.degree_in(i) > 0) return i;
  }
  return std::nullopt;
}

Polynomial gcd_impl(const Polynomial& a, const Polynomial& b);

// gcd of a list (used for contents).
Polynomial gcd_list(const std::vector<Polynomial>& ps, const Polynomial& zero) {
  Polynomial g = zero;
  for (const auto& p : ps) {
    g = gcd_impl(g, p);
    if (g.is_unit()) break;
  }
  return g;
}

// Pseudo-remainder of a by b with respect to var (lc(b)^(da-db+1) * a mod b).
Polynomial pseudo_rem(const Polynomial& a, const Polynomial& b, const std::string& var) {
  long da = a.degree_in(var);
  long db = b.degree_in(var);
  Polynomial lb = b.coeff_of(var, static_cast<unsigned>(db));
  Polynomial r = a;
  Polynomial xv = Polynomial::variable(a.field(), a.vars(), var);
  while (!r.is_zero() && r.degree_in(var) >= db) {
    long dr = r.degree_in(var);
    Polynomial lr = r.coeff_of(var, static_cast<unsigned>(dr));
    // r := lb*r - lr * x^(dr-db) * b
    r = r * lb - lr * xv.pow(static_cast<unsigned long>(dr - db)) * b;
  }
  (void)da;
  return r;
}

Polynomial primitive_part(const Polynomial& a, const std::string& var, Polynomial* content_out) {
  std::vector<Polynomial> cs;
  for (const auto& [k, c] : a.coeffs_in(var)) cs.push_back(c);
  Polynomial cont = gcd_list(cs, Polynomial::zero(a.field(), a.vars()));
  if (content_out) *content_out = cont;
  if (cont.is_zero()) return a;
  return a.div_exact(cont);
}

Polynomial gcd_impl(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_constant() || b.is_constant())
    return Polynomial::from_int(a.field(), a.vars(), 1);
  auto mv = pick_main_var(a, b);
  if (!mv) return Polynomial::from_int(a.field(), a.vars(), 1);
  const std::string var = (*a.vars())[*mv];
  // Univariate in var (and nothing else used)?  Fall back to Euclid.
  bool both_uni = true;
  for (const auto& v : a.support_vars())
    if (v != var) both_uni = false;
  for (const auto& v : b.support_vars())
    if (v != var) both_uni = false;
  if (both_uni) {
    UPoly g = uv_gcd(*a.field(), a.to_upoly(var), b.to_upoly(var));
    return Polynomial::from_upoly(a.field(), a.vars(), var, g);
  }
  Polynomial ca, cb;
  Polynomial pa = primitive_part(a, var, &ca);
  Polynomial pb = primitive_part(b, var, &cb);
  Polynomial cont_gcd = gcd_impl(ca, cb);
  // Primitive PRS.
  Polynomial u = pa, v = pb;
  if (u.degree_in(var) < v.degree_in(var)) std::swap(u, v);
  while (!v.is_zero() && v.degree_in(var) > 0) {
    Polynomial r = pseudo_rem(u, v, var);
    u = v;
    if (r.is_zero()) {
      v = r;
      break;
    }
    v = primitive_part(r, var, nullptr);
  }
  if (v.is_zero()) return cont_gcd * primitive_part(u, var, nullptr);
  // A nonzero var-free remainder forces the primitive parts to be coprime.
  return cont_gcd;
}

}  // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial g = gcd_impl(a, b);
  if (g.is_zero()) return g;
  return g.monic();
}

Polynomial poly_content_in(const Polynomial& a, const std::string& var) {
  std::vector<Polynomial> cs;
  for (const auto& [k, c] : a.coeffs_in(var)) cs.push_back(c);
  Polynomial g = gcd_list(cs, Polynomial::zero(a.field(), a.vars()));
  if (g.is_zero()) return g;
  return g.monic();
}

}  // namespace linhyp
