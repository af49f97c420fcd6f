#include "trisect/gf.hpp"

#include <algorithm>
#include <cstdlib>

namespace trisect::gf {

namespace {

constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 31;
constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 19;

void check_same_field(const Elem& a, const Elem& b) {
  if (a.field == nullptr || a.field != b.field) {
    throw FieldMismatch("operands belong to different fields");
  }
}

// --- polynomial arithmetic over GF(p), little-endian coefficient vectors ---

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = (r[i + j] + std::uint64_t{a[i]} * b[j]) % p;
    }
  }
  return r;
}

// Remainder of a by monic g.
Poly poly_mod(Poly a, const Poly& g, std::uint32_t p) {
  trim(a);
  const std::size_t dg = g.size() - 1;
  while (a.size() > dg) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dg;
    if (lead != 0) {
      for (std::size_t i = 0; i <= dg; ++i) {
        std::uint64_t s = std::uint64_t{lead} * g[i] % p;
        a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - s) % p);
      }
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> fs;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;  // constants are not irreducible
  const std::size_t d = f.size() - 1;
  if (d == 1) return true;
  // Trial division against all monic polynomials of degree <= d/2.
  for (std::size_t e = 1; e <= d / 2; ++e) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < e; ++i) count *= p;
    for (std::uint64_t k = 0; k < count; ++k) {
      Poly g(e + 1, 0);
      std::uint64_t t = k;
      for (std::size_t i = 0; i < e; ++i) {
        g[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      g[e] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t h) {
  // Lex order on (c_0, ..., c_{h-1}) with c_0 compared first.
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < h; ++i) count *= p;
  for (std::uint64_t key = 0; key < count; ++key) {
    Poly f(h + 1, 0);
    std::uint64_t t = key;
    for (std::uint32_t i = h; i-- > 0;) {
      f[i] = static_cast<std::uint32_t>(t % p);
      t /= p;
    }
    f[h] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw InternalInvariantViolation("no irreducible polynomial found");
}

std::pair<std::uint32_t, std::uint32_t> factor_prime_power(std::uint64_t q) {
  if (q < 2) throw InvalidParameter("q must be a prime power >= 2");
  std::uint64_t p = q;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  std::uint32_t h = 0;
  std::uint64_t t = q;
  while (t > 1) {
    if (t % p != 0) throw InvalidParameter("q is not a prime power");
    t /= p;
    ++h;
  }
  return {static_cast<std::uint32_t>(p), h};
}

// --------------------------------------------------------------------------

FieldPtr Field::prime_power(std::uint32_t p, std::uint32_t h) {
  if (!is_prime(p)) throw InvalidParameter("characteristic must be prime");
  if (h < 1) throw InvalidParameter("degree must be >= 1");
  return prime_power(p, h, default_modulus(p, h));
}

FieldPtr Field::prime_power(std::uint32_t p, std::uint32_t h,
                            std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) throw InvalidParameter("characteristic must be prime");
  if (h < 1) throw InvalidParameter("degree must be >= 1");
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < h; ++i) {
    order *= p;
    if (order >= kMaxOrder) throw InvalidParameter("field order overflows");
  }
  if (modulus.size() != h + 1 || modulus.back() != 1) {
    throw InvalidParameter("modulus must be monic of degree h");
  }
  for (auto c : modulus) {
    if (c >= p) throw InvalidParameter("modulus coefficient out of range");
  }
  if (!is_irreducible(modulus, p)) {
    throw InvalidParameter("modulus is reducible");
  }
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = Kind::Base;
  f->p_ = p;
  f->h_ = h;
  f->order_ = order;
  f->modulus_ = std::move(modulus);
  f->build_tables();
  return f;
}

FieldPtr Field::quadratic_extension(const FieldPtr& base) {
  if (!base) throw InvalidParameter("null base field");
  if (base->order() * base->order() >= kMaxOrder) {
    throw InvalidParameter("extension order overflows");
  }
  // Least monic irreducible x^2 + b*x + c: lex on (c, b) in rep order.
  const std::uint64_t q = base->order();
  elem_t mod0 = 0, mod1 = 0;
  bool found = false;
  for (std::uint64_t kc = 0; kc < q && !found; ++kc) {
    const elem_t c = base->rep_ordered(kc);
    for (std::uint64_t kb = 0; kb < q && !found; ++kb) {
      const elem_t b = base->rep_ordered(kb);
      bool has_root = false;
      for (std::uint64_t t = 0; t < q; ++t) {
        const elem_t tt = static_cast<elem_t>(t);
        elem_t val = base->add(base->add(base->mul(tt, tt), base->mul(b, tt)), c);
        if (val == 0) {
          has_root = true;
          break;
        }
      }
      if (!has_root) {
        mod0 = c;
        mod1 = b;
        found = true;
      }
    }
  }
  if (!found) throw InternalInvariantViolation("no irreducible quadratic");
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = Kind::Quadratic;
  f->p_ = base->characteristic();
  f->h_ = 2 * base->degree();
  f->order_ = q * q;
  f->base_ = base;
  f->qmod0_ = mod0;
  f->qmod1_ = mod1;
  f->build_tables();
  return f;
}

Elem Field::elem(elem_t v) const {
  if (v >= order_) throw InvalidParameter("element value out of range");
  return {this, v};
}

Elem Field::from_int(std::int64_t k) const {
  std::int64_t r = k % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {this, static_cast<elem_t>(r)};
}

elem_t Field::add(elem_t a, elem_t b) const {
  if (kind_ == Kind::Quadratic) {
    const std::uint64_t q = base_->order();
    return static_cast<elem_t>(base_->add(a % q, b % q) +
                               base_->add(a / q, b / q) * q);
  }
  if (p_ == 2) return a ^ b;
  elem_t r = 0, mult = 1;
  while (a != 0 || b != 0) {
    r += mult * ((a % p_ + b % p_) % p_);
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return r;
}

elem_t Field::neg(elem_t a) const {
  if (p_ == 2) return a;
  if (kind_ == Kind::Quadratic) {
    const std::uint64_t q = base_->order();
    return static_cast<elem_t>(base_->neg(a % q) + base_->neg(a / q) * q);
  }
  elem_t r = 0, mult = 1;
  while (a != 0) {
    const elem_t d = a % p_;
    r += mult * (d == 0 ? 0 : p_ - d);
    a /= p_;
    mult *= p_;
  }
  return r;
}

elem_t Field::sub(elem_t a, elem_t b) const { return add(a, neg(b)); }

elem_t Field::mul_slow(elem_t a, elem_t b) const {
  if (kind_ == Kind::Quadratic) {
    const std::uint64_t q = base_->order();
    const elem_t a0 = static_cast<elem_t>(a % q), a1 = static_cast<elem_t>(a / q);
    const elem_t b0 = static_cast<elem_t>(b % q), b1 = static_cast<elem_t>(b / q);
    // w^2 = -(qmod1_*w + qmod0_)
    const elem_t hi = base_->mul(a1, b1);
    const elem_t c0 = base_->sub(base_->mul(a0, b0), base_->mul(hi, qmod0_));
    const elem_t c1 = base_->sub(
        base_->add(base_->mul(a0, b1), base_->mul(a1, b0)),
        base_->mul(hi, qmod1_));
    return static_cast<elem_t>(c0 + std::uint64_t{c1} * q);
  }
  Poly pa, pb;
  for (elem_t t = a; t != 0; t /= p_) pa.push_back(t % p_);
  for (elem_t t = b; t != 0; t /= p_) pb.push_back(t % p_);
  Poly r = poly_mod(poly_mul(pa, pb, p_), modulus_, p_);
  elem_t v = 0;
  for (std::size_t i = r.size(); i-- > 0;) v = v * p_ + r[i];
  return v;
}

elem_t Field::mul(elem_t a, elem_t b) const {
  if (a == 0 || b == 0) return 0;
  if (!log_.empty()) {
    return exp_[log_[a] + log_[b]];
  }
  return mul_slow(a, b);
}

elem_t Field::pow(elem_t a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  if (!log_.empty()) {
    const std::uint64_t m = order_ - 1;
    return exp_[static_cast<std::size_t>(std::uint64_t{log_[a]} * (e % m) % m)];
  }
  elem_t r = 1, base = a;
  while (e > 0) {
    if (e & 1) r = mul_slow(r, base);
    base = mul_slow(base, base);
    e >>= 1;
  }
  return r;
}

elem_t Field::inv(elem_t a) const {
  if (a == 0) throw DivisionByZero("inverse of zero");
  if (!log_.empty()) return exp_[order_ - 1 - log_[a]];
  return pow(a, order_ - 2);
}

elem_t Field::div(elem_t a, elem_t b) const {
  if (b == 0) throw DivisionByZero("division by zero");
  return mul(a, inv(b));
}

std::vector<std::uint32_t> Field::rep(elem_t a) const {
  if (kind_ == Kind::Quadratic) {
    const std::uint64_t q = base_->order();
    auto lo = base_->rep(static_cast<elem_t>(a % q));
    auto hi = base_->rep(static_cast<elem_t>(a / q));
    lo.insert(lo.end(), hi.begin(), hi.end());
    return lo;
  }
  std::vector<std::uint32_t> r(h_, 0);
  for (std::uint32_t i = 0; i < h_; ++i) {
    r[i] = a % p_;
    a /= p_;
  }
  return r;
}

elem_t Field::from_rep(const std::vector<std::uint32_t>& rep) const {
  if (rep.size() != h_) throw InvalidParameter("rep length mismatch");
  if (kind_ == Kind::Quadratic) {
    const std::uint32_t hb = base_->degree();
    std::vector<std::uint32_t> lo(rep.begin(), rep.begin() + hb);
    std::vector<std::uint32_t> hi(rep.begin() + hb, rep.end());
    return static_cast<elem_t>(base_->from_rep(lo) +
                               std::uint64_t{base_->from_rep(hi)} * base_->order());
  }
  elem_t v = 0;
  for (std::size_t i = rep.size(); i-- > 0;) {
    if (rep[i] >= p_) throw InvalidParameter("rep digit out of range");
    v = v * p_ + rep[i];
  }
  return v;
}

bool Field::rep_less(elem_t a, elem_t b) const {
  const auto ra = rep(a), rb = rep(b);
  return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
}

elem_t Field::rep_ordered(std::uint64_t k) const {
  if (k >= order_) throw InvalidParameter("rep index out of range");
  // Digits of k, most significant first, become (c_0, ..., c_{h-1}).
  std::vector<std::uint32_t> digits(h_, 0);
  for (std::uint32_t i = h_; i-- > 0;) {
    digits[i] = static_cast<std::uint32_t>(k % p_);
    k /= p_;
  }
  return from_rep(digits);
}

std::uint64_t Field::element_order(elem_t a) const {
  if (a == 0) throw InvalidParameter("zero has no multiplicative order");
  std::uint64_t ord = order_ - 1;
  for (std::uint64_t f : prime_factors(order_ - 1)) {
    while (ord % f == 0 && pow(a, ord / f) == 1) ord /= f;
  }
  return ord;
}

Elem Field::primitive_element() const {
  if (!primitive_) {
    for (std::uint64_t k = 1; k < order_; ++k) {
      const elem_t v = rep_ordered(k);
      if (v != 0 && element_order(v) == order_ - 1) {
        primitive_ = v;
        break;
      }
    }
    if (!primitive_) {
      throw InternalInvariantViolation("no primitive element found");
    }
  }
  return {this, *primitive_};
}

bool Field::is_square(elem_t a) const {
  if (p_ == 2 || a == 0) return true;
  return pow(a, (order_ - 1) / 2) == 1;
}

std::uint32_t Field::abs_trace(elem_t a) const {
  if (p_ != 2) throw WrongCharacteristic("absolute trace needs characteristic 2");
  elem_t t = 0, x = a;
  for (std::uint32_t i = 0; i < h_; ++i) {
    t = add(t, x);
    x = mul(x, x);
  }
  if (t > 1) throw InternalInvariantViolation("absolute trace outside GF(2)");
  return t;
}

void Field::build_tables() {
  if (order_ > kTableLimit) return;
  // Any generator works for the tables; the slow paths are available here
  // because exp_/log_ are still empty.
  elem_t g = 0;
  for (std::uint64_t v = 1; v < order_; ++v) {
    if (element_order(static_cast<elem_t>(v)) == order_ - 1) {
      g = static_cast<elem_t>(v);
      break;
    }
  }
  const std::size_t m = static_cast<std::size_t>(order_ - 1);
  std::vector<elem_t> exp(2 * m);
  std::vector<std::uint32_t> log(order_, 0);
  elem_t cur = 1;
  for (std::size_t i = 0; i < m; ++i) {
    exp[i] = cur;
    log[cur] = static_cast<std::uint32_t>(i);
    cur = mul_slow(cur, g);
  }
  for (std::size_t i = 0; i < m; ++i) exp[m + i] = exp[i];
  exp_ = std::move(exp);
  log_ = std::move(log);
}

// --------------------------------------------------------------------------

Elem operator+(const Elem& a, const Elem& b) {
  check_same_field(a, b);
  return {a.field, a.field->add(a.v, b.v)};
}
Elem operator-(const Elem& a, const Elem& b) {
  check_same_field(a, b);
  return {a.field, a.field->sub(a.v, b.v)};
}
Elem operator*(const Elem& a, const Elem& b) {
  check_same_field(a, b);
  return {a.field, a.field->mul(a.v, b.v)};
}
Elem operator/(const Elem& a, const Elem& b) {
  check_same_field(a, b);
  return {a.field, a.field->div(a.v, b.v)};
}
Elem operator-(const Elem& a) { return {a.field, a.field->neg(a.v)}; }

// --------------------------------------------------------------------------

ExtPair ExtPair::make(const FieldPtr& base) {
  ExtPair pair;
  pair.base = base;
  pair.ext = Field::quadratic_extension(base);
  return pair;
}

Elem ExtPair::embed(const Elem& a) const {
  if (a.field != base.get()) throw FieldMismatch("embed expects a base element");
  return {ext.get(), a.v};
}

Elem ExtPair::project(const Elem& b) const {
  if (b.field != ext.get()) throw FieldMismatch("project expects an extension element");
  if (b.v >= base->order()) {
    throw InternalInvariantViolation("element not in the base field image");
  }
  return {base.get(), b.v};
}

bool ExtPair::in_base(const Elem& b) const {
  if (b.field != ext.get()) throw FieldMismatch("in_base expects an extension element");
  return b.v < base->order();
}

Elem ExtPair::frobenius(const Elem& b) const {
  if (b.field != ext.get()) throw FieldMismatch("frobenius expects an extension element");
  return {ext.get(), ext->pow(b.v, base->order())};
}

Elem ExtPair::trace(const Elem& b) const {
  Elem t = b + frobenius(b);
  return project(t);
}

std::pair<Elem, Elem> ExtPair::decompose(const Elem& b, const Elem& rho) const {
  if (b.field != ext.get() || rho.field != ext.get()) {
    throw FieldMismatch("decompose expects extension elements");
  }
  const std::uint64_t q = base->order();
  if (rho.v < q) throw InvalidParameter("rho must lie outside the base field");
  const Elem b0{base.get(), static_cast<elem_t>(b.v % q)};
  const Elem b1{base.get(), static_cast<elem_t>(b.v / q)};
  const Elem r0{base.get(), static_cast<elem_t>(rho.v % q)};
  const Elem r1{base.get(), static_cast<elem_t>(rho.v / q)};
  const Elem y = b1 / r1;
  const Elem x = b0 - y * r0;
  return {x, y};
}

}  // namespace trisect::gf
