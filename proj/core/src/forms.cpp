#include "trisect/forms.hpp"

#include <algorithm>
#include <cctype>

#include "trisect/errors.hpp"

namespace trisect::forms {

namespace {

constexpr std::uint32_t kMaxDim = 12;

// Sorts (i,j,k) ascending; returns the permutation sign, or 0 on a repeat.
int sort_triple(std::uint32_t& i, std::uint32_t& j, std::uint32_t& k) {
  int sign = 1;
  if (i > j) {
    std::swap(i, j);
    sign = -sign;
  }
  if (j > k) {
    std::swap(j, k);
    sign = -sign;
  }
  if (i > j) {
    std::swap(i, j);
    sign = -sign;
  }
  if (i == j || j == k) return 0;
  return sign;
}

Elem det3(const gf::Field* f, const Vector& x, const Vector& y, const Vector& z,
          std::size_t a, std::size_t b, std::size_t c) {
  auto m = [&](const Vector& v, std::size_t col) { return Elem{f, v.c[col]}; };
  Elem d = m(x, a) * (m(y, b) * m(z, c) - m(y, c) * m(z, b)) -
           m(x, b) * (m(y, a) * m(z, c) - m(y, c) * m(z, a)) +
           m(x, c) * (m(y, a) * m(z, b) - m(y, b) * m(z, a));
  return d;
}

}  // namespace

TriForm::TriForm(std::uint32_t n, FieldPtr field)
    : n_(n), field_(std::move(field)) {
  if (n_ < 3 || n_ > kMaxDim) {
    throw InvalidParameter("dimension must satisfy 3 <= n <= 12");
  }
  if (!field_) throw InvalidParameter("null field");
}

void TriForm::set(std::uint32_t i, std::uint32_t j, std::uint32_t k,
                  const Elem& c) {
  if (c.field != field_.get()) throw FieldMismatch("coefficient field differs");
  if (i < 1 || j < 1 || k < 1 || i > n_ || j > n_ || k > n_) {
    throw InvalidParameter("triple index out of range");
  }
  const int sign = sort_triple(i, j, k);
  if (sign == 0) {
    if (c.v != 0) throw InvalidParameter("repeated index with nonzero coefficient");
    return;
  }
  const elem_t v = sign > 0 ? c.v : field_->neg(c.v);
  const Triple t{static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j),
                 static_cast<std::uint16_t>(k)};
  if (v == 0) {
    coeffs_.erase(t);
  } else {
    coeffs_[t] = v;
  }
}

void TriForm::add_term(std::uint32_t i, std::uint32_t j, std::uint32_t k,
                       const Elem& c) {
  Elem cur = coeff(i, j, k);
  set(i, j, k, cur + c);
}

Elem TriForm::coeff(std::uint32_t i, std::uint32_t j, std::uint32_t k) const {
  const int sign = sort_triple(i, j, k);
  if (sign == 0) return {field_.get(), 0};
  const Triple t{static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j),
                 static_cast<std::uint16_t>(k)};
  auto it = coeffs_.find(t);
  if (it == coeffs_.end()) return {field_.get(), 0};
  const elem_t v = it->second;
  return {field_.get(), sign > 0 ? v : field_->neg(v)};
}

Elem TriForm::evaluate(const Vector& x, const Vector& y, const Vector& z) const {
  const gf::Field* f = field_.get();
  if (x.field != f || y.field != f || z.field != f || x.size() != n_ ||
      y.size() != n_ || z.size() != n_) {
    throw Mismatch("evaluate operand dimension or field differs");
  }
  Elem s = f->zero();
  for (const auto& [t, v] : coeffs_) {
    s = s + Elem{f, v} * det3(f, x, y, z, t[0] - 1, t[1] - 1, t[2] - 1);
  }
  return s;
}

SkewMatrix TriForm::contract(const Vector& a) const {
  const gf::Field* f = field_.get();
  if (a.field != f || a.size() != n_) throw Mismatch("contract operand differs");
  if (a.is_zero()) throw ZeroVector("contract of the zero vector");
  Mat B(f, n_, n_);
  for (const auto& [t, v] : coeffs_) {
    const std::size_t i = t[0] - 1, j = t[1] - 1, k = t[2] - 1;
    // B(e_u, e_v) contributions of c * f_ijk for u < v.
    B.at(j, k) = f->add(B.at(j, k), f->mul(v, a.c[i]));
    B.at(i, k) = f->sub(B.at(i, k), f->mul(v, a.c[j]));
    B.at(i, j) = f->add(B.at(i, j), f->mul(v, a.c[k]));
  }
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t w = u + 1; w < n_; ++w) {
      B.at(w, u) = f->neg(B.at(u, w));
    }
  }
  return B;
}

Mat TriForm::radical() const {
  const gf::Field* f = field_.get();
  const std::size_t pairs = static_cast<std::size_t>(n_) * (n_ - 1) / 2;
  auto pair_row = [this](std::size_t u, std::size_t w) {
    // Row index of pair u < w in lexicographic order.
    return u * (2 * n_ - u - 1) / 2 + (w - u - 1);
  };
  Mat M(f, pairs, n_);
  for (const auto& [t, v] : coeffs_) {
    const std::size_t i = t[0] - 1, j = t[1] - 1, k = t[2] - 1;
    M.at(pair_row(j, k), i) = f->add(M.at(pair_row(j, k), i), v);
    M.at(pair_row(i, k), j) = f->sub(M.at(pair_row(i, k), j), v);
    M.at(pair_row(i, j), k) = f->add(M.at(pair_row(i, j), k), v);
  }
  return M.kernel_basis();
}

TriForm TriForm::transform(const Mat& A) const {
  const gf::Field* f = field_.get();
  if (A.field() != f || A.rows() != n_ || A.cols() != n_) {
    throw Mismatch("transform matrix shape or field differs");
  }
  if (A.rank() != n_) throw SingularMatrix("transform matrix is singular");
  std::vector<Vector> cols;
  cols.reserve(n_);
  for (std::size_t j = 0; j < n_; ++j) {
    Vector v(f, n_);
    for (std::size_t i = 0; i < n_; ++i) v.c[i] = A.at(i, j);
    cols.push_back(std::move(v));
  }
  TriForm out(n_, field_);
  for (std::uint32_t i = 1; i <= n_; ++i) {
    for (std::uint32_t j = i + 1; j <= n_; ++j) {
      for (std::uint32_t k = j + 1; k <= n_; ++k) {
        out.set(i, j, k, evaluate(cols[i - 1], cols[j - 1], cols[k - 1]));
      }
    }
  }
  return out;
}

TriForm TriForm::scaled(const Elem& s) const {
  if (s.field != field_.get()) throw FieldMismatch("scalar field differs");
  TriForm out(n_, field_);
  for (const auto& [t, v] : coeffs_) {
    out.set(t[0], t[1], t[2], Elem{field_.get(), field_->mul(v, s.v)});
  }
  return out;
}

// ------------------------------- catalog ----------------------------------

TriForm make_spread_odd(const FieldPtr& field, const Elem& mu, bool validate) {
  if (mu.field != field.get()) throw FieldMismatch("mu field differs");
  if (validate) {
    if (field->characteristic() == 2) {
      throw InvalidParameter("spread_odd requires odd q");
    }
    if (field->is_square(mu.v)) {
      throw InvalidParameter("spread_odd requires mu to be a non-square");
    }
  }
  TriForm t(6, field);
  t.set(1, 2, 3, field->one());
  t.set(1, 5, 6, mu);
  t.set(2, 4, 6, -mu);
  t.set(3, 4, 5, mu);
  return t;
}

TriForm make_spread_even(const FieldPtr& field, std::optional<Elem> mu,
                         bool validate) {
  if (validate) {
    if (field->characteristic() != 2) {
      throw InvalidParameter("spread_even requires even q");
    }
    const bool h_even = field->degree() % 2 == 0;
    if (h_even) {
      if (!mu) throw InvalidParameter("spread_even_heven requires mu");
      if (field->abs_trace(mu->v) != 1) {
        throw InvalidParameter("spread_even_heven requires tr(mu) = 1");
      }
    } else if (mu) {
      throw InvalidParameter("spread_even_hodd takes no mu");
    }
  }
  TriForm t(6, field);
  const Elem one = field->one();
  t.set(2, 3, 4, one);
  t.set(1, 3, 5, one);
  t.set(1, 2, 6, one);
  t.set(1, 5, 6, one);
  t.set(2, 4, 6, one);
  t.set(3, 4, 5, one);
  if (mu) t.set(4, 5, 6, *mu);
  return t;
}

TriForm catalog(const std::string& name, const FieldPtr& field,
                std::optional<Elem> mu) {
  const Elem one = field->one();
  if (name == "fano7") {
    TriForm t(7, field);
    t.set(1, 2, 4, one);
    t.set(2, 3, 5, one);
    t.set(3, 4, 6, one);
    t.set(4, 5, 7, one);
    t.set(5, 6, 1, one);
    t.set(6, 7, 2, one);
    t.set(7, 1, 3, one);
    return t;
  }
  if (name == "spread_odd") {
    if (!mu) throw InvalidParameter("spread_odd requires mu");
    return make_spread_odd(field, *mu, /*validate=*/true);
  }
  if (name == "spread_even_hodd") {
    if (field->characteristic() != 2 || field->degree() % 2 == 0) {
      throw InvalidParameter("spread_even_hodd requires q = 2^h with h odd");
    }
    return make_spread_even(field, std::nullopt, /*validate=*/true);
  }
  if (name == "spread_even_heven") {
    if (field->characteristic() != 2 || field->degree() % 2 != 0) {
      throw InvalidParameter("spread_even_heven requires q = 2^h with h even");
    }
    if (!mu) throw InvalidParameter("spread_even_heven requires mu");
    return make_spread_even(field, mu, /*validate=*/true);
  }
  if (name == "t_prime") {
    TriForm t(6, field);
    t.set(1, 5, 6, one);
    t.set(2, 4, 6, one);
    t.set(3, 4, 5, one);
    t.set(1, 2, 3, one);
    t.set(4, 5, 6, one);
    return t;
  }
  if (name == "t_double_prime") {
    TriForm t(6, field);
    t.set(2, 3, 4, one);
    t.set(1, 3, 5, one);
    t.set(1, 2, 6, one);
    t.set(1, 2, 3, one);
    t.set(4, 5, 6, one);
    return t;
  }
  if (name == "ts6") {
    TriForm t(6, field);
    t.set(1, 5, 6, one);
    t.set(2, 4, 6, one);
    t.set(3, 4, 5, one);
    return t;
  }
  if (name == "ts10") {
    TriForm t(10, field);
    t.set(1, 7, 10, one);
    t.set(2, 8, 10, one);
    t.set(3, 9, 10, one);
    t.set(4, 8, 9, one);
    t.set(5, 7, 9, one);
    t.set(6, 7, 8, one);
    return t;
  }
  throw InvalidParameter("unknown catalog name: " + name);
}

// ------------------------------ text grammar ------------------------------

TriForm parse_form(const std::string& text, const FieldPtr& field,
                   std::uint32_t n, std::optional<Elem> mu) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  struct Term {
    std::uint32_t i, j, k;
    Elem coef;
  };
  std::vector<Term> terms;
  std::size_t pos = 0;
  std::uint32_t max_idx = 3;
  auto index_char = [](char c) -> std::uint32_t {
    if (c >= '1' && c <= '9') return static_cast<std::uint32_t>(c - '0');
    if (c == 'x') return 10;
    if (c == 'y') return 11;
    if (c == 'z') return 12;
    return 0;
  };
  while (pos < s.size()) {
    Elem coef = field->one();
    if (s[pos] == '+') {
      ++pos;
    } else if (s[pos] == '-') {
      coef = -coef;
      ++pos;
    }
    if (pos >= s.size()) throw InvalidParameter("dangling sign in form text");
    if (s.compare(pos, 3, "mu*") == 0) {
      if (!mu) throw InvalidParameter("form text uses mu but none was bound");
      coef = coef * *mu;
      pos += 3;
    } else if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
      std::size_t end = pos;
      while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) {
        ++end;
      }
      if (end < s.size() && s[end] == '*') {
        const long v = std::stol(s.substr(pos, end - pos));
        coef = coef * field->from_int(v);
        pos = end + 1;
      }
      // Otherwise the digits belong to an index run below (after 'f').
    }
    if (pos >= s.size() || s[pos] != 'f') {
      throw InvalidParameter("expected 'f' term in form text at position " +
                             std::to_string(pos));
    }
    ++pos;
    std::uint32_t idx[3];
    for (int d = 0; d < 3; ++d) {
      if (pos >= s.size()) throw InvalidParameter("truncated index triple");
      const std::uint32_t v = index_char(s[pos]);
      if (v == 0) throw InvalidParameter("bad index character in form text");
      idx[d] = v;
      ++pos;
    }
    max_idx = std::max({max_idx, idx[0], idx[1], idx[2]});
    terms.push_back({idx[0], idx[1], idx[2], coef});
  }
  if (terms.empty()) throw InvalidParameter("empty form text");
  if (n == 0) n = max_idx;
  TriForm t(n, field);
  for (const auto& term : terms) {
    t.add_term(term.i, term.j, term.k, term.coef);
  }
  return t;
}

}  // namespace trisect::forms
