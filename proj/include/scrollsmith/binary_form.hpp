#pragma once

// Homogeneous binary forms f(t0, t1) = sum_k c_k t0^(n-k) t1^k.
//
// A form carries a nominal degree n. A negative nominal degree denotes the
// distinguished Zero form: an identically vanishing coefficient whose
// prescribed degree is negative. Forms with n >= 0 may still vanish
// identically; is_zero() reports either situation.

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "scrollsmith/field.hpp"
#include "scrollsmith/poly.hpp"

namespace scrollsmith {

template <class F>
class BinaryForm {
 public:
  using Elem = typename F::Elem;

  // Zero form.
  explicit BinaryForm(F field) : f_(std::move(field)), degree_(-1) {}
  BinaryForm(F field, std::vector<Elem> coeffs)
      : f_(std::move(field)), degree_(static_cast<int>(coeffs.size()) - 1), c_(std::move(coeffs)) {}

  static BinaryForm zero(const F& f) { return BinaryForm(f); }
  static BinaryForm constant(const F& f, Elem c) { return BinaryForm(f, {std::move(c)}); }
  // t0^(n-k) t1^k
  static BinaryForm monomial(const F& f, int n, int k) {
    std::vector<Elem> c(n + 1, f.zero());
    c.at(k) = f.one();
    return BinaryForm(f, std::move(c));
  }
  static BinaryForm t0(const F& f) { return monomial(f, 1, 0); }
  static BinaryForm t1(const F& f) { return monomial(f, 1, 1); }

  // Uniform over forms of degree n; Zero when n < 0.
  template <class Rng>
  static BinaryForm random(const F& f, int n, Rng& rng) {
    if (n < 0) return zero(f);
    std::vector<Elem> c;
    c.reserve(n + 1);
    for (int i = 0; i <= n; ++i) c.push_back(f.random(rng));
    return BinaryForm(f, std::move(c));
  }

  // Homogenization of s -> p(s) to nominal degree n >= deg p.
  static BinaryForm homogenize(const Poly<F>& p, int n) {
    if (p.degree() > n) throw std::invalid_argument("BinaryForm::homogenize: degree too small");
    std::vector<Elem> c(n + 1, p.field().zero());
    for (int k = 0; k <= p.degree(); ++k) c[k] = p.coeff(k);
    return BinaryForm(p.field(), std::move(c));
  }

  const F& field() const { return f_; }
  int degree() const { return degree_; }
  bool structurally_zero() const { return degree_ < 0; }
  bool is_zero() const {
    for (const auto& v : c_) {
      if (!f_.is_zero(v)) return false;
    }
    return true;
  }
  const std::vector<Elem>& coeffs() const { return c_; }
  Elem coeff(int k) const { return (k >= 0 && k <= degree_) ? c_[k] : f_.zero(); }

  // f(1, s)
  Poly<F> dehomogenize() const { return Poly<F>(f_, c_); }

  // Multiplicity of the point (0:1), i.e. the largest a with t0^a | f.
  int multiplicity_at_infinity() const {
    if (is_zero()) return degree_ < 0 ? 0 : degree_;
    return degree_ - dehomogenize().degree();
  }

  Elem eval(const Elem& t0v, const Elem& t1v) const {
    return eval_in(f_, t0v, t1v);
  }

  // Evaluation at a point over an extension E of the coefficient field.
  template <class E>
  typename E::Elem eval_in(const E& e, const typename E::Elem& t0v, const typename E::Elem& t1v) const {
    auto r = e.zero();
    if (degree_ < 0) return r;
    // r <- r * t0 + c_k * t1^k, k ascending.
    auto t1k = e.one();
    for (int k = 0; k <= degree_; ++k) {
      r = e.add(e.mul(r, t0v), e.mul(lift(e, c_[k]), t1k));
      t1k = e.mul(t1k, t1v);
    }
    return r;
  }

  friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
    if (a.structurally_zero()) return b;
    if (b.structurally_zero()) return a;
    if (a.degree_ != b.degree_) {
      throw std::invalid_argument("BinaryForm: degree mismatch in addition (" +
                                  std::to_string(a.degree_) + " vs " + std::to_string(b.degree_) + ")");
    }
    std::vector<Elem> c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.f_.add(a.c_[i], b.c_[i]);
    return BinaryForm(a.f_, std::move(c));
  }
  BinaryForm operator-() const {
    if (structurally_zero()) return *this;
    std::vector<Elem> c;
    for (const auto& v : c_) c.push_back(f_.neg(v));
    return BinaryForm(f_, std::move(c));
  }
  friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) { return a + (-b); }
  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    if (a.structurally_zero() || b.structurally_zero()) return zero(a.f_);
    const auto& f = a.f_;
    std::vector<Elem> c(a.degree_ + b.degree_ + 1, f.zero());
    for (int i = 0; i <= a.degree_; ++i) {
      if (f.is_zero(a.c_[i])) continue;
      for (int j = 0; j <= b.degree_; ++j) c[i + j] = f.add(c[i + j], f.mul(a.c_[i], b.c_[j]));
    }
    return BinaryForm(f, std::move(c));
  }
  BinaryForm scaled(const Elem& k) const {
    if (structurally_zero()) return *this;
    std::vector<Elem> c;
    for (const auto& v : c_) c.push_back(f_.mul(v, k));
    return BinaryForm(f_, std::move(c));
  }

  // Same polynomial, same nominal degree.
  friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
    if (a.structurally_zero() || b.structurally_zero()) return a.is_zero() && b.is_zero();
    if (a.degree_ != b.degree_) return false;
    for (int i = 0; i <= a.degree_; ++i) {
      if (!a.f_.equal(a.c_[i], b.c_[i])) return false;
    }
    return true;
  }

  // Lift into an extension field.
  template <class E>
  BinaryForm<E> lifted(const E& e) const {
    if (structurally_zero()) return BinaryForm<E>(e);
    std::vector<typename E::Elem> c;
    for (const auto& v : c_) c.push_back(lift(e, v));
    return BinaryForm<E>(e, std::move(c));
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= degree_; ++k) {
      if (f_.is_zero(c_[k])) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << f_.format(c_[k]) << ")";
      if (degree_ - k > 0) os << "*t0" << (degree_ - k > 1 ? "^" + std::to_string(degree_ - k) : "");
      if (k > 0) os << "*t1" << (k > 1 ? "^" + std::to_string(k) : "");
    }
    return os.str();
  }

 private:
  template <class E>
  static typename E::Elem lift(const E& e, const Elem& v) {
    if constexpr (std::is_same_v<E, F>) {
      return v;
    } else {
      return e.from_base(v);
    }
  }
  F f_;
  int degree_;
  std::vector<Elem> c_;
};

// Monic generator of the ideal (f, g) among forms: affine gcd of the
// dehomogenizations times the shared power of t0 (the point (0:1)). The
// result has positive degree iff f and g share a projective zero over the
// algebraic closure. An identically zero argument is neutral.
template <class F>
BinaryForm<F> form_gcd(const BinaryForm<F>& f, const BinaryForm<F>& g) {
  if (f.is_zero() && g.is_zero()) throw std::invalid_argument("form_gcd: both forms are zero");
  if (f.is_zero()) return form_gcd(g, g);
  if (g.is_zero()) return form_gcd(f, f);
  const auto affine = gcd(f.dehomogenize(), g.dehomogenize());
  const int inf = std::min(f.multiplicity_at_infinity(), g.multiplicity_at_infinity());
  return BinaryForm<F>::homogenize(affine, affine.degree() + inf);
}

// gcd of a list; identically zero members are skipped. Returns the Zero form
// when every member vanishes.
template <class F>
BinaryForm<F> form_gcd(const std::vector<BinaryForm<F>>& forms, const F& fld) {
  std::optional<BinaryForm<F>> acc;
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    acc = acc ? form_gcd(*acc, f) : form_gcd(f, f);
  }
  return acc ? *acc : BinaryForm<F>::zero(fld);
}

// Whether d divides f as forms.
template <class F>
bool form_divides(const BinaryForm<F>& d, const BinaryForm<F>& f) {
  if (f.is_zero()) return true;
  if (d.is_zero()) return false;
  if (d.multiplicity_at_infinity() > f.multiplicity_at_infinity()) return false;
  return d.dehomogenize().divides(f.dehomogenize());
}

// Exact quotient f / d; throws when d does not divide f.
template <class F>
BinaryForm<F> form_divide(const BinaryForm<F>& f, const BinaryForm<F>& d) {
  if (!form_divides(d, f)) throw std::invalid_argument("form_divide: not divisible");
  if (f.is_zero()) return f;
  const auto q = f.dehomogenize() / d.dehomogenize();
  return BinaryForm<F>::homogenize(q, f.degree() - d.degree());
}

template <class F>
typename F::Elem determinant(const F& fld, std::vector<std::vector<typename F::Elem>> m) {
  const std::size_t n = m.size();
  auto det = fld.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && fld.is_zero(m[piv][col])) ++piv;
    if (piv == n) return fld.zero();
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = fld.neg(det);
    }
    det = fld.mul(det, m[col][col]);
    const auto inv = fld.inv(m[col][col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (fld.is_zero(m[r][col])) continue;
      const auto k = fld.mul(m[r][col], inv);
      for (std::size_t c = col; c < n; ++c) m[r][c] = fld.sub(m[r][c], fld.mul(k, m[col][c]));
    }
  }
  return det;
}

// Sylvester resultant with respect to the nominal degrees; vanishes iff f and
// g share a projective zero over the closure.
template <class F>
typename F::Elem resultant(const BinaryForm<F>& f, const BinaryForm<F>& g) {
  const int m = f.degree(), n = g.degree();
  if (m < 1 || n < 1) throw std::invalid_argument("resultant: both forms need degree >= 1");
  const auto& fld = f.field();
  const int size = m + n;
  std::vector<std::vector<typename F::Elem>> mat(size, std::vector<typename F::Elem>(size, fld.zero()));
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k <= m; ++k) mat[r][r + k] = f.coeff(k);
  }
  for (int r = 0; r < m; ++r) {
    for (int k = 0; k <= n; ++k) mat[n + r][r + k] = g.coeff(k);
  }
  return determinant(fld, std::move(mat));
}

}  // namespace scrollsmith
