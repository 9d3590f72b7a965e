#pragma once

// Dense univariate polynomials over a finite field, with Euclid, modular
// powering and Cantor-Zassenhaus factorization into distinct irreducibles.

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "scrollsmith/field.hpp"

namespace scrollsmith {

template <class F>
class Poly {
 public:
  using Elem = typename F::Elem;

  explicit Poly(F field) : f_(std::move(field)) {}
  Poly(F field, std::vector<Elem> coeffs) : f_(std::move(field)), c_(std::move(coeffs)) { trim(); }

  static Poly constant(const F& f, Elem c) { return Poly(f, {std::move(c)}); }
  // The variable s.
  static Poly x(const F& f) { return Poly(f, {f.zero(), f.one()}); }

  const F& field() const { return f_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Elem>& coeffs() const { return c_; }
  Elem coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : f_.zero();
  }
  Elem leading() const { return c_.empty() ? f_.zero() : c_.back(); }

  Elem eval(const Elem& s) const {
    Elem r = f_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = f_.add(f_.mul(r, s), *it);
    return r;
  }

  Poly monic() const {
    if (is_zero()) return *this;
    const Elem li = f_.inv(leading());
    return scaled(li);
  }
  Poly scaled(const Elem& k) const {
    std::vector<Elem> r;
    r.reserve(c_.size());
    for (const auto& v : c_) r.push_back(f_.mul(v, k));
    return Poly(f_, std::move(r));
  }
  Poly derivative() const {
    std::vector<Elem> r;
    for (std::size_t i = 1; i < c_.size(); ++i) {
      r.push_back(f_.mul(f_.from_int(static_cast<long long>(i)), c_[i]));
    }
    return Poly(f_, std::move(r));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    const auto& f = a.f_;
    std::vector<Elem> r(std::max(a.c_.size(), b.c_.size()), f.zero());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return Poly(f, std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    const auto& f = a.f_;
    std::vector<Elem> r(std::max(a.c_.size(), b.c_.size()), f.zero());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return Poly(f, std::move(r));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    const auto& f = a.f_;
    if (a.is_zero() || b.is_zero()) return Poly(f);
    std::vector<Elem> r(a.c_.size() + b.c_.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (f.is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        r[i + j] = f.add(r[i + j], f.mul(a.c_[i], b.c_[j]));
      }
    }
    return Poly(f, std::move(r));
  }
  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (!a.f_.equal(a.c_[i], b.c_[i])) return false;
    }
    return true;
  }

  // Euclidean division; throws on division by zero.
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
    std::vector<Elem> rem = c_;
    const int dd = d.degree();
    if (degree() < dd) return {Poly(f_), *this};
    std::vector<Elem> q(degree() - dd + 1, f_.zero());
    const Elem li = f_.inv(d.leading());
    for (int i = degree(); i >= dd; --i) {
      const Elem c = f_.mul(rem[i], li);
      q[i - dd] = c;
      if (f_.is_zero(c)) continue;
      for (int j = 0; j <= dd; ++j) rem[i - dd + j] = f_.sub(rem[i - dd + j], f_.mul(c, d.c_[j]));
    }
    rem.resize(dd);
    return {Poly(f_, std::move(q)), Poly(f_, std::move(rem))};
  }
  Poly operator%(const Poly& d) const { return divmod(d).second; }
  Poly operator/(const Poly& d) const { return divmod(d).first; }

  bool divides(const Poly& other) const {
    if (is_zero()) return other.is_zero();
    return (other % *this).is_zero();
  }

 private:
  void trim() {
    while (!c_.empty() && f_.is_zero(c_.back())) c_.pop_back();
  }

  F f_;
  std::vector<Elem> c_;
};

// Monic gcd; gcd(0, 0) = 0.
template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class F>
Poly<F> powmod(Poly<F> base, std::uint64_t e, const Poly<F>& m) {
  Poly<F> r = Poly<F>::constant(m.field(), m.field().one()) % m;
  base = base % m;
  while (e > 0) {
    if (e & 1) r = (r * base) % m;
    base = (base * base) % m;
    e >>= 1;
  }
  return r;
}

// Product of the distinct monic irreducible factors. Degrees stay below the
// characteristic in this library, so the derivative of a nonconstant
// polynomial never vanishes.
template <class F>
Poly<F> squarefree_part(const Poly<F>& a) {
  if (a.degree() <= 0) return a.monic();
  const auto d = a.derivative();
  if (d.is_zero()) throw std::domain_error("squarefree_part: polynomial is a p-th power");
  return (a / gcd(a, d)).monic();
}

namespace detail {

// a^((q^deg - 1) / 2) mod m, computed as the norm-like product
// a * a^q * ... * a^(q^(deg-1)) raised to (q - 1) / 2 so the exponent never
// overflows.
template <class F>
Poly<F> half_power(const Poly<F>& a, int deg, std::uint64_t q, const Poly<F>& m) {
  Poly<F> t = a % m;
  Poly<F> acc = t;
  for (int i = 1; i < deg; ++i) {
    t = powmod(t, q, m);
    acc = (acc * t) % m;
  }
  return powmod(acc, (q - 1) / 2, m);
}

template <class F, class Rng>
void equal_degree_split(const Poly<F>& a, int deg, std::uint64_t q, Rng& rng,
                        std::vector<Poly<F>>& out) {
  if (a.degree() == deg) {
    out.push_back(a.monic());
    return;
  }
  const auto& f = a.field();
  for (;;) {
    std::vector<typename F::Elem> rc;
    for (int i = 0; i < a.degree(); ++i) rc.push_back(f.random(rng));
    Poly<F> r(f, rc);
    if (r.degree() <= 0) continue;
    auto b = half_power(r, deg, q, a) - Poly<F>::constant(f, f.one());
    auto g = gcd(a, b);
    if (g.degree() > 0 && g.degree() < a.degree()) {
      equal_degree_split(g, deg, q, rng, out);
      equal_degree_split(a / g, deg, q, rng, out);
      return;
    }
  }
}

}  // namespace detail

// Distinct monic irreducible factors of a nonzero polynomial, sorted by
// degree (ties in discovery order). The field order must fit in 64 bits.
template <class F>
std::vector<Poly<F>> irreducible_factors(const Poly<F>& a, std::uint64_t rng_seed = 0x5eed) {
  if (a.is_zero()) throw std::domain_error("irreducible_factors: zero polynomial");
  std::vector<Poly<F>> out;
  Poly<F> rest = squarefree_part(a);
  if (rest.degree() <= 0) return out;
  const auto& f = a.field();
  const std::uint64_t q = f.order();
  std::mt19937_64 rng(rng_seed);
  const auto x = Poly<F>::x(f);
  Poly<F> xq = x % rest;
  for (int deg = 1; rest.degree() >= 2 * deg; ++deg) {
    xq = powmod(xq, q, rest);
    auto g = gcd(rest, xq - x);
    if (g.degree() > 0) {
      detail::equal_degree_split(g, deg, q, rng, out);
      rest = rest / g;
      xq = xq % rest;
    }
  }
  if (rest.degree() > 0) out.push_back(rest.monic());
  std::stable_sort(out.begin(), out.end(),
                   [](const Poly<F>& l, const Poly<F>& r) { return l.degree() < r.degree(); });
  return out;
}

// All roots lying in the coefficient field itself.
template <class F>
std::vector<typename F::Elem> roots_in_field(const Poly<F>& a, std::uint64_t rng_seed = 0x5eed) {
  std::vector<typename F::Elem> roots;
  if (a.degree() <= 0) return roots;
  const auto& f = a.field();
  const auto x = Poly<F>::x(f);
  const auto sf = squarefree_part(a);
  auto linear = gcd(sf, powmod(x, f.order(), sf) - x);
  if (linear.degree() <= 0) return roots;
  std::vector<Poly<F>> factors;
  std::mt19937_64 rng(rng_seed);
  detail::equal_degree_split(linear, 1, f.order(), rng, factors);
  for (const auto& lf : factors) roots.push_back(f.neg(lf.coeff(0)));
  return roots;
}

// Newton interpolation through (xs[i], ys[i]) with distinct xs; O(n^2).
template <class F>
Poly<F> interpolate(const F& f, const std::vector<typename F::Elem>& xs,
                    std::vector<typename F::Elem> ys) {
  const std::size_t n = xs.size();
  if (ys.size() != n) throw std::invalid_argument("interpolate: size mismatch");
  // Divided differences in place.
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      ys[i] = f.mul(f.sub(ys[i], ys[i - 1]), f.inv(f.sub(xs[i], xs[i - level])));
    }
  }
  // Horner on the Newton basis.
  Poly<F> result(f);
  for (std::size_t i = n; i-- > 0;) {
    result = result * Poly<F>(f, {f.neg(xs[i]), f.one()}) + Poly<F>::constant(f, ys[i]);
  }
  return result;
}

}  // namespace scrollsmith
