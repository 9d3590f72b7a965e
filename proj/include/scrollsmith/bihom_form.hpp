#pragma once

// Forms in two homogeneous pairs: (t0:t1) on the base line and a fiber pair
// (x:y). A BihomForm of x-degree e stores e+1 binary forms in t, the
// coefficient of x^(e-j) y^j at index j. Coefficient t-degrees may grow with j
// (weighted forms on a Hirzebruch surface); with a constant step this is the
// plain (a+1) x (e+1) coefficient grid.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "scrollsmith/binary_form.hpp"
#include "scrollsmith/poly.hpp"

namespace scrollsmith {

template <class F>
class BihomForm {
 public:
  using Elem = typename F::Elem;

  BihomForm(F field, std::vector<BinaryForm<F>> coeffs) : f_(std::move(field)), c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("BihomForm: needs at least one coefficient");
  }

  // a*x + b*y
  static BihomForm linear(const BinaryForm<F>& a, const BinaryForm<F>& b) {
    return BihomForm(a.field(), {a, b});
  }

  // Dense (a+1) x (e+1) grid: grid[k][j] is the coefficient of
  // t0^(a-k) t1^k x^(e-j) y^j.
  static BihomForm from_grid(const F& f, const std::vector<std::vector<Elem>>& grid) {
    if (grid.empty() || grid[0].empty()) throw std::invalid_argument("BihomForm: empty grid");
    const std::size_t a = grid.size() - 1, e = grid[0].size() - 1;
    std::vector<BinaryForm<F>> c;
    for (std::size_t j = 0; j <= e; ++j) {
      std::vector<Elem> col;
      for (std::size_t k = 0; k <= a; ++k) col.push_back(grid.at(k).at(j));
      c.emplace_back(f, std::move(col));
    }
    return BihomForm(f, std::move(c));
  }

  const F& field() const { return f_; }
  int x_degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<BinaryForm<F>>& coeffs() const { return c_; }
  const BinaryForm<F>& coeff(int j) const { return c_.at(j); }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const auto& b) { return b.is_zero(); });
  }
  // Largest nominal t-degree among the coefficients (-1 if all Zero).
  int t_degree_bound() const {
    int d = -1;
    for (const auto& b : c_) d = std::max(d, b.degree());
    return d;
  }

  // The binary form in (x:y) obtained by fixing t.
  template <class E>
  BinaryForm<E> specialize(const E& e, const typename E::Elem& t0v, const typename E::Elem& t1v) const {
    std::vector<typename E::Elem> c;
    c.reserve(c_.size());
    for (const auto& b : c_) c.push_back(b.eval_in(e, t0v, t1v));
    return BinaryForm<E>(e, std::move(c));
  }

  template <class E>
  typename E::Elem eval_in(const E& e, const typename E::Elem& t0v, const typename E::Elem& t1v,
                           const typename E::Elem& xv, const typename E::Elem& yv) const {
    return specialize(e, t0v, t1v).eval(xv, yv);
  }

  friend BihomForm operator+(const BihomForm& a, const BihomForm& b) {
    if (a.x_degree() != b.x_degree()) throw std::invalid_argument("BihomForm: x-degree mismatch");
    std::vector<BinaryForm<F>> c;
    for (std::size_t j = 0; j < a.c_.size(); ++j) c.push_back(a.c_[j] + b.c_[j]);
    return BihomForm(a.f_, std::move(c));
  }
  BihomForm operator-() const {
    std::vector<BinaryForm<F>> c;
    for (const auto& b : c_) c.push_back(-b);
    return BihomForm(f_, std::move(c));
  }
  friend BihomForm operator-(const BihomForm& a, const BihomForm& b) { return a + (-b); }
  friend BihomForm operator*(const BihomForm& a, const BihomForm& b) {
    const int e = a.x_degree() + b.x_degree();
    std::vector<BinaryForm<F>> c(e + 1, BinaryForm<F>::zero(a.f_));
    for (int i = 0; i <= a.x_degree(); ++i) {
      for (int j = 0; j <= b.x_degree(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    }
    return BihomForm(a.f_, std::move(c));
  }

 private:
  F f_;
  std::vector<BinaryForm<F>> c_;
};

// Polynomial in the affine base coordinate s = t1/t0 whose roots contain the
// s-coordinate of every common zero of the forms with t0 != 0: the gcd of all
// pairwise x-resultants of forms of positive x-degree, together with the
// dehomogenized members of x-degree zero. Resultants are reconstructed by
// evaluation at s = 0..N and interpolation. Returns nullopt when every
// contribution vanishes identically (no finite eliminant available).
template <class F>
std::optional<Poly<F>> t_eliminant(const std::vector<BihomForm<F>>& forms) {
  if (forms.empty()) throw std::invalid_argument("t_eliminant: empty list");
  const F& f = forms.front().field();
  std::optional<Poly<F>> acc;
  auto absorb = [&](const Poly<F>& p) {
    if (p.is_zero()) return;
    acc = acc ? gcd(*acc, p) : p.monic();
  };
  std::vector<const BihomForm<F>*> fibered;
  for (const auto& g : forms) {
    if (g.is_zero()) continue;
    if (g.x_degree() == 0) {
      absorb(g.coeff(0).dehomogenize());
    } else {
      fibered.push_back(&g);
    }
  }
  for (std::size_t i = 0; i < fibered.size(); ++i) {
    for (std::size_t j = i + 1; j < fibered.size(); ++j) {
      if (acc && acc->degree() == 0) return acc;
      const auto& a = *fibered[i];
      const auto& b = *fibered[j];
      const int bound = b.x_degree() * std::max(a.t_degree_bound(), 0) +
                        a.x_degree() * std::max(b.t_degree_bound(), 0);
      if (static_cast<std::uint64_t>(bound) + 1 > f.order()) {
        throw std::domain_error("t_eliminant: field too small to interpolate the resultant");
      }
      std::vector<typename F::Elem> xs, ys;
      for (int k = 0; k <= bound; ++k) {
        const auto s = f.from_int(k);
        xs.push_back(s);
        ys.push_back(resultant(a.specialize(f, f.one(), s), b.specialize(f, f.one(), s)));
      }
      absorb(interpolate(f, xs, ys));
    }
  }
  return acc;
}

template <class E>
struct BihomPoint {
  typename E::Elem t0, t1, x, y;
};

template <class E>
struct BihomZeroSet {
  std::vector<BihomPoint<E>> points;
  // Some fiber, or a whole curve, lies in the zero set; only the isolated
  // zeros over the scanned base points are listed then.
  bool positive_dimensional = false;
};

namespace detail {

template <class E>
void append_fiber_zeros(const BinaryForm<E>& g, const typename E::Elem& t0v, const typename E::Elem& t1v,
                        BihomZeroSet<E>& out) {
  const E& e = g.field();
  if (g.multiplicity_at_infinity() > 0) out.points.push_back({t0v, t1v, e.zero(), e.one()});
  for (const auto& r : roots_in_field(g.dehomogenize())) out.points.push_back({t0v, t1v, e.one(), r});
}

template <class F, class E>
void scan_fiber(const std::vector<BihomForm<F>>& forms, const E& e, const typename E::Elem& t0v,
                const typename E::Elem& t1v, BihomZeroSet<E>& out) {
  std::vector<BinaryForm<E>> spec;
  for (const auto& g : forms) spec.push_back(g.specialize(e, t0v, t1v));
  const auto g = form_gcd(spec, e);
  if (g.is_zero()) {
    out.positive_dimensional = true;
    return;
  }
  if (g.degree() == 0) return;
  append_fiber_zeros(g, t0v, t1v, out);
}

}  // namespace detail

// All common projective zeros ((t0:t1),(x:y)) with coordinates in the field E,
// an extension of the coefficient field F (E = F or F_{p^2} in practice).
// Candidate base points come from t_eliminant; each candidate fiber is solved
// exactly by gcd and root finding in E.
template <class F, class E>
BihomZeroSet<E> common_zeros_bihom(const std::vector<BihomForm<F>>& forms, const E& e) {
  if (forms.empty()) throw std::invalid_argument("common_zeros_bihom: empty list");
  BihomZeroSet<E> out;
  std::vector<BihomForm<F>> live;
  for (const auto& g : forms) {
    if (!g.is_zero()) live.push_back(g);
  }
  if (live.empty()) {
    out.positive_dimensional = true;
    return out;
  }
  detail::scan_fiber(live, e, e.zero(), e.one(), out);
  const auto h = t_eliminant(live);
  if (!h) {
    // No eliminant: scan every base point over the prime field.
    out.positive_dimensional = true;
    const F& f = live.front().field();
    for (std::uint64_t k = 0; k < f.order(); ++k) {
      detail::scan_fiber(live, e, e.one(), e.from_base(static_cast<std::uint32_t>(k)), out);
    }
    return out;
  }
  if (h->degree() <= 0) return out;
  std::vector<typename E::Elem> lifted;
  for (const auto& c : h->coeffs()) {
    if constexpr (std::is_same_v<E, F>) {
      lifted.push_back(c);
    } else {
      lifted.push_back(e.from_base(c));
    }
  }
  for (const auto& s : roots_in_field(Poly<E>(e, lifted))) {
    detail::scan_fiber(live, e, e.one(), s, out);
  }
  return out;
}

}  // namespace scrollsmith
