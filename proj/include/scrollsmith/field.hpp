#pragma once

// Finite fields used by the polynomial layer: prime fields F_p and
// extensions F_p[u]/(g(u)) for a monic irreducible g.

#include <cstdint>
#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace scrollsmith {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

class PrimeField {
 public:
  using Elem = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p < 3 || !is_prime(p)) {
      throw std::invalid_argument("PrimeField: modulus must be an odd prime, got " +
                                  std::to_string(p));
    }
  }

  std::uint32_t characteristic() const { return p_; }
  int degree() const { return 1; }
  std::uint64_t order() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }

  Elem from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
  }
  Elem from_base(std::uint32_t v) const { return v % p_; }

  Elem add(Elem a, Elem b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Elem pow(Elem a, std::uint64_t e) const {
    Elem r = 1;
    while (e > 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
    return pow(a, p_ - 2);
  }

  bool is_zero(Elem a) const { return a == 0; }
  bool equal(Elem a, Elem b) const { return a == b; }

  template <class Rng>
  Elem random(Rng& rng) const {
    std::uniform_int_distribution<std::uint32_t> dist(0, p_ - 1);
    return dist(rng);
  }

  // Euler's criterion; zero counts as a square.
  bool is_square(Elem a) const { return a == 0 || pow(a, (p_ - 1) / 2) == 1; }

  std::string format(Elem a) const { return std::to_string(a); }

  // Base-field coefficients of an element (length 1 here).
  std::vector<std::uint32_t> coords(Elem a) const { return {a}; }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

namespace detail {

// Dense polynomials over F_p as raw coefficient vectors (low to high), used
// only to implement extension-field arithmetic.
using RawPoly = std::vector<std::uint32_t>;

inline void raw_trim(RawPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline RawPoly raw_mod(RawPoly a, const RawPoly& m, const PrimeField& f) {
  raw_trim(a);
  const std::size_t dm = m.size() - 1;
  const auto lead_inv = f.inv(m.back());
  while (a.size() > dm) {
    const std::size_t shift = a.size() - 1 - dm;
    const auto c = f.mul(a.back(), lead_inv);
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = f.sub(a[shift + i], f.mul(c, m[i]));
    }
    raw_trim(a);
  }
  return a;
}

inline RawPoly raw_mul(const RawPoly& a, const RawPoly& b, const PrimeField& f) {
  if (a.empty() || b.empty()) return {};
  RawPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
  }
  raw_trim(r);
  return r;
}

}  // namespace detail

// F_p[u]/(g(u)), g monic irreducible of degree k >= 1. Elements are
// coefficient vectors of length k. The modulus is shared between copies.
class ExtensionField {
 public:
  using Elem = std::vector<std::uint32_t>;

  ExtensionField(PrimeField base, std::vector<std::uint32_t> modulus)
      : base_(base), mod_(std::make_shared<const std::vector<std::uint32_t>>(normalize(base, std::move(modulus)))) {}

  // F_p[u]/(u^2 - n) for the least quadratic non-residue n.
  static ExtensionField quadratic(PrimeField base) {
    std::uint32_t n = 2;
    while (base.is_square(n)) ++n;
    return ExtensionField(base, {base.neg(n), 0, 1});
  }

  const PrimeField& base() const { return base_; }
  const std::vector<std::uint32_t>& modulus() const { return *mod_; }
  std::uint32_t characteristic() const { return base_.characteristic(); }
  int degree() const { return static_cast<int>(mod_->size()) - 1; }

  // p^k; throws when it does not fit in 64 bits.
  std::uint64_t order() const {
    std::uint64_t q = 1;
    const std::uint64_t p = base_.characteristic();
    for (int i = 0; i < degree(); ++i) {
      if (q > UINT64_MAX / p) throw std::overflow_error("ExtensionField: order exceeds 64 bits");
      q *= p;
    }
    return q;
  }

  Elem zero() const { return Elem(degree(), 0); }
  Elem one() const {
    Elem e = zero();
    e[0] = 1;
    return e;
  }
  Elem from_int(long long v) const {
    Elem e = zero();
    e[0] = base_.from_int(v);
    return e;
  }
  Elem from_base(std::uint32_t v) const {
    Elem e = zero();
    e[0] = base_.from_base(v);
    return e;
  }
  // Class of u.
  Elem generator() const {
    Elem e = zero();
    if (degree() == 1) {
      e[0] = base_.neg((*mod_)[0]);
    } else {
      e[1] = 1;
    }
    return e;
  }
  Elem from_coords(std::vector<std::uint32_t> c) const {
    detail::raw_trim(c);
    auto r = detail::raw_mod(std::move(c), *mod_, base_);
    r.resize(degree(), 0);
    return r;
  }

  Elem add(const Elem& a, const Elem& b) const {
    Elem r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = base_.add(a[i], b[i]);
    return r;
  }
  Elem sub(const Elem& a, const Elem& b) const {
    Elem r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = base_.sub(a[i], b[i]);
    return r;
  }
  Elem neg(const Elem& a) const {
    Elem r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = base_.neg(a[i]);
    return r;
  }
  Elem mul(const Elem& a, const Elem& b) const {
    auto r = detail::raw_mod(detail::raw_mul(a, b, base_), *mod_, base_);
    r.resize(degree(), 0);
    return r;
  }
  Elem pow(Elem a, std::uint64_t e) const {
    Elem r = one();
    while (e > 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  // Extended Euclid in F_p[u].
  Elem inv(const Elem& a) const {
    detail::RawPoly r0 = *mod_, r1 = a, s0, s1 = {1};
    detail::raw_trim(r1);
    if (r1.empty()) throw std::domain_error("ExtensionField: inverse of zero");
    while (!r1.empty()) {
      // r0 = q * r1 + rem
      detail::RawPoly q, rem = r0;
      const auto lead_inv = base_.inv(r1.back());
      if (rem.size() >= r1.size()) q.assign(rem.size() - r1.size() + 1, 0);
      while (rem.size() >= r1.size() && !rem.empty()) {
        const std::size_t shift = rem.size() - r1.size();
        const auto c = base_.mul(rem.back(), lead_inv);
        q[shift] = c;
        for (std::size_t i = 0; i < r1.size(); ++i) {
          rem[shift + i] = base_.sub(rem[shift + i], base_.mul(c, r1[i]));
        }
        detail::raw_trim(rem);
      }
      detail::raw_trim(q);
      auto qs = detail::raw_mul(q, s1, base_);
      detail::RawPoly s2(std::max(s0.size(), qs.size()), 0);
      for (std::size_t i = 0; i < s2.size(); ++i) {
        const auto x = i < s0.size() ? s0[i] : 0u;
        const auto y = i < qs.size() ? qs[i] : 0u;
        s2[i] = base_.sub(x, y);
      }
      detail::raw_trim(s2);
      r0 = std::move(r1);
      r1 = std::move(rem);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    // r0 is a nonzero constant since the modulus is irreducible.
    if (r0.size() != 1) throw std::domain_error("ExtensionField: modulus is not irreducible");
    const auto c = base_.inv(r0[0]);
    detail::RawPoly out;
    for (auto v : s0) out.push_back(base_.mul(v, c));
    return from_coords(out);
  }

  bool is_zero(const Elem& a) const {
    for (auto v : a) {
      if (v != 0) return false;
    }
    return true;
  }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }

  template <class Rng>
  Elem random(Rng& rng) const {
    Elem e(degree());
    for (auto& v : e) v = base_.random(rng);
    return e;
  }

  std::string format(const Elem& a) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      if (!first) os << "+";
      first = false;
      os << a[i];
      if (i == 1) os << "*u";
      if (i > 1) os << "*u^" << i;
    }
    if (first) os << "0";
    return os.str();
  }

  std::vector<std::uint32_t> coords(const Elem& a) const { return a; }

  bool operator==(const ExtensionField& o) const {
    return base_ == o.base_ && *mod_ == *o.mod_;
  }

 private:
  static std::vector<std::uint32_t> normalize(const PrimeField& f, std::vector<std::uint32_t> m) {
    for (auto& c : m) c = f.from_base(c);
    detail::raw_trim(m);
    if (m.size() < 2) throw std::invalid_argument("ExtensionField: modulus must have degree >= 1");
    const auto lead_inv = f.inv(m.back());
    for (auto& c : m) c = f.mul(c, lead_inv);
    return m;
  }

  PrimeField base_;
  std::shared_ptr<const std::vector<std::uint32_t>> mod_;
};

}  // namespace scrollsmith
