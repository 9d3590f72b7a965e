#pragma once

// Two coefficient domains that let a fiberwise test be run once for a whole
// family of fibers instead of point by point.
//
// RationalFunctionField: F_p(s), the function field of the base line. Running
// a test there answers it at the generic point t = (1 : s). Every nonzero
// numerator that the test inspects is logged; at any s0 avoiding the roots of
// the logged polynomials the same test over F_p takes identical branches.
//
// SplittingRing: F_p[u]/(g) for a squarefree g. A zero test that meets a zero
// divisor throws ZeroDivisorFound carrying a proper factor of g, so the caller
// can split g and retry (dynamic evaluation). A test that completes without a
// split has the same outcome at every root of g.

#include <cstdint>
#include <exception>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "scrollsmith/field.hpp"
#include "scrollsmith/poly.hpp"

namespace scrollsmith {

class ZeroDivisorFound : public std::exception {
 public:
  explicit ZeroDivisorFound(std::vector<std::uint32_t> factor) : factor_(std::move(factor)) {}
  // Monic proper factor of the modulus.
  const std::vector<std::uint32_t>& factor() const { return factor_; }
  const char* what() const noexcept override { return "zero divisor found in splitting ring"; }

 private:
  std::vector<std::uint32_t> factor_;
};

class SplittingRing : public ExtensionField {
 public:
  using ExtensionField::ExtensionField;

  bool is_zero(const Elem& a) const {
    if (ExtensionField::is_zero(a)) return true;
    const auto g = gcd(Poly<PrimeField>(base(), a), Poly<PrimeField>(base(), modulus()));
    if (g.degree() == 0) return false;
    throw ZeroDivisorFound(g.coeffs());
  }
  bool equal(const Elem& a, const Elem& b) const { return is_zero(sub(a, b)); }
  Elem inv(const Elem& a) const {
    if (is_zero(a)) throw std::domain_error("SplittingRing: inverse of zero");
    return ExtensionField::inv(a);
  }
};

class RationalFunctionField {
 public:
  // num / den in lowest terms, den monic.
  struct Elem {
    std::vector<std::uint32_t> num;
    std::vector<std::uint32_t> den{1};
  };

  explicit RationalFunctionField(PrimeField base)
      : base_(base), log_(std::make_shared<std::vector<std::vector<std::uint32_t>>>()) {}

  const PrimeField& base() const { return base_; }

  Elem zero() const { return {{}, {1}}; }
  Elem one() const { return {{1}, {1}}; }
  Elem from_int(long long v) const { return from_poly({base_.from_int(v)}); }
  Elem from_base(std::uint32_t v) const { return from_poly({base_.from_base(v)}); }
  Elem variable() const { return from_poly({0, 1}); }
  Elem from_poly(std::vector<std::uint32_t> c) const {
    Poly<PrimeField> p(base_, std::move(c));
    return {p.coeffs(), {1}};
  }

  Elem add(const Elem& a, const Elem& b) const {
    if (a.den == b.den) return make(P(a.num) + P(b.num), P(a.den));
    return make(P(a.num) * P(b.den) + P(b.num) * P(a.den), P(a.den) * P(b.den));
  }
  Elem neg(const Elem& a) const { return {P(a.num).scaled(base_.neg(1)).coeffs(), a.den}; }
  Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
  Elem mul(const Elem& a, const Elem& b) const {
    if (a.num.empty() || b.num.empty()) return zero();
    return make(P(a.num) * P(b.num), P(a.den) * P(b.den));
  }
  Elem inv(const Elem& a) const {
    if (a.num.empty()) throw std::domain_error("RationalFunctionField: inverse of zero");
    record(a.num);
    return make(P(a.den), P(a.num));
  }

  bool is_zero(const Elem& a) const {
    if (a.num.empty()) return true;
    record(a.num);
    return false;
  }
  bool equal(const Elem& a, const Elem& b) const { return is_zero(sub(a, b)); }

  // Nonconstant numerators seen by zero tests and inversions so far.
  const std::vector<std::vector<std::uint32_t>>& logged() const { return *log_; }

  std::string format(const Elem& a) const {
    auto poly = [](const std::vector<std::uint32_t>& c) {
      std::string s;
      for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!s.empty()) s += "+";
        s += std::to_string(c[i]);
        if (i > 0) s += i == 1 ? "*s" : "*s^" + std::to_string(i);
      }
      return s.empty() ? std::string("0") : s;
    };
    if (a.den.size() == 1) return poly(a.num);
    return "(" + poly(a.num) + ")/(" + poly(a.den) + ")";
  }

 private:
  Poly<PrimeField> P(const std::vector<std::uint32_t>& c) const { return Poly<PrimeField>(base_, c); }

  Elem make(const Poly<PrimeField>& n, const Poly<PrimeField>& d) const {
    if (n.is_zero()) return zero();
    if (d.degree() == 0) return {n.scaled(base_.inv(d.leading())).coeffs(), {1}};
    const auto g = gcd(n, d);
    auto nn = n / g;
    auto dd = d / g;
    const auto li = base_.inv(dd.leading());
    return {nn.scaled(li).coeffs(), dd.scaled(li).coeffs()};
  }

  void record(const std::vector<std::uint32_t>& num) const {
    if (num.size() > 1) log_->push_back(num);
  }

  PrimeField base_;
  std::shared_ptr<std::vector<std::vector<std::uint32_t>>> log_;
};

}  // namespace scrollsmith
