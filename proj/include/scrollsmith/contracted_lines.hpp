#pragma once

// Lines contracted by the projection from the section Y5 on the family
// (2,1,1,1; -2,-1). With x1 = 0, a line through Y5 in the fiber over t with
// direction v = (v2, v3, v4) lies in X exactly when
//
//   sum_{2<=i<=j<=4} alpha_ij v_i v_j = 0        (constant coefficients)
//   beta_25 v2 + beta_35 v3 + beta_45 v4 = 0      (constant coefficients)
//   sum_{2<=i<=j<=4} beta_ij(t) v_i v_j = 0       (linear in t)
//
// The first two cut a conic with a line in the v-plane: two directions. Each
// direction fixes t through the third equation.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "scrollsmith/field.hpp"
#include "scrollsmith/linalg.hpp"
#include "scrollsmith/oracle.hpp"
#include "scrollsmith/poly.hpp"
#include "scrollsmith/scroll.hpp"

namespace scrollsmith {

inline ScrollParams x2_params() { return ScrollParams({2, 1, 1, 1}, -2, -1); }

struct ContractedLine {
  // Coordinates in F_{p^2} = F_p[u]/(u^2 - n); the F_p-rational ones have a
  // zero u-part.
  std::vector<ExtensionField::Elem> v;  // (v2, v3, v4), first nonzero entry 1
  ExtensionField::Elem t0, t1;          // first nonzero entry 1
  bool rational = true;
};

struct ContractedLines {
  bool generic = true;
  std::string reason;  // why the instance is non-generic
  ExtensionField field;
  std::vector<ContractedLine> lines;

  std::size_t count() const { return lines.size(); }
};

namespace detail {

// Scales so that the first nonzero entry is 1.
inline void normalize_projective(const ExtensionField& e, std::vector<ExtensionField::Elem>& xs) {
  for (const auto& x : xs) {
    if (e.is_zero(x)) continue;
    const auto inv = e.inv(x);
    for (auto& y : xs) y = e.mul(y, inv);
    return;
  }
}

// Square root in F_{p^2} of an element of F_p.
inline ExtensionField::Elem sqrt_of_base(const ExtensionField& e, std::uint32_t a) {
  const auto& f = e.base();
  if (f.is_square(a)) {
    const auto r = roots_in_field(Poly<PrimeField>(f, {f.neg(a), 0, 1}));
    return e.from_base(r.empty() ? 0 : r.front());
  }
  // a = n * c^2 with n the non-residue defining the extension, sqrt(n) = u.
  const std::uint32_t n = f.neg(e.modulus()[0]);
  const auto c = roots_in_field(Poly<PrimeField>(f, {f.neg(f.mul(a, f.inv(n))), 0, 1}));
  auto out = e.zero();
  out[1] = c.front();
  return out;
}

}  // namespace detail

inline ContractedLines contracted_lines_x2(const PencilInstance& inst) {
  if (inst.params != x2_params()) {
    throw ParamError("contracted_lines_x2: instance must have parameters (2,1,1,1;-2,-1), got " +
                     inst.params.to_string());
  }
  const PrimeField& f = inst.field;
  ContractedLines out{true, "", ExtensionField::quadratic(f), {}};
  const auto& e = out.field;
  auto fail = [&](std::string why) {
    out.generic = false;
    out.reason = std::move(why);
    out.lines.clear();
    return out;
  };
  if (inst.a(1, 5).is_zero()) return fail("alpha_15 vanishes");

  // The line beta_25 v2 + beta_35 v3 + beta_45 v4 = 0 as a kernel.
  const Matrix<PrimeField> row{{inst.b(2, 5).coeff(0), inst.b(3, 5).coeff(0), inst.b(4, 5).coeff(0)}};
  const auto basis = nullspace(f, row, 3);
  if (basis.size() != 2) return fail("the linear equation is trivial");

  auto conic = [&](const std::vector<std::uint32_t>& x) {
    std::uint32_t acc = 0;
    for (int i = 0; i < 3; ++i) {
      for (int j = i; j < 3; ++j) acc = f.add(acc, f.mul(inst.a(i + 2, j + 2).coeff(0), f.mul(x[i], x[j])));
    }
    return acc;
  };
  // Restriction a L^2 + b L M + c M^2 for v = L n1 + M n2; b by polarization.
  std::vector<std::uint32_t> sum(3);
  for (int i = 0; i < 3; ++i) sum[i] = f.add(basis[0][i], basis[1][i]);
  const auto a = conic(basis[0]);
  const auto c = conic(basis[1]);
  const auto b = f.sub(f.sub(conic(sum), a), c);
  if (f.is_zero(a) && f.is_zero(b) && f.is_zero(c)) return fail("the conic contains the line");
  const auto disc = f.sub(f.mul(b, b), f.mul(f.from_int(4), f.mul(a, c)));
  if (f.is_zero(disc)) return fail("the line is tangent to the conic");

  // Roots (L : M) of the binary quadratic, in F_{p^2}.
  std::vector<std::pair<ExtensionField::Elem, ExtensionField::Elem>> roots;
  if (f.is_zero(a)) {
    roots.push_back({e.one(), e.zero()});
    roots.push_back({e.from_base(f.neg(c)), e.from_base(b)});
  } else {
    const auto sq = detail::sqrt_of_base(e, disc);
    const auto inv2a = e.from_base(f.inv(f.mul(2, a)));
    const auto mb = e.from_base(f.neg(b));
    roots.push_back({e.mul(e.add(mb, sq), inv2a), e.one()});
    roots.push_back({e.mul(e.sub(mb, sq), inv2a), e.one()});
  }

  for (const auto& [lam, mu] : roots) {
    std::vector<ExtensionField::Elem> v(3);
    for (int i = 0; i < 3; ++i) {
      v[i] = e.add(e.mul(lam, e.from_base(basis[0][i])), e.mul(mu, e.from_base(basis[1][i])));
    }
    detail::normalize_projective(e, v);
    // sum beta_ij(t) v_i v_j = C0 t0 + C1 t1.
    auto c0 = e.zero(), c1 = e.zero();
    for (int i = 0; i < 3; ++i) {
      for (int j = i; j < 3; ++j) {
        const auto& beta = inst.b(i + 2, j + 2);
        const auto vv = e.mul(v[i], v[j]);
        c0 = e.add(c0, e.mul(e.from_base(beta.coeff(0)), vv));
        c1 = e.add(c1, e.mul(e.from_base(beta.coeff(1)), vv));
      }
    }
    if (e.is_zero(c0) && e.is_zero(c1)) return fail("a whole line family lies in X");
    std::vector<ExtensionField::Elem> t{c1, e.neg(c0)};
    detail::normalize_projective(e, t);
    ContractedLine line{v, t[0], t[1], true};
    for (const auto* x : {&line.v[0], &line.v[1], &line.v[2], &line.t0, &line.t1}) {
      if ((*x)[1] != 0) line.rational = false;
    }
    out.lines.push_back(std::move(line));
  }
  return out;
}

// Re-substitutes a solution into all four equations.
inline bool verify_contracted_line(const PencilInstance& inst, const ExtensionField& e, const ContractedLine& l) {
  auto quad = [&](auto coeff) {
    auto acc = e.zero();
    for (int i = 0; i < 3; ++i) {
      for (int j = i; j < 3; ++j) acc = e.add(acc, e.mul(coeff(i + 2, j + 2), e.mul(l.v[i], l.v[j])));
    }
    return acc;
  };
  const auto conic = quad([&](int i, int j) { return e.from_base(inst.a(i, j).coeff(0)); });
  const auto fiber = quad([&](int i, int j) { return inst.b(i, j).eval_in(e, l.t0, l.t1); });
  auto linear = e.zero();
  for (int i = 0; i < 3; ++i) linear = e.add(linear, e.mul(e.from_base(inst.b(i + 2, 5).coeff(0)), l.v[i]));
  const bool nonzero_v = !(e.is_zero(l.v[0]) && e.is_zero(l.v[1]) && e.is_zero(l.v[2]));
  const bool nonzero_t = !(e.is_zero(l.t0) && e.is_zero(l.t1));
  return nonzero_v && nonzero_t && e.is_zero(conic) && e.is_zero(fiber) && e.is_zero(linear);
}

}  // namespace scrollsmith
