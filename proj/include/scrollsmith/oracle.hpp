#pragma once

// Randomized smoothness oracle. A pencil instance is a pair of fiberwise
// quadrics with uniformly random coefficient forms over F_p. Smoothness of
// X = D1 cap D2 reduces to two conditions on the base loci:
//
//   (*)  no point of Bs|D1| \ Bs|D2| lies in D2 and is singular on D1;
//   (**) on Bs|D2| the fiber gradients of f1 and f2 are never proportional.
//
// Both are fiberwise tests over the base line. The set of bad fibers is
// either finite or cofinite, and it is located exactly (over the algebraic
// closure of F_p):
//   - the fiber t = (0:1) is tested directly;
//   - the test is run once over F_p(s) at the generic fiber t = (1:s); a
//     failure there means almost every fiber is bad;
//   - otherwise every bad fiber is a root of one of the polynomials the
//     generic run had to assume nonzero, and those roots are tested in
//     F_p[u]/(h) with dynamic splitting of h.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scrollsmith/binary_form.hpp"
#include "scrollsmith/field.hpp"
#include "scrollsmith/linalg.hpp"
#include "scrollsmith/poly.hpp"
#include "scrollsmith/scroll.hpp"
#include "scrollsmith/tracking_field.hpp"

namespace scrollsmith {

class UnsupportedStratum : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NonGenericExhaustion : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kResampleCap = 16;

// splitmix64 finalizer over a running state; stable across platforms.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(base) ^ a) ^ b);
}

using FormF = BinaryForm<PrimeField>;

struct PencilInstance {
  ScrollParams params;
  PrimeField field;
  std::uint64_t seed;
  // f1 = sum_{i<=j} alpha_ij x_i x_j, likewise f2 with beta; stored
  // symmetrically, 0-based.
  std::vector<std::vector<FormF>> alpha;
  std::vector<std::vector<FormF>> beta;

  // 1-based accessors.
  const FormF& a(int i, int j) const { return alpha.at(i - 1).at(j - 1); }
  const FormF& b(int i, int j) const { return beta.at(i - 1).at(j - 1); }

  // Indices k, m with Bs|D1| = Y_k and Bs|D2| = Y_m (6 = empty).
  int k() const { return subscroll_index(base_locus(params, params.b1())); }
  int m() const { return subscroll_index(base_locus(params, params.b2())); }
};

inline PencilInstance sample_instance(const ScrollParams& p, const PrimeField& f, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto grid = [&](int b) {
    std::vector<std::vector<FormF>> g(5, std::vector<FormF>(5, FormF::zero(f)));
    for (int i = 1; i <= 5; ++i) {
      for (int j = i; j <= 5; ++j) {
        g[i - 1][j - 1] = FormF::random(f, p.d(i) + p.d(j) + b, rng);
        g[j - 1][i - 1] = g[i - 1][j - 1];
      }
    }
    return g;
  };
  auto alpha = grid(p.b1());
  auto beta = grid(p.b2());
  return {p, f, seed, std::move(alpha), std::move(beta)};
}

// A coefficient that should be a nonzero form came out identically zero.
inline bool accidentally_degenerate(const PencilInstance& inst) {
  for (int i = 0; i < 5; ++i) {
    for (int j = i; j < 5; ++j) {
      for (const auto* g : {&inst.alpha, &inst.beta}) {
        const auto& c = (*g)[i][j];
        if (!c.structurally_zero() && c.is_zero()) return true;
      }
    }
  }
  return false;
}

enum class Condition { Star, DStar };

inline std::string_view to_string(Condition c) { return c == Condition::Star ? "(*)" : "(**)"; }

// A bad fiber. Either t = (0:1), or t = (1 : u) with u a root of `modulus`
// (monic over F_p; every root of it is bad, degree 1 is an F_p-point).
struct Witness {
  Condition condition;
  BaseLocus stratum;
  std::uint32_t prime = 0;
  bool at_infinity = false;
  std::vector<std::uint32_t> modulus;
  // Failure on all but finitely many fibers; the recorded fiber is a sample.
  bool generic = false;

  std::string to_string() const {
    std::ostringstream os;
    os << scrollsmith::to_string(condition) << " fails on " << scrollsmith::to_string(stratum) << " at ";
    if (at_infinity) {
      os << "t=(0:1)";
    } else if (modulus.size() == 2) {
      os << "t=(1:" << (modulus[0] == 0 ? 0 : prime - modulus[0]) << ")";
    } else if (modulus.empty()) {
      os << "the generic fiber";
    } else {
      os << "t=(1:u), u a root of " << modulus_string();
    }
    if (generic) os << " (fails on almost every fiber)";
    return os.str();
  }

  bool operator==(const Witness&) const = default;

 private:
  std::string modulus_string() const {
    std::string s;
    for (std::size_t i = modulus.size(); i-- > 0;) {
      if (modulus[i] == 0) continue;
      if (!s.empty()) s += " + ";
      if (modulus[i] != 1 || i == 0) s += std::to_string(modulus[i]) + (i > 0 ? "*" : "");
      if (i > 0) s += i == 1 ? "u" : "u^" + std::to_string(i);
    }
    return s;
  }
};

struct Confidence {
  bool exact = true;
  int trials = 1;
  std::uint32_t prime = 0;

  std::string to_string() const {
    if (exact) return "exact";
    return "probabilistic(trials=" + std::to_string(trials) + ", F_" + std::to_string(prime) + ")";
  }
};

struct OracleVerdict {
  bool star_ok = true;
  bool dstar_ok = true;
  std::vector<Witness> witnesses;
  Confidence confidence;
  int trials_run = 0;
  int resamples = 0;
  // Seed of the instance that certified smoothness, if any.
  std::optional<std::uint64_t> passing_seed;

  bool smooth_capable() const { return star_ok && dstar_ok; }
};

namespace detail {

// Fiber matrices: entry (i,j) of H1 is d f1 / d x_i d x_j (so the diagonal
// carries 2 alpha_ii); H1 x is the fiber gradient of f1 and x^T H1 x = 2 f1.
template <class E>
struct FiberPair {
  Matrix<E> h1, h2;
};

template <class E, class Eval>
FiberPair<E> fiber(const PencilInstance& inst, const E& e, Eval eval) {
  FiberPair<E> out{Matrix<E>(5, Vector<E>(5, e.zero())), Matrix<E>(5, Vector<E>(5, e.zero()))};
  for (int i = 0; i < 5; ++i) {
    for (int j = i; j < 5; ++j) {
      auto x = eval(inst.alpha[i][j]);
      auto y = eval(inst.beta[i][j]);
      if (i == j) {
        x = e.add(x, x);
        y = e.add(y, y);
      }
      out.h1[i][j] = out.h1[j][i] = x;
      out.h2[i][j] = out.h2[j][i] = y;
    }
  }
  return out;
}

// (*) on one fiber of Y_k \ Y_m: is there x != 0 with G x = 0 (G the rows
// i < k, columns j >= k of H1), f2(x) = 0 and some x_j != 0 with j < m?
template <class E>
bool star_fails_on_fiber(const E& e, const FiberPair<E>& fp, int k, int m) {
  if (m <= k) return false;
  const std::size_t n = 6 - k;
  const std::size_t front = m - k;
  Matrix<E> g;
  for (int i = 0; i < k - 1; ++i) g.emplace_back(fp.h1[i].begin() + (k - 1), fp.h1[i].end());
  Matrix<E> q(n, Vector<E>(n, e.zero()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) q[i][j] = fp.h2[k - 1 + i][k - 1 + j];
  }
  const auto ker = nullspace(e, g, n);
  const std::size_t r = ker.size();
  if (r == 0) return false;
  auto stacked = g;
  for (std::size_t j = 0; j < front; ++j) {
    Vector<E> unit(n, e.zero());
    unit[j] = e.one();
    stacked.push_back(std::move(unit));
  }
  const auto inner = nullspace(e, stacked, n);
  const std::size_t w = inner.size();
  if (w == r) return false;
  bool q_vanishes = true;
  for (std::size_t i = 0; i < r && q_vanishes; ++i) {
    for (std::size_t j = i; j < r && q_vanishes; ++j) {
      if (!e.is_zero(bilinear(e, ker[i], q, ker[j]))) q_vanishes = false;
    }
  }
  if (q_vanishes) return true;
  if (w + 2 <= r) return true;
  // Codimension one: the zero set escapes the hyperplane unless the
  // hyperplane lies in the radical of q restricted to the kernel.
  for (const auto& u : inner) {
    for (const auto& v : ker) {
      if (!e.is_zero(bilinear(e, u, q, v))) return true;
    }
  }
  return false;
}

// (**) on one fiber of Y_m: are H1 x and H2 x (restricted to the rows i < m)
// proportional for some x in the fiber of Y_m?
template <class E>
bool dstar_fails_on_fiber(const E& e, const FiberPair<E>& fp, int m) {
  if (m >= 6) return false;
  // Y3 or larger: a single quadratic condition (or none) on a fiber of
  // dimension >= 2 always has solutions.
  if (m <= 3) return true;
  if (m == 5) {
    Matrix<E> mat(2, Vector<E>(4, e.zero()));
    for (int i = 0; i < 4; ++i) {
      mat[0][i] = fp.h1[i][4];
      mat[1][i] = fp.h2[i][4];
    }
    return rank(e, mat, 4) <= 1;
  }
  // m == 4: the three 2x2 minors are binary quadratics in (x4 : x5).
  std::vector<BinaryForm<E>> minors;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const auto &ai4 = fp.h1[i][3], &ai5 = fp.h1[i][4], &aj4 = fp.h1[j][3], &aj5 = fp.h1[j][4];
      const auto &bi4 = fp.h2[i][3], &bi5 = fp.h2[i][4], &bj4 = fp.h2[j][3], &bj5 = fp.h2[j][4];
      auto c0 = e.sub(e.mul(ai4, bj4), e.mul(aj4, bi4));
      auto c1 = e.sub(e.add(e.mul(ai4, bj5), e.mul(ai5, bj4)), e.add(e.mul(aj4, bi5), e.mul(aj5, bi4)));
      auto c2 = e.sub(e.mul(ai5, bj5), e.mul(aj5, bi5));
      minors.emplace_back(e, std::vector<typename E::Elem>{c0, c1, c2});
    }
  }
  const auto g = form_gcd(minors, e);
  return g.structurally_zero() || g.degree() > 0;
}

struct BadLocus {
  bool at_infinity = false;
  bool generic = false;
  // Sample F_p-point for a generic failure.
  std::optional<std::uint32_t> generic_point;
  std::vector<std::vector<std::uint32_t>> moduli;
};

inline Poly<PrimeField> squarefree_lcm(const PrimeField& f, const std::vector<std::vector<std::uint32_t>>& polys) {
  std::set<std::vector<std::uint32_t>> seen;
  Poly<PrimeField> acc = Poly<PrimeField>::constant(f, 1);
  for (const auto& c : polys) {
    if (!seen.insert(c).second) continue;
    const auto p = squarefree_part(Poly<PrimeField>(f, c));
    if (p.degree() <= 0) continue;
    const auto extra = p / gcd(acc, p);
    if (extra.degree() > 0) acc = acc * extra;
  }
  return acc.monic();
}

// Pred is called as pred(field, FiberPair) for several field types.
template <class Pred>
BadLocus locate_bad_fibers(const PencilInstance& inst, Pred pred) {
  const PrimeField& f = inst.field;
  BadLocus out;
  const auto at = [&](std::uint32_t t0, std::uint32_t t1) {
    return fiber(inst, f, [&](const FormF& g) { return g.eval(t0, t1); });
  };
  out.at_infinity = pred(f, at(0, 1));

  RationalFunctionField rf(f);
  const auto generic = fiber(inst, rf, [&](const FormF& g) {
    return g.structurally_zero() ? rf.zero() : rf.from_poly(g.dehomogenize().coeffs());
  });
  if (pred(rf, generic)) {
    out.generic = true;
    for (std::uint32_t s = 0; s < 256 && s < f.characteristic(); ++s) {
      if (pred(f, at(1, s))) {
        out.generic_point = s;
        break;
      }
    }
    return out;
  }

  std::vector<Poly<PrimeField>> work{squarefree_lcm(f, rf.logged())};
  while (!work.empty()) {
    const auto g = work.back();
    work.pop_back();
    if (g.degree() <= 0) continue;
    SplittingRing ring(f, g.coeffs());
    try {
      const auto fp = fiber(inst, ring, [&](const FormF& form) {
        return form.structurally_zero() ? ring.zero() : ring.from_coords(form.dehomogenize().coeffs());
      });
      if (pred(ring, fp)) out.moduli.push_back(g.coeffs());
    } catch (const ZeroDivisorFound& z) {
      const Poly<PrimeField> a(f, z.factor());
      work.push_back(g / a);
      work.push_back(a);
    }
  }
  std::sort(out.moduli.begin(), out.moduli.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return out;
}

inline BaseLocus stratum_of(int index) { return static_cast<BaseLocus>(std::clamp(6 - index, 0, 4)); }

inline std::vector<Witness> witnesses_from(const BadLocus& bl, Condition c, int index, const PrimeField& f) {
  const auto stratum = stratum_of(index);
  const auto p = f.characteristic();
  std::vector<Witness> w;
  if (bl.at_infinity) w.push_back({c, stratum, p, true, {}, false});
  if (bl.generic) {
    Witness g{c, stratum, p, false, {}, true};
    if (bl.generic_point) g.modulus = {f.neg(*bl.generic_point), 1};
    w.push_back(g);
  }
  for (const auto& m : bl.moduli) w.push_back({c, stratum, p, false, m, false});
  return w;
}

inline OracleVerdict star_verdict(const PencilInstance& inst) {
  OracleVerdict v;
  v.confidence = {true, 1, inst.field.characteristic()};
  const int k = inst.k(), m = inst.m();
  if (m <= k) return v;
  const auto bl = locate_bad_fibers(
      inst, [&](const auto& e, const auto& fp) { return star_fails_on_fiber(e, fp, k, m); });
  v.witnesses = witnesses_from(bl, Condition::Star, k, inst.field);
  v.star_ok = v.witnesses.empty();
  return v;
}

inline OracleVerdict dstar_verdict(const PencilInstance& inst) {
  OracleVerdict v;
  v.confidence = {true, 1, inst.field.characteristic()};
  const int m = inst.m();
  if (m >= 6) return v;
  const auto bl = locate_bad_fibers(
      inst, [&](const auto& e, const auto& fp) { return dstar_fails_on_fiber(e, fp, m); });
  v.witnesses = witnesses_from(bl, Condition::DStar, m, inst.field);
  v.dstar_ok = v.witnesses.empty();
  return v;
}

}  // namespace detail

// Condition (*) for one instance. Bs|D1| must be Y3 or smaller.
inline OracleVerdict check_star(const PencilInstance& inst) {
  if (base_locus(inst.params, inst.params.b1()) == BaseLocus::TooLarge) {
    throw UnsupportedStratum("check_star: base locus of |D1| is larger than Y3 for " + inst.params.to_string());
  }
  return detail::star_verdict(inst);
}

// Condition (**) for one instance. Bs|D2| must be Y4 or smaller; on Y3 and
// beyond the condition fails for dimension reasons and is not tested here.
inline OracleVerdict check_dstar(const PencilInstance& inst) {
  const auto s = base_locus(inst.params, inst.params.b2());
  if (s == BaseLocus::Y3 || s == BaseLocus::TooLarge) {
    throw UnsupportedStratum("check_dstar: base locus of |D2| is " + std::string(to_string(s)) + " for " +
                             inst.params.to_string());
  }
  return detail::dstar_verdict(inst);
}

// Re-tests the condition on the witness fiber.
inline bool verify_witness(const PencilInstance& inst, const Witness& w) {
  const int k = inst.k(), m = inst.m();
  auto pred = [&](const auto& e, const auto& fp) {
    return w.condition == Condition::Star ? detail::star_fails_on_fiber(e, fp, k, m)
                                          : detail::dstar_fails_on_fiber(e, fp, m);
  };
  const PrimeField& f = inst.field;
  if (w.at_infinity) return pred(f, detail::fiber(inst, f, [](const FormF& g) { return g.eval(0, 1); }));
  if (w.modulus.size() < 2) return false;
  try {
    SplittingRing ring(f, w.modulus);
    return pred(ring, detail::fiber(inst, ring, [&](const FormF& g) {
                  return g.structurally_zero() ? ring.zero() : ring.from_coords(g.dehomogenize().coeffs());
                }));
  } catch (const ZeroDivisorFound&) {
    return false;
  }
}

// Samples up to `trials` instances (resampling accidental degeneracies up to
// kResampleCap times each). Smooth-capable as soon as one instance passes
// both conditions; otherwise the failures of all trials are returned.
inline OracleVerdict oracle_smooth(const ScrollParams& p, int trials, const PrimeField& f, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("oracle_smooth: trials must be positive");
  OracleVerdict agg;
  agg.confidence = {false, trials, f.characteristic()};
  for (int trial = 0; trial < trials; ++trial) {
    std::optional<PencilInstance> inst;
    for (int attempt = 0; attempt < kResampleCap; ++attempt) {
      auto cand = sample_instance(p, f, derive_seed(seed, static_cast<std::uint64_t>(trial), attempt));
      if (!accidentally_degenerate(cand)) {
        inst = std::move(cand);
        break;
      }
      ++agg.resamples;
    }
    if (!inst) {
      throw NonGenericExhaustion("oracle_smooth: " + std::to_string(kResampleCap) +
                                 " degenerate samples in a row for " + p.to_string());
    }
    agg.trials_run = trial + 1;
    const auto s = detail::star_verdict(*inst);
    const auto d = detail::dstar_verdict(*inst);
    if (s.star_ok && d.dstar_ok) {
      OracleVerdict ok;
      ok.confidence = {true, trial + 1, f.characteristic()};
      ok.trials_run = trial + 1;
      ok.resamples = agg.resamples;
      ok.passing_seed = inst->seed;
      return ok;
    }
    agg.star_ok = agg.star_ok && s.star_ok;
    agg.dstar_ok = agg.dstar_ok && d.dstar_ok;
    for (const auto* part : {&s, &d}) {
      for (const auto& w : part->witnesses) {
        if (std::find(agg.witnesses.begin(), agg.witnesses.end(), w) == agg.witnesses.end()) {
          agg.witnesses.push_back(w);
        }
      }
    }
  }
  return agg;
}

}  // namespace scrollsmith
