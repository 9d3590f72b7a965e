#pragma once

// Parameters of a fivefold scroll F(d1,...,d5) over the line together with
// two fiberwise quadric classes 2M + b1 L and 2M + b2 L, and the closed-form
// invariants computed from them.

#include <algorithm>
#include <array>
#include <compare>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace scrollsmith {

class ParamError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Canonical parameters: d1 >= d2 >= d3 >= d4 >= d5 = 0 (d5 implicit), b1 <= b2,
// 2 d1 + b1 >= 0.
class ScrollParams {
 public:
  ScrollParams(std::array<int, 4> d, int b1, int b2) : d_(d), b1_(b1), b2_(b2) {
    if (!(d[0] >= d[1] && d[1] >= d[2] && d[2] >= d[3] && d[3] >= 0)) {
      throw ParamError("ScrollParams: twisting degrees must satisfy d1 >= d2 >= d3 >= d4 >= 0");
    }
    if (b1 > b2) throw ParamError("ScrollParams: requires b1 <= b2");
    if (2 * d[0] + b1 < 0) {
      throw ParamError("ScrollParams: 2*d1 + b1 < 0, the first linear system is empty");
    }
  }

  const std::array<int, 4>& d() const { return d_; }
  // 1-based, with d(5) = 0.
  int d(int i) const {
    if (i < 1 || i > 5) throw std::out_of_range("ScrollParams::d: index must be in 1..5");
    return i == 5 ? 0 : d_[i - 1];
  }
  int b1() const { return b1_; }
  int b2() const { return b2_; }
  int d_sum() const { return d_[0] + d_[1] + d_[2] + d_[3]; }

  auto operator<=>(const ScrollParams&) const = default;

  std::string to_string() const {
    std::ostringstream os;
    os << "(" << d_[0] << "," << d_[1] << "," << d_[2] << "," << d_[3] << ";" << b1_ << "," << b2_ << ")";
    return os.str();
  }

 private:
  std::array<int, 4> d_;
  int b1_;
  int b2_;
};

inline std::ostream& operator<<(std::ostream& os, const ScrollParams& p) { return os << p.to_string(); }

// Divisor class m*M + l*L on the scroll.
struct DivisorClass {
  int m_coeff = 0;
  int l_coeff = 0;

  static DivisorClass fiber_quadric(int b) { return {2, b}; }

  friend DivisorClass operator+(DivisorClass a, DivisorClass b) {
    return {a.m_coeff + b.m_coeff, a.l_coeff + b.l_coeff};
  }
  // Re-expressed after the substitution M -> M' - c L (a common twist of the
  // bundle by c).
  DivisorClass twisted(int c) const { return {m_coeff, l_coeff + m_coeff * c}; }
  auto operator<=>(const DivisorClass&) const = default;
};

// Base locus of |2M + bL|, ordered by inclusion.
enum class BaseLocus { Empty = 0, Y5 = 1, Y4 = 2, Y3 = 3, TooLarge = 4 };

inline std::string_view to_string(BaseLocus s) {
  switch (s) {
    case BaseLocus::Empty: return "empty";
    case BaseLocus::Y5: return "Y5";
    case BaseLocus::Y4: return "Y4";
    case BaseLocus::Y3: return "Y3";
    case BaseLocus::TooLarge: return "too-large";
  }
  return "?";
}

// Index k of the negative subscroll Y_k = {x_1 = ... = x_{k-1} = 0}; 6 stands
// for the empty locus and 2 for anything containing Y2.
inline int subscroll_index(BaseLocus s) { return 6 - static_cast<int>(s); }

struct CanonicalForm {
  ScrollParams params;
  int twist = 0;         // common amount subtracted from every d_i
  bool sorted = false;   // d had to be reordered
  bool swapped = false;  // b1 and b2 were exchanged
};

// Normalizes raw input to canonical parameters. Subtracting a common twist c
// from all d_i adds 2c to each b_j, which keeps the divisor classes fixed.
inline CanonicalForm canonicalize_with_trace(std::array<int, 5> d, int b1, int b2) {
  CanonicalForm out{ScrollParams({0, 0, 0, 0}, 0, 0)};
  std::array<int, 5> sorted_d = d;
  std::sort(sorted_d.begin(), sorted_d.end(), std::greater<>());
  out.sorted = sorted_d != d;
  const int c = sorted_d[4];
  out.twist = c;
  for (auto& v : sorted_d) v -= c;
  b1 += 2 * c;
  b2 += 2 * c;
  if (b1 > b2) {
    std::swap(b1, b2);
    out.swapped = true;
  }
  out.params = ScrollParams({sorted_d[0], sorted_d[1], sorted_d[2], sorted_d[3]}, b1, b2);
  return out;
}

inline ScrollParams canonicalize(std::array<int, 5> d, int b1, int b2) {
  return canonicalize_with_trace(d, b1, b2).params;
}

// 5x5 matrix of coefficient degrees d_i + d_j + b (negative: the coefficient
// vanishes identically). Indices are 1-based through at().
class CoeffDegreeMatrix {
 public:
  CoeffDegreeMatrix(const ScrollParams& p, int b) {
    for (int i = 1; i <= 5; ++i) {
      for (int j = 1; j <= 5; ++j) m_[i - 1][j - 1] = p.d(i) + p.d(j) + b;
    }
  }
  int at(int i, int j) const { return m_.at(i - 1).at(j - 1); }
  bool vanishes(int i, int j) const { return at(i, j) < 0; }

 private:
  std::array<std::array<int, 5>, 5> m_{};
};

inline CoeffDegreeMatrix coeff_degrees(const ScrollParams& p, int b) { return CoeffDegreeMatrix(p, b); }

inline BaseLocus base_locus(const ScrollParams& p, int b) {
  if (b >= 0) return BaseLocus::Empty;
  if (2 * p.d(4) + b >= 0) return BaseLocus::Y5;
  if (2 * p.d(3) + b >= 0) return BaseLocus::Y4;
  if (2 * p.d(2) + b >= 0) return BaseLocus::Y3;
  return BaseLocus::TooLarge;
}

// Topological Euler characteristic of the complete intersection.
inline int euler_characteristic(const ScrollParams& p) {
  return -16 * p.d_sum() - 20 * p.b1() - 20 * p.b2() + 16;
}

enum class Rationality { Rational, Nonrational };

inline std::string_view to_string(Rationality r) {
  return r == Rationality::Rational ? "rational" : "nonrational";
}

struct RationalityVerdict {
  Rationality verdict;
  int chi;
  auto operator<=>(const RationalityVerdict&) const = default;
};

// Valid for smooth standard fibrations; the caller is responsible for both.
inline RationalityVerdict rationality_verdict(const ScrollParams& p) {
  const int chi = euler_characteristic(p);
  const bool rational = chi == 0 || chi == -8 || chi == -4;
  return {rational ? Rationality::Rational : Rationality::Nonrational, chi};
}

}  // namespace scrollsmith
