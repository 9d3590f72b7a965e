#pragma once

// Integer nonsingularity criterion for a general complete intersection
// X = D1 cap D2, D_i in |2M + b_i L|, in the scroll F(d1, d2, d3, d4, 0).
//
// Outer split by the base locus of |D1|:
//   1: empty   2: Y5   3: Y4   4: Y3   (anything larger is singular)
// then 1 + 5 + 13 + 6 inner condition sets, each a conjunction of linear
// (in)equalities in (d, b) with a few two-atom disjunctions.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "scrollsmith/scroll.hpp"

namespace scrollsmith {

enum class CaseId {
  C1,
  C2a, C2b, C2c, C2d, C2e,
  C3a, C3b, C3c, C3d, C3e, C3f, C3g, C3h, C3i, C3j, C3k, C3l, C3m,
  C4a, C4b, C4c, C4d, C4e, C4f,
};

inline constexpr std::array<CaseId, 25> kAllCases = {
    CaseId::C1,  CaseId::C2a, CaseId::C2b, CaseId::C2c, CaseId::C2d, CaseId::C2e, CaseId::C3a,
    CaseId::C3b, CaseId::C3c, CaseId::C3d, CaseId::C3e, CaseId::C3f, CaseId::C3g, CaseId::C3h,
    CaseId::C3i, CaseId::C3j, CaseId::C3k, CaseId::C3l, CaseId::C3m, CaseId::C4a, CaseId::C4b,
    CaseId::C4c, CaseId::C4d, CaseId::C4e, CaseId::C4f,
};

inline constexpr std::array<std::string_view, 25> kCaseNames = {
    "1",  "2a", "2b", "2c", "2d", "2e", "3a", "3b", "3c", "3d", "3e", "3f", "3g",
    "3h", "3i", "3j", "3k", "3l", "3m", "4a", "4b", "4c", "4d", "4e", "4f",
};

inline std::string_view to_string(CaseId c) { return kCaseNames[static_cast<std::size_t>(c)]; }

inline std::optional<CaseId> parse_case_id(std::string_view s) {
  for (std::size_t i = 0; i < kCaseNames.size(); ++i) {
    if (kCaseNames[i] == s) return kAllCases[i];
  }
  return std::nullopt;
}

// Base-locus stratum a case belongs to (1..4).
inline int case_stratum(CaseId c) { return to_string(c)[0] - '0'; }

enum class SingularReason { BaseLocusTooLarge, NoCaseMatches };

inline std::string_view to_string(SingularReason r) {
  return r == SingularReason::BaseLocusTooLarge ? "base-locus-too-large" : "no-case-matches";
}

struct Smooth {
  CaseId case_id;
  bool operator==(const Smooth&) const = default;
};
struct Singular {
  SingularReason reason;
  bool operator==(const Singular&) const = default;
};

class Classification {
 public:
  Classification(Smooth s) : v_(s) {}
  Classification(Singular s) : v_(s) {}

  bool smooth() const { return std::holds_alternative<Smooth>(v_); }
  CaseId case_id() const {
    if (!smooth()) throw std::logic_error("Classification: singular verdict has no case id");
    return std::get<Smooth>(v_).case_id;
  }
  SingularReason reason() const {
    if (smooth()) throw std::logic_error("Classification: smooth verdict has no singular reason");
    return std::get<Singular>(v_).reason;
  }
  bool operator==(const Classification&) const = default;

  std::string to_string() const {
    if (smooth()) return "smooth(" + std::string(scrollsmith::to_string(case_id())) + ")";
    return "singular(" + std::string(scrollsmith::to_string(reason())) + ")";
  }

 private:
  std::variant<Smooth, Singular> v_;
};

struct CriterionOptions {
  // Case 3j: read its last two atoms as a conjunction, as printed in the
  // summary statement. The default reads them as a disjunction, as in
  // the case analysis, restricted to d2 + b1 < 0 where that analysis applies.
  bool strict_3j = false;
};

namespace detail {

struct Vars {
  int d1, d2, d3, d4, b1, b2;
  explicit Vars(const ScrollParams& p)
      : d1(p.d(1)), d2(p.d(2)), d3(p.d(3)), d4(p.d(4)), b1(p.b1()), b2(p.b2()) {}
};

inline bool stratum_holds(const Vars& v, int s) {
  switch (s) {
    case 1: return v.b1 >= 0;
    case 2: return v.b1 < 0 && 2 * v.d4 + v.b1 >= 0;
    case 3: return 2 * v.d4 + v.b1 < 0 && 2 * v.d3 + v.b1 >= 0;
    case 4: return 2 * v.d3 + v.b1 < 0 && 2 * v.d2 + v.b1 >= 0;
  }
  return false;
}

// Inner condition set, without the stratum conditions.
inline bool inner_holds(const Vars& v, CaseId c, const CriterionOptions& opt) {
  const int d1 = v.d1, d2 = v.d2, d3 = v.d3, d4 = v.d4, b1 = v.b1, b2 = v.b2;
  // Trailing disjunction shared by 3c, 3f, 3g, 4c.
  const bool tail = d3 + b2 >= 0 || d2 + b2 == 0;
  switch (c) {
    case CaseId::C1: return true;
    case CaseId::C2a: return d1 + b1 < 0 && b2 == 0;
    case CaseId::C2b: return d1 + b1 >= 0 && b2 >= 0;
    case CaseId::C2c: return b1 == -d1 && b2 < 0 && d3 + b2 >= 0;
    case CaseId::C2d: return b1 == -d1 && b2 == -d2 && d2 > d3;
    case CaseId::C2e: return d1 + b1 > 0 && d2 + b1 >= 0 && b2 < 0 && d3 + b2 >= 0;
    case CaseId::C3a: return d1 > d2 && d4 > 0 && b1 == -(d1 + d4) && b2 == 0;
    case CaseId::C3b: return d1 > d2 && d4 == 0 && b1 == -d1 && b2 == 0;
    case CaseId::C3c: return d1 > d2 + d4 && d4 > 0 && b1 == -d1 && b2 == -2 * d4 && tail;
    case CaseId::C3d: return d1 + b1 < 0 && d2 + d4 + b1 >= 0 && b2 == 0;
    case CaseId::C3e:
      return d1 + b1 >= 0 && d2 + d4 + b1 >= 0 && d2 + b1 < 0 && d3 + d4 + b1 < 0 && b2 >= 0;
    case CaseId::C3f:
      return d1 > d2 && d1 > d3 + d4 && d2 + d4 > d1 && b1 == -d1 && b2 < 0 && 2 * d4 + b2 >= 0 && tail;
    case CaseId::C3g:
      return d1 == d2 + d4 && d2 > d3 && d4 > 0 && b1 == -d1 && b2 < 0 && 2 * d4 + b2 >= 0 && tail;
    case CaseId::C3h: return d1 == d2 + d4 && d2 == d3 + d4 && d4 > 0 && b1 == -d1 && b2 == -d2;
    case CaseId::C3i: return d1 + b1 >= 0 && d3 + d4 + b1 >= 0 && d2 + b1 < 0 && b2 >= 0;
    case CaseId::C3j: {
      const bool head = d3 + d4 >= d1 && b1 == -d1 && b2 < 0 && 2 * d4 + b2 >= 0;
      if (opt.strict_3j) return head && d3 + b2 >= 0 && d2 + b2 == 0;
      return head && tail && d2 + b1 < 0;
    }
    case CaseId::C3k: return d2 + b1 >= 0 && d3 + d4 + b1 >= 0 && b2 >= 0;
    case CaseId::C3l:
      return d2 + b1 >= 0 && d3 + d4 + b1 >= 0 && b2 < 0 && 2 * d4 + b2 >= 0 && d3 + b2 >= 0;
    case CaseId::C3m: return d1 == d2 && d2 == d3 && d3 > 0 && d4 == 0 && b1 == -d1 && b2 == -d1;
    case CaseId::C4a: return d1 + d4 == d2 + d3 && d3 > d4 && d4 > 0 && b1 == -(d1 + d4) && b2 == 0;
    case CaseId::C4b: return d1 == d2 && d2 > d3 && d3 == d4 && d4 > 0 && b1 == -(d1 + d4) && b2 == 0;
    case CaseId::C4c: return d1 == d2 + d3 && d3 > d4 && d4 > 0 && b1 == -d1 && b2 == -2 * d4 && tail;
    case CaseId::C4d: return d1 == d2 + d3 && d3 > d4 && d4 == 0 && b1 == -d1 && b2 == 0;
    case CaseId::C4e: return d1 == d2 && d3 == 0 && d4 == 0 && b1 == -d1 && b2 == 0;
    case CaseId::C4f:
      return d4 > 0 && d3 == d4 && d2 == 2 * d4 && d1 == 3 * d4 && b1 == -3 * d4 && b2 == -2 * d4;
  }
  return false;
}

}  // namespace detail

// Whether the full condition set of one case (stratum included) holds.
inline bool case_holds(const ScrollParams& p, CaseId c, const CriterionOptions& opt = {}) {
  const detail::Vars v(p);
  return detail::stratum_holds(v, case_stratum(c)) && detail::inner_holds(v, c, opt);
}

inline Classification classify(const ScrollParams& p, const CriterionOptions& opt = {}) {
  const detail::Vars v(p);
  if (base_locus(p, p.b1()) == BaseLocus::TooLarge) return Singular{SingularReason::BaseLocusTooLarge};
  int stratum = 0;
  for (int s = 1; s <= 4; ++s) {
    if (detail::stratum_holds(v, s)) {
      stratum = s;
      break;
    }
  }
  for (CaseId c : kAllCases) {
    if (case_stratum(c) != stratum) continue;
    if (detail::inner_holds(v, c, opt)) return Smooth{c};
  }
  return Singular{SingularReason::NoCaseMatches};
}

// Every case whose condition set holds, each tested independently.
inline std::vector<CaseId> matching_cases(const ScrollParams& p, const CriterionOptions& opt = {}) {
  std::vector<CaseId> out;
  for (CaseId c : kAllCases) {
    if (case_holds(p, c, opt)) out.push_back(c);
  }
  return out;
}

// The 2x2 minors of the gradient matrix restricted to Y4 have no common zero.
inline bool dstar4_holds(const ScrollParams& p) {
  const detail::Vars v(p);
  return v.b1 == -v.d1 && v.d1 == v.d2 + v.d4 && v.b2 == -v.d2 && v.d2 == v.d3 + v.d4;
}

// The same for the section Y5.
inline bool dstar5_holds(const ScrollParams& p) {
  const detail::Vars v(p);
  if (v.d1 + v.b1 >= 0 && v.d3 + v.b2 >= 0) return true;
  return v.d1 + v.b1 == 0 && v.d2 + v.b2 == 0 && (v.d1 + v.b2 == 0 || v.d2 + v.b1 < 0);
}

struct IntersectionNumbers {
  // C12 . C13 on Y4 for the curves cut by the minors m12, m13.
  int c12c13;
  // A . B on Y4 for the first-column entries of the two rows.
  int ab;
  // A1 . A2 . D2 on Y3.
  int a1a2d2;
};

inline IntersectionNumbers intersection_numbers(const ScrollParams& p) {
  const detail::Vars v(p);
  return {
      4 * (v.d1 + v.d4 + v.b1 + v.b2) + 2 * (v.d2 + v.d3),
      2 * v.d1 + v.d4 + v.b1 + v.b2,
      2 * (v.d1 + v.d2 + v.d3 + v.d4) + 4 * v.b1 + v.b2,
  };
}

}  // namespace scrollsmith
