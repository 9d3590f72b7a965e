#pragma once

// Bounded search of the canonical parameter lattice: smooth families with a
// given Euler characteristic, the standardness filter, per-case witnesses,
// and atlas serialization.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "scrollsmith/criterion.hpp"
#include "scrollsmith/scroll.hpp"

namespace scrollsmith {

struct SearchBounds {
  int d1_max = 16;
  int b_min = -32;
  int b_max = 32;

  // b in [-2 d1_max, 2 d1_max].
  static SearchBounds with_d1_max(int d1_max) {
    if (d1_max < 0) throw std::invalid_argument("SearchBounds: d1_max must be non-negative");
    return {d1_max, -2 * d1_max, 2 * d1_max};
  }
  void validate() const {
    if (d1_max < 0) throw std::invalid_argument("SearchBounds: d1_max must be non-negative");
    if (b_min > b_max) throw std::invalid_argument("SearchBounds: b_min must not exceed b_max");
  }
};

struct FamilyRecord {
  ScrollParams params;
  CaseId case_id;
  int chi;
  bool standard;
  RationalityVerdict rationality;

  bool operator==(const FamilyRecord&) const = default;
};

// Smooth with Y4 in neither base locus (only |D1| may contain it).
inline bool is_standard(const ScrollParams& p) {
  const auto s = base_locus(p, p.b2());
  return s != BaseLocus::Y4 && s != BaseLocus::Y3;
}

inline FamilyRecord make_record(const ScrollParams& p, CaseId c) {
  return {p, c, euler_characteristic(p), is_standard(p), rationality_verdict(p)};
}

// Calls fn(d) for every canonical d with d1 <= d1_max, lexicographically.
template <class Fn>
void for_each_d(int d1_max, Fn fn) {
  for (int d1 = 0; d1 <= d1_max; ++d1) {
    for (int d2 = 0; d2 <= d1; ++d2) {
      for (int d3 = 0; d3 <= d2; ++d3) {
        for (int d4 = 0; d4 <= d3; ++d4) fn(std::array<int, 4>{d1, d2, d3, d4});
      }
    }
  }
}

struct EnumerationResult {
  std::vector<FamilyRecord> records;
  // Smooth solutions of the chi relation on a face of the box, or excluded
  // only by the b-range: the box may truncate the answer.
  std::vector<std::string> truncation;
};

inline EnumerationResult enumerate_by_chi(int chi, const SearchBounds& bounds, const CriterionOptions& opt = {}) {
  bounds.validate();
  EnumerationResult out;
  // 20 (b1 + b2) = 16 - 16 sum(d) - chi.
  for_each_d(bounds.d1_max, [&](const std::array<int, 4>& d) {
    const int rhs = 16 - 16 * (d[0] + d[1] + d[2] + d[3]) - chi;
    if (rhs % 20 != 0) return;
    const int sum_b = rhs / 20;
    // b1 >= -2 d2 (else the base locus is too large), b1 <= b2.
    const int lo = -2 * d[1];
    const int hi = sum_b >= 0 ? sum_b / 2 : -((-sum_b + 1) / 2);
    for (int b1 = lo; b1 <= hi; ++b1) {
      const int b2 = sum_b - b1;
      const ScrollParams p(d, b1, b2);
      const auto c = classify(p, opt);
      if (!c.smooth()) continue;
      const bool in_b = b1 >= bounds.b_min && b2 <= bounds.b_max;
      if (!in_b) {
        out.truncation.push_back("smooth solution " + p.to_string() + " lies outside the b-range");
        continue;
      }
      if (d[0] == bounds.d1_max || b1 == bounds.b_min || b2 == bounds.b_max) {
        out.truncation.push_back("smooth solution " + p.to_string() + " touches the boundary of the search box");
      }
      out.records.push_back(make_record(p, c.case_id()));
    }
  });
  std::sort(out.records.begin(), out.records.end(),
            [](const FamilyRecord& a, const FamilyRecord& b) { return a.params < b.params; });
  return out;
}

inline std::vector<FamilyRecord> standard_only(std::vector<FamilyRecord> records) {
  std::erase_if(records, [](const FamilyRecord& r) { return !r.standard; });
  return records;
}

// First (lexicographically least) in-bounds tuple matching each case.
inline std::map<CaseId, std::optional<ScrollParams>> realizability_sweep(const SearchBounds& bounds,
                                                                         const CriterionOptions& opt = {}) {
  bounds.validate();
  std::map<CaseId, std::optional<ScrollParams>> out;
  for (auto c : kAllCases) out[c] = std::nullopt;
  std::size_t found = 0;
  for_each_d(bounds.d1_max, [&](const std::array<int, 4>& d) {
    if (found == kAllCases.size()) return;
    for (int b1 = std::max(bounds.b_min, -2 * d[0]); b1 <= bounds.b_max; ++b1) {
      for (int b2 = b1; b2 <= bounds.b_max; ++b2) {
        const ScrollParams p(d, b1, b2);
        for (auto c : matching_cases(p, opt)) {
          if (!out[c]) {
            out[c] = p;
            ++found;
          }
        }
      }
    }
  });
  return out;
}

enum class AtlasFormat { Json, Csv };

inline std::optional<AtlasFormat> parse_atlas_format(std::string_view s) {
  if (s == "json") return AtlasFormat::Json;
  if (s == "csv") return AtlasFormat::Csv;
  return std::nullopt;
}

inline nlohmann::ordered_json to_json(const FamilyRecord& r) {
  nlohmann::ordered_json j;
  j["d"] = r.params.d();
  j["b1"] = r.params.b1();
  j["b2"] = r.params.b2();
  j["case"] = std::string(to_string(r.case_id));
  j["chi"] = r.chi;
  j["standard"] = r.standard;
  j["rational"] = r.rationality.verdict == Rationality::Rational;
  return j;
}

inline std::string export_atlas(const std::vector<FamilyRecord>& records, AtlasFormat fmt) {
  std::ostringstream os;
  if (fmt == AtlasFormat::Json) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : records) arr.push_back(to_json(r));
    os << arr.dump(2) << "\n";
    return os.str();
  }
  os << "d1,d2,d3,d4,b1,b2,case,chi,standard,rational\n";
  for (const auto& r : records) {
    for (int v : r.params.d()) os << v << ",";
    os << r.params.b1() << "," << r.params.b2() << "," << to_string(r.case_id) << "," << r.chi << ","
       << (r.standard ? "true" : "false") << ","
       << (r.rationality.verdict == Rationality::Rational ? "true" : "false") << "\n";
  }
  return os.str();
}

class AtlasParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline FamilyRecord record_from_fields(std::array<int, 4> d, int b1, int b2, std::string_view case_name, int chi,
                                       bool standard, bool rational) {
  const auto c = parse_case_id(case_name);
  if (!c) throw AtlasParseError("atlas: unknown case id '" + std::string(case_name) + "'");
  const ScrollParams p(d, b1, b2);
  return {p, *c, chi, standard, {rational ? Rationality::Rational : Rationality::Nonrational, chi}};
}

inline bool parse_bool(const std::string& s) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw AtlasParseError("atlas: expected true/false, got '" + s + "'");
}

}  // namespace detail

inline std::vector<FamilyRecord> parse_atlas(const std::string& text, AtlasFormat fmt) {
  std::vector<FamilyRecord> out;
  if (fmt == AtlasFormat::Json) {
    try {
      const auto arr = nlohmann::json::parse(text);
      for (const auto& j : arr) {
        out.push_back(detail::record_from_fields(j.at("d").get<std::array<int, 4>>(), j.at("b1").get<int>(),
                                                 j.at("b2").get<int>(), j.at("case").get<std::string>(),
                                                 j.at("chi").get<int>(), j.at("standard").get<bool>(),
                                                 j.at("rational").get<bool>()));
      }
    } catch (const nlohmann::json::exception& e) {
      throw AtlasParseError(std::string("atlas: ") + e.what());
    }
    return out;
  }
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line != "d1,d2,d3,d4,b1,b2,case,chi,standard,rational") {
    throw AtlasParseError("atlas: missing or unexpected CSV header");
  }
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::istringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) f.push_back(cell);
    if (f.size() != 10) throw AtlasParseError("atlas: expected 10 CSV fields in '" + line + "'");
    try {
      out.push_back(detail::record_from_fields({std::stoi(f[0]), std::stoi(f[1]), std::stoi(f[2]), std::stoi(f[3])},
                                               std::stoi(f[4]), std::stoi(f[5]), f[6], std::stoi(f[7]),
                                               detail::parse_bool(f[8]), detail::parse_bool(f[9])));
    } catch (const std::logic_error& e) {
      throw AtlasParseError("atlas: bad CSV row '" + line + "': " + e.what());
    }
  }
  return out;
}

}  // namespace scrollsmith
