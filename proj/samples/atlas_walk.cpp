// Tabulates the smooth families for a range of Euler characteristics and
// prints how many are standard and how many rational.
#include <iostream>

#include "scrollsmith/enumerator.hpp"

int main() {
  using namespace scrollsmith;
  const auto bounds = SearchBounds::with_d1_max(12);
  std::cout << "chi  families  standard  rational\n";
  for (int chi = -40; chi <= 16; chi += 4) {
    const auto res = enumerate_by_chi(chi, bounds);
    int standard = 0, rational = 0;
    for (const auto& r : res.records) {
      standard += r.standard;
      rational += r.rationality.verdict == Rationality::Rational;
    }
    std::cout << chi << "  " << res.records.size() << "  " << standard << "  " << rational << "\n";
  }
}
