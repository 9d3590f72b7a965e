// Samples a random pencil for a family and reports both smoothness
// conditions, with witnesses when a condition fails.
#include <iostream>

#include "scrollsmith/oracle.hpp"

int main() {
  using namespace scrollsmith;
  const PrimeField f(10007);
  for (const auto& p : {ScrollParams({4, 3, 2, 1}, -4, -3), ScrollParams({4, 3, 2, 1}, -4, -4)}) {
    const auto inst = sample_instance(p, f, 1);
    const auto star = check_star(inst);
    const auto dstar = check_dstar(inst);
    std::cout << p << ": (*) " << (star.star_ok ? "holds" : "fails") << ", (**) "
              << (dstar.dstar_ok ? "holds" : "fails") << "\n";
    for (const auto* v : {&star, &dstar}) {
      for (const auto& w : v->witnesses) std::cout << "  " << w.to_string() << "\n";
    }
  }
}
