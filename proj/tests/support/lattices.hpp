#pragma once

#include <string>
#include <vector>

#include "permorb/int_matrix.hpp"
#include "permorb/lattice.hpp"

namespace permorb::testing {

struct NamedGram {
  std::string name;
  IntMatrix gram;
};

inline IntMatrix a1() { return IntMatrix{{2}}; }
inline IntMatrix a1x2() { return IntMatrix{{2, 0}, {0, 2}}; }
inline IntMatrix a1x3() { return IntMatrix{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}; }
inline IntMatrix a2() { return IntMatrix{{2, -1}, {-1, 2}}; }
inline IntMatrix a3() { return IntMatrix{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}; }
inline IntMatrix a4() { return IntMatrix{{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}}; }
inline IntMatrix d4() { return IntMatrix{{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}}; }
inline IntMatrix e8() {
  return IntMatrix{{2, -1, 0, 0, 0, 0, 0, 0},  {-1, 2, -1, 0, 0, 0, 0, 0}, {0, -1, 2, -1, 0, 0, 0, -1},
                   {0, 0, -1, 2, -1, 0, 0, 0}, {0, 0, 0, -1, 2, -1, 0, 0}, {0, 0, 0, 0, -1, 2, -1, 0},
                   {0, 0, 0, 0, 0, -1, 2, 0},  {0, 0, -1, 0, 0, 0, 0, 2}};
}

/// Every lattice with l <= 12 and d <= 3 used by the property checks.
inline std::vector<NamedGram> small_lattices() {
  return {
      {"A1", a1()},
      {"A1^2", a1x2()},
      {"A1^3", a1x3()},
      {"A2", a2()},
      {"A3", a3()},
      {"A2+A1", IntMatrix{{2, -1, 0}, {-1, 2, 0}, {0, 0, 2}}},
      {"[4]", IntMatrix{{4}}},
      {"[6]", IntMatrix{{6}}},
      {"[2 0;0 4]", IntMatrix{{2, 0}, {0, 4}}},
      {"[2 1;1 4]", IntMatrix{{2, 1}, {1, 4}}},
      {"[2 1;1 6]", IntMatrix{{2, 1}, {1, 6}}},
      {"[4 2;2 4]", IntMatrix{{4, 2}, {2, 4}}},
      {"A2+[4]", IntMatrix{{2, 1, 0}, {1, 2, 0}, {0, 0, 4}}},
  };
}

inline DualVector vec(std::initializer_list<Rational> c) { return DualVector(std::vector<Rational>(c)); }

}  // namespace permorb::testing
