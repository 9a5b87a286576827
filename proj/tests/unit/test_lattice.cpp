#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "permorb/error.hpp"
#include "permorb/lattice.hpp"
#include "permorb/smith.hpp"
#include "lattices.hpp"

using namespace permorb;
using permorb::testing::vec;

namespace {

ErrorKind kind_of(const IntMatrix& g) {
  try {
    GramLattice::validate(g);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::ParseError;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<long> dist(-6, 6);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
  return m;
}

}  // namespace

TEST_CASE("validate_lattice accepts even positive definite Gram matrices") {
  const auto a1 = GramLattice::validate(testing::a1());
  CHECK(a1.dim() == 1);
  CHECK(a1.det() == 2);
  const auto a2 = GramLattice::validate(testing::a2());
  CHECK(a2.dim() == 2);
  CHECK(a2.det() == 3);
  CHECK(GramLattice::validate(testing::e8()).det() == 1);
  CHECK(GramLattice::validate(testing::d4()).det() == 4);
}

TEST_CASE("validate_lattice names the violated hypothesis") {
  CHECK(kind_of(IntMatrix{{1}}) == ErrorKind::NotEven);
  CHECK(kind_of(IntMatrix{{2, 1}, {0, 2}}) == ErrorKind::NotSymmetric);
  CHECK(kind_of(IntMatrix{{2, 3}, {3, 2}}) == ErrorKind::NotPositiveDefinite);
  CHECK(kind_of(IntMatrix{{-2}}) == ErrorKind::NotPositiveDefinite);
  CHECK(kind_of(IntMatrix{{2, 2}, {2, 2}}) == ErrorKind::NotPositiveDefinite);
  CHECK(kind_of(IntMatrix(0, 0)) == ErrorKind::DegenerateLattice);
  CHECK(kind_of(IntMatrix(1, 2)) == ErrorKind::DimensionMismatch);
}

TEST_CASE("smith normal form on fixed inputs") {
  auto check = [](const IntMatrix& a, std::vector<Integer> expected) {
    const auto s = smith_normal_form(a);
    CHECK(s.U * a * s.V == s.D);
    CHECK(s.U * s.U_inverse == IntMatrix::identity(a.rows()));
    CHECK(abs(determinant(s.U)) == 1);
    CHECK(abs(determinant(s.V)) == 1);
    CHECK(s.diagonal() == expected);
  };
  check(IntMatrix::identity(3), {1, 1, 1});
  check(testing::a2(), {1, 3});
  check(IntMatrix{{2, 0}, {0, 2}}, {2, 2});
  check(testing::d4(), {1, 1, 2, 2});
  check(IntMatrix{{4, 2}, {2, 4}}, {2, 6});
  check(IntMatrix{{0, 0}, {0, 0}}, {0, 0});
}

TEST_CASE("smith normal form reconstructs random integer matrices") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const IntMatrix a = random_matrix(rng, n);
    const auto s = smith_normal_form(a);
    REQUIRE(s.U * a * s.V == s.D);
    CHECK(s.U * s.U_inverse == IntMatrix::identity(n));
    CHECK(abs(determinant(s.U)) == 1);
    CHECK(abs(determinant(s.V)) == 1);
    const auto d = s.diagonal();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) CHECK(s.D(i, j) == 0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      CHECK(d[i] >= 0);
      if (d[i] != 0) {
        CHECK(d[i + 1] % d[i] == 0);
      } else {
        CHECK(d[i + 1] == 0);
      }
    }
    Integer product = 1;
    for (const auto& x : d) product *= x;
    CHECK(product == abs(determinant(a)));
  }
}

TEST_CASE("inner product on A1") {
  const auto l = GramLattice::validate(testing::a1());
  CHECK(inner(l, vec({1}), vec({1})) == 2);
  CHECK(inner(l, vec({Rational(1, 2)}), vec({1})) == 1);
  CHECK(inner(l, vec({Rational(1, 2)}), vec({Rational(1, 2)})) == Rational(1, 2));
  CHECK_THROWS_AS(inner(l, vec({1, 0}), vec({1})), Error);
}

TEST_CASE("inner product is symmetric and bilinear") {
  const auto l = GramLattice::validate(testing::d4());
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
  auto rnd = [&] {
    std::vector<Rational> c;
    for (int i = 0; i < 4; ++i) {
      Rational q(num(rng), den(rng));
      q.canonicalize();
      c.push_back(q);
    }
    return DualVector(c);
  };
  for (int t = 0; t < 50; ++t) {
    const auto x = rnd(), y = rnd(), z = rnd();
    Rational s(num(rng), den(rng));
    s.canonicalize();
    CHECK(l.inner(x, y) == l.inner(y, x));
    CHECK(l.inner(s * x + y, z) == s * l.inner(x, z) + l.inner(y, z));
  }
}

TEST_CASE("coset systems of A1") {
  const auto l = GramLattice::validate(testing::a1());
  const auto t = coset_reps_dual_mod_L(l);
  REQUIRE(t.size() == 2);
  CHECK(t[0] == vec({0}));
  CHECK(t[1] == vec({Rational(1, 2)}));
  const auto s = coset_reps_L_mod_2L(l);
  REQUIRE(s.size() == 2);
  CHECK(s[0] == vec({0}));
  CHECK(s[1] == vec({1}));
  const auto g = two_torsion(l);
  REQUIRE(g.size() == 2);
  CHECK(g[0] == vec({0}));
  CHECK(g[1] == vec({Rational(1, 2)}));
}

TEST_CASE("coset system sizes") {
  for (const auto& [name, gram] : testing::small_lattices()) {
    CAPTURE(name);
    const auto l = GramLattice::validate(gram);
    const std::size_t det = l.det().get_ui();
    const std::size_t two_d = std::size_t{1} << l.dim();
    CHECK(coset_reps_dual_mod_L(l).size() == det);
    CHECK(coset_reps_L_mod_2L(l).size() == two_d);
    CHECK(coset_system(l, Quotient::DualMod2Lattice).size() == det * two_d);
    CHECK(coset_system(l, Quotient::DualMod2Dual).size() == two_d);

    const auto t = coset_reps_dual_mod_L(l);
    for (std::size_t i = 0; i < t.size(); ++i) {
      CHECK(l.in_dual(t[i]));
      CHECK(l.canonicalize(t[i], Quotient::DualModLattice) == t[i]);
      for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(l.in_lattice(t[i] - t[j]));
    }
    const auto g = two_torsion(l);
    for (std::size_t i = 0; i < g.size(); ++i) {
      CHECK(l.in_lattice(Rational(2) * g[i]));
      CHECK(g[i] == t[g.indices()[i]]);
    }
  }
}

TEST_CASE("canonicalize modulo L on A1") {
  const auto l = GramLattice::validate(testing::a1());
  const auto q = Quotient::DualModLattice;
  CHECK(canonicalize(l, vec({1}), q) == vec({0}));
  CHECK(canonicalize(l, vec({Rational(3, 2)}), q) == vec({Rational(1, 2)}));
  CHECK(canonicalize(l, vec({Rational(-1, 2)}), q) == vec({Rational(1, 2)}));
  try {
    canonicalize(l, vec({Rational(1, 3)}), q);
    FAIL("expected NotInAmbientGroup");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInAmbientGroup);
  }
  CHECK_THROWS_AS(canonicalize(l, vec({Rational(1, 2)}), Quotient::LatticeMod2Lattice), Error);
}

TEST_CASE("canonicalize is idempotent and stays in the coset") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> coef(-7, 7);
  for (const auto& [name, gram] : testing::small_lattices()) {
    CAPTURE(name);
    const auto l = GramLattice::validate(gram);
    const auto t = coset_reps_dual_mod_L(l);
    for (int trial = 0; trial < 40; ++trial) {
      DualVector x = t[static_cast<std::size_t>(trial) % t.size()];
      for (std::size_t i = 0; i < l.dim(); ++i) x.coords[i] += coef(rng);
      for (Quotient q : {Quotient::DualModLattice, Quotient::DualMod2Lattice}) {
        const auto c = l.canonicalize(x, q);
        CHECK(l.canonicalize(c, q) == c);
        const DualVector diff = x - c;
        CHECK((q == Quotient::DualModLattice ? l.in_lattice(diff) : l.in_lattice(Rational(1, 2) * diff)));
        CHECK(l.coset_from_index(l.coset_index(x, q), q) == c);
      }
      const auto c2 = l.canonicalize(x, Quotient::DualMod2Dual);
      CHECK(l.in_dual(Rational(1, 2) * (x - c2)));
    }
  }
}

TEST_CASE("halve_mod_L on A1") {
  const auto l = GramLattice::validate(testing::a1());
  const auto h0 = halve_mod_L(l, vec({0}));
  REQUIRE(h0);
  CHECK(h0->solutions == std::vector<DualVector>{vec({0}), vec({Rational(1, 2)})});
  CHECK_FALSE(halve_mod_L(l, vec({Rational(1, 2)})));
  const auto h1 = halve_mod_L(l, vec({1}));
  REQUIRE(h1);
  CHECK(h1->solutions.size() == 2);
  CHECK(std::find(h1->solutions.begin(), h1->solutions.end(), vec({Rational(1, 2)})) != h1->solutions.end());
  CHECK_THROWS_AS(halve_mod_L(l, vec({Rational(1, 3)})), Error);
}

TEST_CASE("halve_mod_L solutions solve 2x = c and number |TwoTorsion|") {
  for (const auto& [name, gram] : testing::small_lattices()) {
    CAPTURE(name);
    const auto l = GramLattice::validate(gram);
    const std::size_t n = two_torsion(l).size();
    std::size_t solvable = 0;
    for (const auto& c : coset_reps_dual_mod_L(l).reps()) {
      const auto h = halve_mod_L(l, c);
      if (!h) continue;
      ++solvable;
      CHECK(h->solutions.size() == n);
      CHECK(l.in_lattice(Rational(2) * h->particular - c));
      for (const auto& x : h->solutions) {
        CHECK(l.in_dual(x));
        CHECK(l.in_lattice(Rational(2) * x - c));
      }
    }
    // Doubling is a homomorphism with kernel TwoTorsion.
    CHECK(solvable * n == l.det().get_ui());
  }
}
