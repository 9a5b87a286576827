#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "permorb/error.hpp"
#include "permorb/fusion_table.hpp"
#include "permorb/orbifold.hpp"
#include "lattices.hpp"

using namespace permorb;
using permorb::testing::vec;
using Kind = OrbifoldLabel::Kind;

namespace {

const Rational half(1, 2);

Orbifold make(const IntMatrix& g) { return Orbifold(GramLattice::validate(g)); }

}  // namespace

TEST_CASE("module counts") {
  CHECK(make(testing::a1()).modules().size() == 9);
  CHECK(make(testing::a2()).modules().size() == 15);
  CHECK(make(testing::a1x2()).modules().size() == 22);
  CHECK(make(testing::d4()).modules().size() == 22);
  CHECK(make(testing::a4()).modules().size() == 30);

  const auto e8 = make(testing::e8());
  const auto mods = e8.modules();
  REQUIRE(mods.size() == 4);
  CHECK(mods[0] == e8.diag(0, 0));
  CHECK(mods[1] == e8.diag(0, 1));
  CHECK(mods[2] == e8.twisted(0, 0));
  CHECK(mods[3] == e8.twisted(0, 1));
}

TEST_CASE("labels are canonical and ordered") {
  const auto o = make(testing::a1());
  CHECK(o.nondiag(vec({half}), vec({0})) == o.nondiag(vec({0}), vec({Rational(-1, 2)})));
  CHECK(o.diag(vec({Rational(3, 2)}), 1) == o.diag(vec({half}), 1));
  CHECK(o.twisted(vec({1}), 0) == o.twisted(vec({0}), 0));
  CHECK_THROWS_AS(o.nondiag(vec({1}), vec({0})), Error);
  const auto mods = o.modules();
  CHECK(std::is_sorted(mods.begin(), mods.end()));
}

TEST_CASE("decompose on A1") {
  const auto o = make(testing::a1());
  const auto& b = o.base();
  const auto u = o.decompose(o.diag(vec({0}), 0));
  REQUIRE(u.size() == 2);
  CHECK(u[0] == BaseConstituent{b.vl(vec({0})), b.split(vec({0}), Sign::Plus)});
  CHECK(u[1] == BaseConstituent{b.vl(vec({1})), b.split(vec({1}), Sign::Plus)});

  const auto d = o.decompose(o.diag(vec({half}), 0));
  REQUIRE(d.size() == 2);
  CHECK(d[0] == BaseConstituent{b.vl(vec({1})), b.split(vec({0}), Sign::Plus)});
  CHECK(d[1] == BaseConstituent{b.vl(vec({0})), b.split(vec({1}), Sign::Plus)});

  const auto t = o.decompose(o.twisted(vec({0}), 0));
  REQUIRE(t.size() == 2);
  for (const auto& [v, w] : t) CHECK(std::holds_alternative<TwistedSplit>(w));
}

TEST_CASE("induce on A1") {
  const auto o = make(testing::a1());
  const auto& b = o.base();
  const auto lam = b.index_of(vec({half}));
  const auto zero = b.index_of(vec({0}));
  CHECK(o.induce({VlLabel{lam}, b.twisted(b.chi_of(lam), Sign::Plus)}) == o.twisted(vec({half}), 0));
  CHECK_FALSE(o.induce({VlLabel{lam}, b.twisted(b.chi_of(zero), Sign::Plus)}));
  CHECK(o.induce({VlLabel{zero}, b.twisted(b.chi_of(zero), Sign::Minus)}) == o.twisted(vec({0}), 1));
  CHECK_FALSE(o.induce({VlLabel{zero}, b.split(vec({0}), Sign::Plus)}));
}

TEST_CASE("quantum dimensions and glob") {
  const auto a1 = make(testing::a1());
  CHECK(a1.qdim(a1.diag(0, 1)) == QSqrt(2, 1));
  CHECK(a1.qdim(a1.nondiag(vec({half}), vec({0}))) == QSqrt(2, 2));
  CHECK(a1.qdim(a1.twisted(0, 0)) == QSqrt::sqrt_of(2));
  CHECK(a1.glob() == QSqrt(2, 16));
  CHECK(make(testing::e8()).glob() == QSqrt(1, 4));
  CHECK(make(testing::a2()).glob() == QSqrt(3, 36));
}

TEST_CASE("duals") {
  const auto a1 = make(testing::a1());
  CHECK(a1.dual(a1.diag(vec({half}), 1)) == a1.diag(vec({half}), 1));
  CHECK(a1.dual(a1.twisted(0, 0)) == a1.twisted(0, 0));

  const auto a4 = make(testing::a4());
  const auto& g = a4.lattice();
  for (const auto& m : a4.modules()) {
    CHECK(a4.dual(a4.dual(m)) == m);
    if (m.kind != Kind::NonDiag) continue;
    const auto expected = a4.nondiag(-a4.rep(m.first), -a4.rep(m.second));
    CHECK(a4.dual(m) == expected);
    CHECK(g.in_lattice(a4.rep(m.first) + a4.rep(a4.dual(m).first)) !=
          g.in_lattice(a4.rep(m.first) + a4.rep(a4.dual(m).second)));
  }
}

TEST_CASE("fusion examples on A1") {
  const auto o = make(testing::a1());
  CHECK(o.fuse(o.diag(vec({half}), 0), o.diag(vec({half}), 1)) == FusionMultiset{{o.diag(0, 1), 1}});
  const auto n = o.nondiag(vec({half}), vec({0}));
  CHECK(o.fuse(n, n) == FusionMultiset{{o.diag(vec({0}), 0), 1},
                                       {o.diag(vec({0}), 1), 1},
                                       {o.diag(vec({half}), 0), 1},
                                       {o.diag(vec({half}), 1), 1}});
  CHECK(o.fuse(o.twisted(0, 0), o.twisted(0, 1)) ==
        FusionMultiset{{o.diag(vec({0}), 1), 1}, {o.diag(vec({half}), 1), 1}});
  CHECK(o.fuse(o.twisted(vec({0}), 0), o.twisted(vec({half}), 0)) == FusionMultiset{{n, 1}});
  for (const auto& m : o.modules()) CHECK(o.fuse(o.identity(), m) == FusionMultiset{{m, 1}});
}

TEST_CASE("simple currents") {
  const auto a1 = make(testing::a1());
  CHECK(a1.is_simple_current(a1.diag(1, 1)));
  CHECK_FALSE(a1.is_simple_current(a1.nondiag(0, 1)));
  CHECK_FALSE(a1.is_simple_current(a1.twisted(0, 0)));
  const auto e8 = make(testing::e8());
  for (const auto& m : e8.modules()) CHECK(e8.is_simple_current(m));
}

TEST_CASE("fusion table") {
  const auto o = make(testing::a1());
  const FusionTable t(o);
  REQUIRE(t.size() == 9);
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = 0; b < t.size(); ++b) {
      const auto prod = o.fuse(t.labels()[a], t.labels()[b]);
      std::size_t nonzero = 0;
      for (std::size_t c = 0; c < t.size(); ++c) {
        const auto it = prod.find(t.labels()[c]);
        CHECK(t(a, b, c) == (it == prod.end() ? 0U : it->second));
        CHECK(t(a, b, c) == t(b, a, c));
        nonzero += t(a, b, c) != 0;
      }
      CHECK(t.product(a, b).size() == nonzero);
    }
  CHECK_THROWS_AS(FusionTable(o, TableOptions{1, 1}), Error);
  try {
    FusionTable(o, TableOptions{1, 1});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TableTooLarge);
  }
}
