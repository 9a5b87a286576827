#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "permorb/base_fusion.hpp"
#include "permorb/error.hpp"
#include "permorb/verify.hpp"
#include "lattices.hpp"

using namespace permorb;
using permorb::testing::vec;

namespace {

const Rational half(1, 2);

BaseFusion a1_base() { return BaseFusion(GramLattice::validate(testing::a1())); }

}  // namespace

TEST_CASE("admissible triples modulo 2L on A1") {
  const auto l = GramLattice::validate(testing::a1());
  CHECK(is_admissible_triple(l, vec({half}), vec({0}), vec({half})));
  CHECK_FALSE(is_admissible_triple(l, vec({half}), vec({half}), vec({half})));
  CHECK(is_admissible_triple(l, vec({0}), vec({0}), vec({0})));
  CHECK(is_admissible_triple(l, vec({half}), vec({half}), vec({half}), Quotient::DualModLattice) == false);
  CHECK(is_admissible_triple(l, vec({half}), vec({half}), vec({1}), Quotient::DualModLattice));
  CHECK_THROWS_AS(is_admissible_triple(l, vec({Rational(1, 3)}), vec({0}), vec({0})), Error);
}

TEST_CASE("V_{sqrt2 L} fusion on A1") {
  const auto b = a1_base();
  CHECK(b.dual_count() == 4);
  CHECK(b.fuse_vl(b.vl(vec({half})), b.vl(vec({half}))) == b.vl(vec({1})));
  CHECK(b.fuse_vl(b.vl(vec({0})), b.vl(vec({Rational(3, 2)}))) == b.vl(vec({Rational(3, 2)})));
  CHECK(b.fuse_vl(b.vl(vec({Rational(3, 2)})), b.vl(vec({half}))) == b.vl(vec({0})));
  CHECK(b.dual(b.vl(vec({half}))) == b.vl(vec({Rational(3, 2)})));
  CHECK(b.dual(b.vl(vec({0}))) == b.vl(vec({0})));
}

TEST_CASE("V_{sqrt2 L}^+ labels on A1") {
  const auto b = a1_base();
  // 2 nonsplit (1/2 ~ 3/2 identified), 4 split, 4 twisted.
  CHECK(b.vlplus_labels().size() == 1 + 4 + 4);
  CHECK(b.nonsplit(vec({half})) == b.nonsplit(vec({Rational(3, 2)})));
  CHECK_THROWS_AS(b.nonsplit(vec({1})), Error);
  CHECK_THROWS_AS(b.split(vec({half}), Sign::Plus), Error);
  CHECK_THROWS_AS(b.twisted(SignCharacter(2, 0), Sign::Plus), Error);
  for (const auto& m : b.vlplus_labels()) CHECK(b.dual(m) == m);
}

TEST_CASE("fuse_vlplus examples on A1") {
  const auto b = a1_base();
  const VlPlusLabel ns = b.nonsplit(vec({half}));
  const VlPlusLabel one = b.split(vec({0}), Sign::Plus);
  CHECK(b.fuse_vlplus(ns, one) == BaseFusionMultiset{{ns, 1}});
  CHECK(b.fuse_vlplus(one, one) == BaseFusionMultiset{{one, 1}});
  const BaseFusionMultiset expected{{b.split(vec({0}), Sign::Plus), 1},
                                    {b.split(vec({0}), Sign::Minus), 1},
                                    {b.split(vec({1}), Sign::Plus), 1},
                                    {b.split(vec({1}), Sign::Minus), 1}};
  CHECK(b.fuse_vlplus(ns, ns) == expected);
}

TEST_CASE("base quantum dimensions") {
  const auto b = a1_base();
  CHECK(b.qdim(VlPlusLabel(b.split(vec({0}), Sign::Plus))) == QSqrt(2, 1));
  CHECK(b.qdim(VlPlusLabel(b.nonsplit(vec({half})))) == QSqrt(2, 2));
  CHECK(b.qdim(VlPlusLabel(b.twisted(b.chi_of(b.index_of(vec({0}))), Sign::Plus))) == QSqrt::sqrt_of(2));
  CHECK(b.qdim(b.vl(vec({half}))) == QSqrt(2, 1));
}

TEST_CASE("the base suite passes on small lattices") {
  for (const auto& [name, gram] :
       std::vector<testing::NamedGram>{{"A1", testing::a1()}, {"A1^2", testing::a1x2()}, {"A2", testing::a2()}}) {
    CAPTURE(name);
    const BaseFusion b(GramLattice::validate(gram));
    const auto report = verify_base(b);
    for (const auto& c : report.checks) {
      CAPTURE(c.name);
      CAPTURE(c.detail);
      CHECK(c.status == CheckStatus::Pass);
    }
  }
}

TEST_CASE("switching off a table row is noticed") {
  const auto b = a1_base();
  RowMask mask;
  mask.set(static_cast<std::size_t>(TableRow::SplitPlus_SplitSame));
  CHECK_FALSE(verify_base(b, mask).passed());
}
