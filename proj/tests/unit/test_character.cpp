#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "permorb/character.hpp"
#include "permorb/error.hpp"
#include "lattices.hpp"

using namespace permorb;
using permorb::testing::vec;

TEST_CASE("chi_of_lambda on A1") {
  const auto l = GramLattice::validate(testing::a1());
  CHECK(chi_of_lambda(l, vec({0})) == SignCharacter(1, 1));
  CHECK(chi_of_lambda(l, vec({Rational(1, 2)})) == SignCharacter(1, 0));
  CHECK(chi_of_lambda(l, vec({Rational(3, 2)})) == SignCharacter(1, 0));
  CHECK_THROWS_AS(chi_of_lambda(l, vec({Rational(1, 3)})), Error);
}

TEST_CASE("chi_eval on A1") {
  const auto l = GramLattice::validate(testing::a1());
  const auto chi0 = chi_of_lambda(l, vec({0}));
  CHECK(chi_eval(chi0, vec({1})) == -1);
  CHECK(chi_eval(chi0, vec({0})) == 1);
  CHECK(chi_eval(SignCharacter(1, 0), vec({0})) == 1);
  CHECK(chi_eval(chi0, vec({2})) == 1);
  CHECK_THROWS_AS(chi_eval(chi0, vec({Rational(1, 2)})), Error);
}

TEST_CASE("chi_shift and pi_pairing on A1") {
  const auto l = GramLattice::validate(testing::a1());
  const auto chi0 = chi_of_lambda(l, vec({0}));
  CHECK(chi_shift(l, chi0, vec({Rational(1, 2)})) == chi_of_lambda(l, vec({Rational(1, 2)})));
  CHECK(chi_shift(l, chi0, vec({0})) == chi0);
  CHECK(chi_shift(l, chi0, vec({1})) == chi_of_lambda(l, vec({1})));
  CHECK(pi_pairing(l, vec({1}), vec({1})) == 1);
  CHECK(pi_pairing(l, vec({Rational(1, 2)}), vec({1})) == -1);
  CHECK(pi_pairing(l, vec({0}), vec({Rational(1, 2)})) == 1);
  CHECK_THROWS_AS(pi_pairing(l, vec({Rational(1, 2)}), vec({Rational(1, 2)})), Error);
}

TEST_CASE("character rendering round-trips") {
  const SignCharacter chi(3, 0b101);
  CHECK(to_string(chi) == "-+-");
  CHECK(parse_character("-+-") == chi);
  CHECK_THROWS_AS(parse_character("+x"), Error);
  CHECK_THROWS_AS(SignCharacter(2, 0b100), Error);
}

TEST_CASE("character properties on small lattices") {
  for (const auto& [name, gram] : testing::small_lattices()) {
    CAPTURE(name);
    const auto l = GramLattice::validate(gram);
    const std::size_t d = l.dim();
    const auto lat = coset_reps_L_mod_2L(l);
    const auto dual = coset_reps_dual_mod_L(l);

    // chi_eval is a homomorphism on L.
    for (std::uint64_t f = 0; f < (std::uint64_t{1} << d); ++f) {
      const SignCharacter chi(d, f);
      for (const auto& a : lat.reps())
        for (const auto& b : lat.reps()) CHECK(chi_eval(chi, a + b) == chi_eval(chi, a) * chi_eval(chi, b));
    }

    // chi_lambda only depends on lambda mod 2L°, and shifting by lambda in L
    // moves between the chi_mu.
    std::set<SignCharacter> seen;
    for (const auto& lambda : dual.reps()) {
      const auto chi = chi_of_lambda(l, lambda);
      seen.insert(chi);
      for (const auto& g : dual.reps()) CHECK(chi_of_lambda(l, lambda + Rational(2) * g) == chi);
      for (const auto& a : lat.reps()) CHECK(chi_shift(l, chi, a) == chi_of_lambda(l, lambda + a));
    }

    // lambda -> chi_lambda hits every character of L/2L once L°/2L° is covered.
    if (d <= 3) {
      std::set<SignCharacter> all;
      const auto reps = coset_system(l, Quotient::DualMod2Dual);
      for (const auto& lambda : reps.reps()) all.insert(chi_of_lambda(l, lambda));
      CHECK(all.size() == (std::size_t{1} << d));
    }
  }
}
