#include "permorb/character.hpp"

#include <bit>

#include "permorb/error.hpp"

namespace permorb {

SignCharacter::SignCharacter(std::size_t dim, std::uint64_t flips) : dim_(dim), flips_(flips) {
  if (dim > kMaxRank) throw Error(ErrorKind::DimensionMismatch, "sign characters support rank <= 64");
  if (dim < kMaxRank && (flips >> dim) != 0) throw Error(ErrorKind::DimensionMismatch, "character bits beyond rank");
}

SignCharacter SignCharacter::operator*(const SignCharacter& o) const {
  if (o.dim_ != dim_) throw Error(ErrorKind::DimensionMismatch, "character ranks differ");
  return SignCharacter(dim_, flips_ ^ o.flips_);
}

std::string to_string(const SignCharacter& chi) {
  std::string s;
  for (std::size_t i = 0; i < chi.dim(); ++i) s += chi.sign(i) > 0 ? '+' : '-';
  return s;
}

SignCharacter parse_character(const std::string& text) {
  std::uint64_t flips = 0;
  if (text.empty() || text.size() > SignCharacter::kMaxRank) {
    throw Error(ErrorKind::ParseError, "bad character string '" + text + "'");
  }
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '-') {
      flips |= std::uint64_t{1} << i;
    } else if (text[i] != '+') {
      throw Error(ErrorKind::ParseError, "bad character string '" + text + "'");
    }
  }
  return SignCharacter(text.size(), flips);
}

std::uint64_t pairing_parity_mask(const GramLattice& lattice, const DualVector& lambda) {
  auto p = lattice.pairings(lambda);
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!is_integer(p[i])) throw Error(ErrorKind::NotInDual, to_string(lambda) + " is not in the dual lattice");
    if (mod(p[i].get_num(), Integer(2)) != 0) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

SignCharacter chi_of_lambda(const GramLattice& lattice, const DualVector& lambda) {
  std::uint64_t mask = pairing_parity_mask(lattice, lambda);
  for (std::size_t i = 0; i < lattice.dim(); ++i) {
    Integer half_norm = lattice.gram()(i, i) / 2;
    if (mod(half_norm, Integer(2)) != 0) mask ^= std::uint64_t{1} << i;
  }
  return SignCharacter(lattice.dim(), mask);
}

int chi_eval(const SignCharacter& chi, const DualVector& alpha) {
  if (alpha.dim() != chi.dim()) throw Error(ErrorKind::DimensionMismatch, "character/vector rank mismatch");
  std::uint64_t odd = 0;
  for (std::size_t i = 0; i < alpha.dim(); ++i) {
    if (!is_integer(alpha.coords[i])) throw Error(ErrorKind::NotInLattice, to_string(alpha) + " is not in L");
    if (mod(alpha.coords[i].get_num(), Integer(2)) != 0) odd |= std::uint64_t{1} << i;
  }
  return std::popcount(odd & chi.flips()) % 2 == 0 ? 1 : -1;
}

SignCharacter chi_shift(const GramLattice& lattice, const SignCharacter& chi, const DualVector& lambda) {
  return SignCharacter(chi.dim(), chi.flips() ^ pairing_parity_mask(lattice, lambda));
}

int pi_pairing(const GramLattice& lattice, const DualVector& lambda, const DualVector& mu) {
  Rational p = lattice.inner(lambda, mu);
  if (!is_integer(p)) {
    throw Error(ErrorKind::NonIntegralPairing,
                "<" + to_string(lambda) + "," + to_string(mu) + "> = " + to_string(p) + " is not an integer");
  }
  return mod(p.get_num(), Integer(2)) == 0 ? 1 : -1;
}

}  // namespace permorb
