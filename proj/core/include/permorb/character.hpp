#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "permorb/lattice.hpp"

namespace permorb {

/// A character of L/2L (equivalently of sqrt(2)L / 2 sqrt(2)L), stored by its
/// values on the generators: bit i of `flips` is set iff chi(sqrt2 alpha_i) = -1.
class SignCharacter {
 public:
  static constexpr std::size_t kMaxRank = 64;

  SignCharacter() = default;
  SignCharacter(std::size_t dim, std::uint64_t flips);

  std::size_t dim() const noexcept { return dim_; }
  std::uint64_t flips() const noexcept { return flips_; }
  /// +1 or -1
  int sign(std::size_t i) const { return (flips_ >> i) & 1U ? -1 : 1; }

  /// Pointwise product.
  SignCharacter operator*(const SignCharacter& o) const;

  friend bool operator==(const SignCharacter&, const SignCharacter&) = default;
  friend auto operator<=>(const SignCharacter&, const SignCharacter&) = default;

 private:
  std::size_t dim_ = 0;
  std::uint64_t flips_ = 0;
};

/// "+-+" style rendering, one symbol per generator.
std::string to_string(const SignCharacter& chi);
/// Inverse of to_string; throws ParseError.
SignCharacter parse_character(const std::string& text);

/// chi_lambda(sqrt2 alpha_i) = (-1)^(<alpha_i,alpha_i>/2 + <lambda,alpha_i>).
/// Throws NotInDual.
SignCharacter chi_of_lambda(const GramLattice& lattice, const DualVector& lambda);

/// chi(sqrt2 alpha) for alpha = sum n_i alpha_i in L, extended from the
/// generators as a group homomorphism. The generator formula above does not
/// extend verbatim to composite alpha: it picks up cross terms <alpha_i,alpha_j>.
/// Throws NotInLattice.
int chi_eval(const SignCharacter& chi, const DualVector& alpha);

/// The shifted character chi^(lambda/sqrt2): signs[i] *= (-1)^<lambda,alpha_i>.
/// For lambda in L this equals chi_{mu+lambda} when chi = chi_mu. Throws NotInDual.
SignCharacter chi_shift(const GramLattice& lattice, const SignCharacter& chi, const DualVector& lambda);

/// (-1)^<lambda,mu>; throws NonIntegralPairing if <lambda,mu> is not an integer.
int pi_pairing(const GramLattice& lattice, const DualVector& lambda, const DualVector& mu);

/// Bit i set iff <lambda, alpha_i> is odd. Requires lambda in L°.
std::uint64_t pairing_parity_mask(const GramLattice& lattice, const DualVector& lambda);

}  // namespace permorb
