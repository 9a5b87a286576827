#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "permorb/arith.hpp"
#include "permorb/int_matrix.hpp"
#include "permorb/smith.hpp"

namespace permorb {

/// A vector of L tensor Q written in the basis alpha_1..alpha_d of L.
/// Membership in L is integrality of coords; membership in the dual lattice
/// is integrality of G * coords.
struct DualVector {
  std::vector<Rational> coords;

  DualVector() = default;
  explicit DualVector(std::vector<Rational> c) : coords(std::move(c)) {}
  static DualVector zero(std::size_t dim) { return DualVector(std::vector<Rational>(dim, Rational(0))); }
  static DualVector basis(std::size_t dim, std::size_t i);

  std::size_t dim() const noexcept { return coords.size(); }

  DualVector& operator+=(const DualVector& o);
  DualVector& operator-=(const DualVector& o);
  DualVector& operator*=(const Rational& s);

  friend DualVector operator+(DualVector a, const DualVector& b) { return a += b; }
  friend DualVector operator-(DualVector a, const DualVector& b) { return a -= b; }
  friend DualVector operator*(const Rational& s, DualVector a) { return a *= s; }
  DualVector operator-() const;

  friend bool operator==(const DualVector& a, const DualVector& b) { return a.coords == b.coords; }
};

/// "(1/2,0,1)"
std::string to_string(const DualVector& v);

/// The quotient groups that carry labels downstream.
enum class Quotient {
  DualModLattice,     // L°/L, order l
  LatticeMod2Lattice, // L/2L, order 2^d
  DualMod2Lattice,    // L°/2L, order 2^d * l
  DualMod2Dual,       // L°/2L°, order 2^d
};

std::string to_string(Quotient q);

/// Positive-definite even lattice given by its Gram matrix, together with the
/// Smith normal form data used to enumerate and canonicalize cosets.
class GramLattice {
 public:
  /// Throws NotSymmetric, NotEven, NotPositiveDefinite or DegenerateLattice.
  static GramLattice validate(const IntMatrix& gram);

  std::size_t dim() const noexcept { return gram_.rows(); }
  const IntMatrix& gram() const noexcept { return gram_; }
  /// l = det(G) = |L°/L|
  const Integer& det() const noexcept { return det_; }
  const SmithForm& snf() const noexcept { return snf_; }
  const std::vector<Integer>& elementary_divisors() const noexcept { return divisors_; }

  Rational inner(const DualVector& x, const DualVector& y) const;
  /// (<x, alpha_1>, ..., <x, alpha_d>) = G * x.
  std::vector<Rational> pairings(const DualVector& x) const;

  bool in_dual(const DualVector& x) const;
  bool in_lattice(const DualVector& x) const;

  /// Order of the quotient group.
  std::size_t coset_count(Quotient q) const;
  /// Cyclic factor orders of the quotient, most significant first.
  std::vector<Integer> moduli(Quotient q) const;

  /// Reduced coordinates of the coset of x; componentwise in [0, moduli[i]).
  /// Throws NotInAmbientGroup when x is not in the numerator group.
  std::vector<Integer> coset_coordinates(const DualVector& x, Quotient q) const;
  /// Canonical representative of the coset with the given reduced coordinates.
  DualVector coset_representative(const std::vector<Integer>& coords, Quotient q) const;

  /// Unique stored representative of the coset of x.
  DualVector canonicalize(const DualVector& x, Quotient q) const;
  /// Mixed-radix rank of the coset; this is the global total order.
  std::size_t coset_index(const DualVector& x, Quotient q) const;
  DualVector coset_from_index(std::size_t index, Quotient q) const;

 private:
  GramLattice() = default;
  void require_dim(const DualVector& x) const;
  std::vector<Integer> integer_pairings(const DualVector& x, Quotient q) const;

  IntMatrix gram_;
  Integer det_;
  SmithForm snf_;
  RatMatrix gram_inverse_;
  std::vector<Integer> divisors_;
};

GramLattice validate_lattice(const IntMatrix& gram);

Rational inner(const GramLattice& lattice, const DualVector& x, const DualVector& y);

DualVector canonicalize(const GramLattice& lattice, const DualVector& x, Quotient q);

/// Ordered, duplicate-free list of canonical coset representatives.
class CosetSystem {
 public:
  CosetSystem(Quotient modulus, std::vector<DualVector> reps, std::vector<std::size_t> indices)
      : modulus_(modulus), reps_(std::move(reps)), indices_(std::move(indices)) {}

  Quotient modulus() const noexcept { return modulus_; }
  const std::vector<DualVector>& reps() const& noexcept { return reps_; }
  std::vector<DualVector> reps() && { return std::move(reps_); }
  std::size_t size() const noexcept { return reps_.size(); }
  const DualVector& operator[](std::size_t i) const { return reps_[i]; }
  /// Coset index (in the full quotient) of each stored representative.
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }

 private:
  Quotient modulus_;
  std::vector<DualVector> reps_;
  std::vector<std::size_t> indices_;
};

/// Full set of representatives of any of the quotients, in index order.
CosetSystem coset_system(const GramLattice& lattice, Quotient q);
CosetSystem coset_reps_dual_mod_L(const GramLattice& lattice);
CosetSystem coset_reps_L_mod_2L(const GramLattice& lattice);
/// {gamma in L°/L : 2 gamma in L}, a subset of coset_reps_dual_mod_L.
CosetSystem two_torsion(const GramLattice& lattice);

struct Halving {
  DualVector particular;
  /// All solutions x in L°/L of 2x = c mod L, canonical, in index order.
  std::vector<DualVector> solutions;
};

/// Solves 2x = c (mod L) over L°. Empty when c is not twice a dual vector mod L.
std::optional<Halving> halve_mod_L(const GramLattice& lattice, const DualVector& c);

}  // namespace permorb
