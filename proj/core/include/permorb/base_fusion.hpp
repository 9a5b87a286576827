#pragma once

#include <bitset>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "permorb/character.hpp"
#include "permorb/lattice.hpp"
#include "permorb/qsqrt.hpp"

namespace permorb {

enum class Sign : std::int8_t { Plus = 1, Minus = -1 };

inline Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline Sign operator*(Sign a, Sign b) { return a == b ? Sign::Plus : Sign::Minus; }
inline Sign sign_of(int v) { return v > 0 ? Sign::Plus : Sign::Minus; }
inline char symbol(Sign s) { return s == Sign::Plus ? '+' : '-'; }

// All sqrt(2)L data is held in unscaled L-coordinates: the label carrying
// lambda stands for lambda/sqrt2 + sqrt2 L, so "in sqrt2 L" becomes "in 2L".
// Indices below refer to the quotient L°/2L in its mixed-radix order.

/// Irreducible V_{sqrt2 L}-module V_{lambda/sqrt2 + sqrt2 L}.
struct VlLabel {
  std::size_t lambda = 0;
  friend auto operator<=>(const VlLabel&, const VlLabel&) = default;
};

/// V_{lambda/sqrt2+sqrt2L} with lambda not in L; lambda and -lambda identified
/// (the smaller index is stored).
struct UntwistedNonSplit {
  std::size_t lambda = 0;
  friend auto operator<=>(const UntwistedNonSplit&, const UntwistedNonSplit&) = default;
};

/// V^{+-}_{lambda/sqrt2+sqrt2L} with lambda in L. Representatives are the
/// canonical ones of L°/2L, which are fixed by negation since 2 lambda in 2L.
struct UntwistedSplit {
  std::size_t lambda = 0;
  Sign sign = Sign::Plus;
  friend auto operator<=>(const UntwistedSplit&, const UntwistedSplit&) = default;
};

/// V_{sqrt2 L}^{T_chi, +-}.
struct TwistedSplit {
  SignCharacter chi;
  Sign sign = Sign::Plus;
  friend auto operator<=>(const TwistedSplit&, const TwistedSplit&) = default;
};

using VlPlusLabel = std::variant<UntwistedNonSplit, UntwistedSplit, TwistedSplit>;
using BaseFusionMultiset = std::map<VlPlusLabel, unsigned>;

/// The displayed lines of the V_{sqrt2 L}^+ fusion table, grouped by the shape
/// of the first module. Each can be switched off for mutation testing.
enum class TableRow : std::uint8_t {
  NonSplit_NonSplitPair,
  NonSplit_SplitNonSplit,
  NonSplit_TwistedPair,
  SplitPlus_NonSplitPair,
  SplitPlus_SplitSame,
  SplitPlus_SplitOpposite,
  SplitPlus_TwistedEven,
  SplitPlus_TwistedOdd,
  SplitMinus_NonSplitPair,
  SplitMinus_SplitOpposite,
  SplitMinus_SplitSame,
  SplitMinus_TwistedEven,
  SplitMinus_TwistedOdd,
  TwistedPlus_NonSplit,
  TwistedPlus_SplitEven,
  TwistedPlus_SplitOdd,
  TwistedMinus_NonSplit,
  TwistedMinus_SplitEven,
  TwistedMinus_SplitOdd,
  Count,
};

inline constexpr std::size_t kTableRowCount = static_cast<std::size_t>(TableRow::Count);
using RowMask = std::bitset<kTableRowCount>;

std::string to_string(TableRow row);

/// (lambda, mu, gamma) in L° is admissible modulo `modulus` (L or 2L) if
/// p lambda + q mu + r gamma lies in it for some signs p, q, r.
/// Throws NotInDual.
bool is_admissible_triple(const GramLattice& lattice, const DualVector& lambda, const DualVector& mu,
                          const DualVector& gamma, Quotient modulus = Quotient::DualMod2Lattice);

/// Label arithmetic and fusion for V_{sqrt2 L} and V_{sqrt2 L}^+.
class BaseFusion {
 public:
  explicit BaseFusion(const GramLattice& lattice);

  const GramLattice& lattice() const noexcept { return lattice_; }
  std::size_t dim() const noexcept { return lattice_.dim(); }

  // --- L°/2L index arithmetic
  std::size_t dual_count() const noexcept { return reps_.size(); }
  std::size_t index_of(const DualVector& lambda) const;
  const DualVector& rep(std::size_t index) const { return reps_.at(index); }
  std::size_t add(std::size_t a, std::size_t b) const;
  std::size_t negate(std::size_t a) const { return neg_[a]; }
  bool in_lattice(std::size_t a) const { return in_lattice_[a]; }

  // --- V_{sqrt2 L}
  VlLabel vl(const DualVector& lambda) const { return VlLabel{index_of(lambda)}; }
  std::vector<VlLabel> vl_labels() const;
  VlLabel fuse_vl(VlLabel a, VlLabel b) const { return VlLabel{add(a.lambda, b.lambda)}; }
  VlLabel dual(VlLabel a) const { return VlLabel{negate(a.lambda)}; }

  // --- V_{sqrt2 L}^+
  UntwistedNonSplit nonsplit(const DualVector& lambda) const;
  UntwistedSplit split(const DualVector& lambda, Sign sign) const;
  TwistedSplit twisted(const SignCharacter& chi, Sign sign) const;
  UntwistedNonSplit nonsplit_from_index(std::size_t index) const;

  /// Every irreducible V_{sqrt2 L}^+-module, sorted.
  std::vector<VlPlusLabel> vlplus_labels() const;
  /// All labels are self-dual.
  VlPlusLabel dual(const VlPlusLabel& a) const { return a; }

  /// Literal table lookup N(a, b; c) keyed on the shape of a.
  unsigned table_rule(const VlPlusLabel& a, const VlPlusLabel& b, const VlPlusLabel& c,
                      const RowMask& disabled = {}) const;
  /// N(a, b; c) completed by symmetry and self-duality: accepted if any
  /// permutation of (a, b, c) matches a table row.
  unsigned fusion_rule(const VlPlusLabel& a, const VlPlusLabel& b, const VlPlusLabel& c,
                       const RowMask& disabled = {}) const;
  BaseFusionMultiset fuse_vlplus(const VlPlusLabel& a, const VlPlusLabel& b, const RowMask& disabled = {}) const;

  QSqrt qdim(VlLabel) const;
  QSqrt qdim(const VlPlusLabel& a) const;

  // --- characters in index form
  SignCharacter chi_of(std::size_t lambda) const;
  SignCharacter shift(const SignCharacter& chi, std::size_t lambda) const;
  /// chi(sqrt2 lambda) for lambda in L.
  int eval(const SignCharacter& chi, std::size_t lambda) const;
  /// (-1)^<lambda,mu> for lambda, mu in L.
  int pi(std::size_t lambda, std::size_t mu) const;
  bool admissible(std::size_t a, std::size_t b, std::size_t c) const;

  std::string to_string(VlLabel a) const;
  std::string to_string(const VlPlusLabel& a) const;

 private:
  std::vector<unsigned> digits(std::size_t index) const;
  std::size_t from_digits(const std::vector<unsigned>& d) const;

  GramLattice lattice_;
  std::vector<unsigned> radix_;
  std::vector<DualVector> reps_;
  std::vector<std::vector<unsigned>> digits_;
  std::vector<std::size_t> neg_;
  std::vector<bool> in_lattice_;
  std::vector<std::uint64_t> parity_;     // bit i: <lambda, alpha_i> odd
  std::vector<std::uint64_t> odd_coords_; // lattice elements: bit i: n_i odd
  std::vector<std::uint64_t> gram_parity_rows_;
  std::uint64_t half_norm_parity_ = 0;
};

}  // namespace permorb
