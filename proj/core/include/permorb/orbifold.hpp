#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permorb/base_fusion.hpp"
#include "permorb/lattice.hpp"
#include "permorb/qsqrt.hpp"

namespace permorb {

/// Irreducible module of the 2-permutation orbifold (V_L tensor V_L)^Z2.
/// `first` and `second` are indices into L°/L (the order of coset_reps_dual_mod_L):
///   Diag      (lambda eps)~   first = lambda, second = eps
///   NonDiag   (lambda mu)     first < second
///   Twisted   (lambda eps)^   first = lambda, second = eps
struct OrbifoldLabel {
  enum class Kind : std::uint8_t { Diag = 0, NonDiag = 1, Twisted = 2 };

  Kind kind = Kind::Diag;
  std::size_t first = 0;
  std::size_t second = 0;

  friend auto operator<=>(const OrbifoldLabel&, const OrbifoldLabel&) = default;
};

using FusionMultiset = std::map<OrbifoldLabel, unsigned>;

/// A V_{sqrt2 L} tensor V_{sqrt2 L}^+ constituent.
using BaseConstituent = std::pair<VlLabel, VlPlusLabel>;

/// Which way round the two entries of a NonDiag label are read.
struct PairOrientation {
  bool swap_first = false;
  bool swap_second = false;
};

class Orbifold {
 public:
  explicit Orbifold(const GramLattice& lattice);

  const GramLattice& lattice() const noexcept { return lattice_; }
  const BaseFusion& base() const noexcept { return base_; }
  std::size_t dim() const noexcept { return lattice_.dim(); }
  /// l = |L°/L|
  std::size_t discriminant_order() const noexcept { return reps_.size(); }
  const DualVector& rep(std::size_t t) const { return reps_.at(t); }

  // --- L°/L index arithmetic
  std::size_t index_of(const DualVector& lambda) const;
  std::size_t add(std::size_t a, std::size_t b) const;
  std::size_t negate(std::size_t a) const { return neg_[a]; }

  // --- labels, canonicalized on construction
  OrbifoldLabel diag(std::size_t lambda, int eps) const;
  OrbifoldLabel nondiag(std::size_t lambda, std::size_t mu) const;
  OrbifoldLabel twisted(std::size_t lambda, int eps) const;
  OrbifoldLabel diag(const DualVector& lambda, int eps) const { return diag(index_of(lambda), eps); }
  OrbifoldLabel nondiag(const DualVector& lambda, const DualVector& mu) const;
  OrbifoldLabel twisted(const DualVector& lambda, int eps) const { return twisted(index_of(lambda), eps); }
  OrbifoldLabel identity() const { return OrbifoldLabel{}; }

  /// All (l^2 + 7l)/2 labels in the global order.
  std::vector<OrbifoldLabel> modules() const;
  static std::size_t expected_module_count(std::size_t l) { return (l * l + 7 * l) / 2; }

  std::vector<BaseConstituent> decompose(const OrbifoldLabel& m) const;
  /// Twisted-sector constituent -> the twisted module generated by it, or
  /// nothing when the constituent is not compatible (chi differs from chi_lambda).
  std::optional<OrbifoldLabel> induce(const BaseConstituent& w) const;

  QSqrt qdim(const OrbifoldLabel& m) const;
  QSqrt glob() const;
  OrbifoldLabel dual(const OrbifoldLabel& m) const;
  bool is_simple_current(const OrbifoldLabel& m) const { return qdim(m) == QSqrt(lattice_.det(), 1); }

  FusionMultiset fuse(const OrbifoldLabel& a, const OrbifoldLabel& b) const;

  /// The unified NonDiag rule contribution(a, b).
  void add_contribution(FusionMultiset& out, std::size_t a, std::size_t b) const;
  /// The three NonDiag x NonDiag case conditions, evaluated on the given
  /// orientation of both arguments; empty if none of them applies.
  std::optional<FusionMultiset> fuse_nondiag_literal(const OrbifoldLabel& a, const OrbifoldLabel& b,
                                                     PairOrientation orientation) const;

  std::string to_string(const OrbifoldLabel& m) const;

 private:
  std::vector<unsigned> digits(std::size_t index) const;
  FusionMultiset fuse_twisted_twisted(const OrbifoldLabel& a, const OrbifoldLabel& b) const;
  static int eps_of(std::size_t e) { return static_cast<int>(e & 1U); }

  GramLattice lattice_;
  BaseFusion base_;
  std::vector<unsigned> radix_;
  std::vector<DualVector> reps_;
  std::vector<std::vector<unsigned>> digits_;
  std::vector<std::size_t> neg_;
  std::vector<std::size_t> to_base_;     // T index -> L°/2L index
  std::vector<std::size_t> from_base_;   // L°/2L index -> T index
  std::vector<std::size_t> s_base_;      // L/2L representatives as L°/2L indices
};

std::string_view to_string(OrbifoldLabel::Kind kind);

}  // namespace permorb
