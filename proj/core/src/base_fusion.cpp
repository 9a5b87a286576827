#include "permorb/base_fusion.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "permorb/error.hpp"

namespace permorb {

std::string to_string(TableRow row) {
  switch (row) {
    case TableRow::NonSplit_NonSplitPair: return "nonsplit: (nonsplit, nonsplit) admissible";
    case TableRow::NonSplit_SplitNonSplit: return "nonsplit: (split, nonsplit) and (nonsplit, split) admissible";
    case TableRow::NonSplit_TwistedPair: return "nonsplit: (T_chi, T_chi^(lambda)) all signs";
    case TableRow::SplitPlus_NonSplitPair: return "split+: (nonsplit, nonsplit) admissible";
    case TableRow::SplitPlus_SplitSame: return "split+: (split s, split s) pi = 1";
    case TableRow::SplitPlus_SplitOpposite: return "split+: (split s, split -s) pi = -1";
    case TableRow::SplitPlus_TwistedEven: return "split+: (T_chi s, T_chi+lambda s) chi(lambda) = 1";
    case TableRow::SplitPlus_TwistedOdd: return "split+: (T_chi s, T_chi+lambda -s) chi(lambda) = -1";
    case TableRow::SplitMinus_NonSplitPair: return "split-: (nonsplit, nonsplit) admissible";
    case TableRow::SplitMinus_SplitOpposite: return "split-: (split s, split -s) pi = 1";
    case TableRow::SplitMinus_SplitSame: return "split-: (split s, split s) pi = -1";
    case TableRow::SplitMinus_TwistedEven: return "split-: (T_chi s, T_chi+lambda -s) chi(lambda) = 1";
    case TableRow::SplitMinus_TwistedOdd: return "split-: (T_chi s, T_chi+lambda s) chi(lambda) = -1";
    case TableRow::TwistedPlus_NonSplit: return "twisted+: (nonsplit, T_chi^(lambda)) both orders";
    case TableRow::TwistedPlus_SplitEven: return "twisted+: (split s, T_chi+lambda s) chi(lambda) = 1";
    case TableRow::TwistedPlus_SplitOdd: return "twisted+: (split s, T_chi+lambda -s) chi(lambda) = -1";
    case TableRow::TwistedMinus_NonSplit: return "twisted-: (nonsplit, T_chi^(lambda)) both orders";
    case TableRow::TwistedMinus_SplitEven: return "twisted-: (split s, T_chi+lambda -s) chi(lambda) = 1";
    case TableRow::TwistedMinus_SplitOdd: return "twisted-: (split s, T_chi+lambda s) chi(lambda) = -1";
    case TableRow::Count: break;
  }
  return "?";
}

bool is_admissible_triple(const GramLattice& lattice, const DualVector& lambda, const DualVector& mu,
                          const DualVector& gamma, Quotient modulus) {
  for (const auto* v : {&lambda, &mu, &gamma})
    if (!lattice.in_dual(*v)) throw Error(ErrorKind::NotInDual, to_string(*v) + " is not in the dual lattice");
  if (modulus != Quotient::DualModLattice && modulus != Quotient::DualMod2Lattice) {
    throw Error(ErrorKind::NotInAmbientGroup, "admissibility is defined modulo L or 2L");
  }
  const Rational scale = modulus == Quotient::DualModLattice ? Rational(1) : Rational(1, 2);
  // The global sign is irrelevant, so fix p = +1.
  for (int q : {1, -1})
    for (int r : {1, -1}) {
      DualVector v = lambda + Rational(q) * mu + Rational(r) * gamma;
      if (lattice.in_lattice(scale * v)) return true;
    }
  return false;
}

BaseFusion::BaseFusion(const GramLattice& lattice) : lattice_(lattice) {
  const std::size_t d = lattice_.dim();
  if (d > SignCharacter::kMaxRank) throw Error(ErrorKind::DimensionMismatch, "rank too large for sign characters");
  for (const auto& m : lattice_.moduli(Quotient::DualMod2Lattice)) radix_.push_back(static_cast<unsigned>(m.get_ui()));

  for (std::size_t i = 0; i < d; ++i) {
    std::uint64_t row = 0;
    for (std::size_t j = 0; j < d; ++j)
      if (mod(lattice_.gram()(i, j), Integer(2)) != 0) row |= std::uint64_t{1} << j;
    gram_parity_rows_.push_back(row);
    if (mod(Integer(lattice_.gram()(i, i) / 2), Integer(2)) != 0) half_norm_parity_ |= std::uint64_t{1} << i;
  }

  const std::size_t n = lattice_.coset_count(Quotient::DualMod2Lattice);
  reps_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    reps_.push_back(lattice_.coset_from_index(i, Quotient::DualMod2Lattice));
    digits_.push_back(digits(i));
    in_lattice_.push_back(lattice_.in_lattice(reps_.back()));
    parity_.push_back(pairing_parity_mask(lattice_, reps_.back()));
    std::uint64_t odd = 0;
    if (in_lattice_.back())
      for (std::size_t k = 0; k < d; ++k)
        if (mod(reps_.back().coords[k].get_num(), Integer(2)) != 0) odd |= std::uint64_t{1} << k;
    odd_coords_.push_back(odd);
  }
  neg_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<unsigned> dg = digits_[i];
    for (std::size_t k = 0; k < dg.size(); ++k) dg[k] = (radix_[k] - dg[k]) % radix_[k];
    neg_[i] = from_digits(dg);
  }
}

std::vector<unsigned> BaseFusion::digits(std::size_t index) const {
  std::vector<unsigned> dg(radix_.size());
  for (std::size_t k = radix_.size(); k-- > 0;) {
    dg[k] = static_cast<unsigned>(index % radix_[k]);
    index /= radix_[k];
  }
  return dg;
}

std::size_t BaseFusion::from_digits(const std::vector<unsigned>& dg) const {
  std::size_t index = 0;
  for (std::size_t k = 0; k < dg.size(); ++k) index = index * radix_[k] + dg[k];
  return index;
}

std::size_t BaseFusion::index_of(const DualVector& lambda) const {
  if (!lattice_.in_dual(lambda)) throw Error(ErrorKind::NotInDual, permorb::to_string(lambda) + " is not in the dual lattice");
  return lattice_.coset_index(lambda, Quotient::DualMod2Lattice);
}

std::size_t BaseFusion::add(std::size_t a, std::size_t b) const {
  const auto& da = digits_[a];
  const auto& db = digits_[b];
  std::size_t index = 0;
  for (std::size_t k = 0; k < radix_.size(); ++k) index = index * radix_[k] + (da[k] + db[k]) % radix_[k];
  return index;
}

std::vector<VlLabel> BaseFusion::vl_labels() const {
  std::vector<VlLabel> out;
  for (std::size_t i = 0; i < dual_count(); ++i) out.push_back(VlLabel{i});
  return out;
}

UntwistedNonSplit BaseFusion::nonsplit_from_index(std::size_t index) const {
  if (in_lattice_.at(index)) {
    throw Error(ErrorKind::NotInAmbientGroup, permorb::to_string(reps_[index]) + " lies in L; the module splits");
  }
  return UntwistedNonSplit{std::min(index, neg_[index])};
}

UntwistedNonSplit BaseFusion::nonsplit(const DualVector& lambda) const { return nonsplit_from_index(index_of(lambda)); }

UntwistedSplit BaseFusion::split(const DualVector& lambda, Sign sign) const {
  if (!lattice_.in_lattice(lambda)) throw Error(ErrorKind::NotInLattice, permorb::to_string(lambda) + " is not in L");
  return UntwistedSplit{index_of(lambda), sign};
}

TwistedSplit BaseFusion::twisted(const SignCharacter& chi, Sign sign) const {
  if (chi.dim() != dim()) throw Error(ErrorKind::DimensionMismatch, "character rank differs from lattice rank");
  return TwistedSplit{chi, sign};
}

std::vector<VlPlusLabel> BaseFusion::vlplus_labels() const {
  std::vector<VlPlusLabel> out;
  for (std::size_t i = 0; i < dual_count(); ++i) {
    if (in_lattice_[i]) {
      out.emplace_back(UntwistedSplit{i, Sign::Plus});
      out.emplace_back(UntwistedSplit{i, Sign::Minus});
    } else if (i <= neg_[i]) {
      out.emplace_back(UntwistedNonSplit{i});
    }
  }
  const std::uint64_t chars = std::uint64_t{1} << dim();
  for (std::uint64_t m = 0; m < chars; ++m) {
    out.emplace_back(TwistedSplit{SignCharacter(dim(), m), Sign::Plus});
    out.emplace_back(TwistedSplit{SignCharacter(dim(), m), Sign::Minus});
  }
  std::sort(out.begin(), out.end());
  return out;
}

SignCharacter BaseFusion::chi_of(std::size_t lambda) const {
  return SignCharacter(dim(), parity_[lambda] ^ half_norm_parity_);
}

SignCharacter BaseFusion::shift(const SignCharacter& chi, std::size_t lambda) const {
  return SignCharacter(dim(), chi.flips() ^ parity_[lambda]);
}

int BaseFusion::eval(const SignCharacter& chi, std::size_t lambda) const {
  if (!in_lattice_[lambda]) throw Error(ErrorKind::NotInLattice, permorb::to_string(reps_[lambda]) + " is not in L");
  return std::popcount(chi.flips() & odd_coords_[lambda]) % 2 == 0 ? 1 : -1;
}

int BaseFusion::pi(std::size_t lambda, std::size_t mu) const {
  if (!in_lattice_[lambda] || !in_lattice_[mu]) {
    throw Error(ErrorKind::NonIntegralPairing, "pi pairing is only used on lattice vectors here");
  }
  unsigned parity = 0;
  for (std::size_t i = 0; i < dim(); ++i)
    if ((odd_coords_[lambda] >> i) & 1U) parity += std::popcount(gram_parity_rows_[i] & odd_coords_[mu]);
  return parity % 2 == 0 ? 1 : -1;
}

bool BaseFusion::admissible(std::size_t a, std::size_t b, std::size_t c) const {
  const std::size_t ab = add(a, b);
  const std::size_t a_b = add(a, neg_[b]);
  return add(ab, c) == 0 || add(ab, neg_[c]) == 0 || add(a_b, c) == 0 || add(a_b, neg_[c]) == 0;
}

unsigned BaseFusion::table_rule(const VlPlusLabel& a, const VlPlusLabel& b, const VlPlusLabel& c,
                                const RowMask& disabled) const {
  auto on = [&](TableRow r) { return !disabled.test(static_cast<std::size_t>(r)); };
  const auto* b_ns = std::get_if<UntwistedNonSplit>(&b);
  const auto* b_sp = std::get_if<UntwistedSplit>(&b);
  const auto* b_tw = std::get_if<TwistedSplit>(&b);
  const auto* c_ns = std::get_if<UntwistedNonSplit>(&c);
  const auto* c_sp = std::get_if<UntwistedSplit>(&c);
  const auto* c_tw = std::get_if<TwistedSplit>(&c);

  if (const auto* m1 = std::get_if<UntwistedNonSplit>(&a)) {
    const std::size_t l = m1->lambda;
    if (b_ns && c_ns) return on(TableRow::NonSplit_NonSplitPair) && admissible(l, b_ns->lambda, c_ns->lambda);
    if (b_sp && c_ns) return on(TableRow::NonSplit_SplitNonSplit) && admissible(l, b_sp->lambda, c_ns->lambda);
    if (b_ns && c_sp) return on(TableRow::NonSplit_SplitNonSplit) && admissible(l, c_sp->lambda, b_ns->lambda);
    if (b_tw && c_tw) return on(TableRow::NonSplit_TwistedPair) && c_tw->chi == shift(b_tw->chi, l);
    return 0;
  }

  if (const auto* m1 = std::get_if<UntwistedSplit>(&a)) {
    const std::size_t l = m1->lambda;
    const bool plus = m1->sign == Sign::Plus;
    if (b_ns && c_ns) {
      return on(plus ? TableRow::SplitPlus_NonSplitPair : TableRow::SplitMinus_NonSplitPair) &&
             admissible(l, b_ns->lambda, c_ns->lambda);
    }
    if (b_sp && c_sp) {
      if (!admissible(l, b_sp->lambda, c_sp->lambda)) return 0;
      const int p = pi(l, b_sp->lambda);
      const bool same = b_sp->sign == c_sp->sign;
      if (plus) {
        if (p == 1) return on(TableRow::SplitPlus_SplitSame) && same;
        return on(TableRow::SplitPlus_SplitOpposite) && !same;
      }
      if (p == 1) return on(TableRow::SplitMinus_SplitOpposite) && !same;
      return on(TableRow::SplitMinus_SplitSame) && same;
    }
    if (b_tw && c_tw) {
      // (T_chi, T_{chi+lambda}) and the reversed pair (T_{chi+lambda}, T_chi),
      // both conditioned on chi(sqrt2 lambda) for the unshifted chi.
      const bool forward = c_tw->chi == shift(b_tw->chi, l);
      const bool backward = b_tw->chi == shift(c_tw->chi, l);
      const bool same = b_tw->sign == c_tw->sign;
      for (int e : {1, -1}) {
        const bool cond = (forward && eval(b_tw->chi, l) == e) || (backward && eval(c_tw->chi, l) == e);
        if (!cond) continue;
        TableRow row;
        bool want_same;
        if (plus) {
          row = e == 1 ? TableRow::SplitPlus_TwistedEven : TableRow::SplitPlus_TwistedOdd;
          want_same = e == 1;
        } else {
          row = e == 1 ? TableRow::SplitMinus_TwistedEven : TableRow::SplitMinus_TwistedOdd;
          want_same = e == -1;
        }
        if (on(row) && same == want_same) return 1;
      }
      return 0;
    }
    return 0;
  }

  const auto& m1 = std::get<TwistedSplit>(a);
  const bool plus = m1.sign == Sign::Plus;
  const TableRow nonsplit_row = plus ? TableRow::TwistedPlus_NonSplit : TableRow::TwistedMinus_NonSplit;
  if (b_ns && c_tw) return on(nonsplit_row) && c_tw->chi == shift(m1.chi, b_ns->lambda);
  if (b_tw && c_ns) return on(nonsplit_row) && b_tw->chi == shift(m1.chi, c_ns->lambda);

  const UntwistedSplit* sp = b_sp ? b_sp : c_sp;
  const TwistedSplit* tw = b_sp ? c_tw : b_tw;
  if (!sp || !tw) return 0;
  if (tw->chi != shift(m1.chi, sp->lambda)) return 0;
  const int e = eval(m1.chi, sp->lambda);
  const bool same = sp->sign == tw->sign;
  TableRow row;
  bool want_same;
  if (plus) {
    row = e == 1 ? TableRow::TwistedPlus_SplitEven : TableRow::TwistedPlus_SplitOdd;
    want_same = e == 1;
  } else {
    row = e == 1 ? TableRow::TwistedMinus_SplitEven : TableRow::TwistedMinus_SplitOdd;
    want_same = e == -1;
  }
  return on(row) && same == want_same;
}

unsigned BaseFusion::fusion_rule(const VlPlusLabel& a, const VlPlusLabel& b, const VlPlusLabel& c,
                                 const RowMask& disabled) const {
  const std::array<const VlPlusLabel*, 3> t{&a, &b, &c};
  static constexpr std::array<std::array<int, 3>, 6> perms{
      {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 0, 1}, {1, 2, 0}, {2, 1, 0}}};
  for (const auto& p : perms)
    if (table_rule(*t[p[0]], *t[p[1]], *t[p[2]], disabled)) return 1;
  return 0;
}

BaseFusionMultiset BaseFusion::fuse_vlplus(const VlPlusLabel& a, const VlPlusLabel& b, const RowMask& disabled) const {
  BaseFusionMultiset out;
  for (const auto& c : vlplus_labels())
    if (unsigned n = fusion_rule(a, b, c, disabled)) out[c] += n;
  return out;
}

QSqrt BaseFusion::qdim(VlLabel) const { return QSqrt(lattice_.det(), 1); }

QSqrt BaseFusion::qdim(const VlPlusLabel& a) const {
  if (std::holds_alternative<UntwistedNonSplit>(a)) return QSqrt(lattice_.det(), 2);
  if (std::holds_alternative<UntwistedSplit>(a)) return QSqrt(lattice_.det(), 1);
  return QSqrt::sqrt_of(lattice_.det());
}

std::string BaseFusion::to_string(VlLabel a) const {
  std::string s = permorb::to_string(reps_.at(a.lambda));
  return "V" + s;
}

std::string BaseFusion::to_string(const VlPlusLabel& a) const {
  if (const auto* x = std::get_if<UntwistedNonSplit>(&a)) return "W" + permorb::to_string(reps_.at(x->lambda));
  if (const auto* x = std::get_if<UntwistedSplit>(&a)) {
    std::string s = permorb::to_string(reps_.at(x->lambda));
    s.back() = ';';
    return "W" + s + symbol(x->sign) + ")";
  }
  const auto& t = std::get<TwistedSplit>(a);
  return "WT(" + permorb::to_string(t.chi) + ";" + symbol(t.sign) + ")";
}

}  // namespace permorb
