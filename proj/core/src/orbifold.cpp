#include "permorb/orbifold.hpp"

#include <algorithm>

#include "permorb/error.hpp"

namespace permorb {

std::string_view to_string(OrbifoldLabel::Kind kind) {
  switch (kind) {
    case OrbifoldLabel::Kind::Diag: return "diag";
    case OrbifoldLabel::Kind::NonDiag: return "nondiag";
    case OrbifoldLabel::Kind::Twisted: return "twisted";
  }
  return "?";
}

Orbifold::Orbifold(const GramLattice& lattice) : lattice_(lattice), base_(lattice) {
  for (const auto& m : lattice_.moduli(Quotient::DualModLattice)) radix_.push_back(static_cast<unsigned>(m.get_ui()));
  reps_ = coset_reps_dual_mod_L(lattice_).reps();
  for (std::size_t t = 0; t < reps_.size(); ++t) {
    digits_.push_back(digits(t));
    to_base_.push_back(base_.index_of(reps_[t]));
  }
  for (std::size_t t = 0; t < reps_.size(); ++t) neg_.push_back(index_of(-reps_[t]));
  for (std::size_t i = 0; i < base_.dual_count(); ++i)
    from_base_.push_back(lattice_.coset_index(base_.rep(i), Quotient::DualModLattice));
  const CosetSystem lattice_reps = coset_reps_L_mod_2L(lattice_);
  for (const auto& s : lattice_reps.reps()) s_base_.push_back(base_.index_of(s));
}

std::vector<unsigned> Orbifold::digits(std::size_t index) const {
  std::vector<unsigned> dg(radix_.size());
  for (std::size_t k = radix_.size(); k-- > 0;) {
    dg[k] = static_cast<unsigned>(index % radix_[k]);
    index /= radix_[k];
  }
  return dg;
}

std::size_t Orbifold::index_of(const DualVector& lambda) const {
  if (!lattice_.in_dual(lambda)) throw Error(ErrorKind::NotInDual, permorb::to_string(lambda) + " is not in the dual lattice");
  return lattice_.coset_index(lambda, Quotient::DualModLattice);
}

std::size_t Orbifold::add(std::size_t a, std::size_t b) const {
  const auto& da = digits_[a];
  const auto& db = digits_[b];
  std::size_t index = 0;
  for (std::size_t k = 0; k < radix_.size(); ++k) index = index * radix_[k] + (da[k] + db[k]) % radix_[k];
  return index;
}

OrbifoldLabel Orbifold::diag(std::size_t lambda, int eps) const {
  return OrbifoldLabel{OrbifoldLabel::Kind::Diag, lambda % reps_.size(), static_cast<std::size_t>(eps & 1)};
}

OrbifoldLabel Orbifold::twisted(std::size_t lambda, int eps) const {
  return OrbifoldLabel{OrbifoldLabel::Kind::Twisted, lambda % reps_.size(), static_cast<std::size_t>(eps & 1)};
}

OrbifoldLabel Orbifold::nondiag(std::size_t lambda, std::size_t mu) const {
  if (lambda == mu) {
    throw Error(ErrorKind::DegeneratePair, permorb::to_string(reps_.at(lambda)) + " and " +
                                               permorb::to_string(reps_.at(mu)) + " lie in the same coset of L");
  }
  return OrbifoldLabel{OrbifoldLabel::Kind::NonDiag, std::min(lambda, mu), std::max(lambda, mu)};
}

OrbifoldLabel Orbifold::nondiag(const DualVector& lambda, const DualVector& mu) const {
  return nondiag(index_of(lambda), index_of(mu));
}

std::vector<OrbifoldLabel> Orbifold::modules() const {
  const std::size_t l = reps_.size();
  std::vector<OrbifoldLabel> out;
  out.reserve(expected_module_count(l));
  for (std::size_t t = 0; t < l; ++t)
    for (int e : {0, 1}) out.push_back(diag(t, e));
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i + 1; j < l; ++j) out.push_back(nondiag(i, j));
  for (std::size_t t = 0; t < l; ++t)
    for (int e : {0, 1}) out.push_back(twisted(t, e));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BaseConstituent> Orbifold::decompose(const OrbifoldLabel& m) const {
  std::vector<BaseConstituent> out;
  out.reserve(s_base_.size());
  switch (m.kind) {
    case OrbifoldLabel::Kind::NonDiag: {
      const std::size_t sum = base_.add(to_base_[m.first], to_base_[m.second]);
      const std::size_t diff = base_.add(to_base_[m.first], base_.negate(to_base_[m.second]));
      for (std::size_t s : s_base_)
        out.emplace_back(VlLabel{base_.add(sum, s)}, base_.nonsplit_from_index(base_.add(diff, s)));
      break;
    }
    case OrbifoldLabel::Kind::Diag: {
      const std::size_t twice = base_.add(to_base_[m.first], to_base_[m.first]);
      const Sign sign = m.second == 0 ? Sign::Plus : Sign::Minus;
      for (std::size_t s : s_base_) out.emplace_back(VlLabel{base_.add(twice, s)}, UntwistedSplit{s, sign});
      break;
    }
    case OrbifoldLabel::Kind::Twisted: {
      const std::size_t lambda = to_base_[m.first];
      const SignCharacter chi = base_.chi_of(lambda);
      for (std::size_t s : s_base_) {
        const std::size_t shifted = base_.add(lambda, s);
        const bool even = base_.eval(chi, s) == 1;
        const Sign sign = even == (m.second == 0) ? Sign::Plus : Sign::Minus;
        out.emplace_back(VlLabel{shifted}, TwistedSplit{base_.chi_of(shifted), sign});
      }
      break;
    }
  }
  return out;
}

std::optional<OrbifoldLabel> Orbifold::induce(const BaseConstituent& w) const {
  const auto* t = std::get_if<TwistedSplit>(&w.second);
  if (!t || w.first.lambda >= base_.dual_count()) return std::nullopt;
  if (t->chi != base_.chi_of(w.first.lambda)) return std::nullopt;

  // Walk the orbit of w under the simple currents V_s x V_s^+ and read off the
  // member whose first factor is the stored representative of its L-coset.
  const std::size_t lambda = from_base_[w.first.lambda];
  const std::size_t target = to_base_[lambda];
  for (std::size_t s : s_base_) {
    if (base_.add(w.first.lambda, s) != target) continue;
    const auto image = base_.fuse_vlplus(UntwistedSplit{s, Sign::Plus}, w.second);
    if (image.size() != 1 || image.begin()->second != 1) return std::nullopt;
    const auto* u = std::get_if<TwistedSplit>(&image.begin()->first);
    if (!u || u->chi != base_.chi_of(target)) return std::nullopt;
    return twisted(lambda, u->sign == Sign::Plus ? 0 : 1);
  }
  return std::nullopt;
}

QSqrt Orbifold::qdim(const OrbifoldLabel& m) const {
  switch (m.kind) {
    case OrbifoldLabel::Kind::Diag: return QSqrt(lattice_.det(), 1);
    case OrbifoldLabel::Kind::NonDiag: return QSqrt(lattice_.det(), 2);
    case OrbifoldLabel::Kind::Twisted: return QSqrt::sqrt_of(lattice_.det());
  }
  return QSqrt(lattice_.det());
}

QSqrt Orbifold::glob() const {
  QSqrt total(lattice_.det());
  for (const auto& m : modules()) {
    const QSqrt q = qdim(m);
    total += q * q;
  }
  return total;
}

OrbifoldLabel Orbifold::dual(const OrbifoldLabel& m) const {
  switch (m.kind) {
    case OrbifoldLabel::Kind::Diag: return diag(neg_[m.first], eps_of(m.second));
    case OrbifoldLabel::Kind::NonDiag: return nondiag(neg_[m.first], neg_[m.second]);
    case OrbifoldLabel::Kind::Twisted: return twisted(neg_[m.first], eps_of(m.second));
  }
  return m;
}

void Orbifold::add_contribution(FusionMultiset& out, std::size_t a, std::size_t b) const {
  if (a != b) {
    out[nondiag(a, b)] += 1;
  } else {
    out[diag(a, 0)] += 1;
    out[diag(a, 1)] += 1;
  }
}

FusionMultiset Orbifold::fuse(const OrbifoldLabel& a_in, const OrbifoldLabel& b_in) const {
  using Kind = OrbifoldLabel::Kind;
  const bool ordered = a_in.kind <= b_in.kind;
  const OrbifoldLabel& a = ordered ? a_in : b_in;
  const OrbifoldLabel& b = ordered ? b_in : a_in;
  FusionMultiset out;

  if (a.kind == Kind::Diag) {
    const std::size_t lambda = a.first;
    switch (b.kind) {
      case Kind::Diag: out[diag(add(lambda, b.first), eps_of(a.second + b.second))] = 1; break;
      case Kind::NonDiag: out[nondiag(add(lambda, b.first), add(lambda, b.second))] = 1; break;
      case Kind::Twisted: out[twisted(add(add(lambda, lambda), b.first), eps_of(a.second + b.second))] = 1; break;
    }
    return out;
  }
  if (a.kind == Kind::NonDiag) {
    if (b.kind == Kind::NonDiag) {
      add_contribution(out, add(a.first, b.first), add(a.second, b.second));
      add_contribution(out, add(a.second, b.first), add(a.first, b.second));
    } else {
      const std::size_t sum = add(add(a.first, a.second), b.first);
      out[twisted(sum, 0)] = 1;
      out[twisted(sum, 1)] = 1;
    }
    return out;
  }
  return fuse_twisted_twisted(a, b);
}

FusionMultiset Orbifold::fuse_twisted_twisted(const OrbifoldLabel& a, const OrbifoldLabel& b) const {
  FusionMultiset out;
  const std::size_t c = add(a.first, b.first);
  std::vector<std::size_t> halves;
  if (auto h = halve_mod_L(lattice_, reps_[a.first] + reps_[b.first])) {
    for (const auto& x : h->solutions) {
      halves.push_back(index_of(x));
      out[diag(halves.back(), eps_of(a.second + b.second))] = 1;
    }
  }
  for (std::size_t delta = 0; delta < reps_.size(); ++delta) {
    if (std::find(halves.begin(), halves.end(), delta) != halves.end()) continue;
    // delta and c - delta give the same unordered class; keep it once.
    out[nondiag(add(c, neg_[delta]), delta)] = 1;
  }
  return out;
}

std::optional<FusionMultiset> Orbifold::fuse_nondiag_literal(const OrbifoldLabel& a, const OrbifoldLabel& b,
                                                             PairOrientation orientation) const {
  if (a.kind != OrbifoldLabel::Kind::NonDiag || b.kind != OrbifoldLabel::Kind::NonDiag) return std::nullopt;
  const std::size_t lambda = orientation.swap_first ? a.second : a.first;
  const std::size_t mu = orientation.swap_first ? a.first : a.second;
  const std::size_t gamma = orientation.swap_second ? b.second : b.first;
  const std::size_t delta = orientation.swap_second ? b.first : b.second;

  const bool cross_equal = add(lambda, gamma) == add(mu, delta);
  const bool other_equal = add(mu, gamma) == add(lambda, delta);
  FusionMultiset out;
  if (cross_equal && other_equal) {
    for (int e : {0, 1}) {
      out[diag(add(lambda, gamma), e)] += 1;
      out[diag(add(mu, gamma), e)] += 1;
    }
  } else if (!cross_equal && other_equal) {
    out[nondiag(add(lambda, gamma), add(mu, delta))] += 1;
    out[diag(add(mu, gamma), 0)] += 1;
    out[diag(add(mu, gamma), 1)] += 1;
  } else if (!cross_equal && !other_equal) {
    out[nondiag(add(lambda, gamma), add(mu, delta))] += 1;
    out[nondiag(add(mu, gamma), add(lambda, delta))] += 1;
  } else {
    return std::nullopt;
  }
  return out;
}

namespace {

std::string coords_text(const DualVector& v) {
  std::string s = permorb::to_string(v);
  return s.substr(1, s.size() - 2);
}

}  // namespace

std::string Orbifold::to_string(const OrbifoldLabel& m) const {
  switch (m.kind) {
    case OrbifoldLabel::Kind::Diag:
      return "D(" + coords_text(reps_.at(m.first)) + ";" + std::to_string(m.second) + ")";
    case OrbifoldLabel::Kind::NonDiag:
      return "N(" + coords_text(reps_.at(m.first)) + "," + coords_text(reps_.at(m.second)) + ")";
    case OrbifoldLabel::Kind::Twisted:
      return "T(" + coords_text(reps_.at(m.first)) + ";" + std::to_string(m.second) + ")";
  }
  return "?";
}

}  // namespace permorb
