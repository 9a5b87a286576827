#include "permorb/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "permorb/error.hpp"

namespace permorb {

DualVector DualVector::basis(std::size_t dim, std::size_t i) {
  DualVector v = zero(dim);
  v.coords.at(i) = 1;
  return v;
}

DualVector& DualVector::operator+=(const DualVector& o) {
  if (o.dim() != dim()) throw Error(ErrorKind::DimensionMismatch, "vector dimensions differ");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

DualVector& DualVector::operator-=(const DualVector& o) {
  if (o.dim() != dim()) throw Error(ErrorKind::DimensionMismatch, "vector dimensions differ");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

DualVector& DualVector::operator*=(const Rational& s) {
  for (auto& c : coords) c *= s;
  return *this;
}

DualVector DualVector::operator-() const {
  DualVector r = *this;
  for (auto& c : r.coords) c = -c;
  return r;
}

std::string to_string(const DualVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.coords.size(); ++i) {
    if (i) out += ",";
    out += to_string(v.coords[i]);
  }
  return out + ")";
}

std::string to_string(Quotient q) {
  switch (q) {
    case Quotient::DualModLattice: return "L°/L";
    case Quotient::LatticeMod2Lattice: return "L/2L";
    case Quotient::DualMod2Lattice: return "L°/2L";
    case Quotient::DualMod2Dual: return "L°/2L°";
  }
  return "?";
}

GramLattice GramLattice::validate(const IntMatrix& gram) {
  if (!gram.is_square()) throw Error(ErrorKind::DimensionMismatch, "Gram matrix must be square");
  const std::size_t d = gram.rows();
  if (d == 0) throw Error(ErrorKind::DegenerateLattice, "lattice rank must be at least 1");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (gram(i, j) != gram(j, i)) {
        throw Error(ErrorKind::NotSymmetric, "Gram matrix is not symmetric at (" + std::to_string(i) +
                                                 "," + std::to_string(j) + ")");
      }
  for (std::size_t i = 0; i < d; ++i)
    if (mod(gram(i, i), Integer(2)) != 0) {
      throw Error(ErrorKind::NotEven, "lattice is not even: <alpha_" + std::to_string(i + 1) +
                                          ",alpha_" + std::to_string(i + 1) + "> = " + to_string(gram(i, i)));
    }
  auto minors = leading_principal_minors(gram);
  for (std::size_t k = 0; k < minors.size(); ++k)
    if (minors[k] <= 0) {
      throw Error(ErrorKind::NotPositiveDefinite,
                  "leading principal minor of order " + std::to_string(k + 1) + " is " + to_string(minors[k]));
    }

  GramLattice lat;
  lat.gram_ = gram;
  lat.det_ = minors.back();
  lat.snf_ = smith_normal_form(gram);
  lat.divisors_ = lat.snf_.diagonal();
  lat.gram_inverse_ = rational_inverse(gram);
  return lat;
}

GramLattice validate_lattice(const IntMatrix& gram) { return GramLattice::validate(gram); }

void GramLattice::require_dim(const DualVector& x) const {
  if (x.dim() != dim()) {
    throw Error(ErrorKind::DimensionMismatch,
                "vector has " + std::to_string(x.dim()) + " coordinates, lattice rank is " + std::to_string(dim()));
  }
}

std::vector<Rational> GramLattice::pairings(const DualVector& x) const {
  require_dim(x);
  std::vector<Rational> out(dim(), Rational(0));
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) out[i] += Rational(gram_(i, j)) * x.coords[j];
  return out;
}

Rational GramLattice::inner(const DualVector& x, const DualVector& y) const {
  require_dim(x);
  require_dim(y);
  auto gy = pairings(y);
  Rational acc = 0;
  for (std::size_t i = 0; i < dim(); ++i) acc += x.coords[i] * gy[i];
  return acc;
}

bool GramLattice::in_dual(const DualVector& x) const {
  auto p = pairings(x);
  return std::all_of(p.begin(), p.end(), [](const Rational& q) { return is_integer(q); });
}

bool GramLattice::in_lattice(const DualVector& x) const {
  require_dim(x);
  return std::all_of(x.coords.begin(), x.coords.end(), [](const Rational& q) { return is_integer(q); });
}

std::vector<Integer> GramLattice::moduli(Quotient q) const {
  switch (q) {
    case Quotient::DualModLattice: return divisors_;
    case Quotient::DualMod2Lattice: {
      std::vector<Integer> m = divisors_;
      for (auto& v : m) v *= 2;
      return m;
    }
    case Quotient::LatticeMod2Lattice:
    case Quotient::DualMod2Dual: return std::vector<Integer>(dim(), Integer(2));
  }
  return {};
}

std::size_t GramLattice::coset_count(Quotient q) const {
  Integer n = 1;
  for (const auto& m : moduli(q)) n *= m;
  return n.get_ui();
}

std::vector<Integer> GramLattice::integer_pairings(const DualVector& x, Quotient q) const {
  if (q == Quotient::LatticeMod2Lattice) {
    if (!in_lattice(x)) throw Error(ErrorKind::NotInAmbientGroup, to_string(x) + " is not in L");
    std::vector<Integer> out;
    for (const auto& c : x.coords) out.push_back(c.get_num());
    return out;
  }
  auto p = pairings(x);
  std::vector<Integer> out;
  for (const auto& v : p) {
    if (!is_integer(v)) throw Error(ErrorKind::NotInAmbientGroup, to_string(x) + " is not in the dual lattice");
    out.push_back(v.get_num());
  }
  return out;
}

std::vector<Integer> GramLattice::coset_coordinates(const DualVector& x, Quotient q) const {
  std::vector<Integer> y = integer_pairings(x, q);
  auto m = moduli(q);
  std::vector<Integer> z(dim());
  if (q == Quotient::DualModLattice || q == Quotient::DualMod2Lattice) {
    for (std::size_t i = 0; i < dim(); ++i) {
      Integer acc = 0;
      for (std::size_t j = 0; j < dim(); ++j) acc += snf_.U(i, j) * y[j];
      z[i] = mod(acc, m[i]);
    }
  } else {
    for (std::size_t i = 0; i < dim(); ++i) z[i] = mod(y[i], m[i]);
  }
  return z;
}

DualVector GramLattice::coset_representative(const std::vector<Integer>& z, Quotient q) const {
  if (z.size() != dim()) throw Error(ErrorKind::DimensionMismatch, "coset coordinate length");
  if (q == Quotient::LatticeMod2Lattice) {
    DualVector x = DualVector::zero(dim());
    for (std::size_t i = 0; i < dim(); ++i) x.coords[i] = Rational(mod(z[i], Integer(2)));
    return x;
  }
  std::vector<Rational> y(dim());
  if (q == Quotient::DualMod2Dual) {
    for (std::size_t i = 0; i < dim(); ++i) y[i] = Rational(mod(z[i], Integer(2)));
  } else {
    for (std::size_t i = 0; i < dim(); ++i) {
      Integer acc = 0;
      for (std::size_t j = 0; j < dim(); ++j) acc += snf_.U_inverse(i, j) * z[j];
      y[i] = Rational(acc);
    }
  }
  DualVector x(gram_inverse_.apply(y));
  if (q == Quotient::DualModLattice) {
    for (auto& c : x.coords) c = mod(c, Integer(1));
  } else if (q == Quotient::DualMod2Lattice) {
    for (auto& c : x.coords) c = mod(c, Integer(2));
  }
  return x;
}

DualVector GramLattice::canonicalize(const DualVector& x, Quotient q) const {
  return coset_representative(coset_coordinates(x, q), q);
}

std::size_t GramLattice::coset_index(const DualVector& x, Quotient q) const {
  auto z = coset_coordinates(x, q);
  auto m = moduli(q);
  std::size_t index = 0;
  for (std::size_t i = 0; i < z.size(); ++i) index = index * m[i].get_ui() + z[i].get_ui();
  return index;
}

DualVector GramLattice::coset_from_index(std::size_t index, Quotient q) const {
  auto m = moduli(q);
  std::vector<Integer> z(m.size());
  for (std::size_t i = m.size(); i-- > 0;) {
    const std::size_t mi = m[i].get_ui();
    z[i] = static_cast<unsigned long>(index % mi);
    index /= mi;
  }
  return coset_representative(z, q);
}

Rational inner(const GramLattice& lattice, const DualVector& x, const DualVector& y) {
  return lattice.inner(x, y);
}

DualVector canonicalize(const GramLattice& lattice, const DualVector& x, Quotient q) {
  return lattice.canonicalize(x, q);
}

CosetSystem coset_system(const GramLattice& lattice, Quotient q) {
  const std::size_t n = lattice.coset_count(q);
  std::vector<DualVector> reps;
  std::vector<std::size_t> indices;
  reps.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    reps.push_back(lattice.coset_from_index(i, q));
    indices.push_back(i);
  }
  return CosetSystem(q, std::move(reps), std::move(indices));
}

CosetSystem coset_reps_dual_mod_L(const GramLattice& lattice) {
  return coset_system(lattice, Quotient::DualModLattice);
}

CosetSystem coset_reps_L_mod_2L(const GramLattice& lattice) {
  return coset_system(lattice, Quotient::LatticeMod2Lattice);
}

CosetSystem two_torsion(const GramLattice& lattice) {
  auto halving = halve_mod_L(lattice, DualVector::zero(lattice.dim()));
  std::vector<std::size_t> indices;
  for (const auto& g : halving->solutions) indices.push_back(lattice.coset_index(g, Quotient::DualModLattice));
  return CosetSystem(Quotient::DualModLattice, halving->solutions, std::move(indices));
}

std::optional<Halving> halve_mod_L(const GramLattice& lattice, const DualVector& c) {
  if (!lattice.in_dual(c)) throw Error(ErrorKind::NotInDual, to_string(c) + " is not in the dual lattice");
  const auto z = lattice.coset_coordinates(c, Quotient::DualModLattice);
  const auto m = lattice.moduli(Quotient::DualModLattice);

  // Per cyclic factor Z/m: 2t = z has one solution for odd m, and zero or two for even m.
  std::vector<std::vector<Integer>> choices(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (mod(m[i], Integer(2)) == 1) {
      Integer inv2 = (m[i] + 1) / 2;
      choices[i].push_back(mod(z[i] * inv2, m[i]));
    } else {
      if (mod(z[i], Integer(2)) != 0) return std::nullopt;
      Integer half = z[i] / 2;
      choices[i].push_back(half);
      choices[i].push_back(mod(half + m[i] / 2, m[i]));
    }
  }

  std::vector<std::vector<Integer>> combos{{}};
  for (const auto& options : choices) {
    std::vector<std::vector<Integer>> next;
    for (const auto& prefix : combos)
      for (const auto& t : options) {
        auto extended = prefix;
        extended.push_back(t);
        next.push_back(std::move(extended));
      }
    combos = std::move(next);
  }
  std::sort(combos.begin(), combos.end());

  Halving h;
  for (const auto& coords : combos) h.solutions.push_back(lattice.coset_representative(coords, Quotient::DualModLattice));
  h.particular = h.solutions.front();
  return h;
}

}  // namespace permorb
