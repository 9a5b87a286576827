#include "permorb/smith.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace permorb {

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> diag;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) diag.push_back(D(i, i));
  return diag;
}

namespace {

struct Work {
  IntMatrix a;
  IntMatrix u;
  IntMatrix v;
  IntMatrix u_inv;

  void swap_rows(std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    u.swap_rows(i, j);
    u_inv.swap_cols(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    v.swap_cols(i, j);
  }
  void add_row(std::size_t dst, std::size_t src, const Integer& f) {
    a.add_row(dst, src, f);
    u.add_row(dst, src, f);
    u_inv.add_col(src, dst, -f);
  }
  void negate_row(std::size_t r) {
    a.negate_row(r);
    u.negate_row(r);
    for (std::size_t k = 0; k < u_inv.rows(); ++k) u_inv(k, r) = -u_inv(k, r);
  }

  // Rows (t, i) <- [[s, x], [-q/g, p/g]] (rows t, i) where p = a(t, c),
  // q = a(i, c) and g = s p + x q = gcd(p, q). Leaves a(i, c) = 0.
  void bezout_rows(std::size_t t, std::size_t i, std::size_t c) {
    if (a(i, c) % a(t, c) == 0) {
      add_row(i, t, -(a(i, c) / a(t, c)));
      return;
    }
    Integer g, s, x;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), x.get_mpz_t(), a(t, c).get_mpz_t(), a(i, c).get_mpz_t());
    const Integer pg = a(t, c) / g;
    const Integer qg = a(i, c) / g;
    combine_rows(a, t, i, s, x, pg, qg);
    combine_rows(u, t, i, s, x, pg, qg);
    // The inverse of [[s, x], [-q/g, p/g]] is [[p/g, -x], [q/g, s]], applied on columns.
    combine_cols(u_inv, t, i, pg, qg, s, x);
  }
  void bezout_cols(std::size_t t, std::size_t j, std::size_t r) {
    if (a(r, j) % a(r, t) == 0) {
      const Integer f = -(a(r, j) / a(r, t));
      a.add_col(j, t, f);
      v.add_col(j, t, f);
      return;
    }
    Integer g, s, x;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), x.get_mpz_t(), a(r, t).get_mpz_t(), a(r, j).get_mpz_t());
    const Integer pg = a(r, t) / g;
    const Integer qg = a(r, j) / g;
    combine_cols(a, t, j, s, x, pg, qg);
    combine_cols(v, t, j, s, x, pg, qg);
  }

  static void combine_rows(IntMatrix& m, std::size_t t, std::size_t i, const Integer& s, const Integer& x,
                           const Integer& pg, const Integer& qg) {
    for (std::size_t k = 0; k < m.cols(); ++k) {
      const Integer top = s * m(t, k) + x * m(i, k);
      const Integer bottom = pg * m(i, k) - qg * m(t, k);
      m(t, k) = top;
      m(i, k) = bottom;
    }
  }
  static void combine_cols(IntMatrix& m, std::size_t t, std::size_t j, const Integer& s, const Integer& x,
                           const Integer& pg, const Integer& qg) {
    for (std::size_t k = 0; k < m.rows(); ++k) {
      const Integer left = s * m(k, t) + x * m(k, j);
      const Integer right = pg * m(k, j) - qg * m(k, t);
      m(k, t) = left;
      m(k, j) = right;
    }
  }
};

// Position of the nonzero entry of least absolute value in a[t.., t..].
std::optional<std::pair<std::size_t, std::size_t>> smallest_entry(const IntMatrix& a, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Integer best_abs;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Integer v = abs(a(i, j));
      if (!best || v < best_abs) {
        best = {i, j};
        best_abs = v;
      }
    }
  return best;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
  Work w{input, IntMatrix::identity(input.rows()), IntMatrix::identity(input.cols()),
         IntMatrix::identity(input.rows())};
  const std::size_t r = std::min(input.rows(), input.cols());

  for (std::size_t t = 0; t < r; ++t) {
    auto pivot = smallest_entry(w.a, t);
    if (!pivot) break;
    w.swap_rows(t, pivot->first);
    w.swap_cols(t, pivot->second);

    for (;;) {
      for (std::size_t i = t + 1; i < w.a.rows(); ++i)
        if (w.a(i, t) != 0) w.bezout_rows(t, i, t);
      bool clean = true;
      for (std::size_t j = t + 1; j < w.a.cols(); ++j)
        if (w.a(t, j) != 0) w.bezout_cols(t, j, t);
      // Column operations can refill column t only when they shrink the pivot.
      for (std::size_t i = t + 1; i < w.a.rows(); ++i)
        if (w.a(i, t) != 0) clean = false;
      if (!clean) continue;

      // Divisibility: fold an offending row into row t and go again.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < w.a.rows() && !offending; ++i)
        for (std::size_t j = t + 1; j < w.a.cols(); ++j)
          if (w.a(i, j) % w.a(t, t) != 0) {
            offending = i;
            break;
          }
      if (!offending) break;
      w.add_row(t, *offending, Integer(1));
    }

    if (w.a(t, t) < 0) w.negate_row(t);
  }
  return SmithForm{std::move(w.u), std::move(w.a), std::move(w.v), std::move(w.u_inv)};
}

}  // namespace permorb
