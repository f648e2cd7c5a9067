#include "laxcenter/normal_form.hpp"

#include <algorithm>
#include <cstdlib>

namespace laxcenter {

GcdExt gcd_ext(const Integer& a, const Integer& b) {
  GcdExt r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

namespace {

// (row_i, row_j) <- (a*row_i + b*row_j, c*row_i + d*row_j)
void combine_rows(IntMatrix& m, std::size_t i, std::size_t j, const Integer& a,
                  const Integer& b, const Integer& c, const Integer& d) {
  Integer x, y;
  for (std::size_t k = 0; k < m.cols(); ++k) {
    x = a * m(i, k) + b * m(j, k);
    y = c * m(i, k) + d * m(j, k);
    m(i, k) = x;
    m(j, k) = y;
  }
}

// row_i -= q * row_j
void sub_row(IntMatrix& m, std::size_t i, std::size_t j, const Integer& q) {
  for (std::size_t k = 0; k < m.cols(); ++k)
    if (m(j, k) != 0) m(i, k) -= q * m(j, k);
}

void sub_col(IntMatrix& m, std::size_t i, std::size_t j, const Integer& q) {
  for (std::size_t k = 0; k < m.rows(); ++k)
    if (m(k, j) != 0) m(k, i) -= q * m(k, j);
}

void negate_row(IntMatrix& m, std::size_t i) {
  for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = -m(i, k);
}

void add_row(IntMatrix& m, std::size_t i, std::size_t j) {
  for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) += m(j, k);
}

}  // namespace

NormalFormResult hnf(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    for (std::size_t i = r + 1; i < h.rows(); ++i) {
      if (h(i, c) == 0) continue;
      if (h(r, c) == 0) {
        h.swap_rows(r, i);
        u.swap_rows(r, i);
        continue;
      }
      auto [g, s, t] = gcd_ext(h(r, c), h(i, c));
      Integer a = h(r, c) / g;
      Integer b = h(i, c) / g;
      Integer nb = -b;
      // [[s, t], [-b, a]] has determinant 1.
      combine_rows(h, r, i, s, t, nb, a);
      combine_rows(u, r, i, s, t, nb, a);
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(h(i, c), h(r, c));
      if (q == 0) continue;
      sub_row(h, i, r, q);
      sub_row(u, i, r, q);
    }
    ++r;
  }
  NormalFormResult out;
  out.form = std::move(h);
  out.left_transform = std::move(u);
  out.rank = r;
  return out;
}

namespace {

// Smallest nonzero |entry| in the trailing submatrix starting at (t, t).
bool find_min_entry(const IntMatrix& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Integer best;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      Integer a = abs(d(i, j));
      if (!found || a < best) {
        best = a;
        pi = i;
        pj = j;
        found = true;
      }
    }
  return found;
}

}  // namespace

NormalFormResult snf(const IntMatrix& m) {
  IntMatrix d = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t n = std::min(d.rows(), d.cols());
  std::size_t t = 0;
  for (; t < n; ++t) {
    std::size_t pi = 0, pj = 0;
    if (!find_min_entry(d, t, pi, pj)) break;
    d.swap_rows(t, pi);
    u.swap_rows(t, pi);
    d.swap_cols(t, pj);
    v.swap_cols(t, pj);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        sub_row(d, i, t, q);
        sub_row(u, i, t, q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        sub_col(d, j, t, q);
        sub_col(v, j, t, q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) {
        // Move the smallest remainder in row/column t onto the pivot.
        std::size_t bi = t, bj = t;
        Integer best = abs(d(t, t));
        for (std::size_t i = t + 1; i < d.rows(); ++i)
          if (d(i, t) != 0 && abs(d(i, t)) < best) {
            best = abs(d(i, t));
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < d.cols(); ++j)
          if (d(t, j) != 0 && abs(d(t, j)) < best) {
            best = abs(d(t, j));
            bi = t;
            bj = j;
          }
        d.swap_rows(t, bi);
        u.swap_rows(t, bi);
        d.swap_cols(t, bj);
        v.swap_cols(t, bj);
        continue;
      }
      // Row and column are clear; enforce divisibility on the remainder.
      std::size_t bad_row = d.rows();
      for (std::size_t i = t + 1; i < d.rows() && bad_row == d.rows(); ++i)
        for (std::size_t j = t + 1; j < d.cols(); ++j)
          if (d(i, j) != 0 && !mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            bad_row = i;
            break;
          }
      if (bad_row == d.rows()) break;
      add_row(d, t, bad_row);
      add_row(u, t, bad_row);
    }
    if (d(t, t) < 0) {
      negate_row(d, t);
      negate_row(u, t);
    }
  }
  NormalFormResult out;
  out.rank = t;
  for (std::size_t i = 0; i < t; ++i) out.invariant_factors.push_back(d(i, i));
  out.form = std::move(d);
  out.left_transform = std::move(u);
  out.right_transform = std::move(v);
  return out;
}

}  // namespace laxcenter
