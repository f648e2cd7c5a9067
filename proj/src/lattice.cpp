#include "laxcenter/lattice.hpp"

#include "laxcenter/errors.hpp"
#include "laxcenter/normal_form.hpp"

#include <optional>

namespace laxcenter {

namespace {

void axpy(Vec& w, const Integer& q, const Vec& b) {
  for (std::size_t k = 0; k < w.size(); ++k)
    if (b[k] != 0) w[k] -= q * b[k];
}

}  // namespace

Lattice::Lattice(std::size_t ambient_dim) : dim_(ambient_dim), basis_(0, ambient_dim) {}

Lattice::Lattice(const IntMatrix& generators) : dim_(generators.cols()) {
  // Incremental echelon insertion; rows are keyed by pivot column.
  std::vector<std::optional<Vec>> by_pivot(dim_);
  for (std::size_t r = 0; r < generators.rows(); ++r) {
    Vec w = generators.row_vec(r);
    for (std::size_t c = 0; c < dim_; ++c) {
      if (w[c] == 0) continue;
      if (!by_pivot[c]) {
        by_pivot[c] = std::move(w);
        break;
      }
      Vec& b = *by_pivot[c];
      if (mpz_divisible_p(w[c].get_mpz_t(), b[c].get_mpz_t())) {
        Integer q = w[c] / b[c];
        axpy(w, q, b);
        continue;
      }
      auto [g, s, t] = gcd_ext(b[c], w[c]);
      Integer a = b[c] / g;
      Integer bb = w[c] / g;
      Vec nb(dim_), nw(dim_);
      for (std::size_t k = 0; k < dim_; ++k) {
        nb[k] = s * b[k] + t * w[k];
        nw[k] = a * w[k] - bb * b[k];
      }
      b = std::move(nb);
      w = std::move(nw);
    }
  }
  std::vector<Vec> rows;
  for (std::size_t c = 0; c < dim_; ++c) {
    if (!by_pivot[c]) continue;
    Vec row = std::move(*by_pivot[c]);
    if (row[c] < 0)
      for (auto& x : row) x = -x;
    pivots_.push_back(c);
    rows.push_back(std::move(row));
  }
  // Reduce entries above each pivot into [0, pivot).
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const std::size_t c = pivots_[k];
    for (std::size_t i = 0; i < k; ++i) {
      Integer q = floor_div(rows[i][c], rows[k][c]);
      if (q != 0) axpy(rows[i], q, rows[k]);
    }
  }
  basis_ = IntMatrix::from_rows(rows, dim_);
}

Vec Lattice::reduce(std::span<const Integer> v) const {
  if (v.size() != dim_) throw InputError("Lattice::reduce: dimension mismatch");
  Vec w(v.begin(), v.end());
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    const std::size_t c = pivots_[k];
    Integer q = floor_div(w[c], basis_(k, c));
    if (q == 0) continue;
    for (std::size_t j = c; j < dim_; ++j)
      if (basis_(k, j) != 0) w[j] -= q * basis_(k, j);
  }
  return w;
}

bool Lattice::contains(std::span<const Integer> v) const { return is_zero(reduce(v)); }

std::optional<Vec> Lattice::coordinates(std::span<const Integer> v) const {
  if (v.size() != dim_) throw InputError("Lattice::coordinates: dimension mismatch");
  Vec w(v.begin(), v.end());
  Vec coeffs(pivots_.size(), Integer(0));
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    const std::size_t c = pivots_[k];
    if (!mpz_divisible_p(w[c].get_mpz_t(), basis_(k, c).get_mpz_t())) return std::nullopt;
    Integer q = w[c] / basis_(k, c);
    coeffs[k] = q;
    if (q == 0) continue;
    for (std::size_t j = c; j < dim_; ++j)
      if (basis_(k, j) != 0) w[j] -= q * basis_(k, j);
  }
  if (!is_zero(w)) return std::nullopt;
  return coeffs;
}

IntMatrix canonical_span(const IntMatrix& generators, std::span<const Integer> moduli) {
  if (generators.rows() > 0 && generators.cols() != moduli.size())
    throw InputError("canonical_span: generator width does not match moduli");
  Lattice lat(IntMatrix::stack(IntMatrix(0, moduli.size()),
                               IntMatrix::stack(generators, modulus_rows(moduli))));
  std::vector<Vec> rows;
  for (std::size_t k = 0; k < lat.rank(); ++k) {
    Vec r = reduce_vec(lat.basis().row(k), moduli);
    if (!is_zero(r)) rows.push_back(std::move(r));
  }
  return IntMatrix::from_rows(rows, moduli.size());
}

std::vector<Integer> quotient_invariants(const IntMatrix& outer, const IntMatrix& inner) {
  Lattice lo(outer);
  IntMatrix coords(inner.rows(), lo.rank());
  for (std::size_t r = 0; r < inner.rows(); ++r) {
    auto c = lo.coordinates(inner.row(r));
    if (!c) throw InternalError("quotient_invariants: inner lattice not contained in outer");
    for (std::size_t k = 0; k < c->size(); ++k) coords(r, k) = (*c)[k];
  }
  std::vector<Integer> out;
  std::size_t rank = 0;
  // Same lattice, at most lo.rank() rows: keeps the SNF transforms small.
  if (coords.rows() > 0 && coords.cols() > 0) coords = Lattice(coords).basis();
  if (coords.rows() > 0 && coords.cols() > 0) {
    auto s = snf(coords);
    rank = s.rank;
    for (const auto& d : s.invariant_factors)
      if (d != 1) out.push_back(d);
  }
  for (std::size_t k = rank; k < lo.rank(); ++k) out.emplace_back(0);
  return out;
}

std::optional<Integer> group_order(std::span<const Integer> invariants) {
  Integer n = 1;
  for (const auto& d : invariants) {
    if (d == 0) return std::nullopt;
    n *= d;
  }
  return n;
}

}  // namespace laxcenter
