#include "laxcenter/modular.hpp"

#include "laxcenter/errors.hpp"
#include "laxcenter/lattice.hpp"
#include "laxcenter/normal_form.hpp"

#include <string>

namespace laxcenter {

IntMatrix left_kernel(const IntMatrix& a) {
  auto h = hnf(a);
  const std::size_t n = a.rows();
  IntMatrix k(n - h.rank, n);
  for (std::size_t i = h.rank; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) k(i - h.rank, j) = h.left_transform(i, j);
  return k;
}

IntMatrix kernel_relative(const IntMatrix& a, const IntMatrix& relations) {
  if (relations.rows() > 0 && relations.cols() != a.cols())
    throw InputError("kernel_relative: relation width " + std::to_string(relations.cols()) +
                     " does not match " + std::to_string(a.cols()));
  IntMatrix rel = relations.rows() > 0 ? Lattice(relations).basis() : IntMatrix(0, a.cols());
  IntMatrix k = left_kernel(IntMatrix::stack(a, rel));
  return k.block(0, 0, k.rows(), a.rows());
}

IntMatrix kernel_mod(const IntMatrix& a, std::span<const Integer> target_moduli,
                     std::span<const Integer> source_moduli) {
  if (a.cols() != target_moduli.size())
    throw InputError("kernel_mod: matrix has " + std::to_string(a.cols()) +
                     " columns but " + std::to_string(target_moduli.size()) + " target moduli");
  if (a.rows() != source_moduli.size())
    throw InputError("kernel_mod: matrix has " + std::to_string(a.rows()) + " rows but " +
                     std::to_string(source_moduli.size()) + " source moduli");
  IntMatrix gens = kernel_relative(a, modulus_rows(target_moduli));
  return canonical_span(gens, source_moduli);
}

LinearSolver::LinearSolver(const IntMatrix& a, std::span<const Integer> target_moduli)
    : unknowns_(a.rows()), equations_(a.cols()) {
  if (a.cols() != target_moduli.size())
    throw InputError("solve_mod: matrix has " + std::to_string(a.cols()) + " columns but " +
                     std::to_string(target_moduli.size()) + " target moduli");
  auto h = hnf(IntMatrix::stack(IntMatrix(0, a.cols()),
                                IntMatrix::stack(a, modulus_rows(target_moduli))));
  form_ = h.form.block(0, 0, h.rank, a.cols());
  transform_ = h.left_transform.block(0, 0, h.rank, h.left_transform.cols());
  for (std::size_t k = 0; k < h.rank; ++k) {
    std::size_t c = 0;
    while (form_(k, c) == 0) ++c;
    pivots_.push_back(c);
  }
}

std::optional<Vec> LinearSolver::solve(std::span<const Integer> b) const {
  if (b.size() != equations_)
    throw InputError("solve_mod: right-hand side has length " + std::to_string(b.size()) +
                     ", expected " + std::to_string(equations_));
  Vec w(b.begin(), b.end());
  Vec coeffs(pivots_.size(), Integer(0));
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    const std::size_t c = pivots_[k];
    if (!mpz_divisible_p(w[c].get_mpz_t(), form_(k, c).get_mpz_t())) return std::nullopt;
    Integer q = w[c] / form_(k, c);
    coeffs[k] = q;
    if (q == 0) continue;
    for (std::size_t j = c; j < equations_; ++j)
      if (form_(k, j) != 0) w[j] -= q * form_(k, j);
  }
  if (!is_zero(w)) return std::nullopt;
  Vec y = mul(coeffs, transform_);
  return Vec(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(unknowns_));
}

std::optional<Vec> solve_particular(const IntMatrix& a, std::span<const Integer> b,
                                    std::span<const Integer> target_moduli) {
  return LinearSolver(a, target_moduli).solve(b);
}

SolveResult solve_mod(const IntMatrix& a, std::span<const Integer> b,
                      std::span<const Integer> target_moduli) {
  SolveResult r;
  r.particular = solve_particular(a, b, target_moduli);
  r.kernel = kernel_mod(a, target_moduli, Moduli(a.rows(), Integer(0)));
  return r;
}

std::vector<Integer> cokernel_invariants(const IntMatrix& a,
                                         std::span<const Integer> target_moduli) {
  if (a.rows() > 0 && a.cols() != target_moduli.size())
    throw InputError("cokernel_invariants: matrix has " + std::to_string(a.cols()) +
                     " columns but " + std::to_string(target_moduli.size()) + " target moduli");
  const std::size_t t = target_moduli.size();
  IntMatrix inner = IntMatrix::stack(IntMatrix(0, t),
                                     IntMatrix::stack(a, modulus_rows(target_moduli)));
  return quotient_invariants(IntMatrix::identity(t), inner);
}

}  // namespace laxcenter
