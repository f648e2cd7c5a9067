#pragma once

#include "laxcenter/int_matrix.hpp"

#include <optional>
#include <vector>

namespace laxcenter {

/// Basis of the integer left kernel {x : x * a == 0}.
IntMatrix left_kernel(const IntMatrix& a);

/// Generators of {x in Z^rows : x * a lies in the row span of `relations`}.
IntMatrix kernel_relative(const IntMatrix& a, const IntMatrix& relations);

/// Canonical generating set (see canonical_span) of
/// {x : x * a == 0 componentwise modulo target_moduli}, read modulo
/// source_moduli.
IntMatrix kernel_mod(const IntMatrix& a, std::span<const Integer> target_moduli,
                     std::span<const Integer> source_moduli);

struct SolveResult {
  /// Some x with x * a == b modulo the target moduli, if one exists.
  std::optional<Vec> particular;
  /// kernel_mod(a, target, zeros): all homogeneous solutions over Z.
  IntMatrix kernel;
};

SolveResult solve_mod(const IntMatrix& a, std::span<const Integer> b,
                      std::span<const Integer> target_moduli);

/// Particular solution only; skips the kernel computation.
std::optional<Vec> solve_particular(const IntMatrix& a, std::span<const Integer> b,
                                    std::span<const Integer> target_moduli);

/// Invariant factors of Z^cols / (row span of a + modulus lattice).
/// 0 marks a free summand; the result is empty iff a is surjective.
std::vector<Integer> cokernel_invariants(const IntMatrix& a,
                                         std::span<const Integer> target_moduli);

}  // namespace laxcenter

namespace laxcenter {

/// Solver for x * a == b modulo fixed target moduli, factoring the system
/// once and answering any number of right-hand sides.
class LinearSolver {
 public:
  LinearSolver(const IntMatrix& a, std::span<const Integer> target_moduli);

  std::optional<Vec> solve(std::span<const Integer> b) const;

  std::size_t unknowns() const noexcept { return unknowns_; }

 private:
  std::size_t unknowns_ = 0;
  std::size_t equations_ = 0;
  IntMatrix form_;
  IntMatrix transform_;
  std::vector<std::size_t> pivots_;
};

}  // namespace laxcenter
