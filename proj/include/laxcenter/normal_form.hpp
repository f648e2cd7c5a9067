#pragma once

#include "laxcenter/int_matrix.hpp"

#include <optional>
#include <vector>

namespace laxcenter {

/// Result of a normal-form computation.
///
/// HNF: left_transform * input == form.
/// SNF: left_transform * input * right_transform == form.
struct NormalFormResult {
  IntMatrix form;
  IntMatrix left_transform;
  std::optional<IntMatrix> right_transform;
  /// Nonzero diagonal entries of the SNF in divisibility order (SNF only).
  std::vector<Integer> invariant_factors;
  std::size_t rank = 0;
};

/// Row Hermite normal form: echelon, positive pivots, entries above each
/// pivot in [0, pivot), zero rows last. The transform is unimodular.
NormalFormResult hnf(const IntMatrix& m);

/// Smith normal form with unimodular transforms on both sides.
NormalFormResult snf(const IntMatrix& m);

/// Extended gcd: returns (g, s, t) with s*a + t*b == g >= 0.
struct GcdExt {
  Integer g, s, t;
};
GcdExt gcd_ext(const Integer& a, const Integer& b);

}  // namespace laxcenter
