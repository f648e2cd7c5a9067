#pragma once

#include "laxcenter/int_matrix.hpp"

#include <optional>
#include <vector>

namespace laxcenter {

/// A sublattice of Z^n held by its reduced row-HNF basis.
///
/// Reduction against the basis yields a canonical representative of each
/// coset, which is how every "equal modulo relations" test in the library is
/// decided.
class Lattice {
 public:
  explicit Lattice(std::size_t ambient_dim = 0);
  /// Lattice spanned by the rows of `generators`.
  explicit Lattice(const IntMatrix& generators);

  std::size_t ambient_dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return basis_.rows(); }

  /// HNF basis (no zero rows).
  const IntMatrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Canonical coset representative of v modulo the lattice.
  Vec reduce(std::span<const Integer> v) const;
  bool contains(std::span<const Integer> v) const;
  /// Exact coefficients c with c * basis() == v, if v lies in the lattice.
  std::optional<Vec> coordinates(std::span<const Integer> v) const;

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.dim_ == b.dim_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t dim_ = 0;
  IntMatrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Canonical generating set of the subgroup spanned by `generators` inside
/// Z^n / (moduli): HNF of the generators stacked on the modulus rows, rows
/// reduced by the moduli, zero rows dropped. Equal subgroups give equal
/// output.
IntMatrix canonical_span(const IntMatrix& generators, std::span<const Integer> moduli);

/// Invariant factors of outer / inner, where the lattice spanned by `inner`
/// is contained in the one spanned by `outer`. Factors equal to 1 are
/// omitted; each free summand is reported as 0, after the torsion factors.
std::vector<Integer> quotient_invariants(const IntMatrix& outer, const IntMatrix& inner);

/// Order of a finitely generated abelian group from its invariant factors;
/// empty when a free summand is present.
std::optional<Integer> group_order(std::span<const Integer> invariants);

}  // namespace laxcenter
