#pragma once

#include "laxcenter/lattice.hpp"
#include "laxcenter/modular.hpp"
#include "laxcenter/rings.hpp"

#include <memory>
#include <optional>
#include <string>

namespace laxcenter {

/// Subring of a based ring.
///
/// `basis` is the canonical generating set of the additive subgroup (see
/// canonical_span), so equal subrings compare equal. `generators` is a
/// direct-sum basis of the same subgroup with additive orders `moduli`; it
/// is the basis of `as_ring`, and `embedding` sends it back into the ambient
/// ring. When the canonical rows already form a direct sum the two coincide.
struct Subring {
  RingRef ambient;
  IntMatrix basis;
  IntMatrix generators;
  Moduli moduli;
  RingRef as_ring;
  RingHom embedding;
  /// Lattice spanned by `basis` and the ambient modulus rows.
  std::shared_ptr<const Lattice> span;
  /// Solver for coordinates against `generators`.
  std::shared_ptr<const LinearSolver> solver;

  std::size_t rank() const noexcept { return generators.rows(); }
  bool contains(std::span<const Integer> ambient_vec) const;
  /// Coordinates of an ambient element in the generator basis, reduced by
  /// `moduli`; empty when the element is not in the subring.
  std::optional<Vec> coordinates(std::span<const Integer> ambient_vec) const;
  Vec embed(std::span<const Integer> coords) const { return embedding.apply(coords); }
  bool is_whole_ring() const;

  friend bool operator==(const Subring& a, const Subring& b) {
    return a.ambient->same_structure(*b.ambient) && a.basis == b.basis;
  }
};

/// Subring generated additively by the rows of `spanning` (ambient
/// coordinates). Closure under multiplication and membership of the unit are
/// checked; a failure raises InternalError.
Subring make_subring(const RingRef& ambient, const IntMatrix& spanning, const std::string& name);

/// Z(f): elements of target(f) commuting with f of every source basis element.
Subring centralizer(const RingHom& f);
/// Z(R) = Z(id_R).
Subring center(const RingRef& r);

/// mu_f: R (x)_Z Z(f) -> S, e_i (x) z_j |-> f(e_i) z_j.
RingHom mu_f(const RingHom& f, const Subring& zf);
RingHom mu_f(const RingHom& f);

/// Unit extension g: A (x) Z -> B of f, i.e. the initial factorization (Z, g).
RingHom unit_extension(const RingHom& f);

struct FactorizationCheck {
  bool holds = false;
  /// First source basis index i with g(e_i (x) 1) != f(e_i).
  std::optional<std::size_t> witness;
};

/// Does (C, g) make the triangle f = g o eta_C commute? Throws InputError
/// when g's source is not A (x)_Z C or its target is not target(f).
FactorizationCheck is_factorization_object(const RingRef& c, const RingHom& g,
                                           const RingHom& f);

struct UniversalFactor {
  Subring zf;
  /// tau~: C -> Z(f) (as a ring).
  RingHom tau;
};

/// The unique map tau~(c) = g(1 (x) c) from a factorization object into the
/// centralizer. Throws AxiomError naming the failed triangle when (C, g) is
/// not a factorization object. The factorization property through mu_f and
/// uniqueness are verified before returning (InternalError otherwise).
UniversalFactor universal_factor(const RingRef& c, const RingHom& g, const RingHom& f);

}  // namespace laxcenter
