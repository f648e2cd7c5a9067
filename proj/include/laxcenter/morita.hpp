#pragma once

#include "laxcenter/check.hpp"
#include "laxcenter/factorization.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace laxcenter {

/// Finitely presented abelian group Z^k / (moduli + relations) with a left
/// action of `left_ring` and a right action of `right_ring` on generators.
struct Bimodule {
  std::string name;
  RingRef left_ring;
  RingRef right_ring;
  Moduli carrier_moduli;
  /// Extra relation rows (width rank()); may be empty.
  IntMatrix carrier_relations;
  /// left_action[a] row x: e_a . x_gen, in generator coordinates.
  std::vector<IntMatrix> left_action;
  /// right_action[b] row x: x_gen . e_b.
  std::vector<IntMatrix> right_action;
  /// All relations (moduli and extra rows) as a lattice.
  std::shared_ptr<const Lattice> relations;

  std::size_t rank() const noexcept { return carrier_moduli.size(); }
  /// Canonical representative modulo the relations.
  Vec reduce(std::span<const Integer> x) const { return relations->reduce(x); }
  bool equal(std::span<const Integer> x, std::span<const Integer> y) const;
  Vec act_left(std::span<const Integer> a, std::span<const Integer> x) const;
  Vec act_right(std::span<const Integer> x, std::span<const Integer> b) const;
};

/// Fills in the relation lattice. No axioms are checked.
Bimodule make_bimodule(std::string name, RingRef left_ring, RingRef right_ring,
                       Moduli carrier_moduli, IntMatrix carrier_relations,
                       std::vector<IntMatrix> left_action,
                       std::vector<IntMatrix> right_action);

/// Action axioms on generators: well-definedness on relations, associativity,
/// unitality of both actions, and (a.x).b == a.(x.b).
ValidationReport check_bimodule(const Bimodule& m);

/// R as an R-R bimodule.
Bimodule regular_bimodule(const RingRef& r);
/// S with R acting on the left through f and S on the right.
Bimodule restriction_bimodule(const RingHom& f);

/// Z(f) with the centers of source and target and its (Z(S), Z(R))-bimodule
/// structure: Z(S) acts by multiplication, Z(R) through f.
struct CentralizerData {
  RingHom f;
  Subring z_source;
  Subring z_target;
  Subring zf;
  Bimodule bimodule;
};

CentralizerData centralizer_data(const RingHom& f);
CentralizerData centralizer_data(const RingHom& f, const Subring& z_source,
                                 const Subring& z_target);
Bimodule center_bimodule(const RingHom& f);

/// Map of bimodules on generators: row x is the image of generator x.
struct BimoduleHom {
  Bimodule source;
  Bimodule target;
  IntMatrix matrix;

  Vec apply(std::span<const Integer> x) const { return target.reduce(mul(x, matrix)); }
};

/// Relations go to zero, and both actions are intertwined.
ValidationReport check_bimodule_hom(const BimoduleHom& h);
/// Invariant factors of the kernel of the induced map of presented groups.
std::vector<Integer> kernel_invariants(const BimoduleHom& h);
bool is_injective(const BimoduleHom& h);
bool is_surjective(const BimoduleHom& h);

/// M (x)_A N as a presented abelian group on generator pairs (i, j) with index
/// i * N.rank() + j.
struct TensorPresentation {
  RingRef base;
  Bimodule left_factor;
  Bimodule right_factor;
  IntMatrix relations;
  std::vector<Integer> invariant_factors;
  std::shared_ptr<const Lattice> lattice;

  std::size_t rank() const noexcept { return left_factor.rank() * right_factor.rank(); }
  std::size_t index(std::size_t i, std::size_t j) const { return i * right_factor.rank() + j; }
  /// Reduced coordinates of the pure tensor x (x) y.
  Vec project(std::span<const Integer> x, std::span<const Integer> y) const;
  std::optional<Integer> order() const { return group_order(invariant_factors); }
  /// As a (left ring of M, right ring of N)-bimodule.
  Bimodule as_bimodule() const;
};

/// Requires M's right ring and N's left ring to be A, and A commutative
/// (checked as Z(A) == A).
TensorPresentation tensor_over(const RingRef& a, const Bimodule& m, const Bimodule& n);

struct Compositor {
  TensorPresentation source;
  BimoduleHom map;
};

/// mu: Z(g) (x)_{Z(S)} Z(f) -> Z(g o f), t (x) s |-> t g(s). The image is
/// checked to lie in Z(g o f) (InternalError otherwise); the hom axioms are
/// not checked here, see check_bimodule_hom.
Compositor compositor_mu(const CentralizerData& lower, const CentralizerData& upper,
                         const CentralizerData& composite);
Compositor compositor_mu(const RingHom& f, const RingHom& g);

enum class LaxMode { unity, associativity };

/// Centers and centralizers for a chain f: R -> S, g: S -> T, h: T -> W.
struct CenterChain {
  RingHom f, g, h;
  Subring zr, zs, zt, zw;
  CentralizerData df, dg, dh, dgf, dhg, dhgf;
};

CenterChain build_center_chain(const RingHom& f, const RingHom& g, const RingHom& h);

/// Lax unity of the center functor at f (both unity squares, identity 2-cell).
CheckList verify_lax_morita_unity(const RingHom& f);
/// Lax associativity over every generator (w (x) t) (x) s, plus the
/// structural assertions it relies on.
CheckList verify_lax_morita_associativity(const CenterChain& chain);
CheckList verify_lax_morita(const RingHom& f, const RingHom& g, const RingHom& h, LaxMode mode);

}  // namespace laxcenter
