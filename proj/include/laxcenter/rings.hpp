#pragma once

#include "laxcenter/groups.hpp"
#include "laxcenter/int_matrix.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace laxcenter {

/// Unital ring whose additive group is Z^n modulo per-basis moduli, with
/// multiplication given by integer structure constants on the basis.
class BasedRing {
 public:
  /// `products[i * n + j]` is the coefficient vector of e_i * e_j. Entries are
  /// reduced by the moduli; no axiom is checked here (see validate_ring).
  BasedRing(std::string name, std::vector<std::string> basis_names, Moduli moduli,
            std::vector<Vec> products, Vec unit);

  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& basis_names() const noexcept { return basis_names_; }
  const Moduli& moduli() const noexcept { return moduli_; }
  const Vec& unit() const noexcept { return unit_; }
  std::size_t dim() const noexcept { return basis_names_.size(); }

  const Vec& basis_product(std::size_t i, std::size_t j) const {
    return products_[i * dim() + j];
  }

  Vec reduce(std::span<const Integer> v) const;
  Vec zero() const { return zero_vec(dim()); }
  Vec basis_vector(std::size_t i) const { return unit_vec(dim(), i); }
  Vec add(std::span<const Integer> a, std::span<const Integer> b) const;
  Vec sub(std::span<const Integer> a, std::span<const Integer> b) const;
  Vec multiply(std::span<const Integer> a, std::span<const Integer> b) const;
  bool equal(std::span<const Integer> a, std::span<const Integer> b) const;

  /// Row i is a * e_i, so x * left_mult_matrix(a) == a * x.
  IntMatrix left_mult_matrix(std::span<const Integer> a) const;
  /// Row i is e_i * a, so x * right_mult_matrix(a) == x * a.
  IntMatrix right_mult_matrix(std::span<const Integer> a) const;

  bool is_finite() const;
  /// Number of elements, when finite.
  std::optional<Integer> order() const;
  bool is_commutative() const;

  std::string format(std::span<const Integer> v) const;

  /// Same presentation: moduli, structure constants and unit. Names ignored.
  bool same_structure(const BasedRing& other) const;

 private:
  std::string name_;
  std::vector<std::string> basis_names_;
  Moduli moduli_;
  std::vector<Vec> products_;
  Vec unit_;
};

using RingRef = std::shared_ptr<const BasedRing>;

/// One failed instance of an algebraic law, with the basis indices that
/// witness it.
struct AxiomFailure {
  std::string axiom;
  std::vector<std::size_t> witness;
  std::string detail;
};

struct ValidationReport {
  std::vector<AxiomFailure> failures;
  bool ok() const noexcept { return failures.empty(); }
  /// Throws AxiomError naming the first failure, if any.
  void raise_if_failed(const std::string& what) const;
};

ValidationReport validate_ring(const BasedRing& r);

/// Validates and wraps; throws AxiomError on failure.
RingRef make_ring(BasedRing r);

/// Element of a based ring, always kept reduced.
class RingElement {
 public:
  RingElement(RingRef parent, std::span<const Integer> coeffs);

  const RingRef& parent() const noexcept { return parent_; }
  const Vec& coeffs() const noexcept { return coeffs_; }

  friend RingElement operator+(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend bool operator==(const RingElement& a, const RingElement& b);

 private:
  RingRef parent_;
  Vec coeffs_;
};

RingRef integers();
RingRef integers_mod(const Integer& m);
RingRef make_group_ring(const CayleyTable& g, const Integer& modulus);
RingRef make_matrix_ring(std::size_t n, const Integer& modulus);
RingRef make_upper_triangular(std::size_t n, const Integer& modulus);
RingRef make_product_ring(const RingRef& a, const RingRef& b);
/// A (x)_Z C on basis pairs (i, p) (index i * dim C + p), modulus
/// gcd(m_i, m_p) with gcd(0, k) = k.
RingRef ring_tensor_Z(const RingRef& a, const RingRef& c);

/// Ring homomorphism; row i of `matrix` is the image of source basis e_i in
/// target coordinates.
class RingHom {
 public:
  const RingRef& source() const noexcept { return source_; }
  const RingRef& target() const noexcept { return target_; }
  const IntMatrix& matrix() const noexcept { return matrix_; }

  Vec apply(std::span<const Integer> x) const;

 private:
  friend RingHom make_hom(RingRef, RingRef, const IntMatrix&);
  friend RingHom make_hom_unchecked(RingRef, RingRef, const IntMatrix&);
  RingRef source_;
  RingRef target_;
  IntMatrix matrix_;
};

ValidationReport check_hom(const BasedRing& source, const BasedRing& target,
                           const IntMatrix& matrix);
/// Validated hom; throws AxiomError with the failing witness otherwise.
RingHom make_hom(RingRef source, RingRef target, const IntMatrix& matrix);
/// Skips validation. Only for negative controls and internal rewrapping of
/// maps already known to be homomorphisms.
RingHom make_hom_unchecked(RingRef source, RingRef target, const IntMatrix& matrix);

RingHom identity_hom(const RingRef& r);
/// g after f.
RingHom hom_compose(const RingHom& g, const RingHom& f);
bool hom_is_iso(const RingHom& f);
/// f (x) g between the Z-tensor rings of the sources and of the targets.
RingHom hom_tensor(const RingHom& f, const RingHom& g);
/// Linear extension of a group homomorphism between group rings.
RingHom group_ring_hom(const RingRef& source, const CayleyTable& gs, const RingRef& target,
                       const CayleyTable& gt, const std::vector<std::size_t>& images);

}  // namespace laxcenter
