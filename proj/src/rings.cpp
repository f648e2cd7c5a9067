#include "laxcenter/rings.hpp"

#include "laxcenter/errors.hpp"
#include "laxcenter/modular.hpp"

#include <utility>

namespace laxcenter {

namespace {

std::string modulus_suffix(const Integer& m) {
  return m == 0 ? "Z" : "Z/" + m.get_str();
}

std::string indices(std::initializer_list<std::size_t> idx) {
  std::string s = "(";
  bool first = true;
  for (auto i : idx) {
    if (!first) s += ", ";
    s += std::to_string(i);
    first = false;
  }
  return s + ")";
}

}  // namespace

BasedRing::BasedRing(std::string name, std::vector<std::string> basis_names, Moduli moduli,
                     std::vector<Vec> products, Vec unit)
    : name_(std::move(name)),
      basis_names_(std::move(basis_names)),
      moduli_(std::move(moduli)),
      products_(std::move(products)),
      unit_(std::move(unit)) {
  const std::size_t n = basis_names_.size();
  if (moduli_.size() != n)
    throw InputError("ring " + name_ + ": " + std::to_string(moduli_.size()) +
                     " moduli for " + std::to_string(n) + " basis elements");
  for (const auto& m : moduli_)
    if (m < 0) throw InputError("ring " + name_ + ": negative modulus " + m.get_str());
  if (products_.size() != n * n)
    throw InputError("ring " + name_ + ": expected " + std::to_string(n * n) +
                     " structure-constant vectors, got " + std::to_string(products_.size()));
  for (auto& p : products_) {
    if (p.size() != n)
      throw InputError("ring " + name_ + ": structure constant of wrong length");
    p = reduce_vec(p, moduli_);
  }
  if (unit_.size() != n) throw InputError("ring " + name_ + ": unit vector of wrong length");
  unit_ = reduce_vec(unit_, moduli_);
}

Vec BasedRing::reduce(std::span<const Integer> v) const {
  if (v.size() != dim())
    throw InputError("ring " + name_ + ": vector of length " + std::to_string(v.size()) +
                     ", expected " + std::to_string(dim()));
  return reduce_vec(v, moduli_);
}

Vec BasedRing::add(std::span<const Integer> a, std::span<const Integer> b) const {
  Vec s(dim());
  for (std::size_t i = 0; i < dim(); ++i) s[i] = a[i] + b[i];
  return reduce(s);
}

Vec BasedRing::sub(std::span<const Integer> a, std::span<const Integer> b) const {
  Vec s(dim());
  for (std::size_t i = 0; i < dim(); ++i) s[i] = a[i] - b[i];
  return reduce(s);
}

Vec BasedRing::multiply(std::span<const Integer> a, std::span<const Integer> b) const {
  const std::size_t n = dim();
  if (a.size() != n || b.size() != n)
    throw InputError("ring " + name_ + ": multiplying vectors of the wrong length");
  Vec out(n, Integer(0));
  Integer coef;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      coef = a[i] * b[j];
      const Vec& c = products_[i * n + j];
      for (std::size_t k = 0; k < n; ++k)
        if (c[k] != 0) out[k] += coef * c[k];
    }
  }
  return reduce(out);
}

bool BasedRing::equal(std::span<const Integer> a, std::span<const Integer> b) const {
  return reduce(a) == reduce(b);
}

IntMatrix BasedRing::left_mult_matrix(std::span<const Integer> a) const {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < dim(); ++i) rows.push_back(multiply(a, basis_vector(i)));
  return IntMatrix::from_rows(rows, dim());
}

IntMatrix BasedRing::right_mult_matrix(std::span<const Integer> a) const {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < dim(); ++i) rows.push_back(multiply(basis_vector(i), a));
  return IntMatrix::from_rows(rows, dim());
}

bool BasedRing::is_finite() const {
  for (const auto& m : moduli_)
    if (m == 0) return false;
  return true;
}

std::optional<Integer> BasedRing::order() const {
  if (!is_finite()) return std::nullopt;
  Integer n = 1;
  for (const auto& m : moduli_) n *= m;
  return n;
}

bool BasedRing::is_commutative() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j)
      if (basis_product(i, j) != basis_product(j, i)) return false;
  return true;
}

std::string BasedRing::format(std::span<const Integer> v) const {
  Vec r = reduce(v);
  std::string s;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (r[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (r[i] != 1) s += r[i].get_str() + "*";
    s += basis_names_[i];
  }
  return s.empty() ? "0" : s;
}

bool BasedRing::same_structure(const BasedRing& other) const {
  return moduli_ == other.moduli_ && products_ == other.products_ && unit_ == other.unit_;
}

void ValidationReport::raise_if_failed(const std::string& what) const {
  if (ok()) return;
  const auto& f = failures.front();
  throw AxiomError(f.axiom, f.witness, what + ": " + f.detail);
}

ValidationReport validate_ring(const BasedRing& r) {
  ValidationReport rep;
  const std::size_t n = r.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec& c = r.basis_product(i, j);
      for (std::size_t side = 0; side < 2; ++side) {
        const Integer& m = r.moduli()[side == 0 ? i : j];
        if (m == 0) continue;
        Vec scaled(c);
        for (auto& x : scaled) x *= m;
        if (!is_zero(r.reduce(scaled))) {
          rep.failures.push_back({"modulus compatibility", {i, j},
                                  "m_" + std::to_string(side == 0 ? i : j) + " * e_" +
                                      std::to_string(i) + "e_" + std::to_string(j) +
                                      " is nonzero"});
        }
      }
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec lhs = r.multiply(r.basis_product(i, j), r.basis_vector(k));
        Vec rhs = r.multiply(r.basis_vector(i), r.basis_product(j, k));
        if (lhs != rhs)
          rep.failures.push_back({"associativity", {i, j, k},
                                  "(e_i e_j) e_k != e_i (e_j e_k) at " + indices({i, j, k}) +
                                      ": " + r.format(lhs) + " vs " + r.format(rhs)});
      }
  for (std::size_t i = 0; i < n; ++i) {
    Vec e = r.basis_vector(i);
    Vec left = r.multiply(r.unit(), e);
    Vec right = r.multiply(e, r.unit());
    if (left != r.reduce(e) || right != r.reduce(e))
      rep.failures.push_back({"unit law", {i},
                              "unit does not act trivially on basis element " +
                                  r.basis_names()[i]});
  }
  return rep;
}

RingRef make_ring(BasedRing r) {
  validate_ring(r).raise_if_failed("ring " + r.name());
  return std::make_shared<const BasedRing>(std::move(r));
}

RingElement::RingElement(RingRef parent, std::span<const Integer> coeffs)
    : parent_(std::move(parent)), coeffs_(parent_->reduce(coeffs)) {}

namespace {
void same_parent(const RingElement& a, const RingElement& b) {
  if (a.parent() != b.parent() && !a.parent()->same_structure(*b.parent()))
    throw InputError("ring elements from different rings");
}
}  // namespace

RingElement operator+(const RingElement& a, const RingElement& b) {
  same_parent(a, b);
  return RingElement(a.parent_, a.parent_->add(a.coeffs_, b.coeffs_));
}

RingElement operator-(const RingElement& a, const RingElement& b) {
  same_parent(a, b);
  return RingElement(a.parent_, a.parent_->sub(a.coeffs_, b.coeffs_));
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  same_parent(a, b);
  return RingElement(a.parent_, a.parent_->multiply(a.coeffs_, b.coeffs_));
}

bool operator==(const RingElement& a, const RingElement& b) {
  same_parent(a, b);
  return a.coeffs_ == b.coeffs_;
}

RingRef integers() { return integers_mod(0); }

RingRef integers_mod(const Integer& m) {
  return make_ring(BasedRing(modulus_suffix(m), {"1"}, {m}, {Vec{1}}, Vec{1}));
}

RingRef make_group_ring(const CayleyTable& g, const Integer& modulus) {
  auto errors = validate_group(g);
  if (!errors.empty()) throw InputError("invalid Cayley table " + g.name + ": " + errors.front());
  if (modulus < 0) throw InputError("negative modulus");
  const std::size_t n = g.order();
  std::vector<Vec> products;
  products.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) products.push_back(unit_vec(n, g.mul(i, j)));
  return make_ring(BasedRing(modulus_suffix(modulus) + "[" + g.name + "]", g.element_names,
                             Moduli(n, modulus), std::move(products),
                             unit_vec(n, g.identity)));
}

namespace {

RingRef matrix_units_ring(std::size_t n, const Integer& modulus, bool upper_only,
                          const std::string& name) {
  if (n == 0) throw InputError(name + ": size must be at least 1");
  if (modulus < 0) throw InputError("negative modulus");
  std::vector<std::pair<std::size_t, std::size_t>> units;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!upper_only || a <= b) units.emplace_back(a, b);
  const std::size_t d = units.size();
  auto index = [&](std::size_t a, std::size_t b) {
    for (std::size_t k = 0; k < d; ++k)
      if (units[k] == std::pair{a, b}) return k;
    return d;
  };
  std::vector<std::string> names;
  for (auto [a, b] : units) names.push_back("E" + std::to_string(a + 1) + std::to_string(b + 1));
  std::vector<Vec> products;
  for (auto [a, b] : units)
    for (auto [c, e] : units) {
      Vec v = zero_vec(d);
      if (b == c) v[index(a, e)] = 1;
      products.push_back(std::move(v));
    }
  Vec unit = zero_vec(d);
  for (std::size_t a = 0; a < n; ++a) unit[index(a, a)] = 1;
  return make_ring(BasedRing(name, std::move(names), Moduli(d, modulus), std::move(products),
                             std::move(unit)));
}

}  // namespace

RingRef make_matrix_ring(std::size_t n, const Integer& modulus) {
  return matrix_units_ring(n, modulus, false,
                           "Mat" + std::to_string(n) + "(" + modulus_suffix(modulus) + ")");
}

RingRef make_upper_triangular(std::size_t n, const Integer& modulus) {
  return matrix_units_ring(n, modulus, true,
                           "UT" + std::to_string(n) + "(" + modulus_suffix(modulus) + ")");
}

RingRef make_product_ring(const RingRef& a, const RingRef& b) {
  const std::size_t m = a->dim(), n = b->dim(), d = m + n;
  std::vector<std::string> names;
  for (const auto& s : a->basis_names()) names.push_back("(" + s + ",0)");
  for (const auto& s : b->basis_names()) names.push_back("(0," + s + ")");
  Moduli moduli = a->moduli();
  moduli.insert(moduli.end(), b->moduli().begin(), b->moduli().end());
  std::vector<Vec> products(d * d, zero_vec(d));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) products[i * d + j][k] = a->basis_product(i, j)[k];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        products[(m + i) * d + (m + j)][m + k] = b->basis_product(i, j)[k];
  Vec unit = a->unit();
  unit.insert(unit.end(), b->unit().begin(), b->unit().end());
  return make_ring(BasedRing(a->name() + " x " + b->name(), std::move(names), std::move(moduli),
                             std::move(products), std::move(unit)));
}

RingRef ring_tensor_Z(const RingRef& a, const RingRef& c) {
  const std::size_t m = a->dim(), n = c->dim(), d = m * n;
  std::vector<std::string> names;
  Moduli moduli;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t p = 0; p < n; ++p) {
      names.push_back(a->basis_names()[i] + "⊗" + c->basis_names()[p]);
      moduli.push_back(gcd(a->moduli()[i], c->moduli()[p]));
    }
  std::vector<Vec> products;
  products.reserve(d * d);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t q = 0; q < n; ++q) {
          const Vec& x = a->basis_product(i, j);
          const Vec& y = c->basis_product(p, q);
          Vec v = zero_vec(d);
          for (std::size_t k = 0; k < m; ++k) {
            if (x[k] == 0) continue;
            for (std::size_t r = 0; r < n; ++r)
              if (y[r] != 0) v[k * n + r] = x[k] * y[r];
          }
          products.push_back(std::move(v));
        }
  Vec unit = zero_vec(d);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t r = 0; r < n; ++r) unit[k * n + r] = a->unit()[k] * c->unit()[r];
  return make_ring(BasedRing(a->name() + " ⊗ " + c->name(), std::move(names), std::move(moduli),
                             std::move(products), std::move(unit)));
}

Vec RingHom::apply(std::span<const Integer> x) const {
  return target_->reduce(mul(source_->reduce(x), matrix_));
}

ValidationReport check_hom(const BasedRing& source, const BasedRing& target,
                           const IntMatrix& matrix) {
  if (matrix.rows() != source.dim() || matrix.cols() != target.dim())
    throw InputError("hom " + source.name() + " -> " + target.name() + ": matrix is " +
                     std::to_string(matrix.rows()) + "x" + std::to_string(matrix.cols()) +
                     ", expected " + std::to_string(source.dim()) + "x" +
                     std::to_string(target.dim()));
  ValidationReport rep;
  auto image = [&](std::span<const Integer> x) { return target.reduce(mul(x, matrix)); };
  for (std::size_t i = 0; i < source.dim(); ++i) {
    const Integer& m = source.moduli()[i];
    if (m == 0) continue;
    Vec v = image(source.basis_vector(i));
    for (auto& x : v) x *= m;
    if (!is_zero(target.reduce(v)))
      rep.failures.push_back({"modulus", {i},
                              "image of " + source.basis_names()[i] + " is not killed by its "
                              "additive order " + m.get_str()});
  }
  for (std::size_t i = 0; i < source.dim(); ++i)
    for (std::size_t j = 0; j < source.dim(); ++j) {
      Vec lhs = image(source.basis_product(i, j));
      Vec rhs = target.multiply(image(source.basis_vector(i)), image(source.basis_vector(j)));
      if (lhs != rhs)
        rep.failures.push_back(
            {"multiplicativity", {i, j},
             "F(" + source.basis_names()[i] + "*" + source.basis_names()[j] + ") = " +
                 target.format(lhs) + " but F(" + source.basis_names()[i] + ")F(" +
                 source.basis_names()[j] + ") = " + target.format(rhs)});
    }
  Vec one = image(source.unit());
  if (one != target.unit())
    rep.failures.push_back({"unitality", {},
                            "F(1) = " + target.format(one) + ", expected " +
                                target.format(target.unit())});
  return rep;
}

RingHom make_hom_unchecked(RingRef source, RingRef target, const IntMatrix& matrix) {
  if (matrix.rows() != source->dim() || matrix.cols() != target->dim())
    throw InputError("hom " + source->name() + " -> " + target->name() +
                     ": matrix shape does not match the rings");
  RingHom h;
  h.matrix_ = IntMatrix(matrix.rows(), matrix.cols());
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    Vec r = target->reduce(matrix.row(i));
    for (std::size_t j = 0; j < r.size(); ++j) h.matrix_(i, j) = r[j];
  }
  h.source_ = std::move(source);
  h.target_ = std::move(target);
  return h;
}

RingHom make_hom(RingRef source, RingRef target, const IntMatrix& matrix) {
  check_hom(*source, *target, matrix)
      .raise_if_failed("hom " + source->name() + " -> " + target->name());
  return make_hom_unchecked(std::move(source), std::move(target), matrix);
}

RingHom identity_hom(const RingRef& r) {
  return make_hom(r, r, IntMatrix::identity(r->dim()));
}

RingHom hom_compose(const RingHom& g, const RingHom& f) {
  if (f.target() != g.source() && !f.target()->same_structure(*g.source()))
    throw InputError("cannot compose " + g.source()->name() + " -> " + g.target()->name() +
                     " after " + f.source()->name() + " -> " + f.target()->name());
  return make_hom(f.source(), g.target(), f.matrix() * g.matrix());
}

bool hom_is_iso(const RingHom& f) {
  const auto& s = *f.source();
  const auto& t = *f.target();
  LinearSolver solver(f.matrix(), t.moduli());
  for (std::size_t j = 0; j < t.dim(); ++j)
    if (!solver.solve(t.basis_vector(j))) return false;
  return kernel_mod(f.matrix(), t.moduli(), s.moduli()).rows() == 0;
}

RingHom hom_tensor(const RingHom& f, const RingHom& g) {
  return make_hom(ring_tensor_Z(f.source(), g.source()), ring_tensor_Z(f.target(), g.target()),
                  kron(f.matrix(), g.matrix()));
}

RingHom group_ring_hom(const RingRef& source, const CayleyTable& gs, const RingRef& target,
                       const CayleyTable& gt, const std::vector<std::size_t>& images) {
  check_group_hom(gs, gt, images);
  if (source->dim() != gs.order() || target->dim() != gt.order())
    throw InputError("group_ring_hom: rings do not match the groups");
  IntMatrix m(gs.order(), gt.order());
  for (std::size_t x = 0; x < gs.order(); ++x) m(x, images[x]) = 1;
  return make_hom(source, target, m);
}

}  // namespace laxcenter
