#include "laxcenter/factorization.hpp"

#include "laxcenter/errors.hpp"
#include "laxcenter/normal_form.hpp"

namespace laxcenter {

bool Subring::contains(std::span<const Integer> ambient_vec) const {
  return span->contains(ambient_vec);
}

std::optional<Vec> Subring::coordinates(std::span<const Integer> ambient_vec) const {
  auto x = solver->solve(ambient->reduce(ambient_vec));
  if (!x) return std::nullopt;
  return reduce_vec(*x, moduli);
}

bool Subring::is_whole_ring() const {
  return basis == canonical_span(IntMatrix::identity(ambient->dim()), ambient->moduli());
}

namespace {

// Additive order of a row in Z^n / (moduli); 0 if infinite.
Integer additive_order(std::span<const Integer> row, std::span<const Integer> moduli) {
  Integer ord = 1;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] == 0) continue;
    if (moduli[i] == 0) return 0;
    ord = lcm(ord, moduli[i] / gcd(moduli[i], row[i]));
  }
  return ord;
}

struct DirectBasis {
  IntMatrix generators;
  Moduli orders;
};

// Rewrites the canonical rows as a direct-sum basis of the subgroup they
// span in Z^n / (moduli).
DirectBasis direct_basis(const IntMatrix& rows, const Moduli& moduli) {
  const std::size_t k = rows.rows(), n = moduli.size();
  Moduli orders;
  for (std::size_t r = 0; r < k; ++r) orders.push_back(additive_order(rows.row(r), moduli));

  IntMatrix rel = kernel_relative(rows, modulus_rows(moduli));
  std::vector<Vec> expected;
  for (std::size_t r = 0; r < k; ++r)
    if (orders[r] != 0) {
      Vec e = zero_vec(k);
      e[r] = orders[r];
      expected.push_back(std::move(e));
    }
  if (Lattice(IntMatrix::stack(IntMatrix(0, k), rel)) ==
      Lattice(IntMatrix::from_rows(expected, k)))
    return {rows, orders};

  auto s = snf(rel);
  IntMatrix v_inv = hnf(*s.right_transform).left_transform;
  IntMatrix gens = v_inv * rows;
  DirectBasis out{IntMatrix(0, n), {}};
  std::vector<Vec> kept;
  for (std::size_t i = 0; i < k; ++i) {
    Integer d = i < s.rank ? s.invariant_factors[i] : Integer(0);
    if (d == 1) continue;
    kept.push_back(reduce_vec(gens.row(i), moduli));
    out.orders.push_back(d);
  }
  out.generators = IntMatrix::from_rows(kept, n);
  return out;
}

}  // namespace

Subring make_subring(const RingRef& ambient, const IntMatrix& spanning, const std::string& name) {
  const Moduli& am = ambient->moduli();
  const std::size_t n = ambient->dim();
  Subring sub;
  sub.ambient = ambient;
  sub.basis = canonical_span(spanning.rows() ? spanning : IntMatrix(0, n), am);
  sub.span = std::make_shared<const Lattice>(IntMatrix::stack(
      IntMatrix(0, n), IntMatrix::stack(sub.basis, modulus_rows(am))));

  auto direct = direct_basis(sub.basis, am);
  sub.generators = std::move(direct.generators);
  sub.moduli = std::move(direct.orders);
  sub.solver = std::make_shared<const LinearSolver>(sub.generators, am);

  const std::size_t k = sub.generators.rows();
  std::vector<Vec> products;
  products.reserve(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      Vec p = ambient->multiply(sub.generators.row(a), sub.generators.row(b));
      auto x = sub.coordinates(p);
      if (!x)
        throw InternalError("subring " + name + " is not closed: " +
                            ambient->format(sub.generators.row(a)) + " * " +
                            ambient->format(sub.generators.row(b)) + " = " +
                            ambient->format(p) + " escapes");
      products.push_back(std::move(*x));
    }
  auto unit = sub.coordinates(ambient->unit());
  if (!unit) throw InternalError("subring " + name + " does not contain the unit");

  std::vector<std::string> names;
  for (std::size_t a = 0; a < k; ++a) names.push_back(ambient->format(sub.generators.row(a)));
  try {
    sub.as_ring = make_ring(BasedRing(name, std::move(names), sub.moduli, std::move(products),
                                      std::move(*unit)));
    sub.embedding = make_hom(sub.as_ring, ambient, sub.generators);
  } catch (const AxiomError& e) {
    throw InternalError("subring " + name + " has an invalid induced structure: " + e.what());
  }
  return sub;
}

namespace {

Subring centralizer_named(const RingHom& f, const std::string& name) {
  const auto& s = *f.target();
  const std::size_t n = s.dim();
  const std::size_t k = f.source()->dim();
  // x * (R_a - L_a) == x a - a x for every image a = f(e_i).
  IntMatrix system(n, 0);
  Moduli target_moduli;
  for (std::size_t i = 0; i < k; ++i) {
    Vec a = f.apply(f.source()->basis_vector(i));
    system = IntMatrix::concat(system, s.right_mult_matrix(a) - s.left_mult_matrix(a));
    target_moduli.insert(target_moduli.end(), s.moduli().begin(), s.moduli().end());
  }
  return make_subring(f.target(), kernel_mod(system, target_moduli, s.moduli()), name);
}

}  // namespace

Subring centralizer(const RingHom& f) {
  return centralizer_named(f, "Z(" + f.source()->name() + " -> " + f.target()->name() + ")");
}

Subring center(const RingRef& r) { return centralizer_named(identity_hom(r), "Z(" + r->name() + ")"); }

RingHom mu_f(const RingHom& f, const Subring& zf) {
  const auto& a = *f.source();
  const auto& s = *f.target();
  const std::size_t k = zf.rank();
  IntMatrix m(a.dim() * k, s.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Vec fi = f.apply(a.basis_vector(i));
    for (std::size_t j = 0; j < k; ++j) {
      Vec p = s.multiply(fi, zf.generators.row(j));
      for (std::size_t c = 0; c < s.dim(); ++c) m(i * k + j, c) = p[c];
    }
  }
  try {
    return make_hom(ring_tensor_Z(f.source(), zf.as_ring), f.target(), m);
  } catch (const AxiomError& e) {
    throw InternalError(std::string("mu_f fails to be a ring map: ") + e.what());
  }
}

RingHom mu_f(const RingHom& f) { return mu_f(f, centralizer(f)); }

RingHom unit_extension(const RingHom& f) {
  auto z = integers();
  return make_hom(ring_tensor_Z(f.source(), z), f.target(), f.matrix());
}

namespace {

// Coordinates of x (x) y in A (x)_Z C.
Vec pure_tensor(const BasedRing& a, const BasedRing& c, std::span<const Integer> x,
                std::span<const Integer> y) {
  Vec v = zero_vec(a.dim() * c.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t p = 0; p < c.dim(); ++p) v[i * c.dim() + p] = x[i] * y[p];
  return v;
}

}  // namespace

FactorizationCheck is_factorization_object(const RingRef& c, const RingHom& g,
                                           const RingHom& f) {
  const auto& a = *f.source();
  auto expected = ring_tensor_Z(f.source(), c);
  if (!g.source()->same_structure(*expected))
    throw InputError("factorization: source of g is not " + expected->name());
  if (!g.target()->same_structure(*f.target()))
    throw InputError("factorization: target of g is not " + f.target()->name());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Vec lhs = g.apply(pure_tensor(a, *c, a.basis_vector(i), c->unit()));
    Vec rhs = f.apply(a.basis_vector(i));
    if (lhs != rhs) return {false, i};
  }
  return {true, std::nullopt};
}

UniversalFactor universal_factor(const RingRef& c, const RingHom& g, const RingHom& f) {
  auto check = is_factorization_object(c, g, f);
  const auto& a = *f.source();
  const auto& s = *f.target();
  if (!check.holds)
    throw AxiomError("factorization triangle", {*check.witness},
                     "g(e_i (x) 1) != f(e_i) at source basis element " +
                         a.basis_names()[*check.witness]);
  UniversalFactor out{centralizer(f), {}};
  const Subring& zf = out.zf;

  // tau~(c_p) = g(1 (x) c_p), in Z(f) coordinates.
  IntMatrix m(c->dim(), zf.rank());
  std::vector<Vec> images;
  for (std::size_t p = 0; p < c->dim(); ++p) {
    Vec img = g.apply(pure_tensor(a, *c, a.unit(), c->basis_vector(p)));
    auto coords = zf.coordinates(img);
    if (!coords)
      throw InternalError("g(1 (x) " + c->basis_names()[p] + ") = " + s.format(img) +
                          " does not lie in " + zf.as_ring->name());
    for (std::size_t j = 0; j < zf.rank(); ++j) m(p, j) = (*coords)[j];
    images.push_back(std::move(img));
  }
  try {
    out.tau = make_hom(c, zf.as_ring, m);
  } catch (const AxiomError& e) {
    throw InternalError(std::string("tau~ fails to be a ring map: ") + e.what());
  }

  // mu_f o (id (x) tau~) == g on every basis pair.
  RingHom through = hom_compose(mu_f(f, zf), hom_tensor(identity_hom(f.source()), out.tau));
  for (std::size_t r = 0; r < through.matrix().rows(); ++r)
    if (through.apply(unit_vec(through.matrix().rows(), r)) !=
        g.apply(unit_vec(g.matrix().rows(), r)))
      throw InternalError("mu_f o (id (x) tau~) differs from g at basis pair " +
                          g.source()->basis_names()[r]);

  // Any sigma with the same property satisfies f(1) sigma(c) = g(1 (x) c),
  // and f(1) = 1 forces sigma = tau~.
  Vec f_one = f.apply(a.unit());
  for (std::size_t p = 0; p < c->dim(); ++p) {
    Vec forced = s.multiply(f_one, zf.embed(out.tau.matrix().row(p)));
    if (forced != images[p] || zf.embed(out.tau.matrix().row(p)) != images[p])
      throw InternalError("tau~ is not forced at " + c->basis_names()[p]);
  }
  return out;
}

}  // namespace laxcenter
