#include "laxcenter/morita.hpp"

#include "laxcenter/errors.hpp"

namespace laxcenter {

namespace {

void add_scaled(Vec& acc, const Integer& c, std::span<const Integer> v) {
  for (std::size_t i = 0; i < v.size(); ++i) acc[i] += c * v[i];
}

// Row vector of the pure tensor e_i (x) y or x (x) e_j in Z^(kM * kN).
Vec tensor_row(std::span<const Integer> x, std::span<const Integer> y) {
  Vec out(x.size() * y.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0)
      for (std::size_t j = 0; j < y.size(); ++j) out[i * y.size() + j] = x[i] * y[j];
  return out;
}

Vec coords_in(const Subring& sub, std::span<const Integer> v, const std::string& what) {
  auto c = sub.coordinates(v);
  if (!c)
    throw InternalError(what + ": " + sub.ambient->format(v) + " is not in " +
                        sub.as_ring->name());
  return std::move(*c);
}

std::string idx(std::initializer_list<std::size_t> ix) {
  std::string s = "(";
  bool first = true;
  for (auto i : ix) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + ")";
}

}  // namespace

bool Bimodule::equal(std::span<const Integer> x, std::span<const Integer> y) const {
  Vec d(x.begin(), x.end());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] -= y[i];
  return relations->contains(d);
}

Vec Bimodule::act_left(std::span<const Integer> a, std::span<const Integer> x) const {
  Vec out = zero_vec(rank());
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != 0) add_scaled(out, a[k], mul(x, left_action[k]));
  return reduce(out);
}

Vec Bimodule::act_right(std::span<const Integer> x, std::span<const Integer> b) const {
  Vec out = zero_vec(rank());
  for (std::size_t k = 0; k < b.size(); ++k)
    if (b[k] != 0) add_scaled(out, b[k], mul(x, right_action[k]));
  return reduce(out);
}

Bimodule make_bimodule(std::string name, RingRef left_ring, RingRef right_ring,
                       Moduli carrier_moduli, IntMatrix carrier_relations,
                       std::vector<IntMatrix> left_action,
                       std::vector<IntMatrix> right_action) {
  const std::size_t k = carrier_moduli.size();
  if (carrier_relations.rows() == 0) carrier_relations = IntMatrix(0, k);
  if (carrier_relations.cols() != k)
    throw InputError("bimodule " + name + ": relation rows have the wrong width");
  if (left_action.size() != left_ring->dim() || right_action.size() != right_ring->dim())
    throw InputError("bimodule " + name + ": one action matrix per ring basis element expected");
  for (const auto* acts : {&left_action, &right_action})
    for (const auto& m : *acts)
      if (m.rows() != k || m.cols() != k)
        throw InputError("bimodule " + name + ": action matrices must be " +
                         std::to_string(k) + "x" + std::to_string(k));
  Bimodule m;
  m.name = std::move(name);
  m.left_ring = std::move(left_ring);
  m.right_ring = std::move(right_ring);
  m.relations = std::make_shared<const Lattice>(
      IntMatrix::stack(carrier_relations, modulus_rows(carrier_moduli)));
  m.carrier_moduli = std::move(carrier_moduli);
  m.carrier_relations = std::move(carrier_relations);
  m.left_action = std::move(left_action);
  m.right_action = std::move(right_action);
  return m;
}

ValidationReport check_bimodule(const Bimodule& m) {
  ValidationReport rep;
  const std::size_t k = m.rank();
  const auto& lr = *m.left_ring;
  const auto& rr = *m.right_ring;
  auto fail = [&](std::string axiom, std::vector<std::size_t> w, std::string detail = {}) {
    rep.failures.push_back({std::move(axiom), std::move(w), std::move(detail)});
  };

  const auto& rel = m.relations->basis();
  for (std::size_t r = 0; r < rel.rows(); ++r) {
    for (std::size_t a = 0; a < lr.dim(); ++a)
      if (!is_zero(m.reduce(mul(rel.row(r), m.left_action[a]))))
        fail("left action respects relations", {a, r});
    for (std::size_t b = 0; b < rr.dim(); ++b)
      if (!is_zero(m.reduce(mul(rel.row(r), m.right_action[b]))))
        fail("right action respects relations", {r, b});
  }
  for (std::size_t a = 0; a < lr.dim(); ++a)
    if (lr.moduli()[a] != 0)
      for (std::size_t x = 0; x < k; ++x) {
        Vec v = m.left_action[a].row_vec(x);
        for (auto& c : v) c *= lr.moduli()[a];
        if (!is_zero(m.reduce(v))) fail("left action respects ring moduli", {a, x});
      }
  for (std::size_t b = 0; b < rr.dim(); ++b)
    if (rr.moduli()[b] != 0)
      for (std::size_t x = 0; x < k; ++x) {
        Vec v = m.right_action[b].row_vec(x);
        for (auto& c : v) c *= rr.moduli()[b];
        if (!is_zero(m.reduce(v))) fail("right action respects ring moduli", {x, b});
      }

  for (std::size_t x = 0; x < k; ++x) {
    Vec ex = unit_vec(k, x);
    Vec rx = m.reduce(ex);
    if (m.act_left(lr.unit(), ex) != rx) fail("left unit", {x});
    if (m.act_right(ex, rr.unit()) != rx) fail("right unit", {x});
    for (std::size_t a = 0; a < lr.dim(); ++a)
      for (std::size_t b = 0; b < lr.dim(); ++b) {
        Vec lhs = m.act_left(lr.basis_product(a, b), ex);
        Vec rhs = m.act_left(lr.basis_vector(a), m.act_left(lr.basis_vector(b), ex));
        if (lhs != rhs) fail("left associativity", {a, b, x});
      }
    for (std::size_t a = 0; a < rr.dim(); ++a)
      for (std::size_t b = 0; b < rr.dim(); ++b) {
        Vec lhs = m.act_right(ex, rr.basis_product(a, b));
        Vec rhs = m.act_right(m.act_right(ex, rr.basis_vector(a)), rr.basis_vector(b));
        if (lhs != rhs) fail("right associativity", {x, a, b});
      }
    for (std::size_t a = 0; a < lr.dim(); ++a)
      for (std::size_t b = 0; b < rr.dim(); ++b) {
        Vec lhs = m.act_right(m.act_left(lr.basis_vector(a), ex), rr.basis_vector(b));
        Vec rhs = m.act_left(lr.basis_vector(a), m.act_right(ex, rr.basis_vector(b)));
        if (lhs != rhs) fail("actions commute", {a, x, b});
      }
  }
  return rep;
}

Bimodule regular_bimodule(const RingRef& r) {
  std::vector<IntMatrix> left, right;
  for (std::size_t a = 0; a < r->dim(); ++a) {
    // row x of left_mult_matrix(e_a) is e_a e_x
    left.push_back(r->left_mult_matrix(r->basis_vector(a)));
    right.push_back(r->right_mult_matrix(r->basis_vector(a)));
  }
  return make_bimodule(r->name(), r, r, r->moduli(), {}, std::move(left), std::move(right));
}

Bimodule restriction_bimodule(const RingHom& f) {
  const auto& s = f.target();
  std::vector<IntMatrix> left, right;
  for (std::size_t a = 0; a < f.source()->dim(); ++a)
    left.push_back(s->left_mult_matrix(f.apply(f.source()->basis_vector(a))));
  for (std::size_t b = 0; b < s->dim(); ++b) right.push_back(s->right_mult_matrix(s->basis_vector(b)));
  return make_bimodule(s->name() + " over " + f.source()->name(), f.source(), s, s->moduli(), {},
                       std::move(left), std::move(right));
}

CentralizerData centralizer_data(const RingHom& f, const Subring& z_source,
                                 const Subring& z_target) {
  const auto& s = *f.target();
  Subring zf = centralizer(f);
  const std::size_t k = zf.rank();
  std::vector<IntMatrix> left, right;
  for (std::size_t a = 0; a < z_target.rank(); ++a) {
    IntMatrix m(k, k);
    for (std::size_t x = 0; x < k; ++x) {
      Vec c = coords_in(zf, s.multiply(z_target.generators.row(a), zf.generators.row(x)),
                        "center acting on the centralizer");
      for (std::size_t y = 0; y < k; ++y) m(x, y) = c[y];
    }
    left.push_back(std::move(m));
  }
  for (std::size_t b = 0; b < z_source.rank(); ++b) {
    Vec fb = f.apply(z_source.generators.row(b));
    IntMatrix m(k, k);
    for (std::size_t x = 0; x < k; ++x) {
      Vec c = coords_in(zf, s.multiply(zf.generators.row(x), fb), "source center acting");
      for (std::size_t y = 0; y < k; ++y) m(x, y) = c[y];
    }
    right.push_back(std::move(m));
  }
  Bimodule bm = make_bimodule(zf.as_ring->name(), z_target.as_ring, z_source.as_ring, zf.moduli,
                              {}, std::move(left), std::move(right));
  return {f, z_source, z_target, std::move(zf), std::move(bm)};
}

CentralizerData centralizer_data(const RingHom& f) {
  return centralizer_data(f, center(f.source()), center(f.target()));
}

Bimodule center_bimodule(const RingHom& f) { return centralizer_data(f).bimodule; }

ValidationReport check_bimodule_hom(const BimoduleHom& h) {
  ValidationReport rep;
  const auto& src = h.source;
  const auto& tgt = h.target;
  if (!src.left_ring->same_structure(*tgt.left_ring) ||
      !src.right_ring->same_structure(*tgt.right_ring)) {
    rep.failures.push_back({"matching rings", {}, src.name + " vs " + tgt.name});
    return rep;
  }
  if (h.matrix.rows() != src.rank() || h.matrix.cols() != tgt.rank()) {
    rep.failures.push_back({"matrix shape", {h.matrix.rows(), h.matrix.cols()}, {}});
    return rep;
  }
  const auto& rel = src.relations->basis();
  for (std::size_t r = 0; r < rel.rows(); ++r)
    if (!is_zero(h.apply(rel.row(r))))
      rep.failures.push_back({"relations map to zero", {r}, to_string(rel.row(r))});
  const auto& lr = *src.left_ring;
  const auto& rr = *src.right_ring;
  for (std::size_t x = 0; x < src.rank(); ++x) {
    Vec ex = unit_vec(src.rank(), x);
    Vec hx = h.apply(ex);
    for (std::size_t a = 0; a < lr.dim(); ++a)
      if (h.apply(src.act_left(lr.basis_vector(a), ex)) != tgt.act_left(lr.basis_vector(a), hx))
        rep.failures.push_back({"left equivariance", {a, x}, {}});
    for (std::size_t b = 0; b < rr.dim(); ++b)
      if (h.apply(src.act_right(ex, rr.basis_vector(b))) != tgt.act_right(hx, rr.basis_vector(b)))
        rep.failures.push_back({"right equivariance", {x, b}, {}});
  }
  return rep;
}

std::vector<Integer> kernel_invariants(const BimoduleHom& h) {
  const std::size_t k = h.source.rank();
  const IntMatrix& src_rel = h.source.relations->basis();
  IntMatrix ker = kernel_relative(h.matrix, h.target.relations->basis());
  IntMatrix outer = IntMatrix::stack(IntMatrix(0, k), IntMatrix::stack(ker, src_rel));
  return quotient_invariants(outer, IntMatrix::stack(IntMatrix(0, k), src_rel));
}

bool is_injective(const BimoduleHom& h) { return kernel_invariants(h).empty(); }

bool is_surjective(const BimoduleHom& h) {
  const std::size_t t = h.target.rank();
  IntMatrix inner = IntMatrix::stack(IntMatrix(0, t),
                                     IntMatrix::stack(h.matrix, h.target.relations->basis()));
  return quotient_invariants(IntMatrix::identity(t), inner).empty();
}

Vec TensorPresentation::project(std::span<const Integer> x, std::span<const Integer> y) const {
  return lattice->reduce(tensor_row(x, y));
}

Bimodule TensorPresentation::as_bimodule() const {
  const std::size_t km = left_factor.rank(), kn = right_factor.rank();
  std::vector<IntMatrix> left, right;
  for (const auto& l : left_factor.left_action) left.push_back(kron(l, IntMatrix::identity(kn)));
  for (const auto& r : right_factor.right_action) right.push_back(kron(IntMatrix::identity(km), r));
  return make_bimodule(left_factor.name + " (x) " + right_factor.name, left_factor.left_ring,
                       right_factor.right_ring, Moduli(km * kn, 0), relations, std::move(left),
                       std::move(right));
}

TensorPresentation tensor_over(const RingRef& a, const Bimodule& m, const Bimodule& n) {
  if (!m.right_ring->same_structure(*a))
    throw InputError("tensor_over: right ring of " + m.name + " is not " + a->name());
  if (!n.left_ring->same_structure(*a))
    throw InputError("tensor_over: left ring of " + n.name + " is not " + a->name());
  if (!center(a).is_whole_ring())
    throw InputError("tensor_over: base ring " + a->name() + " is not commutative");

  const std::size_t km = m.rank(), kn = n.rank();
  std::vector<Vec> rows;
  const auto& mrel = m.relations->basis();
  for (std::size_t r = 0; r < mrel.rows(); ++r)
    for (std::size_t j = 0; j < kn; ++j) rows.push_back(tensor_row(mrel.row(r), unit_vec(kn, j)));
  const auto& nrel = n.relations->basis();
  for (std::size_t r = 0; r < nrel.rows(); ++r)
    for (std::size_t i = 0; i < km; ++i) rows.push_back(tensor_row(unit_vec(km, i), nrel.row(r)));
  // (x a) (x) y - x (x) (a y)
  for (std::size_t c = 0; c < a->dim(); ++c)
    for (std::size_t i = 0; i < km; ++i)
      for (std::size_t j = 0; j < kn; ++j) {
        Vec row = tensor_row(m.right_action[c].row(i), unit_vec(kn, j));
        Vec rhs = tensor_row(unit_vec(km, i), n.left_action[c].row(j));
        for (std::size_t p = 0; p < row.size(); ++p) row[p] -= rhs[p];
        if (!is_zero(row)) rows.push_back(std::move(row));
      }

  TensorPresentation t;
  t.base = a;
  t.left_factor = m;
  t.right_factor = n;
  t.lattice = std::make_shared<const Lattice>(
      IntMatrix::stack(IntMatrix(0, km * kn), IntMatrix::from_rows(rows, km * kn)));
  // The lattice basis spans the same relations with far fewer rows.
  t.relations = IntMatrix::stack(IntMatrix(0, km * kn), t.lattice->basis());
  t.invariant_factors = quotient_invariants(IntMatrix::identity(km * kn), t.relations);
  return t;
}

Compositor compositor_mu(const CentralizerData& lower, const CentralizerData& upper,
                         const CentralizerData& composite) {
  const auto& t = *upper.f.target();
  TensorPresentation tp = tensor_over(upper.z_source.as_ring, upper.bimodule, lower.bimodule);
  const std::size_t kg = upper.zf.rank(), kf = lower.zf.rank();
  IntMatrix m(kg * kf, composite.zf.rank());
  for (std::size_t i = 0; i < kg; ++i)
    for (std::size_t j = 0; j < kf; ++j) {
      Vec img = t.multiply(upper.zf.generators.row(i), upper.f.apply(lower.zf.generators.row(j)));
      Vec c = coords_in(composite.zf, img, "compositor image");
      for (std::size_t p = 0; p < c.size(); ++p) m(tp.index(i, j), p) = c[p];
    }
  BimoduleHom map{tp.as_bimodule(), composite.bimodule, std::move(m)};
  return {std::move(tp), std::move(map)};
}

Compositor compositor_mu(const RingHom& f, const RingHom& g) {
  if (!f.target()->same_structure(*g.source()))
    throw InputError("compositor_mu: homs are not composable");
  Subring zr = center(f.source()), zs = center(f.target()), zt = center(g.target());
  auto df = centralizer_data(f, zr, zs);
  auto dg = centralizer_data(g, zs, zt);
  auto dgf = centralizer_data(hom_compose(g, f), zr, zt);
  return compositor_mu(df, dg, dgf);
}

CenterChain build_center_chain(const RingHom& f, const RingHom& g, const RingHom& h) {
  if (!f.target()->same_structure(*g.source()) || !g.target()->same_structure(*h.source()))
    throw InputError("chain f, g, h is not composable");
  CenterChain c{f, g, h, center(f.source()), center(g.source()), center(h.source()),
                center(h.target()), {}, {}, {}, {}, {}, {}};
  c.df = centralizer_data(f, c.zr, c.zs);
  c.dg = centralizer_data(g, c.zs, c.zt);
  c.dh = centralizer_data(h, c.zt, c.zw);
  RingHom gf = hom_compose(g, f), hg = hom_compose(h, g);
  c.dgf = centralizer_data(gf, c.zr, c.zt);
  c.dhg = centralizer_data(hg, c.zs, c.zw);
  c.dhgf = centralizer_data(hom_compose(h, gf), c.zr, c.zw);
  return c;
}

namespace {

void add_validation(CheckList& out, const std::string& name, const ValidationReport& rep) {
  std::vector<std::string> w;
  for (std::size_t i = 0; i < rep.failures.size() && i < 5; ++i) {
    std::string s = rep.failures[i].axiom;
    if (!rep.failures[i].witness.empty()) {
      s += " at (";
      for (std::size_t k = 0; k < rep.failures[i].witness.size(); ++k)
        s += (k ? "," : "") + std::to_string(rep.failures[i].witness[k]);
      s += ")";
    }
    w.push_back(std::move(s));
  }
  out.add(name, rep.ok(),
          rep.ok() ? std::string() : std::to_string(rep.failures.size()) + " violation(s)",
          std::move(w));
}

// Unitor of a regular factor, as a map out of the given tensor.
BimoduleHom unitor(const TensorPresentation& tp, const Bimodule& m, bool left) {
  const std::size_t km = tp.left_factor.rank(), kn = tp.right_factor.rank();
  IntMatrix mat(km * kn, m.rank());
  for (std::size_t i = 0; i < km; ++i)
    for (std::size_t j = 0; j < kn; ++j) {
      Vec v = left ? m.act_left(unit_vec(km, i), unit_vec(kn, j))
                   : m.act_right(unit_vec(km, i), unit_vec(kn, j));
      for (std::size_t p = 0; p < v.size(); ++p) mat(tp.index(i, j), p) = v[p];
    }
  return {tp.as_bimodule(), m, std::move(mat)};
}

bool same_bimodule(const Bimodule& a, const Bimodule& b) {
  return a.carrier_moduli == b.carrier_moduli && *a.relations == *b.relations &&
         a.left_action == b.left_action && a.right_action == b.right_action &&
         a.left_ring->same_structure(*b.left_ring) && a.right_ring->same_structure(*b.right_ring);
}

// Compares a unitor against the compositor on every generator.
void compare_maps(CheckList& out, const std::string& name, const BimoduleHom& expected,
                  const Compositor& mu) {
  std::vector<std::string> w;
  const auto& tgt = mu.map.target;
  for (std::size_t g = 0; g < mu.source.rank(); ++g) {
    Vec e = unit_vec(mu.source.rank(), g);
    Vec a = expected.apply(e), b = mu.map.apply(e);
    if (!tgt.equal(a, b))
      w.push_back("generator " + std::to_string(g) + ": " + to_string(a) + " vs " + to_string(b));
  }
  out.add(name, w.empty(), w.empty() ? std::string() : std::to_string(w.size()) + " generator(s) differ",
          std::move(w));
}

}  // namespace

CheckList verify_lax_morita_unity(const RingHom& f) {
  CheckList out;
  try {
    Subring zr = center(f.source()), zs = center(f.target());
    auto df = centralizer_data(f, zr, zs);
    add_validation(out, "Z(f) is a bimodule", check_bimodule(df.bimodule));

    auto id_s = centralizer_data(identity_hom(f.target()), zs, zs);
    auto id_r = centralizer_data(identity_hom(f.source()), zr, zr);
    Bimodule reg_s = regular_bimodule(zs.as_ring), reg_r = regular_bimodule(zr.as_ring);
    out.add("Z(id_S) is the regular Z(S)-bimodule",
            id_s.zf.generators == zs.generators && same_bimodule(id_s.bimodule, reg_s));
    out.add("Z(id_R) is the regular Z(R)-bimodule",
            id_r.zf.generators == zr.generators && same_bimodule(id_r.bimodule, reg_r));

    auto df_l = centralizer_data(hom_compose(identity_hom(f.target()), f), zr, zs);
    auto df_r = centralizer_data(hom_compose(f, identity_hom(f.source())), zr, zs);
    out.add("Z(id o f) == Z(f)", df_l.zf == df.zf && same_bimodule(df_l.bimodule, df.bimodule));
    out.add("Z(f o id) == Z(f)", df_r.zf == df.zf && same_bimodule(df_r.bimodule, df.bimodule));

    Compositor mu_l = compositor_mu(df, id_s, df_l);
    Compositor mu_r = compositor_mu(id_r, df, df_r);
    add_validation(out, "compositor (id_S, f) is a bimodule map", check_bimodule_hom(mu_l.map));
    add_validation(out, "compositor (f, id_R) is a bimodule map", check_bimodule_hom(mu_r.map));

    BimoduleHom lam = unitor(mu_l.source, df.bimodule, true);
    BimoduleHom rho = unitor(mu_r.source, df.bimodule, false);
    add_validation(out, "left unitor is a bimodule map", check_bimodule_hom(lam));
    add_validation(out, "right unitor is a bimodule map", check_bimodule_hom(rho));
    compare_maps(out, "left unity", lam, mu_l);
    compare_maps(out, "right unity", rho, mu_r);
  } catch (const Error& e) {
    out.add("unity construction", false, e.what());
  }
  return out;
}

CheckList verify_lax_morita_associativity(const CenterChain& c) {
  CheckList out;
  try {
    add_validation(out, "Z(f) is a bimodule", check_bimodule(c.df.bimodule));
    add_validation(out, "Z(g) is a bimodule", check_bimodule(c.dg.bimodule));
    add_validation(out, "Z(h) is a bimodule", check_bimodule(c.dh.bimodule));

    Compositor mu_gf = compositor_mu(c.df, c.dg, c.dgf);
    Compositor mu_hg = compositor_mu(c.dg, c.dh, c.dhg);
    Compositor mu_hg_f = compositor_mu(c.df, c.dhg, c.dhgf);
    Compositor mu_h_gf = compositor_mu(c.dgf, c.dh, c.dhgf);
    add_validation(out, "compositor (f, g) is a bimodule map", check_bimodule_hom(mu_gf.map));
    add_validation(out, "compositor (g, h) is a bimodule map", check_bimodule_hom(mu_hg.map));
    add_validation(out, "compositor (f, h o g) is a bimodule map", check_bimodule_hom(mu_hg_f.map));
    add_validation(out, "compositor (g o f, h) is a bimodule map", check_bimodule_hom(mu_h_gf.map));

    const auto& w = *c.h.target();
    const std::size_t kh = c.dh.zf.rank(), kg = c.dg.zf.rank(), kf = c.df.zf.rank();
    const std::size_t khg = c.dhg.zf.rank(), kgf = c.dgf.zf.rank();
    const Bimodule& target = mu_hg_f.map.target;
    RingHom hg = c.dhg.f;
    std::vector<std::string> bad, bad_direct;
    for (std::size_t k = 0; k < kh; ++k)
      for (std::size_t i = 0; i < kg; ++i)
        for (std::size_t j = 0; j < kf; ++j) {
          // (w (x) t) (x) s
          Vec a = mu_hg.map.apply(unit_vec(mu_hg.source.rank(), mu_hg.source.index(k, i)));
          Vec v1 = zero_vec(khg * kf);
          for (std::size_t p = 0; p < khg; ++p) v1[mu_hg_f.source.index(p, j)] = a[p];
          Vec r1 = mu_hg_f.map.apply(v1);
          // w (x) (t (x) s)
          Vec b = mu_gf.map.apply(unit_vec(mu_gf.source.rank(), mu_gf.source.index(i, j)));
          Vec v2 = zero_vec(kh * kgf);
          for (std::size_t p = 0; p < kgf; ++p) v2[mu_h_gf.source.index(k, p)] = b[p];
          Vec r2 = mu_h_gf.map.apply(v2);
          if (!target.equal(r1, r2))
            bad.push_back(idx({k, i, j}) + ": " + to_string(r1) + " vs " + to_string(r2));

          Vec direct = w.multiply(w.multiply(c.dh.zf.generators.row(k),
                                             c.h.apply(c.dg.zf.generators.row(i))),
                                  hg.apply(c.df.zf.generators.row(j)));
          if (!w.equal(c.dhgf.zf.embed(r1), direct))
            bad_direct.push_back(idx({k, i, j}) + ": " + w.format(c.dhgf.zf.embed(r1)) + " vs " +
                                 w.format(direct));
        }
    std::size_t total = kh * kg * kf;
    out.add("lax associativity", bad.empty(),
            std::to_string(total - bad.size()) + "/" + std::to_string(total) + " generators agree",
            bad);
    out.add("associator equals w h(t) (h o g)(s)", bad_direct.empty(), {}, bad_direct);
  } catch (const Error& e) {
    out.add("associativity construction", false, e.what());
  }
  return out;
}

CheckList verify_lax_morita(const RingHom& f, const RingHom& g, const RingHom& h, LaxMode mode) {
  if (mode == LaxMode::unity) {
    CheckList out;
    for (const RingHom* x : {&f, &g, &h}) out.append(verify_lax_morita_unity(*x));
    return out;
  }
  return verify_lax_morita_associativity(build_center_chain(f, g, h));
}

}  // namespace laxcenter
