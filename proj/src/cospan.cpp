#include "laxcenter/cospan.hpp"

#include "laxcenter/errors.hpp"

#include <random>

namespace laxcenter {

namespace {

Vec coords_in(const Subring& sub, std::span<const Integer> v, const std::string& what) {
  auto c = sub.coordinates(v);
  if (!c)
    throw InternalError(what + ": " + sub.ambient->format(v) + " is not in " +
                        sub.as_ring->name());
  return std::move(*c);
}

// Hom from a subring into another subring of the same ambient, x |-> map(embed x).
template <class Map>
RingHom between(const Subring& from, const Subring& to, Map map, const std::string& what) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < from.rank(); ++i)
    rows.push_back(coords_in(to, map(from.generators.row(i)), what));
  return make_hom(from.as_ring, to.as_ring, IntMatrix::from_rows(rows, to.rank()));
}

// Hom from a subring into an ambient ring.
template <class Map>
RingHom into(const Subring& from, const RingRef& target, Map map) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < from.rank(); ++i) rows.push_back(map(from.generators.row(i)));
  return make_hom(from.as_ring, target, IntMatrix::from_rows(rows, target->dim()));
}

std::string witness_text(const AxiomFailure& f) {
  std::string s = f.axiom;
  if (!f.witness.empty()) {
    s += " at (";
    for (std::size_t k = 0; k < f.witness.size(); ++k)
      s += (k ? "," : "") + std::to_string(f.witness[k]);
    s += ")";
  }
  if (!f.detail.empty()) s += ": " + f.detail;
  return s;
}

void add_validation(CheckList& out, const std::string& name, const ValidationReport& rep) {
  std::vector<std::string> w;
  for (std::size_t i = 0; i < rep.failures.size() && i < 5; ++i)
    w.push_back(witness_text(rep.failures[i]));
  out.add(name, rep.ok(),
          rep.ok() ? std::string() : std::to_string(rep.failures.size()) + " violation(s)",
          std::move(w));
}

bool same_hom(const RingHom& a, const RingHom& b) {
  return a.source()->same_structure(*b.source()) && a.target()->same_structure(*b.target()) &&
         a.matrix() == b.matrix();
}

}  // namespace

Cospan make_cospan(RingHom left_leg, RingHom right_leg) {
  if (!left_leg.target()->same_structure(*right_leg.target()))
    throw InputError("cospan legs have different targets: " + left_leg.target()->name() +
                     " and " + right_leg.target()->name());
  return {std::move(left_leg), std::move(right_leg)};
}

ValidationReport check_cospan_morphism(const Cospan& from, const Cospan& to,
                                       const CospanMorphism& m) {
  ValidationReport rep;
  auto square = [&](const RingHom& leg, const RingHom& foot_map, const RingHom& leg2,
                    const char* name) {
    const auto& foot = *leg.source();
    for (std::size_t i = 0; i < foot.dim(); ++i) {
      Vec e = foot.basis_vector(i);
      if (!to.apex()->equal(m.apex_map.apply(leg.apply(e)), leg2.apply(foot_map.apply(e))))
        rep.failures.push_back({name, {i}, foot.basis_names()[i]});
    }
  };
  square(from.left_leg, m.left_map, to.left_leg, "left square");
  square(from.right_leg, m.right_map, to.right_leg, "right square");
  return rep;
}

Cospan orbit_cospan(const Bimodule& m, const RingRef& ring) {
  if (ring->moduli() != m.carrier_moduli ||
      *m.relations != Lattice(IntMatrix::stack(IntMatrix(0, m.rank()),
                                               modulus_rows(m.carrier_moduli))))
    throw InputError("orbit_cospan: " + ring->name() + " is not the carrier of " + m.name);
  const auto& b = *ring;
  const std::size_t k = b.dim();
  // a.(xy) = (a.x)y = x(a.y) and (xy).c = x(y.c) = (x.c)y on generators.
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y) {
      Vec ex = b.basis_vector(x), ey = b.basis_vector(y);
      Vec xy = b.basis_product(x, y);
      for (std::size_t a = 0; a < m.left_ring->dim(); ++a) {
        Vec ea = m.left_ring->basis_vector(a);
        Vec lhs = m.act_left(ea, xy);
        if (!b.equal(lhs, b.multiply(m.act_left(ea, ex), ey)) ||
            !b.equal(lhs, b.multiply(ex, m.act_left(ea, ey))))
          throw AxiomError("left algebra compatibility", {a, x, y},
                           "in orbit cospan of " + m.name);
      }
      for (std::size_t c = 0; c < m.right_ring->dim(); ++c) {
        Vec ec = m.right_ring->basis_vector(c);
        Vec lhs = m.act_right(xy, ec);
        if (!b.equal(lhs, b.multiply(ex, m.act_right(ey, ec))) ||
            !b.equal(lhs, b.multiply(m.act_right(ex, ec), ey)))
          throw AxiomError("right algebra compatibility", {x, y, c},
                           "in orbit cospan of " + m.name);
      }
    }
  std::vector<Vec> left, right;
  for (std::size_t c = 0; c < m.right_ring->dim(); ++c)
    left.push_back(m.act_right(b.unit(), m.right_ring->basis_vector(c)));
  for (std::size_t a = 0; a < m.left_ring->dim(); ++a)
    right.push_back(m.act_left(m.left_ring->basis_vector(a), b.unit()));
  return make_cospan(make_hom(m.right_ring, ring, IntMatrix::from_rows(left, k)),
                     make_hom(m.left_ring, ring, IntMatrix::from_rows(right, k)));
}

Cospan center_cospan(const CentralizerData& d) {
  RingHom left = between(d.z_source, d.zf, [&](auto r) { return d.f.apply(r); },
                         "left leg of the center cospan");
  RingHom right = between(d.z_target, d.zf, [](auto s) { return Vec(s.begin(), s.end()); },
                          "right leg of the center cospan");
  return make_cospan(std::move(left), std::move(right));
}

Cospan center_cospan(const RingHom& f) { return center_cospan(centralizer_data(f)); }

FormalPushout formal_of(const Cospan& c) {
  return {{c.apex()}, {}, c.left_leg, c.right_leg, c.apex()->name()};
}

FormalPushout compose_formal(const FormalPushout& p1, const FormalPushout& p2) {
  if (!p1.right_leg.source()->same_structure(*p2.left_leg.source()))
    throw InputError("compose_formal: foot " + p1.right_leg.source()->name() +
                     " does not match " + p2.left_leg.source()->name());
  FormalPushout out;
  out.apexes = p1.apexes;
  out.apexes.insert(out.apexes.end(), p2.apexes.begin(), p2.apexes.end());
  out.gluings = p1.gluings;
  out.gluings.push_back({p1.right_leg, p2.left_leg});
  out.gluings.insert(out.gluings.end(), p2.gluings.begin(), p2.gluings.end());
  out.left_leg = p1.left_leg;
  out.right_leg = p2.right_leg;
  out.bracketing = "(" + p1.bracketing + " | " + p2.bracketing + ")";
  return out;
}

FormalPushout compose_formal(const Cospan& c1, const Cospan& c2) {
  return compose_formal(formal_of(c1), formal_of(c2));
}

PushoutWord unit_word(const FormalPushout& p) { return {{{0, p.apexes.front()->unit()}}}; }

PushoutWord word_reduce(const FormalPushout& p, const PushoutWord& w) {
  std::vector<Letter> cur = w.letters;
  for (auto& l : cur) {
    if (l.tag >= p.apexes.size())
      throw InputError("word letter tag " + std::to_string(l.tag) + " out of range");
    l.coeffs = p.apexes[l.tag]->reduce(l.coeffs);
  }
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<Letter> next;
    for (auto& l : cur) {
      const auto& ring = *p.apexes[l.tag];
      if (ring.equal(l.coeffs, ring.unit())) {
        changed = true;
        continue;
      }
      if (!next.empty() && next.back().tag == l.tag) {
        next.back().coeffs = ring.multiply(next.back().coeffs, l.coeffs);
        changed = true;
        continue;
      }
      next.push_back(std::move(l));
    }
    cur = std::move(next);
  }
  if (cur.empty()) return unit_word(p);
  return {std::move(cur)};
}

bool is_reduced(const FormalPushout& p, const PushoutWord& w) {
  if (w == unit_word(p)) return true;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    const auto& l = w.letters[i];
    if (l.tag >= p.apexes.size()) return false;
    const auto& ring = *p.apexes[l.tag];
    if (ring.equal(l.coeffs, ring.unit())) return false;
    if (i > 0 && w.letters[i - 1].tag == l.tag) return false;
  }
  return !w.letters.empty();
}

std::string format_word(const FormalPushout& p, const PushoutWord& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    const auto& l = w.letters[i];
    if (i) s += " | ";
    s += std::to_string(l.tag) + ":";
    s += l.tag < p.apexes.size() ? p.apexes[l.tag]->format(l.coeffs) : to_string(l.coeffs);
  }
  return s + "]";
}

ValidationReport check_cocone(const FormalPushout& p, const Cocone& c) {
  ValidationReport rep;
  if (c.legs.size() != p.apexes.size()) {
    rep.failures.push_back({"one leg per apex", {c.legs.size(), p.apexes.size()}, {}});
    return rep;
  }
  for (std::size_t i = 0; i < c.legs.size(); ++i)
    if (!c.legs[i].source()->same_structure(*p.apexes[i]) ||
        !c.legs[i].target()->same_structure(*c.target))
      rep.failures.push_back({"leg shape", {i}, c.legs[i].source()->name()});
  if (!rep.ok()) return rep;
  for (std::size_t g = 0; g < p.gluings.size(); ++g) {
    const auto& gl = p.gluings[g];
    const auto& foot = *gl.into_left.source();
    for (std::size_t y = 0; y < foot.dim(); ++y) {
      Vec e = foot.basis_vector(y);
      Vec a = c.legs[g].apply(gl.into_left.apply(e));
      Vec b = c.legs[g + 1].apply(gl.into_right.apply(e));
      if (!c.target->equal(a, b))
        rep.failures.push_back({"agreement on shared foot", {g, y},
                                c.target->format(a) + " vs " + c.target->format(b)});
    }
  }
  return rep;
}

RingElement evaluate_word(const PushoutWord& w, const Cocone& c) {
  Vec acc = c.target->unit();
  for (const auto& l : w.letters) {
    if (l.tag >= c.legs.size())
      throw InputError("word letter tag " + std::to_string(l.tag) + " has no cocone leg");
    const auto& leg = c.legs[l.tag];
    if (l.coeffs.size() != leg.source()->dim())
      throw InputError("word letter has " + std::to_string(l.coeffs.size()) +
                       " coefficients, apex " + leg.source()->name() + " has dimension " +
                       std::to_string(leg.source()->dim()));
    acc = c.target->multiply(acc, leg.apply(l.coeffs));
  }
  return RingElement(c.target, acc);
}

CospanCompositor compositor_phi(const CentralizerData& lower, const CentralizerData& upper,
                                const CentralizerData& composite) {
  if (!lower.f.target()->same_structure(*upper.f.source()))
    throw InputError("compositor_phi: homs are not composable");
  CospanCompositor c;
  c.lower = center_cospan(lower);
  c.upper = center_cospan(upper);
  c.composite = center_cospan(composite);
  c.pushout = compose_formal(c.lower, c.upper);
  RingHom u = between(lower.zf, composite.zf, [&](auto s) { return upper.f.apply(s); },
                      "phi on Z(f)");
  RingHom v = between(upper.zf, composite.zf, [](auto t) { return Vec(t.begin(), t.end()); },
                      "phi on Z(g)");
  c.cocone = {composite.zf.as_ring, {std::move(u), std::move(v)}};
  c.left_map = identity_hom(lower.z_source.as_ring);
  c.right_map = identity_hom(upper.z_target.as_ring);
  return c;
}

CospanCompositor compositor_phi(const RingHom& f, const RingHom& g) {
  if (!f.target()->same_structure(*g.source()))
    throw InputError("compositor_phi: homs are not composable");
  Subring zr = center(f.source()), zs = center(f.target()), zt = center(g.target());
  return compositor_phi(centralizer_data(f, zr, zs), centralizer_data(g, zs, zt),
                        centralizer_data(hom_compose(g, f), zr, zt));
}

CheckList check_compositor_phi(const CospanCompositor& c) {
  CheckList out;
  add_validation(out, "phi components agree on the shared center", check_cocone(c.pushout, c.cocone));
  const auto& zgf = *c.composite.apex();
  std::vector<std::string> bad;
  for (std::size_t r = 0; r < c.left_map.source()->dim(); ++r) {
    Vec e = unit_vec(c.left_map.source()->dim(), r);
    if (!zgf.equal(c.cocone.legs[0].apply(c.lower.left_leg.apply(e)),
                   c.composite.left_leg.apply(c.left_map.apply(e))))
      bad.push_back("left foot generator " + std::to_string(r));
  }
  for (std::size_t t = 0; t < c.right_map.source()->dim(); ++t) {
    Vec e = unit_vec(c.right_map.source()->dim(), t);
    if (!zgf.equal(c.cocone.legs[1].apply(c.upper.right_leg.apply(e)),
                   c.composite.right_leg.apply(c.right_map.apply(e))))
      bad.push_back("right foot generator " + std::to_string(t));
  }
  out.add("phi commutes with the feet identities", bad.empty(), {}, std::move(bad));
  return out;
}

ValidationReport check_orbit_compatibility(const CentralizerData& d) {
  ValidationReport rep;
  const auto& s = *d.f.target();
  const auto& z = d.zf;
  for (std::size_t r = 0; r < d.z_source.rank(); ++r) {
    Vec fr = d.f.apply(d.z_source.generators.row(r));
    for (std::size_t a = 0; a < z.rank(); ++a)
      for (std::size_t b = 0; b < z.rank(); ++b) {
        Vec lhs = s.multiply(z.generators.row(a), s.multiply(z.generators.row(b), fr));
        Vec rhs = s.multiply(s.multiply(z.generators.row(a), fr), z.generators.row(b));
        if (!s.equal(lhs, rhs)) rep.failures.push_back({"s(s'.r) == (s.r)s'", {a, b, r}, {}});
      }
  }
  return rep;
}

std::vector<PushoutWord> sample_words(const FormalPushout& p, const WordSampling& s) {
  std::mt19937_64 rng(s.seed);
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  std::vector<std::vector<Vec>> pools;
  for (const auto& apex : p.apexes) {
    std::vector<Vec> pool;
    const std::size_t k = apex->dim();
    for (std::size_t i = 0; i < k; ++i) pool.push_back(apex->basis_vector(i));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        pool.push_back(apex->add(apex->basis_vector(i), apex->basis_vector(j)));
    if (pool.empty()) throw InputError("apex " + apex->name() + " has no generators");
    pools.push_back(std::move(pool));
  }
  const std::size_t tags = p.apexes.size();
  std::vector<PushoutWord> out;
  for (std::size_t n = 0; n < s.samples; ++n) {
    std::size_t len = pick(s.word_len + 1);
    PushoutWord w;
    std::size_t tag = pick(tags);
    for (std::size_t i = 0; i < len; ++i) {
      if (i > 0 && tags > 1) tag = (tag + 1 + pick(tags - 1)) % tags;
      w.letters.push_back({tag, pools[tag][pick(pools[tag].size())]});
    }
    if (w.letters.empty()) w = unit_word(p);
    out.push_back(std::move(w));
  }
  return out;
}

namespace {

// Compares two cocones word by word after embedding into the ambient ring.
void compare_on_words(CheckList& out, const std::string& name, const FormalPushout& p,
                      const std::vector<PushoutWord>& words, const Cocone& a, const RingHom& ea,
                      const Cocone& b, const RingHom& eb) {
  std::vector<std::string> bad;
  for (const auto& w : words) {
    Vec x = ea.apply(evaluate_word(w, a).coeffs());
    Vec y = eb.apply(evaluate_word(w, b).coeffs());
    if (!ea.target()->equal(x, y)) bad.push_back(format_word(p, w));
  }
  out.add(name, bad.empty(),
          std::to_string(words.size() - bad.size()) + "/" + std::to_string(words.size()) +
              " words agree",
          std::move(bad));
}

// Length-2 words (t, s) under phi against mu on t (x) s.
void compare_with_mu(CheckList& out, const std::string& name, const CentralizerData& lower,
                     const CentralizerData& upper, const CentralizerData& composite,
                     const CospanCompositor& phi) {
  Compositor mu = compositor_mu(lower, upper, composite);
  std::vector<std::string> bad;
  for (std::size_t i = 0; i < upper.zf.rank(); ++i)
    for (std::size_t j = 0; j < lower.zf.rank(); ++j) {
      PushoutWord w{{{1, unit_vec(upper.zf.rank(), i)}, {0, unit_vec(lower.zf.rank(), j)}}};
      Vec via_phi = evaluate_word(w, phi.cocone).coeffs();
      Vec via_mu = mu.map.apply(unit_vec(mu.source.rank(), mu.source.index(i, j)));
      if (!composite.bimodule.equal(via_phi, via_mu))
        bad.push_back("t" + std::to_string(i) + " (x) s" + std::to_string(j));
    }
  out.add(name, bad.empty(), {}, std::move(bad));
}

}  // namespace

CheckList verify_lax_cospan_unity(const RingHom& f, const WordSampling& s) {
  CheckList out;
  try {
    Subring zr = center(f.source()), zs = center(f.target());
    auto df = centralizer_data(f, zr, zs);
    auto id_s = centralizer_data(identity_hom(f.target()), zs, zs);
    auto id_r = centralizer_data(identity_hom(f.source()), zr, zr);
    Cospan cf = center_cospan(df), cs = center_cospan(id_s), cr = center_cospan(id_r);

    auto is_identity = [](const Cospan& c, const Subring& z) {
      return same_hom(c.left_leg, identity_hom(z.as_ring)) &&
             same_hom(c.right_leg, identity_hom(z.as_ring));
    };
    out.add("center cospan of id_S is the identity", is_identity(cs, zs));
    out.add("center cospan of id_R is the identity", is_identity(cr, zr));
    add_validation(out, "Z(f) ring and bimodule structures are compatible",
                   check_orbit_compatibility(df));

    auto df_l = centralizer_data(hom_compose(identity_hom(f.target()), f), zr, zs);
    auto df_r = centralizer_data(hom_compose(f, identity_hom(f.source())), zr, zs);
    out.add("Z(id o f) == Z(f)", df_l.zf == df.zf && df_l.zf.generators == df.zf.generators);
    out.add("Z(f o id) == Z(f)", df_r.zf == df.zf && df_r.zf.generators == df.zf.generators);

    // Z(f) then Z(id_S): tags 0 = Z(f), 1 = Z(S).
    CospanCompositor phi_l = compositor_phi(df, id_s, df_l);
    out.append(check_compositor_phi(phi_l));
    Cocone unitor_l{df.zf.as_ring, {identity_hom(df.zf.as_ring), cf.right_leg}};
    add_validation(out, "left unitor is a cocone", check_cocone(phi_l.pushout, unitor_l));
    compare_on_words(out, "left unity", phi_l.pushout, sample_words(phi_l.pushout, s), unitor_l,
                     df.zf.embedding, phi_l.cocone, df_l.zf.embedding);

    // Z(id_R) then Z(f): tags 0 = Z(R), 1 = Z(f).
    CospanCompositor phi_r = compositor_phi(id_r, df, df_r);
    out.append(check_compositor_phi(phi_r));
    Cocone unitor_r{df.zf.as_ring, {cf.left_leg, identity_hom(df.zf.as_ring)}};
    add_validation(out, "right unitor is a cocone", check_cocone(phi_r.pushout, unitor_r));
    compare_on_words(out, "right unity", phi_r.pushout, sample_words(phi_r.pushout, s), unitor_r,
                     df.zf.embedding, phi_r.cocone, df_r.zf.embedding);
  } catch (const Error& e) {
    out.add("unity construction", false, e.what());
  }
  return out;
}

CheckList verify_lax_cospan_associativity(const CenterChain& c, const WordSampling& s) {
  CheckList out;
  try {
    add_validation(out, "Z(f) ring and bimodule structures are compatible",
                   check_orbit_compatibility(c.df));
    add_validation(out, "Z(g) ring and bimodule structures are compatible",
                   check_orbit_compatibility(c.dg));
    add_validation(out, "Z(h) ring and bimodule structures are compatible",
                   check_orbit_compatibility(c.dh));

    CospanCompositor phi_fg = compositor_phi(c.df, c.dg, c.dgf);
    CospanCompositor phi_gh = compositor_phi(c.dg, c.dh, c.dhg);
    CospanCompositor phi_f_hg = compositor_phi(c.df, c.dhg, c.dhgf);
    CospanCompositor phi_gf_h = compositor_phi(c.dgf, c.dh, c.dhgf);
    for (const auto* phi : {&phi_fg, &phi_gh, &phi_f_hg, &phi_gf_h}) {
      CheckList part = check_compositor_phi(*phi);
      for (auto& r : part.checks)
        r.name += " [" + phi->lower.apex()->name() + ", " + phi->upper.apex()->name() + "]";
      out.append(part);
    }
    compare_with_mu(out, "length-2 words match mu for (f, g)", c.df, c.dg, c.dgf, phi_fg);
    compare_with_mu(out, "length-2 words match mu for (g, h)", c.dg, c.dh, c.dhg, phi_gh);

    // Tags: 0 = Z(f), 1 = Z(g), 2 = Z(h).
    Cospan cf = center_cospan(c.df), cg = center_cospan(c.dg), ch = center_cospan(c.dh);
    FormalPushout p3 = compose_formal(formal_of(cf), compose_formal(cg, ch));
    const RingRef& w_ring = c.h.target();
    RingHom hg = c.dhg.f;
    Cocone direct{w_ring,
                  {into(c.df.zf, w_ring, [&](auto x) { return hg.apply(x); }),
                   into(c.dg.zf, w_ring, [&](auto x) { return c.h.apply(x); }),
                   into(c.dh.zf, w_ring, [](auto x) { return Vec(x.begin(), x.end()); })}};
    add_validation(out, "direct evaluation into W is a cocone", check_cocone(p3, direct));

    FormalPushout p_f_hg = phi_f_hg.pushout;  // tags 0 = Z(f), 1 = Z(h o g)
    FormalPushout p_gf_h = phi_gf_h.pushout;  // tags 0 = Z(g o f), 1 = Z(h)
    const auto& u_gh = phi_gh.cocone.legs[0];
    const auto& v_gh = phi_gh.cocone.legs[1];
    const auto& u_fg = phi_fg.cocone.legs[0];
    const auto& v_fg = phi_fg.cocone.legs[1];

    auto words = sample_words(p3, s);
    std::mt19937_64 rng(s.seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<std::string> bad_assoc, bad_reduce, bad_amalg, bad_unreduced;
    for (const auto& w : words) {
      Vec target = evaluate_word(w, direct).coeffs();

      PushoutWord w1;
      for (const auto& l : w.letters) {
        if (l.tag == 0) w1.letters.push_back({0, l.coeffs});
        else w1.letters.push_back({1, (l.tag == 1 ? u_gh : v_gh).apply(l.coeffs)});
      }
      w1 = word_reduce(p_f_hg, w1);
      Vec path1 = c.dhgf.zf.embed(evaluate_word(w1, phi_f_hg.cocone).coeffs());

      PushoutWord w2;
      for (const auto& l : w.letters) {
        if (l.tag == 2) w2.letters.push_back({1, l.coeffs});
        else w2.letters.push_back({0, (l.tag == 0 ? u_fg : v_fg).apply(l.coeffs)});
      }
      w2 = word_reduce(p_gf_h, w2);
      if (!is_reduced(p_gf_h, w2)) bad_unreduced.push_back(format_word(p3, w));
      Vec path2 = c.dhgf.zf.embed(evaluate_word(w2, phi_gf_h.cocone).coeffs());

      if (!w_ring->equal(path1, path2) || !w_ring->equal(path1, target))
        bad_assoc.push_back(format_word(p3, w));

      PushoutWord r = word_reduce(p3, w);
      if (!w_ring->equal(evaluate_word(r, direct).coeffs(), target))
        bad_reduce.push_back(format_word(p3, w));

      // Insert a foot element once through each side of a random gluing.
      std::size_t g = static_cast<std::size_t>(rng() % p3.gluings.size());
      const auto& gl = p3.gluings[g];
      const auto& foot = *gl.into_left.source();
      const std::size_t yi = static_cast<std::size_t>(rng() % foot.dim());
      Vec y = foot.basis_vector(yi);
      std::size_t pos = static_cast<std::size_t>(rng() % (w.letters.size() + 1));
      PushoutWord left = w, right = w;
      left.letters.insert(left.letters.begin() + static_cast<std::ptrdiff_t>(pos),
                          {g, gl.into_left.apply(y)});
      right.letters.insert(right.letters.begin() + static_cast<std::ptrdiff_t>(pos),
                           {g + 1, gl.into_right.apply(y)});
      if (!w_ring->equal(evaluate_word(left, direct).coeffs(),
                         evaluate_word(right, direct).coeffs()))
        bad_amalg.push_back(format_word(p3, w) + " with foot " + foot.basis_names()[yi]);
    }
    auto tally = [&](const std::vector<std::string>& bad) {
      return std::to_string(words.size() - bad.size()) + "/" + std::to_string(words.size()) +
             " words agree";
    };
    out.add("word-traced lax associativity", bad_assoc.empty(), tally(bad_assoc), bad_assoc);
    out.add("mid-path reduction yields reduced words", bad_unreduced.empty(),
            tally(bad_unreduced), bad_unreduced);
    out.add("evaluation is invariant under word_reduce", bad_reduce.empty(), tally(bad_reduce),
            bad_reduce);
    out.add("evaluation respects amalgamation", bad_amalg.empty(), tally(bad_amalg), bad_amalg);
  } catch (const Error& e) {
    out.add("associativity construction", false, e.what());
  }
  return out;
}

CheckList verify_lax_cospan(const RingHom& f, const RingHom& g, const RingHom& h, LaxMode mode,
                            const WordSampling& s) {
  if (s.word_len == 0) throw InputError("word length bound must be at least 1");
  if (mode == LaxMode::unity) {
    CheckList out;
    for (const RingHom* x : {&f, &g, &h}) out.append(verify_lax_cospan_unity(*x, s));
    return out;
  }
  return verify_lax_cospan_associativity(build_center_chain(f, g, h), s);
}

}  // namespace laxcenter
