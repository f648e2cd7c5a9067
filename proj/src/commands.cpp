#include "laxcenter/commands.hpp"

#include "laxcenter/corpus.hpp"
#include "laxcenter/errors.hpp"
#include "laxcenter/groups.hpp"

#include <set>

namespace laxcenter {

namespace {

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
  return s;
}

std::string join_ints(std::span<const Integer> xs) {
  std::vector<std::string> s;
  for (const auto& x : xs) s.push_back(x.get_str());
  return s.empty() ? "none" : join(s, ", ");
}

std::string order_text(const BasedRing& r) {
  auto n = r.order();
  return n ? n->get_str() : "infinite";
}

std::string generators_text(const Subring& z) {
  std::vector<std::string> g;
  for (std::size_t i = 0; i < z.rank(); ++i) {
    std::string s = z.ambient->format(z.generators.row(i));
    if (z.moduli[i] != 0) s += " (order " + z.moduli[i].get_str() + ")";
    g.push_back(s);
  }
  return join(g, "; ");
}

// 2x2 matrix in Mat2 coordinates (E11, E12, E21, E22) as [[a,b],[c,d]].
std::string matrix_text(std::span<const Integer> v) {
  return "[[" + v[0].get_str() + "," + v[1].get_str() + "],[" + v[2].get_str() + "," +
         v[3].get_str() + "]]";
}

// Conjugacy class sums of a group, in group ring coordinates.
std::vector<Vec> class_sums(const CayleyTable& g) {
  std::vector<Vec> out;
  std::vector<bool> done(g.order(), false);
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    Vec sum = zero_vec(g.order());
    std::set<std::size_t> cls;
    for (std::size_t y = 0; y < g.order(); ++y) cls.insert(g.mul(g.mul(y, x), g.inverse(y)));
    for (auto c : cls) {
      sum[c] = 1;
      done[c] = true;
    }
    out.push_back(std::move(sum));
  }
  return out;
}

void example_intro(Report& rep) {
  const CayleyTable c2 = cyclic_group(2), d6 = dihedral_group(6);
  RingRef zc2 = make_group_ring(c2, 0), zd6 = make_group_ring(d6, 0);
  RingHom phi = group_ring_hom(zc2, c2, zd6, d6, {0, d6.index_of("s")});
  // s^a r^b sits at index 3a + b
  RingHom psi = group_ring_hom(zd6, d6, zc2, c2, {0, 0, 0, 1, 1, 1});

  auto& s1 = rep.section("group ring maps Z[C2] -> Z[D6] -> Z[C2]");
  s1.fact("phi~([1])", zd6->format(phi.apply(zc2->basis_vector(1))));
  s1.fact("psi~ on D6", [&] {
    std::vector<std::string> xs;
    for (std::size_t x = 0; x < d6.order(); ++x)
      xs.push_back(d6.element_names[x] + " -> " + zc2->format(psi.apply(zd6->basis_vector(x))));
    return join(xs, ", ");
  }());
  RingHom comp = hom_compose(psi, phi);
  s1.checks.add("psi~ o phi~ is a ring isomorphism", hom_is_iso(comp),
                "matrix " + comp.matrix().to_string());

  auto& s2 = rep.section("center of Z[D6]");
  Subring z = center(zd6);
  s2.fact("rank", std::to_string(z.rank()));
  s2.fact("basis", generators_text(z));
  std::vector<Vec> sums = class_sums(d6);
  Subring from_sums = make_subring(zd6, IntMatrix::from_rows(sums, zd6->dim()), "class sums");
  s2.checks.add("center equals the span of the class sums", from_sums == z);
  Vec s = phi.apply(zc2->basis_vector(1));
  Vec r = zd6->basis_vector(d6.index_of("r"));
  s2.checks.add("phi~([1]) = s is not central", !z.contains(s),
                "s*r = " + zd6->format(zd6->multiply(s, r)) + ", r*s = " +
                    zd6->format(zd6->multiply(r, s)));
  s2.checks.add("Z[C2] is commutative", center(zc2).is_whole_ring());

  auto& s3 = rep.section("psi~ restricted to Z(Z[D6])");
  std::vector<std::string> images;
  std::vector<Vec> rows;
  for (const auto& cs : sums) {
    Vec img = psi.apply(cs);
    images.push_back(zd6->format(cs) + " -> " + zc2->format(img));
    rows.push_back(img);
  }
  s3.fact("class sum images", join(images, "; "));
  IntMatrix restricted = z.embedding.matrix() * psi.matrix();
  auto coker = cokernel_invariants(restricted, zc2->moduli());
  auto coker_sums = cokernel_invariants(IntMatrix::from_rows(rows, zc2->dim()), zc2->moduli());
  s3.fact("cokernel invariants", join_ints(coker));
  s3.checks.add("restriction is not surjective", !coker.empty());
  bool has3 = false;
  for (const auto& d : coker) has3 = has3 || (d != 0 && d % 3 == 0);
  s3.checks.add("cokernel has a Z/3 factor", has3);
  s3.checks.add("class sum images give the same cokernel", coker == coker_sums);
}

void example_matrix(Report& rep) {
  RingRef f2 = integers_mod(2), m2 = make_matrix_ring(2, 2);
  RingHom phi = make_hom(f2, m2, IntMatrix::from_rows({m2->unit()}, 4));
  Subring z = centralizer(phi);
  auto& s1 = rep.section("centralizer of Z/2 -> Mat2(Z/2)");
  s1.fact("Z(phi) order", order_text(*z.as_ring));
  s1.fact("Z(Mat2(Z/2)) order", order_text(*center(m2).as_ring));
  s1.checks.add("Z(phi) is the whole matrix ring", z.is_whole_ring() && *z.as_ring->order() == 16);

  auto& s2 = rep.section("non-commuting pair");
  Vec a{1, 1, 0, 1}, b{1, 0, 1, 1};
  Vec ab = m2->multiply(a, b), ba = m2->multiply(b, a);
  s2.fact("A", matrix_text(a));
  s2.fact("B", matrix_text(b));
  s2.fact("AB", matrix_text(ab));
  s2.fact("BA", matrix_text(ba));
  s2.checks.add("AB = [[0,1],[1,1]]", ab == Vec{0, 1, 1, 1});
  s2.checks.add("BA = [[1,1],[1,0]]", ba == Vec{1, 1, 1, 0});
  s2.checks.add("Z(phi) is not commutative", !m2->equal(ab, ba) && z.contains(a) && z.contains(b));
}

void example_dkr(Report& rep, long p) {
  RingRef f = integers_mod(p);
  RingRef ff = make_product_ring(f, f), ut = make_upper_triangular(2, p);
  RingHom incl = make_hom(ff, ut, IntMatrix::from_int_rows({{1, 0, 0}, {0, 0, 1}}));
  RingHom proj = make_hom(ut, ff, IntMatrix::from_int_rows({{1, 0}, {0, 0}, {0, 1}}));
  Subring zr = center(ff), zs = center(ut), zt = center(ff);
  auto df = centralizer_data(incl, zr, zs);
  auto dg = centralizer_data(proj, zs, zt);
  auto dgf = centralizer_data(hom_compose(proj, incl), zr, zt);
  Compositor mu = compositor_mu(df, dg, dgf);

  auto& s = rep.section("diagonal inclusion then projection over Z/" + std::to_string(p));
  s.fact("|Z(R)|", order_text(*zr.as_ring));
  s.fact("|Z(S)|", order_text(*zs.as_ring));
  s.fact("|Z(T)|", order_text(*zt.as_ring));
  s.fact("|Z(f)|", order_text(*df.zf.as_ring));
  s.fact("|Z(g)|", order_text(*dg.zf.as_ring));
  s.fact("|Z(g o f)|", order_text(*dgf.zf.as_ring));
  s.fact("tensor invariant factors", join_ints(mu.source.invariant_factors));
  auto tensor_order = mu.source.order();
  s.fact("|Z(g) (x) Z(f)|", tensor_order ? tensor_order->get_str() : "infinite");
  auto ker = kernel_invariants(mu.map);
  s.fact("kernel of mu invariants", join_ints(ker));

  Integer p2 = p * p;
  s.checks.add("|Z(g) (x)_Z(S) Z(f)| = p^4", tensor_order && *tensor_order == p2 * p2);
  s.checks.add("|Z(g o f)| = p^2", dgf.zf.as_ring->order() == p2);
  auto hom_ok = check_bimodule_hom(mu.map);
  s.checks.add("mu is a bimodule map", hom_ok.ok());
  s.checks.add("mu is not injective", !ker.empty());
  s.checks.add("mu is surjective", is_surjective(mu.map));
  CheckList phi = check_compositor_phi(compositor_phi(df, dg, dgf));
  s.checks.append(phi);
}

std::string chain_text(const std::vector<RingHom>& homs) {
  std::string s = homs.front().source()->name();
  for (const auto& h : homs) s += " -> " + h.target()->name();
  return s;
}

void unity_section(Report& rep, const RingHom& f, const std::string& label, const SuiteOptions& o) {
  auto& s = rep.section("unity at " + label + ": " + f.source()->name() + " -> " + f.target()->name());
  Subring zf = centralizer(f);
  s.fact("Z(f) order", order_text(*zf.as_ring));
  s.fact("Z(f) basis", generators_text(zf));
  if (o.target == SuiteTarget::morita) {
    s.checks.append(verify_lax_morita_unity(f));
  } else {
    s.checks.append(verify_lax_cospan_unity(f, o.sampling));
  }
}

void associativity_section(Report& rep, const CenterChain& c, const std::string& title,
                           const SuiteOptions& o) {
  auto& s = rep.section(title);
  if (o.target == SuiteTarget::morita) {
    s.checks.append(verify_lax_morita_associativity(c));
  } else {
    s.checks.append(verify_lax_cospan_associativity(c, o.sampling));
  }
}

}  // namespace

std::vector<std::string> example_names() { return {"intro", "matrix", "dkr"}; }

Report run_example(const std::string& name) {
  Report rep;
  rep.command = "laxcenter example " + name;
  if (name == "intro") {
    example_intro(rep);
  } else if (name == "matrix") {
    example_matrix(rep);
  } else if (name == "dkr") {
    example_dkr(rep, 2);
    example_dkr(rep, 3);
  } else {
    throw InputError("unknown example '" + name + "' (expected intro, matrix or dkr)");
  }
  return rep;
}

Report verify_chain(const std::vector<RingHom>& homs, const SuiteOptions& opts,
                    const std::string& command) {
  if (homs.empty()) throw InputError("verify: at least one hom is required");
  if (opts.sampling.word_len == 0) throw InputError("--word-len must be at least 1");
  for (std::size_t i = 0; i + 1 < homs.size(); ++i)
    if (!homs[i].target()->same_structure(*homs[i + 1].source()))
      throw InputError("homs " + std::to_string(i + 1) + " and " + std::to_string(i + 2) +
                       " are not composable: " + homs[i].target()->name() + " vs " +
                       homs[i + 1].source()->name());
  std::vector<RingHom> chain = homs;
  while (chain.size() < 3) chain.push_back(identity_hom(chain.back().target()));

  Report rep;
  rep.command = command;
  if (opts.target == SuiteTarget::cospan) rep.seed = opts.sampling.seed;
  auto& head = rep.section("chain");
  head.fact("rings", chain_text(chain));
  head.fact("target", opts.target == SuiteTarget::morita ? "morita" : "cospan");
  if (chain.size() > homs.size())
    head.fact("padding", std::to_string(chain.size() - homs.size()) + " identity hom(s) appended");
  for (std::size_t i = 0; i < homs.size(); ++i) unity_section(rep, homs[i], "hom " + std::to_string(i + 1), opts);
  for (std::size_t i = 0; i + 2 < chain.size(); ++i) {
    CenterChain c = build_center_chain(chain[i], chain[i + 1], chain[i + 2]);
    associativity_section(rep, c,
                          "associativity " + std::to_string(i + 1) + ": " +
                              chain_text({chain[i], chain[i + 1], chain[i + 2]}),
                          opts);
  }
  return rep;
}

Report verify_corpus(std::size_t triples, const SuiteOptions& opts, const std::string& command) {
  if (opts.sampling.word_len == 0) throw InputError("--word-len must be at least 1");
  Corpus corpus = build_corpus();
  auto picked = sample_triples(corpus, triples, opts.sampling.seed);
  Report rep;
  rep.command = command;
  rep.seed = opts.sampling.seed;
  auto& head = rep.section("corpus");
  head.fact("rings", std::to_string(corpus.rings.size()));
  head.fact("homs", std::to_string(corpus.homs.size()));
  head.fact("composable triples", std::to_string(corpus.composable_triples().size()));
  head.fact("sampled triples", std::to_string(picked.size()));
  head.fact("target", opts.target == SuiteTarget::morita ? "morita" : "cospan");
  for (std::size_t k = 0; k < picked.size(); ++k) {
    const auto& [a, b, c] = picked[k];
    const RingHom &f = corpus.homs[a], &g = corpus.homs[b], &h = corpus.homs[c];
    auto& s = rep.section("triple " + std::to_string(k + 1) + ": " + chain_text({f, g, h}));
    for (const RingHom* x : {&f, &g, &h}) {
      CheckList u = opts.target == SuiteTarget::morita ? verify_lax_morita_unity(*x)
                                                       : verify_lax_cospan_unity(*x, opts.sampling);
      for (auto& r : u.checks) r.name = "unity at " + x->source()->name() + " -> " + x->target()->name() + ": " + r.name;
      s.checks.append(u);
    }
    CenterChain chain = build_center_chain(f, g, h);
    s.checks.append(opts.target == SuiteTarget::morita
                        ? verify_lax_morita_associativity(chain)
                        : verify_lax_cospan_associativity(chain, opts.sampling));
  }
  return rep;
}

Report describe_center(const RingRef& r, const std::string& command) {
  Report rep;
  rep.command = command;
  auto& s = rep.section("center of " + r->name());
  Subring z = center(r);
  s.fact("order", order_text(*z.as_ring));
  s.fact("rank", std::to_string(z.rank()));
  s.fact("basis", generators_text(z));
  s.checks.add("center is commutative", center(z.as_ring).is_whole_ring());
  return rep;
}

Report describe_centralizer(const RingHom& f, const std::string& command) {
  Report rep;
  rep.command = command;
  auto& s = rep.section("centralizer of " + f.source()->name() + " -> " + f.target()->name());
  Subring z = centralizer(f);
  s.fact("order", order_text(*z.as_ring));
  s.fact("rank", std::to_string(z.rank()));
  s.fact("basis", generators_text(z));
  s.fact("whole target", z.is_whole_ring() ? "yes" : "no");
  bool commutes = true;
  for (std::size_t i = 0; i < f.source()->dim(); ++i) {
    Vec a = f.apply(f.source()->basis_vector(i));
    for (std::size_t k = 0; k < z.rank(); ++k)
      commutes = commutes && f.target()->equal(f.target()->multiply(a, z.generators.row(k)),
                                               f.target()->multiply(z.generators.row(k), a));
  }
  s.checks.add("generators commute with the image", commutes);
  return rep;
}

}  // namespace laxcenter
