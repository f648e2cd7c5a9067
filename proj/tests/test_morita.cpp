#include "laxcenter/corpus.hpp"
#include "laxcenter/errors.hpp"
#include "laxcenter/morita.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace laxcenter;
using M = IntMatrix;

namespace {

struct Dkr {
  RingHom incl, proj;
};

Dkr dkr(long p) {
  RingRef f = integers_mod(p);
  RingRef ff = make_product_ring(f, f), ut = make_upper_triangular(2, p);
  return {make_hom(ff, ut, M::from_int_rows({{1, 0, 0}, {0, 0, 1}})),
          make_hom(ut, ff, M::from_int_rows({{1, 0}, {0, 0}, {0, 1}}))};
}

// Z/n as a (Z/n, Z)-bimodule.
Bimodule cyclic_left(long n) {
  return make_bimodule("Z/" + std::to_string(n), integers_mod(n), integers(), Moduli{n}, M(0, 1),
                       {M::identity(1)}, {M::identity(1)});
}

bool has_axiom(const ValidationReport& r, const std::string& axiom) {
  for (const auto& f : r.failures)
    if (f.axiom == axiom) return true;
  return false;
}

}  // namespace

TEST(Bimodule, StandardExamplesSatisfyAxioms) {
  auto ut = make_upper_triangular(2, 0);
  EXPECT_TRUE(check_bimodule(regular_bimodule(ut)).ok());
  EXPECT_TRUE(check_bimodule(regular_bimodule(make_group_ring(dihedral_group(6), 3))).ok());
  auto d = dkr(2);
  EXPECT_TRUE(check_bimodule(restriction_bimodule(d.incl)).ok());
  EXPECT_TRUE(check_bimodule(center_bimodule(d.incl)).ok());
  EXPECT_TRUE(check_bimodule(center_bimodule(d.proj)).ok());
  EXPECT_TRUE(check_bimodule(cyclic_left(4)).ok());
}

TEST(Bimodule, RegularActionIsMultiplication) {
  auto r = make_matrix_ring(2, 0);
  auto m = regular_bimodule(r);
  Vec a{1, 2, 0, 3}, x{0, 1, 1, 0}, b{2, 0, 1, 1};
  EXPECT_EQ(m.act_left(a, x), r->multiply(a, x));
  EXPECT_EQ(m.act_right(x, b), r->multiply(x, b));
}

TEST(Bimodule, CorruptedActionIsCaught) {
  auto m = regular_bimodule(make_group_ring(cyclic_group(2), 0));
  m.left_action[1](0, 0) += 1;
  auto rep = check_bimodule(m);
  EXPECT_FALSE(rep.ok());
  EXPECT_TRUE(has_axiom(rep, "left associativity") || has_axiom(rep, "actions commute"));

  auto n = cyclic_left(3);
  n.right_action[0](0, 0) = 2;
  EXPECT_TRUE(has_axiom(check_bimodule(n), "right unit"));
}

TEST(Bimodule, ActionIgnoringModuliIsCaught) {
  // Z/2 acting on Z/3 cannot be well defined
  auto m = make_bimodule("bad", integers_mod(2), integers(), Moduli{3}, M(0, 1), {M::identity(1)},
                         {M::identity(1)});
  EXPECT_TRUE(has_axiom(check_bimodule(m), "left action respects ring moduli"));
}

TEST(BimoduleHom, IdentityAndBrokenMaps) {
  auto m = center_bimodule(dkr(3).incl);
  BimoduleHom id{m, m, M::identity(m.rank())};
  EXPECT_TRUE(check_bimodule_hom(id).ok());
  EXPECT_TRUE(is_injective(id));
  EXPECT_TRUE(is_surjective(id));
  BimoduleHom bad{m, m, M::from_int_rows({{1, 1}, {0, 1}})};
  EXPECT_FALSE(check_bimodule_hom(bad).ok());
  BimoduleHom zero{m, m, M(m.rank(), m.rank())};
  EXPECT_TRUE(check_bimodule_hom(zero).ok());
  EXPECT_EQ(kernel_invariants(zero), (std::vector<Integer>{3, 3}));
}

TEST(Tensor, OverTheRingItself) {
  auto a = make_group_ring(cyclic_group(2), 6);
  auto reg = regular_bimodule(a);
  auto t = tensor_over(a, reg, reg);
  EXPECT_EQ(t.invariant_factors, (std::vector<Integer>{6, 6}));
  EXPECT_TRUE(check_bimodule(t.as_bimodule()).ok());
  // x (x) y == 1 (x) xy
  Vec x{1, 2}, y{3, 1};
  EXPECT_EQ(t.project(x, y), t.project(a->unit(), a->multiply(x, y)));
}

TEST(Tensor, CoprimeCyclicGroupsVanish) {
  auto z = integers();
  auto n = restriction_bimodule(make_hom(z, integers_mod(3), M::from_int_rows({{1}})));
  auto t = tensor_over(z, cyclic_left(2), n);
  EXPECT_EQ(t.order(), Integer(1));
  auto t2 = tensor_over(z, cyclic_left(4),
                        restriction_bimodule(make_hom(z, integers_mod(6), M::from_int_rows({{1}}))));
  EXPECT_EQ(t2.invariant_factors, (std::vector<Integer>{2}));
}

TEST(Tensor, RejectsMismatchAndNoncommutativeBase) {
  auto ut = make_upper_triangular(2, 2);
  auto reg = regular_bimodule(ut);
  EXPECT_THROW(tensor_over(ut, reg, reg), InputError);
  EXPECT_THROW(tensor_over(integers(), reg, reg), InputError);
}

TEST(Tensor, DkrAgainstElementOracle) {
  auto d = dkr(2);
  auto mu = compositor_mu(d.incl, d.proj);
  std::size_t dim = oracle::compositor_tensor_dim(d.incl, d.proj, 2);
  EXPECT_EQ(dim, 4u);
  EXPECT_EQ(mu.source.order(), Integer(16));
}

TEST(Compositor, UnitGoesToUnit) {
  for (long p : {2, 3}) {
    auto d = dkr(p);
    auto df = centralizer_data(d.incl), dg = centralizer_data(d.proj);
    auto dgf = centralizer_data(hom_compose(d.proj, d.incl));
    auto mu = compositor_mu(df, dg, dgf);
    auto one_g = dg.zf.coordinates(d.proj.target()->unit());
    auto one_f = df.zf.coordinates(d.incl.target()->unit());
    ASSERT_TRUE(one_g && one_f);
    Vec img = mu.map.apply(mu.source.project(*one_g, *one_f));
    EXPECT_EQ(dgf.zf.embed(img), d.proj.target()->unit());
    EXPECT_TRUE(check_bimodule_hom(mu.map).ok());
    EXPECT_FALSE(is_injective(mu.map));
    EXPECT_EQ(kernel_invariants(mu.map), (std::vector<Integer>{Integer(p), Integer(p)}));
  }
}

TEST(Lax, UnityOnCorpusHoms) {
  auto c = build_corpus();
  for (std::size_t i = 0; i < c.homs.size(); i += 5) {
    auto r = verify_lax_morita_unity(c.homs[i]);
    EXPECT_TRUE(r.passed()) << c.homs[i].source()->name() << " -> " << c.homs[i].target()->name();
  }
}

TEST(Lax, AssociativityOnDkrChain) {
  auto d = dkr(3);
  auto chain = build_center_chain(d.incl, d.proj, identity_hom(d.proj.target()));
  EXPECT_TRUE(verify_lax_morita_associativity(chain).passed());
  auto chain2 = build_center_chain(d.proj, d.incl, d.proj);
  EXPECT_TRUE(verify_lax_morita_associativity(chain2).passed());
}

TEST(Lax, CorruptedActionFails) {
  auto d = dkr(2);
  auto chain = build_center_chain(d.incl, d.proj, d.incl);
  chain.dg.bimodule.right_action[0](0, 0) += 1;
  auto r = verify_lax_morita_associativity(chain);
  EXPECT_FALSE(r.passed());
  EXPECT_GT(r.failures(), 0u);
}

TEST(Lax, NonComposableChain) {
  auto d = dkr(2);
  EXPECT_THROW(build_center_chain(d.incl, d.incl, d.proj), InputError);
}
