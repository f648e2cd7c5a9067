#include "laxcenter/corpus.hpp"

#include "laxcenter/groups.hpp"

#include <algorithm>
#include <random>

namespace laxcenter {

namespace {

IntMatrix rows_of(std::initializer_list<std::initializer_list<long>> rows) {
  return IntMatrix::from_int_rows(rows);
}

RingHom unit_map(const RingRef& base, const RingRef& target) {
  // base is Z or Z/m with a single basis element 1
  return make_hom(base, target, IntMatrix::from_rows({target->unit()}, target->dim()));
}

void add_level(Corpus& c, const Integer& p) {
  const RingRef f = p == 0 ? integers() : integers_mod(p);
  const RingRef ff = make_product_ring(f, f);
  const RingRef ut = make_upper_triangular(2, p);
  const RingRef mat = make_matrix_ring(2, p);
  const CayleyTable c2 = cyclic_group(2), c3 = cyclic_group(3), c6 = cyclic_group(6);
  const CayleyTable d6 = dihedral_group(6), k4 = direct_product(c2, c2);
  const RingRef g2 = make_group_ring(c2, p), g3 = make_group_ring(c3, p);
  const RingRef g6 = make_group_ring(c6, p), gd = make_group_ring(d6, p);
  const RingRef gk = make_group_ring(k4, p);
  for (const auto& r : {f, ff, ut, mat, g2, g3, g6, gd, gk}) c.rings.push_back(r);

  auto& h = c.homs;
  for (const auto& r : {ff, ut, mat, g2, g3, g6, gd, gk}) h.push_back(unit_map(f, r));
  h.push_back(identity_hom(ff));
  h.push_back(identity_hom(gd));
  // matrix units: UT2 = (E11, E12, E22), Mat2 = (E11, E12, E21, E22)
  h.push_back(make_hom(ff, ut, rows_of({{1, 0, 0}, {0, 0, 1}})));
  h.push_back(make_hom(ut, ff, rows_of({{1, 0}, {0, 0}, {0, 1}})));
  h.push_back(make_hom(ff, ff, rows_of({{0, 1}, {1, 0}})));
  h.push_back(make_hom(ff, f, rows_of({{1}, {0}})));
  h.push_back(make_hom(ff, f, rows_of({{0}, {1}})));
  h.push_back(make_hom(ut, f, rows_of({{1}, {0}, {0}})));
  h.push_back(make_hom(ut, mat, rows_of({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}})));
  h.push_back(make_hom(mat, mat, rows_of({{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}})));

  // group rings; D6 elements are s^a r^b at index 3a + b
  h.push_back(group_ring_hom(g2, c2, gd, d6, {0, 3}));
  h.push_back(group_ring_hom(gd, d6, g2, c2, {0, 0, 0, 1, 1, 1}));
  h.push_back(group_ring_hom(g3, c3, gd, d6, {0, 1, 2}));
  h.push_back(group_ring_hom(gd, d6, gd, d6, {0, 2, 1, 3, 5, 4}));
  h.push_back(group_ring_hom(g2, c2, g6, c6, {0, 3}));
  h.push_back(group_ring_hom(g3, c3, g6, c6, {0, 2, 4}));
  h.push_back(group_ring_hom(g6, c6, g2, c2, {0, 1, 0, 1, 0, 1}));
  h.push_back(group_ring_hom(g6, c6, g3, c3, {0, 1, 2, 0, 1, 2}));
  h.push_back(group_ring_hom(gk, k4, g2, c2, {0, 0, 1, 1}));
  h.push_back(group_ring_hom(g2, c2, gk, k4, {0, 2}));
  h.push_back(group_ring_hom(g2, c2, gk, k4, {0, 3}));
  // augmentations
  for (const auto& [r, g] : {std::pair{g2, c2}, {g3, c3}, {gd, d6}})
    h.push_back(make_hom(r, f, IntMatrix::from_rows(std::vector<Vec>(g.order(), Vec{1}), 1)));
  // regular representation of C2 inside Mat2
  h.push_back(make_hom(g2, mat, rows_of({{1, 0, 0, 1}, {0, 1, 1, 0}})));
}

void add_reductions(Corpus& c, const Integer& p) {
  const RingRef z = integers(), fp = integers_mod(p);
  c.homs.push_back(make_hom(z, fp, rows_of({{1}})));
  const CayleyTable d6 = dihedral_group(6), c2 = cyclic_group(2);
  c.homs.push_back(make_hom(make_group_ring(d6, 0), make_group_ring(d6, p),
                            IntMatrix::identity(6)));
  c.homs.push_back(make_hom(make_group_ring(c2, 0), make_group_ring(c2, p),
                            IntMatrix::identity(2)));
  c.homs.push_back(make_hom(make_matrix_ring(2, 0), make_matrix_ring(2, p),
                            IntMatrix::identity(4)));
}

}  // namespace

std::vector<std::array<std::size_t, 3>> Corpus::composable_triples() const {
  std::vector<std::array<std::size_t, 3>> out;
  auto joins = [&](std::size_t a, std::size_t b) {
    return homs[a].target()->same_structure(*homs[b].source());
  };
  for (std::size_t f = 0; f < homs.size(); ++f)
    for (std::size_t g = 0; g < homs.size(); ++g) {
      if (!joins(f, g)) continue;
      for (std::size_t h = 0; h < homs.size(); ++h)
        if (joins(g, h)) out.push_back({f, g, h});
    }
  return out;
}

Corpus build_corpus() {
  Corpus c;
  add_level(c, 0);
  add_level(c, 2);
  add_level(c, 3);
  add_reductions(c, 2);
  add_reductions(c, 3);
  return c;
}

std::vector<std::array<std::size_t, 3>> sample_triples(const Corpus& c, std::size_t count,
                                                       std::uint64_t seed) {
  auto all = c.composable_triples();
  if (all.size() <= count) return all;
  std::mt19937_64 rng(seed);
  std::vector<std::array<std::size_t, 3>> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t j = i + static_cast<std::size_t>(rng() % (all.size() - i));
    std::swap(all[i], all[j]);
    out.push_back(all[i]);
  }
  return out;
}

std::vector<RingRef> small_finite_rings(std::size_t max_elements) {
  std::vector<CayleyTable> groups;
  for (std::size_t n = 1; n <= 8; ++n) groups.push_back(cyclic_group(n));
  const CayleyTable c2 = cyclic_group(2);
  groups.push_back(direct_product(c2, c2));
  groups.push_back(dihedral_group(6));
  groups.push_back(direct_product(cyclic_group(4), c2));
  groups.push_back(direct_product(direct_product(c2, c2), c2));
  groups.push_back(dihedral_group(8));
  groups.push_back(quaternion_group());

  std::vector<RingRef> out;
  auto fits = [&](const RingRef& r) {
    auto n = r->order();
    return n && *n <= Integer(static_cast<unsigned long>(max_elements));
  };
  auto keep = [&](const RingRef& r) {
    if (fits(r)) out.push_back(r);
  };
  for (long p : {2, 3})
    for (const auto& g : groups) {
      Integer size = 1;
      for (std::size_t i = 0; i < g.order(); ++i) size *= p;
      if (size <= Integer(static_cast<unsigned long>(max_elements))) out.push_back(make_group_ring(g, p));
    }
  for (long m : {2, 3, 4, 5, 6, 7}) {
    keep(make_upper_triangular(2, m));
    keep(make_matrix_ring(2, m));
    keep(make_matrix_ring(1, m));
  }
  keep(make_group_ring(c2, 4));
  keep(make_product_ring(integers_mod(2), integers_mod(2)));
  keep(make_product_ring(integers_mod(2), integers_mod(3)));
  keep(make_product_ring(make_upper_triangular(2, 2), integers_mod(2)));
  keep(make_product_ring(make_matrix_ring(2, 2), integers_mod(2)));
  keep(make_product_ring(make_group_ring(dihedral_group(6), 2), integers_mod(2)));
  keep(make_product_ring(make_group_ring(c2, 3), make_upper_triangular(2, 2)));
  keep(make_product_ring(make_matrix_ring(2, 2), make_matrix_ring(2, 2)));
  return out;
}

}  // namespace laxcenter
