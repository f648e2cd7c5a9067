#pragma once

// Property checks on normal forms and kernels, shared by the unit tests and
// the acceptance binary. Each returns an empty string on success.

#include "laxcenter/lattice.hpp"
#include "laxcenter/modular.hpp"
#include "laxcenter/normal_form.hpp"
#include "oracle.hpp"

#include <random>
#include <string>

namespace props {

using namespace laxcenter;

inline Integer det(IntMatrix m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

inline bool unimodular(const IntMatrix& u) {
  Integer d = det(u);
  return d == 1 || d == -1;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t max_dim, long bound) {
  std::size_t r = 1 + rng() % max_dim, c = 1 + rng() % max_dim;
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m(i, j) = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
  return m;
}

inline std::vector<std::vector<long>> to_long(const IntMatrix& m) {
  std::vector<std::vector<long>> out(m.rows(), std::vector<long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_si();
  return out;
}

inline std::string check_hnf(const IntMatrix& m) {
  auto res = hnf(m);
  const IntMatrix& h = res.form;
  if (res.left_transform * m != h) return "U*M != H";
  if (!unimodular(res.left_transform)) return "U not unimodular";
  std::size_t last_pivot = 0;
  bool seen_zero = false, first = true;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    std::size_t p = 0;
    while (p < h.cols() && h(r, p) == 0) ++p;
    if (p == h.cols()) {
      seen_zero = true;
      continue;
    }
    if (seen_zero) return "zero row above a nonzero row";
    if (!first && p <= last_pivot) return "pivots not strictly increasing";
    if (h(r, p) <= 0) return "non-positive pivot";
    for (std::size_t a = 0; a < r; ++a)
      if (h(a, p) < 0 || h(a, p) >= h(r, p)) return "entry above pivot not reduced";
    last_pivot = p;
    first = false;
  }
  if (hnf(h).form != h) return "HNF not idempotent";
  return {};
}

inline std::string check_snf(const IntMatrix& m) {
  auto res = snf(m);
  if (!res.right_transform) return "missing right transform";
  const IntMatrix& d = res.form;
  if (res.left_transform * m * *res.right_transform != d) return "U*M*V != D";
  if (!unimodular(res.left_transform) || !unimodular(*res.right_transform))
    return "transform not unimodular";
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0) return "not diagonal";
  const auto& f = res.invariant_factors;
  if (f.size() != res.rank) return "rank mismatch";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] <= 0) return "non-positive invariant factor";
    if (d(i, i) != f[i]) return "diagonal does not list the factors";
    if (i + 1 < f.size() && f[i + 1] % f[i] != 0) return "divisibility fails";
  }
  // d_1 ... d_k equals the gcd of the k x k minors
  auto a = to_long(m);
  Integer prod = 1;
  const std::size_t kmax = std::min(m.rows(), m.cols());
  for (std::size_t k = 1; k <= kmax; ++k) {
    long g = oracle::minor_gcd(a, k);
    if (k <= f.size()) {
      prod *= f[k - 1];
      if (prod != g) return "minor gcd oracle disagrees at k=" + std::to_string(k);
    } else if (g != 0) {
      return "nonzero minor beyond the rank";
    }
  }
  return {};
}

/// Random system with finite moduli; kernel_mod against enumeration.
inline std::string check_kernel_mod(std::mt19937_64& rng) {
  static const long choices[] = {2, 3, 4, 6};
  std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
  if (r == 4 && c > 2) r = 3;  // keep the enumeration small
  Moduli src, tgt;
  std::vector<long> srcl, tgtl;
  for (std::size_t i = 0; i < r; ++i) {
    long m = choices[rng() % 4];
    src.emplace_back(m);
    srcl.push_back(m);
  }
  for (std::size_t j = 0; j < c; ++j) {
    long m = choices[rng() % 4];
    tgt.emplace_back(m);
    tgtl.push_back(m);
  }
  // entries scaled so that src_i * a_ij == 0 mod tgt_j: a genuine map of
  // finite groups, which is what the enumeration below assumes
  IntMatrix a(r, c);
  std::vector<oracle::Elem> al(r, oracle::Elem(c));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      long v = (static_cast<long>(rng() % 7) - 3) * (tgtl[j] / std::gcd(srcl[i], tgtl[j]));
      a(i, j) = v;
      al[i][j] = v;
    }
  IntMatrix k = kernel_mod(a, tgt, src);
  // every kernel row really solves the system
  for (std::size_t i = 0; i < k.rows(); ++i) {
    Vec y = mul(k.row(i), a);
    for (std::size_t j = 0; j < c; ++j)
      if (reduce_mod(y[j], tgt[j]) != 0) return "kernel row is not a solution";
  }
  std::vector<oracle::Elem> gens;
  std::vector<long> orders;
  for (std::size_t i = 0; i < k.rows(); ++i) {
    gens.push_back(oracle::to_elem(k.row(i)));
    long ord = 1;
    for (std::size_t j = 0; j < r; ++j) {
      long g = std::gcd(srcl[j], oracle::mod(gens.back()[j], srcl[j]));
      ord = std::lcm(ord, srcl[j] / (g == 0 ? srcl[j] : g));
    }
    orders.push_back(ord);
  }
  auto spanned = oracle::span(gens, orders, srcl);
  auto expected = oracle::kernel(al, srcl, tgtl);
  if (spanned != expected)
    return "span of " + std::to_string(k.rows()) + " rows has " + std::to_string(spanned.size()) +
           " elements, enumeration finds " + std::to_string(expected.size());
  return {};
}

}  // namespace props
