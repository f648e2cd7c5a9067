#pragma once

// Brute-force reference computations on small machine integers. Nothing here
// calls the normal forms or the lattice code.

#include "laxcenter/rings.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Elem = std::vector<long>;

inline long mod(long x, long m) {
  if (m == 0) return x;
  long r = x % m;
  return r < 0 ? r + m : r;
}

inline Elem to_elem(std::span<const laxcenter::Integer> v) {
  Elem e;
  for (const auto& x : v) e.push_back(x.get_si());
  return e;
}

/// Finite based ring with long arithmetic.
struct SmallRing {
  std::vector<long> moduli;
  std::vector<Elem> products;  // i * n + j
  Elem unit;

  explicit SmallRing(const laxcenter::BasedRing& r) : unit(to_elem(r.unit())) {
    for (const auto& m : r.moduli()) moduli.push_back(m.get_si());
    for (std::size_t i = 0; i < r.dim(); ++i)
      for (std::size_t j = 0; j < r.dim(); ++j) products.push_back(to_elem(r.basis_product(i, j)));
  }
  std::size_t dim() const { return moduli.size(); }

  Elem reduce(Elem v) const {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = mod(v[i], moduli[i]);
    return v;
  }
  Elem mul(const Elem& a, const Elem& b) const {
    const std::size_t n = dim();
    Elem out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b[j] == 0) continue;
        const Elem& p = products[i * n + j];
        for (std::size_t k = 0; k < n; ++k) out[k] = mod(out[k] + a[i] * b[j] * p[k], moduli[k]);
      }
    }
    return out;
  }
  Elem add(const Elem& a, const Elem& b) const {
    Elem out(dim());
    for (std::size_t k = 0; k < dim(); ++k) out[k] = mod(a[k] + b[k], moduli[k]);
    return out;
  }
};

/// Every vector with 0 <= v_i < moduli_i (all moduli positive).
inline std::vector<Elem> all_elements(const std::vector<long>& moduli) {
  std::vector<Elem> out{Elem(moduli.size(), 0)};
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    std::vector<Elem> next;
    for (const auto& e : out)
      for (long c = 0; c < moduli[i]; ++c) {
        Elem x = e;
        x[i] = c;
        next.push_back(std::move(x));
      }
    out = std::move(next);
  }
  return out;
}

/// Rows of a hom matrix as long vectors.
inline std::vector<Elem> hom_rows(const laxcenter::RingHom& f) {
  std::vector<Elem> rows;
  for (std::size_t i = 0; i < f.matrix().rows(); ++i) rows.push_back(to_elem(f.matrix().row(i)));
  return rows;
}

inline Elem apply(const std::vector<Elem>& rows, const Elem& x, const SmallRing& target) {
  Elem out(target.dim(), 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += x[i] * rows[i][k];
  return target.reduce(out);
}

/// Elements of S commuting with every image.
inline std::set<Elem> centralizer(const SmallRing& s, const std::vector<Elem>& images) {
  std::set<Elem> out;
  for (const auto& x : all_elements(s.moduli)) {
    bool ok = true;
    for (const auto& a : images) ok = ok && s.mul(x, a) == s.mul(a, x);
    if (ok) out.insert(x);
  }
  return out;
}

/// All sums c_0 g_0 + ... with 0 <= c_i < orders_i, reduced in the ambient.
inline std::set<Elem> span(const std::vector<Elem>& gens, const std::vector<long>& orders,
                           const std::vector<long>& moduli) {
  std::set<Elem> out;
  for (const auto& c : all_elements(orders)) {
    Elem v(moduli.size(), 0);
    for (std::size_t g = 0; g < gens.size(); ++g)
      for (std::size_t k = 0; k < moduli.size(); ++k) v[k] = mod(v[k] + c[g] * gens[g][k], moduli[k]);
    out.insert(v);
  }
  return out;
}

/// {x : x A == 0 mod target}, x ranging over the source residues.
inline std::set<Elem> kernel(const std::vector<Elem>& a, const std::vector<long>& source,
                             const std::vector<long>& target) {
  std::set<Elem> out;
  for (const auto& x : all_elements(source)) {
    bool zero = true;
    for (std::size_t c = 0; c < target.size() && zero; ++c) {
      long s = 0;
      for (std::size_t r = 0; r < x.size(); ++r) s += x[r] * a[r][c];
      zero = mod(s, target[c]) == 0;
    }
    if (zero) out.insert(x);
  }
  return out;
}

/// Fraction-free determinant.
inline long det(std::vector<std::vector<long>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  long sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// gcd of all k x k minors.
inline long minor_gcd(const std::vector<std::vector<long>>& a, std::size_t k) {
  const std::size_t r = a.size(), c = a.empty() ? 0 : a[0].size();
  long g = 0;
  std::vector<std::size_t> rows(k), cols(k);
  auto next = [](std::vector<std::size_t>& idx, std::size_t n) {
    for (std::size_t i = idx.size(); i-- > 0;)
      if (idx[i] < n - idx.size() + i) {
        ++idx[i];
        for (std::size_t j = i + 1; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
        return true;
      }
    return false;
  };
  std::iota(rows.begin(), rows.end(), 0);
  do {
    std::iota(cols.begin(), cols.end(), 0);
    do {
      std::vector<std::vector<long>> m(k, std::vector<long>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m[i][j] = a[rows[i]][cols[j]];
      g = std::gcd(g, det(m));
    } while (next(cols, c));
  } while (next(rows, r));
  return g;
}

/// Rank of a matrix over F_p.
inline std::size_t rank_mod_p(std::vector<Elem> m, long p) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && mod(m[piv][c], p) == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[rank], m[piv]);
    long inv = 1;
    while (mod(inv * m[rank][c], p) != 1) ++inv;
    for (auto& x : m[rank]) x = mod(x * inv, p);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || mod(m[i][c], p) == 0) continue;
      long f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = mod(m[i][j] - f * m[rank][j], p);
    }
    ++rank;
  }
  return rank;
}

/// Dimension over F_p of M (x)_A N presented on all element pairs, where M,
/// N and A are listed element by element and act through the callbacks.
template <class RightAct, class LeftAct, class AddM, class AddN>
std::size_t tensor_dim_fp(const std::vector<Elem>& m, const std::vector<Elem>& n,
                          const std::vector<Elem>& a, long p, RightAct xa, LeftAct ay,
                          AddM add_m, AddN add_n) {
  const std::size_t gens = m.size() * n.size();
  auto index_m = [&](const Elem& x) {
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] == x) return i;
    throw std::logic_error("element outside M");
  };
  auto index_n = [&](const Elem& y) {
    for (std::size_t i = 0; i < n.size(); ++i)
      if (n[i] == y) return i;
    throw std::logic_error("element outside N");
  };
  auto gen = [&](std::size_t i, std::size_t j) { return i * n.size() + j; };
  std::vector<Elem> rels;
  auto rel = [&](std::initializer_list<std::pair<std::size_t, long>> terms) {
    Elem r(gens, 0);
    for (auto [g, c] : terms) r[g] = mod(r[g] + c, p);
    rels.push_back(std::move(r));
  };
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t i2 = 0; i2 < m.size(); ++i2)
      for (std::size_t j = 0; j < n.size(); ++j)
        rel({{gen(index_m(add_m(m[i], m[i2])), j), 1}, {gen(i, j), -1}, {gen(i2, j), -1}});
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < n.size(); ++j)
      for (std::size_t j2 = 0; j2 < n.size(); ++j2)
        rel({{gen(i, index_n(add_n(n[j], n[j2]))), 1}, {gen(i, j), -1}, {gen(i, j2), -1}});
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < n.size(); ++j)
      for (const auto& x : a)
        rel({{gen(index_m(xa(m[i], x)), j), 1}, {gen(i, index_n(ay(x, n[j]))), -1}});
  return gens - rank_mod_p(std::move(rels), p);
}

/// Z(g) (x)_{Z(S)} Z(f) over F_p, with every centralizer found by
/// enumeration: Z(S) acts on Z(g) through g and on Z(f) by multiplication.
inline std::size_t compositor_tensor_dim(const laxcenter::RingHom& f, const laxcenter::RingHom& g,
                                         long p) {
  SmallRing s(*f.target()), t(*g.target());
  auto gr = hom_rows(g), fr = hom_rows(f);
  std::vector<Elem> f_images, s_basis;
  for (std::size_t i = 0; i < f.source()->dim(); ++i) f_images.push_back(fr[i]);
  for (std::size_t i = 0; i < s.dim(); ++i) {
    Elem e(s.dim(), 0);
    e[i] = 1;
    s_basis.push_back(e);
  }
  auto zf = centralizer(s, f_images);
  auto zs = centralizer(s, s_basis);
  auto zg = centralizer(t, gr);
  std::vector<Elem> m(zg.begin(), zg.end()), n(zf.begin(), zf.end()), a(zs.begin(), zs.end());
  return tensor_dim_fp(
      m, n, a, p, [&](const Elem& x, const Elem& y) { return t.mul(x, apply(gr, y, t)); },
      [&](const Elem& x, const Elem& y) { return s.mul(x, y); },
      [&](const Elem& x, const Elem& y) { return t.add(x, y); },
      [&](const Elem& x, const Elem& y) { return s.add(x, y); });
}

}  // namespace oracle
