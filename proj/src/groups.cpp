#include "laxcenter/groups.hpp"

#include "laxcenter/errors.hpp"

#include <array>

namespace laxcenter {

std::size_t CayleyTable::inverse(std::size_t a) const {
  for (std::size_t b = 0; b < order(); ++b)
    if (mul(a, b) == identity) return b;
  throw InputError("group " + name + ": element " + element_names.at(a) + " has no inverse");
}

std::size_t CayleyTable::index_of(const std::string& element) const {
  for (std::size_t i = 0; i < order(); ++i)
    if (element_names[i] == element) return i;
  throw InputError("group " + name + ": no element named '" + element + "'");
}

std::vector<std::string> validate_group(const CayleyTable& g) {
  std::vector<std::string> errors;
  const std::size_t n = g.order();
  if (n == 0) return {"empty group"};
  if (g.product.size() != n * n) return {"table has wrong size"};
  if (g.identity >= n) return {"identity index out of range"};
  for (auto p : g.product)
    if (p >= n) return {"table entry out of range"};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> row(n, false), col(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      row[g.mul(i, j)] = true;
      col[g.mul(j, i)] = true;
    }
    for (std::size_t k = 0; k < n; ++k)
      if (!row[k] || !col[k]) {
        errors.push_back("not a Latin square at element " + g.element_names[i]);
        break;
      }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (g.mul(g.identity, i) != i || g.mul(i, g.identity) != i)
      errors.push_back("identity fails at element " + g.element_names[i]);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
          errors.push_back("associativity fails at (" + g.element_names[a] + ", " +
                           g.element_names[b] + ", " + g.element_names[c] + ")");
          return errors;
        }
  return errors;
}

CayleyTable cyclic_group(std::size_t n) {
  if (n == 0) throw InputError("cyclic group of order 0");
  CayleyTable g;
  g.name = "C" + std::to_string(n);
  for (std::size_t i = 0; i < n; ++i) g.element_names.push_back("[" + std::to_string(i) + "]");
  g.product.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g.product[i * n + j] = (i + j) % n;
  return g;
}

CayleyTable dihedral_group(std::size_t order) {
  if (order < 2 || order % 2 != 0)
    throw InputError("dihedral group needs an even order >= 2, got " + std::to_string(order));
  const std::size_t n = order / 2;
  CayleyTable g;
  g.name = "D" + std::to_string(order);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::string rot = b == 0 ? "" : b == 1 ? "r" : "r^" + std::to_string(b);
      std::string name = (a ? "s" : "") + rot;
      g.element_names.push_back(name.empty() ? "e" : name);
    }
  g.product.resize(order * order);
  // (s^a r^b)(s^c r^d) = s^(a+c) r^((-1)^c b + d)
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          std::size_t rot = ((c ? n - b : b) + d) % n;
          g.product[(a * n + b) * order + (c * n + d)] = ((a + c) % 2) * n + rot;
        }
  return g;
}

CayleyTable quaternion_group() {
  // index = 4 * sign_bit + unit, unit in {1, i, j, k}
  static constexpr std::array<std::array<int, 4>, 4> unit_prod{{
      {0, 1, 2, 3},
      {1, 4, 3, 6},   // i*1=i, i*i=-1, i*j=k, i*k=-j
      {2, 7, 4, 1},   // j*1=j, j*i=-k, j*j=-1, j*k=i
      {3, 2, 5, 4},   // k*1=k, k*i=j, k*j=-i, k*k=-1
  }};
  // entries >= 4 encode a negative: 4 -> -1, 5 -> -i, 6 -> -j, 7 -> -k
  CayleyTable g;
  g.name = "Q8";
  g.element_names = {"1", "i", "j", "k", "-1", "-i", "-j", "-k"};
  g.product.resize(64);
  for (std::size_t x = 0; x < 8; ++x)
    for (std::size_t y = 0; y < 8; ++y) {
      int p = unit_prod[x % 4][y % 4];
      std::size_t sign = (x / 4 + y / 4 + static_cast<std::size_t>(p / 4)) % 2;
      g.product[x * 8 + y] = sign * 4 + static_cast<std::size_t>(p % 4);
    }
  return g;
}

CayleyTable direct_product(const CayleyTable& g, const CayleyTable& h) {
  CayleyTable p;
  p.name = g.name + "x" + h.name;
  const std::size_t m = g.order(), n = h.order();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      p.element_names.push_back("(" + g.element_names[i] + "," + h.element_names[j] + ")");
  p.product.resize(m * n * m * n);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < m; ++c)
        for (std::size_t d = 0; d < n; ++d)
          p.product[(a * n + b) * (m * n) + (c * n + d)] = g.mul(a, c) * n + h.mul(b, d);
  p.identity = g.identity * n + h.identity;
  return p;
}

std::vector<std::size_t> check_group_hom(const CayleyTable& source, const CayleyTable& target,
                                         std::vector<std::size_t> images) {
  if (images.size() != source.order())
    throw InputError("group hom " + source.name + " -> " + target.name + ": wrong image count");
  for (auto x : images)
    if (x >= target.order()) throw InputError("group hom image out of range");
  for (std::size_t a = 0; a < source.order(); ++a)
    for (std::size_t b = 0; b < source.order(); ++b)
      if (images[source.mul(a, b)] != target.mul(images[a], images[b]))
        throw AxiomError("group multiplicativity", {a, b},
                         "group map " + source.name + " -> " + target.name +
                             " is not multiplicative at (" + source.element_names[a] + ", " +
                             source.element_names[b] + ")");
  return images;
}

}  // namespace laxcenter
