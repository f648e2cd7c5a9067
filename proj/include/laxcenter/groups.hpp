#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace laxcenter {

/// Finite group given by its multiplication table.
struct CayleyTable {
  std::string name;
  std::vector<std::string> element_names;
  /// product[i * order() + j] is the index of element i * element j.
  std::vector<std::size_t> product;
  std::size_t identity = 0;

  std::size_t order() const noexcept { return element_names.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return product[a * order() + b]; }
  std::size_t inverse(std::size_t a) const;
  std::size_t index_of(const std::string& element) const;
};

/// Empty when the table is a group; otherwise one message per failed law.
std::vector<std::string> validate_group(const CayleyTable& g);

CayleyTable cyclic_group(std::size_t n);
/// Dihedral group of the given order (2n), generated by a rotation r of
/// order n and a reflection s with s r s = r^-1. Elements are s^a r^b,
/// named e, r, r^2, ..., s, sr, sr^2, ...
CayleyTable dihedral_group(std::size_t order);
CayleyTable quaternion_group();
CayleyTable direct_product(const CayleyTable& g, const CayleyTable& h);

/// A map between groups by images of every element, checked to be a
/// homomorphism.
std::vector<std::size_t> check_group_hom(const CayleyTable& source, const CayleyTable& target,
                                         std::vector<std::size_t> images);

}  // namespace laxcenter
