#pragma once

#include "laxcenter/rings.hpp"

#include <filesystem>
#include <string>

namespace laxcenter {

/// Ring document: {"name", "basis", "moduli", "unit", "mult": [[i, j, [..]], ..]}
/// or an inline constructor ({"group_ring": ..}, {"matrix_ring": ..},
/// {"upper_triangular": ..}, {"product": [..]}). A string is a path to a
/// ring file, relative to `base_dir`. Integers may be JSON integers or
/// decimal strings.
///
/// Malformed input raises InputError naming the line (for syntax errors) or
/// the field path; rings failing an axiom raise AxiomError.
RingRef parse_ring_text(const std::string& text, const std::filesystem::path& base_dir = ".");
RingRef load_ring_file(const std::filesystem::path& path);

/// Hom document: {"source": ring, "target": ring, "matrix": [[..], ..]} with
/// one row per source basis element.
RingHom parse_hom_text(const std::string& text, const std::filesystem::path& base_dir = ".");
RingHom load_hom_file(const std::filesystem::path& path);

}  // namespace laxcenter
