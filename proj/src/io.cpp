#include "laxcenter/io.hpp"

#include "laxcenter/errors.hpp"
#include "laxcenter/groups.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace laxcenter {

namespace {

using json = nlohmann::json;

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw InputError("field " + (where.empty() ? std::string("/") : where) + ": " + what);
}

const json& field(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) bad(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) bad(where + "/" + key, "missing");
  return *it;
}

Integer to_integer(const json& v, const std::string& where) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Integer(std::to_string(v.get<std::uint64_t>()));
    return Integer(std::to_string(v.get<std::int64_t>()));
  }
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    bool ok = s.size() > start;
    for (std::size_t i = start; i < s.size(); ++i) ok = ok && s[i] >= '0' && s[i] <= '9';
    if (!ok) bad(where, "'" + s + "' is not a decimal integer");
    return Integer(s[0] == '+' ? s.substr(1) : s);
  }
  bad(where, "expected an integer or a decimal string");
}

std::size_t to_size(const json& v, const std::string& where) {
  Integer x = to_integer(v, where);
  if (x < 0 || x > 1000000) bad(where, "expected a small non-negative integer");
  return static_cast<std::size_t>(x.get_ui());
}

Vec to_vec(const json& v, const std::string& where, std::size_t expected) {
  if (!v.is_array()) bad(where, "expected an array");
  if (v.size() != expected)
    bad(where, "expected " + std::to_string(expected) + " entries, found " + std::to_string(v.size()));
  Vec out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(to_integer(v[i], where + "/" + std::to_string(i)));
  return out;
}

json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // byte offset to line/column
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError(origin + ": syntax error at line " + std::to_string(line) + ", column " +
                     std::to_string(col));
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CayleyTable parse_group(const json& g, const std::string& where) {
  if (g.is_string()) {
    const auto& s = g.get_ref<const std::string&>();
    auto colon = s.find(':');
    std::string kind = s.substr(0, colon);
    std::size_t n = 0;
    if (colon != std::string::npos) {
      std::string num = s.substr(colon + 1);
      if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
        bad(where, "bad group order in '" + s + "'");
      n = std::stoul(num);
    }
    if (kind == "cyclic" && n >= 1) return cyclic_group(n);
    if (kind == "dihedral" && n >= 2 && n % 2 == 0) return dihedral_group(n);
    if (kind == "quaternion" && (n == 8 || colon == std::string::npos)) return quaternion_group();
    bad(where, "unknown group '" + s + "' (cyclic:n, dihedral:2n, quaternion:8)");
  }
  // {"name", "elements": [..], "table": [[..], ..]} with table entries as
  // element indices or names
  CayleyTable t;
  t.name = g.contains("name") ? g["name"].get<std::string>() : "G";
  const json& els = field(g, "elements", where);
  if (!els.is_array() || els.empty()) bad(where + "/elements", "expected a non-empty array");
  for (const auto& e : els) {
    if (!e.is_string()) bad(where + "/elements", "element names must be strings");
    t.element_names.push_back(e.get<std::string>());
  }
  const std::size_t n = t.order();
  const json& table = field(g, "table", where);
  if (!table.is_array() || table.size() != n)
    bad(where + "/table", "expected " + std::to_string(n) + " rows");
  for (std::size_t i = 0; i < n; ++i) {
    const std::string rw = where + "/table/" + std::to_string(i);
    if (!table[i].is_array() || table[i].size() != n) bad(rw, "expected " + std::to_string(n) + " entries");
    for (std::size_t j = 0; j < n; ++j) {
      const json& x = table[i][j];
      std::size_t k = n;
      if (x.is_string()) {
        for (std::size_t e = 0; e < n; ++e)
          if (t.element_names[e] == x.get<std::string>()) k = e;
      } else {
        k = to_size(x, rw + "/" + std::to_string(j));
      }
      if (k >= n) bad(rw + "/" + std::to_string(j), "not an element");
      t.product.push_back(k);
    }
  }
  t.identity = n;
  for (std::size_t e = 0; e < n && t.identity == n; ++e) {
    bool id = true;
    for (std::size_t x = 0; x < n; ++x) id = id && t.mul(e, x) == x && t.mul(x, e) == x;
    if (id) t.identity = e;
  }
  if (t.identity == n) bad(where, "table has no identity element");
  auto errors = validate_group(t);
  if (!errors.empty()) bad(where, errors.front());
  return t;
}

RingRef parse_ring(const json& j, const std::filesystem::path& base, const std::string& where);

RingRef parse_ring_object(const json& j, const std::filesystem::path& base, const std::string& where) {
  if (j.contains("group_ring")) {
    const json& g = j["group_ring"];
    return make_group_ring(parse_group(field(g, "group", where + "/group_ring"), where + "/group_ring/group"),
                           g.contains("modulus") ? to_integer(g["modulus"], where + "/group_ring/modulus")
                                                 : Integer(0));
  }
  for (const char* key : {"matrix_ring", "upper_triangular"}) {
    if (!j.contains(key)) continue;
    const json& m = j[key];
    const std::string w = where + "/" + key;
    std::size_t n = to_size(field(m, "n", w), w + "/n");
    Integer mod = m.contains("modulus") ? to_integer(m["modulus"], w + "/modulus") : Integer(0);
    if (n == 0 || n > 6) bad(w + "/n", "size must be between 1 and 6");
    return std::string(key) == "matrix_ring" ? make_matrix_ring(n, mod) : make_upper_triangular(n, mod);
  }
  if (j.contains("product")) {
    const json& p = j["product"];
    if (!p.is_array() || p.size() < 2) bad(where + "/product", "expected at least two rings");
    RingRef r = parse_ring(p[0], base, where + "/product/0");
    for (std::size_t i = 1; i < p.size(); ++i)
      r = make_product_ring(r, parse_ring(p[i], base, where + "/product/" + std::to_string(i)));
    return r;
  }
  if (j.contains("integers")) {
    return integers_mod(to_integer(j["integers"], where + "/integers"));
  }

  const json& basis = field(j, "basis", where);
  if (!basis.is_array() || basis.empty()) bad(where + "/basis", "expected a non-empty array of names");
  std::vector<std::string> names;
  for (const auto& b : basis) {
    if (!b.is_string()) bad(where + "/basis", "basis names must be strings");
    names.push_back(b.get<std::string>());
  }
  const std::size_t n = names.size();
  Moduli moduli = to_vec(field(j, "moduli", where), where + "/moduli", n);
  for (std::size_t i = 0; i < n; ++i)
    if (moduli[i] < 0) bad(where + "/moduli/" + std::to_string(i), "moduli must be >= 0");
  Vec unit = to_vec(field(j, "unit", where), where + "/unit", n);
  std::vector<Vec> products(n * n, zero_vec(n));
  std::vector<bool> seen(n * n, false);
  if (j.contains("mult")) {
    const json& mult = j["mult"];
    if (!mult.is_array()) bad(where + "/mult", "expected an array of [i, j, [coefficients]]");
    for (std::size_t k = 0; k < mult.size(); ++k) {
      const std::string w = where + "/mult/" + std::to_string(k);
      const json& e = mult[k];
      if (!e.is_array() || e.size() != 3) bad(w, "expected [i, j, [coefficients]]");
      std::size_t a = to_size(e[0], w + "/0"), b = to_size(e[1], w + "/1");
      if (a >= n || b >= n) bad(w, "basis index out of range");
      if (seen[a * n + b]) bad(w, "duplicate product entry");
      seen[a * n + b] = true;
      products[a * n + b] = to_vec(e[2], w + "/2", n);
    }
  }
  std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "R";
  return make_ring(BasedRing(std::move(name), std::move(names), std::move(moduli), std::move(products),
                             std::move(unit)));
}

RingRef parse_ring(const json& j, const std::filesystem::path& base, const std::string& where) {
  if (j.is_string()) return load_ring_file(base / j.get<std::string>());
  if (!j.is_object()) bad(where, "expected a ring object or a file name");
  return parse_ring_object(j, base, where);
}

}  // namespace

RingRef parse_ring_text(const std::string& text, const std::filesystem::path& base_dir) {
  return parse_ring(parse_json(text, "ring"), base_dir, "");
}

RingRef load_ring_file(const std::filesystem::path& path) {
  json j = parse_json(read_file(path), path.string());
  try {
    return parse_ring(j, path.parent_path(), "");
  } catch (const AxiomError& e) {
    throw AxiomError(e.axiom(), e.witness(), path.string() + ": " + e.what());
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

namespace {

RingHom parse_hom(const json& j, const std::filesystem::path& base) {
  if (!j.is_object()) bad("", "expected a hom object");
  RingRef src = parse_ring(field(j, "source", ""), base, "/source");
  RingRef tgt = parse_ring(field(j, "target", ""), base, "/target");
  const json& m = field(j, "matrix", "");
  if (!m.is_array() || m.size() != src->dim())
    bad("/matrix", "expected one row per source basis element (" + std::to_string(src->dim()) + ")");
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < m.size(); ++i)
    rows.push_back(to_vec(m[i], "/matrix/" + std::to_string(i), tgt->dim()));
  return make_hom(src, tgt, IntMatrix::from_rows(rows, tgt->dim()));
}

}  // namespace

RingHom parse_hom_text(const std::string& text, const std::filesystem::path& base_dir) {
  return parse_hom(parse_json(text, "hom"), base_dir);
}

RingHom load_hom_file(const std::filesystem::path& path) {
  json j = parse_json(read_file(path), path.string());
  try {
    return parse_hom(j, path.parent_path());
  } catch (const AxiomError& e) {
    throw AxiomError(e.axiom(), e.witness(), path.string() + ": " + e.what());
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

}  // namespace laxcenter
