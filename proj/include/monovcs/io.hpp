/*
 *   Copyright 2026 The monovcs authors
 *
 *   Licensed under the Apache License, Version 2.0 (the "License");
 *   you may not use this file except in compliance with the License.
 *   You may obtain a copy of the License at
 *
 *       http://www.apache.org/licenses/LICENSE-2.0
 *
 *   Unless required by applicable law or agreed to in writing, software
 *   distributed under the License is distributed on an "AS IS" BASIS,
 *   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *   See the License for the specific language governing permissions and
 *   limitations under the License.
 */

/// JSON serialization for monoids, schemes and share metadata.
///
/// Monoid files carry the full Cayley table:
///   { "name": "...",
///     "elements": [ { "id": 0, "name": "0", "rgb": [0,0,0] }, ... ],
///     "one": 7, "zero": 0,
///     "table": [ [0,0,...], ... ] }
///
/// Scheme files reference their monoid inline, by file path (relative to
/// the scheme file) or as "builtin:<spec>":
///   { "name": "...", "monoid": ..., "n": 2, "t": 2,
///     "colors": ["b","c","m","1"], "strategy": "full",
///     "basis": { "b": { "poly": "mc + 2az",
///                       "matrix": [["m","c","1","0","1","0"], ...] },
///                ... } }
/// A basis entry needs a polynomial or an explicit matrix; with both, the
/// expansion must match the matrix.

#ifndef MONOVCS_IO_HPP
#define MONOVCS_IO_HPP

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "monovcs/basis.hpp"
#include "monovcs/color_monoid.hpp"
#include "monovcs/error.hpp"
#include "monovcs/poly.hpp"
#include "monovcs/scheme.hpp"
#include "monovcs/share.hpp"

namespace monovcs {

inline nlohmann::json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw IoError("invalid JSON in '" + path + "': " + e.what());
  }
}

inline void write_json_file(const std::string& path, const nlohmann::json& j) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot create '" + path + "'");
  f << j.dump(2) << "\n";
  if (!f) throw IoError("write failed for '" + path + "'");
}

inline nlohmann::json monoid_to_json(const ColorMonoid& m) {
  nlohmann::json j;
  j["name"] = m.name();
  auto& els = j["elements"] = nlohmann::json::array();
  for (int i = 0; i < m.size(); ++i) {
    Rgb rgb = m.rgb_of(ColorId(i));
    els.push_back({{"id", i},
                   {"name", m.name_of(ColorId(i))},
                   {"rgb", {rgb[0], rgb[1], rgb[2]}}});
  }
  j["one"] = m.one().index();
  if (m.has_zero()) j["zero"] = m.zero().index();
  auto& table = j["table"] = nlohmann::json::array();
  for (int x = 0; x < m.size(); ++x) {
    nlohmann::json row = nlohmann::json::array();
    for (int y = 0; y < m.size(); ++y)
      row.push_back(m.op(ColorId(x), ColorId(y)).index());
    table.push_back(std::move(row));
  }
  return j;
}

/// Structural load only: law violations are left for the caller to report,
/// so broken tables can still be inspected with `monoid check`.
inline MonoidPtr monoid_from_json(const nlohmann::json& j) {
  try {
    std::vector<ElementInfo> els;
    const auto& jels = j.at("elements");
    for (std::size_t i = 0; i < jels.size(); ++i) {
      const auto& je = jels[i];
      if (je.at("id").get<std::size_t>() != i)
        throw IoError("element ids must equal their positions");
      ElementInfo e;
      e.name = je.at("name").get<std::string>();
      const auto& rgb = je.at("rgb");
      if (rgb.size() != 3) throw IoError("rgb needs three channels");
      for (std::size_t ch = 0; ch < 3; ++ch) {
        int v = rgb[ch].get<int>();
        if (v < 0 || v > 255) throw IoError("rgb channel outside 0..255");
        e.rgb[ch] = static_cast<std::uint8_t>(v);
      }
      els.push_back(std::move(e));
    }
    std::vector<ColorId> table;
    for (const auto& row : j.at("table")) {
      if (row.size() != jels.size()) throw IoError("table rows must have one entry per element");
      for (const auto& v : row) table.push_back(ColorId(v.get<int>()));
    }
    std::optional<ColorId> zero;
    if (j.contains("zero") && !j["zero"].is_null()) zero = ColorId(j["zero"].get<int>());
    return std::make_shared<ColorMonoid>(j.value("name", "monoid"), std::move(els),
                                         std::move(table), ColorId(j.at("one").get<int>()),
                                         zero);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("malformed monoid: ") + e.what());
  }
}

inline MonoidPtr load_monoid_file(const std::string& path) {
  return monoid_from_json(read_json_file(path));
}

inline void save_monoid_file(const std::string& path, const ColorMonoid& m) {
  write_json_file(path, monoid_to_json(m));
}

/// Monoid reference inside a scheme file: inline object, "builtin:<spec>",
/// or a path relative to the scheme file.  Loaded tables must satisfy the
/// monoid laws.
inline MonoidPtr resolve_monoid_ref(const nlohmann::json& ref,
                                    const std::filesystem::path& base_dir) {
  MonoidPtr m;
  if (ref.is_object()) {
    m = monoid_from_json(ref);
  } else if (ref.is_string()) {
    const std::string s = ref.get<std::string>();
    if (s.rfind("builtin:", 0) == 0) return builtin_monoid(s.substr(8));
    std::filesystem::path p(s);
    if (p.is_relative()) p = base_dir / p;
    m = load_monoid_file(p.string());
  } else {
    throw IoError("monoid reference must be an object or a string");
  }
  m->require_valid();
  return m;
}

namespace detail {

inline BasisMatrix matrix_from_json(const MonoidPtr& monoid, int n,
                                    const nlohmann::json& rows,
                                    const std::string& color_name) {
  if (static_cast<int>(rows.size()) != n)
    throw IoError("matrix for color '" + color_name + "' needs " + std::to_string(n) +
                  " rows");
  const std::size_t q = rows[0].size();
  if (q == 0) throw IoError("matrix for color '" + color_name + "' has no columns");
  std::vector<Column> columns(q, Column(static_cast<std::size_t>(n)));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != q)
      throw IoError("matrix rows for color '" + color_name + "' have unequal lengths");
    for (std::size_t c = 0; c < q; ++c)
      columns[c][r] = monoid->require(rows[r][c].get<std::string>());
  }
  return BasisMatrix(monoid, n, std::move(columns));
}

inline nlohmann::json matrix_to_json(const BasisMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m.monoid()->name_of(m.entry(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace detail

inline nlohmann::json scheme_to_json(const Scheme& s) {
  nlohmann::json j;
  j["name"] = s.name();
  j["monoid"] = monoid_to_json(*s.monoid());
  j["n"] = s.participants();
  j["t"] = s.threshold();
  auto& colors = j["colors"] = nlohmann::json::array();
  for (ColorId c : s.colors()) colors.push_back(s.monoid()->name_of(c));
  j["strategy"] = to_string(s.strategy());
  auto& basis = j["basis"] = nlohmann::json::object();
  for (std::size_t i = 0; i < s.colors().size(); ++i) {
    nlohmann::json entry;
    if (s.polys()) entry["poly"] = to_string((*s.polys())[i]);
    entry["matrix"] = detail::matrix_to_json(s.matrices()[i]);
    basis[s.monoid()->name_of(s.colors()[i])] = std::move(entry);
  }
  return j;
}

inline Scheme scheme_from_json(const nlohmann::json& j,
                               const std::filesystem::path& base_dir) {
  try {
    MonoidPtr monoid = resolve_monoid_ref(j.at("monoid"), base_dir);
    const int n = j.at("n").get<int>();
    const int t = j.at("t").get<int>();
    const ExpansionStrategy strategy = parse_strategy(j.value("strategy", "full"));

    std::vector<ColorId> colors;
    for (const auto& name : j.at("colors")) colors.push_back(monoid->require(name.get<std::string>()));

    const auto& basis = j.at("basis");
    if (basis.size() != colors.size())
      throw IoError("basis needs exactly one entry per scheme color");

    std::vector<BasisMatrix> matrices;
    std::vector<Poly> polys;
    bool all_polys = true;
    for (ColorId c : colors) {
      const std::string name = monoid->name_of(c);
      if (!basis.contains(name)) throw IoError("basis has no entry for color '" + name + "'");
      const auto& entry = basis[name];
      std::optional<Poly> poly;
      if (entry.is_string()) {
        poly = parse_poly(monoid, entry.get<std::string>());
      } else {
        if (entry.contains("poly")) poly = parse_poly(monoid, entry["poly"].get<std::string>());
        if (entry.contains("matrix")) {
          BasisMatrix m = detail::matrix_from_json(monoid, n, entry["matrix"], name);
          if (poly && !columns_equal(expand(*poly, n, strategy), m))
            throw IoError("polynomial for color '" + name +
                          "' does not expand to the given matrix");
          matrices.push_back(std::move(m));
          if (poly) polys.push_back(std::move(*poly));
          else all_polys = false;
          continue;
        }
      }
      if (!poly) throw IoError("basis entry for color '" + name + "' needs a poly or a matrix");
      matrices.push_back(expand(*poly, n, strategy));
      polys.push_back(std::move(*poly));
    }

    std::optional<std::vector<Poly>> maybe_polys;
    if (all_polys && polys.size() == colors.size()) maybe_polys = std::move(polys);
    return Scheme(j.value("name", "scheme"), monoid, n, t, std::move(colors),
                  std::move(matrices), std::move(maybe_polys), strategy);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("malformed scheme: ") + e.what());
  }
}

inline Scheme load_scheme_file(const std::string& path) {
  return scheme_from_json(read_json_file(path),
                          std::filesystem::path(path).parent_path());
}

inline void save_scheme_file(const std::string& path, const Scheme& s) {
  write_json_file(path, scheme_to_json(s));
}

inline nlohmann::json meta_to_json(const ShareMeta& m) {
  nlohmann::json j;
  j["scheme"] = m.scheme_name;
  j["monoid"] = m.monoid_name;
  j["n"] = m.participants;
  j["t"] = m.threshold;
  j["q"] = m.pixel_expansion;
  j["tile"] = {{"rows", m.tile.rows}, {"cols", m.tile.cols}};
  j["secret"] = {{"width", m.secret_width}, {"height", m.secret_height}};
  j["secure"] = m.secure;
  if (m.seed) j["seed"] = *m.seed;
  j["rng"] = m.rng;
  return j;
}

inline ShareMeta meta_from_json(const nlohmann::json& j) {
  try {
    ShareMeta m;
    m.scheme_name = j.at("scheme").get<std::string>();
    m.monoid_name = j.at("monoid").get<std::string>();
    m.participants = j.at("n").get<int>();
    m.threshold = j.at("t").get<int>();
    m.pixel_expansion = j.at("q").get<int>();
    m.tile.rows = j.at("tile").at("rows").get<int>();
    m.tile.cols = j.at("tile").at("cols").get<int>();
    m.secret_width = j.at("secret").at("width").get<int>();
    m.secret_height = j.at("secret").at("height").get<int>();
    m.secure = j.value("secure", false);
    if (j.contains("seed")) m.seed = j["seed"].get<std::uint64_t>();
    m.rng = j.value("rng", "splitmix64+mt19937_64");
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("malformed share metadata: ") + e.what());
  }
}

inline ShareMeta load_meta_file(const std::string& path) {
  return meta_from_json(read_json_file(path));
}

inline void save_meta_file(const std::string& path, const ShareMeta& m) {
  write_json_file(path, meta_to_json(m));
}

}  // namespace monovcs

#endif  // MONOVCS_IO_HPP
