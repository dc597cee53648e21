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

/// Finite commutative color monoids.
///
/// A color model is a finite set of colors with a binary "stacking"
/// operation: the color produced by superimposing two transparencies.
/// Stacking is commutative and associative, white (the neutral element,
/// written 1) changes nothing, and black (the absorbing element, written 0)
/// swallows everything.  When stacking is also idempotent the model is a
/// semilattice; every builtin model here is one.
///
/// Monoids are immutable value objects.  The algebraic laws are checked
/// exhaustively (the sets are tiny), and everything downstream assumes a
/// validated monoid.

#ifndef MONOVCS_COLOR_MONOID_HPP
#define MONOVCS_COLOR_MONOID_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "monovcs/error.hpp"

namespace monovcs {

/// Index of a color inside its monoid.  Only meaningful together with the
/// monoid that minted it.
class ColorId {
 public:
  constexpr ColorId() = default;
  constexpr explicit ColorId(int index) : index_(index) {}
  constexpr int index() const { return index_; }
  constexpr auto operator<=>(const ColorId&) const = default;

 private:
  int index_ = 0;
};

using Rgb = std::array<std::uint8_t, 3>;

struct ElementInfo {
  std::string name;
  Rgb rgb{0, 0, 0};  // display color, used only for rendering
};

/// One law violation found by check_laws.  `c` is used by associativity only.
struct LawViolation {
  enum class Law { Commutativity, Associativity, Neutral, Absorbing, Idempotence };
  Law law;
  ColorId a;
  ColorId b;
  ColorId c;
};

struct LawReport {
  bool commutative = false;
  bool associative = false;
  bool has_neutral = false;    // the designated 1 really is neutral
  bool has_absorbing = false;  // a 0 is designated and really absorbs
  bool idempotent = false;
  bool semilattice = false;  // commutative + associative + idempotent
  std::vector<LawViolation> counterexamples;

  /// True when the table is usable as a color model: laws i-iii hold and,
  /// if a 0 was designated, it absorbs.  Idempotence is not required.
  bool valid = false;
};

class ColorMonoid;
using MonoidPtr = std::shared_ptr<const ColorMonoid>;

class ColorMonoid {
 public:
  /// Builds a monoid from an explicit Cayley table (row-major, table[x*k+y]
  /// = x*y).  Only structural well-formedness is enforced here; algebraic
  /// laws are the business of check_laws, so that deliberately broken
  /// tables can still be inspected.
  ColorMonoid(std::string name, std::vector<ElementInfo> elements,
              std::vector<ColorId> table, ColorId one,
              std::optional<ColorId> zero)
      : name_(std::move(name)),
        elements_(std::move(elements)),
        table_(std::move(table)),
        one_(one),
        zero_(zero) {
    const std::size_t k = elements_.size();
    if (k == 0) throw MonoidError("monoid needs at least one element");
    if (table_.size() != k * k)
      throw MonoidError("Cayley table must be the full " + std::to_string(k) +
                        "x" + std::to_string(k) + " square");
    for (ColorId v : table_)
      if (v.index() < 0 || static_cast<std::size_t>(v.index()) >= k)
        throw MonoidError("table entry " + std::to_string(v.index()) +
                          " is not an element id");
    check_id(one_);
    if (zero_) check_id(*zero_);
    for (std::size_t i = 0; i < k; ++i) {
      if (elements_[i].name.empty()) throw MonoidError("element names must be nonempty");
      for (std::size_t j = i + 1; j < k; ++j)
        if (elements_[i].name == elements_[j].name)
          throw MonoidError("duplicate element name '" + elements_[i].name + "'");
    }
  }

  int size() const { return static_cast<int>(elements_.size()); }
  const std::string& name() const { return name_; }
  ColorId one() const { return one_; }
  bool has_zero() const { return zero_.has_value(); }
  ColorId zero() const {
    if (!zero_) throw MonoidError("monoid '" + name_ + "' has no 0 element");
    return *zero_;
  }

  const std::string& name_of(ColorId c) const {
    check_id(c);
    return elements_[c.index()].name;
  }
  Rgb rgb_of(ColorId c) const {
    check_id(c);
    return elements_[c.index()].rgb;
  }
  const std::vector<ElementInfo>& elements() const { return elements_; }

  std::optional<ColorId> find(const std::string& name) const {
    for (std::size_t i = 0; i < elements_.size(); ++i)
      if (elements_[i].name == name) return ColorId(static_cast<int>(i));
    return std::nullopt;
  }

  /// Element by name; throws instead of returning nullopt.
  ColorId require(const std::string& name) const {
    if (auto c = find(name)) return *c;
    throw MonoidError("monoid '" + name_ + "' has no element named '" + name + "'");
  }

  ColorId op(ColorId x, ColorId y) const {
    check_id(x);
    check_id(y);
    return table_[static_cast<std::size_t>(x.index()) * elements_.size() +
                  static_cast<std::size_t>(y.index())];
  }

  /// Stacks a whole multiset of colors.  The empty stack is white: an empty
  /// pile of transparencies shows the backing light.
  template <typename Range>
  ColorId op_fold(const Range& colors) const {
    ColorId acc = one_;
    for (ColorId c : colors) acc = op(acc, c);
    return acc;
  }

  /// Exhaustively checks laws i-v over the table.  All violations are
  /// reported, not just the first.
  LawReport check_laws() const {
    LawReport r;
    const int k = size();
    using Law = LawViolation::Law;
    r.commutative = r.associative = r.has_neutral = r.idempotent = true;
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        if (raw(a, b) != raw(b, a)) {
          r.commutative = false;
          r.counterexamples.push_back({Law::Commutativity, ColorId(a), ColorId(b), {}});
        }
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        for (int c = 0; c < k; ++c)
          if (raw(raw(a, b).index(), c) != raw(a, raw(b, c).index())) {
            r.associative = false;
            r.counterexamples.push_back(
                {Law::Associativity, ColorId(a), ColorId(b), ColorId(c)});
          }
    for (int a = 0; a < k; ++a)
      if (raw(one_.index(), a) != ColorId(a)) {
        r.has_neutral = false;
        r.counterexamples.push_back({Law::Neutral, one_, ColorId(a), {}});
      }
    if (zero_) {
      r.has_absorbing = true;
      for (int a = 0; a < k; ++a)
        if (raw(zero_->index(), a) != *zero_) {
          r.has_absorbing = false;
          r.counterexamples.push_back({Law::Absorbing, *zero_, ColorId(a), {}});
        }
    }
    for (int a = 0; a < k; ++a)
      if (raw(a, a) != ColorId(a)) {
        r.idempotent = false;
        r.counterexamples.push_back({Law::Idempotence, ColorId(a), ColorId(a), {}});
      }
    r.semilattice = r.commutative && r.associative && r.idempotent;
    r.valid = r.commutative && r.associative && r.has_neutral &&
              (!zero_ || r.has_absorbing);
    return r;
  }

  std::string describe(const LawViolation& v) const {
    using Law = LawViolation::Law;
    std::ostringstream os;
    auto nm = [&](ColorId c) { return name_of(c); };
    switch (v.law) {
      case Law::Commutativity:
        os << nm(v.a) << "*" << nm(v.b) << " = " << nm(op(v.a, v.b)) << " but "
           << nm(v.b) << "*" << nm(v.a) << " = " << nm(op(v.b, v.a));
        break;
      case Law::Associativity:
        os << "(" << nm(v.a) << "*" << nm(v.b) << ")*" << nm(v.c) << " = "
           << nm(op(op(v.a, v.b), v.c)) << " but " << nm(v.a) << "*(" << nm(v.b)
           << "*" << nm(v.c) << ") = " << nm(op(v.a, op(v.b, v.c)));
        break;
      case Law::Neutral:
        os << "1*" << nm(v.b) << " = " << nm(op(v.a, v.b)) << " != " << nm(v.b);
        break;
      case Law::Absorbing:
        os << "0*" << nm(v.b) << " = " << nm(op(v.a, v.b)) << " != " << nm(v.a);
        break;
      case Law::Idempotence:
        os << nm(v.a) << "*" << nm(v.a) << " = " << nm(op(v.a, v.a));
        break;
    }
    return os.str();
  }

  /// Throws (with the first counterexample) unless the table is a valid
  /// commutative monoid with neutral 1 and, when designated, absorbing 0.
  void require_valid() const {
    LawReport r = check_laws();
    if (!r.valid) {
      std::string what = "invalid color monoid '" + name_ + "'";
      if (!r.counterexamples.empty())
        what += ": " + describe(r.counterexamples.front());
      throw MonoidError(what);
    }
  }

  /// Structural equality: same element names, table and constants.  Display
  /// colors and the monoid's own name are presentation, not identity.
  friend bool operator==(const ColorMonoid& a, const ColorMonoid& b) {
    if (a.size() != b.size() || a.one_ != b.one_ || a.zero_ != b.zero_) return false;
    for (int i = 0; i < a.size(); ++i)
      if (a.elements_[i].name != b.elements_[i].name) return false;
    return a.table_ == b.table_;
  }

  const std::vector<ColorId>& table() const { return table_; }

 private:
  void check_id(ColorId c) const {
    if (c.index() < 0 || c.index() >= size())
      throw MonoidError("element id " + std::to_string(c.index()) +
                        " out of range for monoid '" + name_ + "' of size " +
                        std::to_string(size()));
  }
  ColorId raw(int x, int y) const {
    return table_[static_cast<std::size_t>(x) * elements_.size() +
                  static_cast<std::size_t>(y)];
  }

  std::string name_;
  std::vector<ElementInfo> elements_;
  std::vector<ColorId> table_;
  ColorId one_;
  std::optional<ColorId> zero_;
};

namespace detail {

inline Rgb hue_rgb(double hue) {
  // Saturated hue wheel, hue in [0,1).  Used for default display colors.
  double h = hue * 6.0;
  int sector = static_cast<int>(h) % 6;
  double f = h - std::floor(h);
  auto b = [](double x) { return static_cast<std::uint8_t>(std::lround(255.0 * x)); };
  switch (sector) {
    case 0: return {255, b(f), 0};
    case 1: return {b(1 - f), 255, 0};
    case 2: return {0, 255, b(f)};
    case 3: return {0, b(1 - f), 255};
    case 4: return {b(f), 0, 255};
    default: return {255, 0, b(1 - f)};
  }
}

inline MonoidPtr finish(ColorMonoid m) {
  m.require_valid();
  return std::make_shared<const ColorMonoid>(std::move(m));
}

}  // namespace detail

/// Black and white with logical AND: {0, 1}.
inline MonoidPtr make_bw() {
  std::vector<ElementInfo> els = {{"0", {0, 0, 0}}, {"1", {255, 255, 255}}};
  std::vector<ColorId> t = {ColorId(0), ColorId(0), ColorId(0), ColorId(1)};
  return detail::finish(
      ColorMonoid("bw", std::move(els), std::move(t), ColorId(1), ColorId(0)));
}

/// Independent colors over arbitrary names: distinct non-trivial colors
/// stack to black, each color is idempotent, 1 is neutral and 0 absorbs.
inline MonoidPtr make_independent_colors(std::string name,
                                         std::vector<ElementInfo> colors) {
  const int k = static_cast<int>(colors.size());
  std::vector<ElementInfo> els;
  els.push_back({"0", {0, 0, 0}});
  for (auto& c : colors) els.push_back(std::move(c));
  els.push_back({"1", {255, 255, 255}});
  const int n = k + 2;
  std::vector<ColorId> t(static_cast<std::size_t>(n) * n, ColorId(0));
  auto at = [&](int x, int y) -> ColorId& { return t[static_cast<std::size_t>(x) * n + y]; };
  for (int x = 0; x < n; ++x) {
    at(x, n - 1) = ColorId(x);
    at(n - 1, x) = ColorId(x);
    at(x, x) = ColorId(x);
  }
  at(0, 0) = ColorId(0);
  at(0, n - 1) = ColorId(0);
  at(n - 1, 0) = ColorId(0);
  return detail::finish(ColorMonoid(std::move(name), std::move(els), std::move(t),
                                    ColorId(n - 1), ColorId(0)));
}

/// The Verheul-van Tilborg model: k mutually independent colors c1..ck.
inline MonoidPtr make_verheul_tilborg(int k) {
  if (k < 1) throw MonoidError("verheul-tilborg needs at least one color");
  std::vector<ElementInfo> colors;
  for (int i = 0; i < k; ++i)
    colors.push_back({"c" + std::to_string(i + 1),
                      detail::hue_rgb(static_cast<double>(i) / k)});
  return make_independent_colors("vt-" + std::to_string(k), std::move(colors));
}

/// The eight-color subtractive lattice {0, R, G, B, Y, M, C, 1}.
///
/// Each color is the set of CMY inks it lays down (white none, black all
/// three, R = M+Y and so on); stacking unions the ink sets, so the meet of
/// Y and M is R while any two of R, G, B meet at black.
inline MonoidPtr make_cmy_rgb_lattice() {
  struct E {
    const char* name;
    unsigned inks;  // bit 0 = C, bit 1 = M, bit 2 = Y
    Rgb rgb;
  };
  const std::array<E, 8> defs = {{{"0", 7, {0, 0, 0}},
                                  {"R", 6, {255, 0, 0}},
                                  {"G", 5, {0, 255, 0}},
                                  {"B", 3, {0, 0, 255}},
                                  {"Y", 4, {255, 255, 0}},
                                  {"M", 2, {255, 0, 255}},
                                  {"C", 1, {0, 255, 255}},
                                  {"1", 0, {255, 255, 255}}}};
  std::vector<ElementInfo> els;
  for (const auto& d : defs) els.push_back({d.name, d.rgb});
  auto by_inks = [&](unsigned inks) {
    for (int i = 0; i < 8; ++i)
      if (defs[static_cast<std::size_t>(i)].inks == inks) return ColorId(i);
    throw MonoidError("ink set unreachable");
  };
  std::vector<ColorId> t;
  t.reserve(64);
  for (const auto& x : defs)
    for (const auto& y : defs) t.push_back(by_inks(x.inks | y.inks));
  return detail::finish(ColorMonoid("cmy-rgb", std::move(els), std::move(t),
                                    ColorId(7), ColorId(0)));
}

/// A chain of k gray shades between black and white; stacking keeps the
/// darker shade (meet = min in the chain order).
inline MonoidPtr make_grayscale_chain(int k) {
  if (k < 0) throw MonoidError("grayscale chain needs k >= 0");
  const int n = k + 2;
  std::vector<ElementInfo> els;
  for (int i = 0; i < n; ++i) {
    auto level = static_cast<std::uint8_t>(std::lround(255.0 * i / (n - 1)));
    std::string nm = i == 0 ? "0" : i == n - 1 ? "1" : "g" + std::to_string(i);
    els.push_back({nm, {level, level, level}});
  }
  std::vector<ColorId> t;
  t.reserve(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t.push_back(ColorId(std::min(x, y)));
  return detail::finish(ColorMonoid("gray-" + std::to_string(k), std::move(els),
                                    std::move(t), ColorId(n - 1), ColorId(0)));
}

/// Restriction of `m` to a subset of its elements.  The subset must contain
/// 1 (and 0 when `m` has one) and be closed under stacking; the escaping
/// product is reported otherwise.  Element order follows the parent.
inline MonoidPtr make_submonoid(const MonoidPtr& m, std::vector<ColorId> subset,
                                std::string name = "") {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  auto contains = [&](ColorId c) {
    return std::binary_search(subset.begin(), subset.end(), c);
  };
  if (!contains(m->one()))
    throw MonoidError("submonoid of '" + m->name() + "' must contain 1");
  if (m->has_zero() && !contains(m->zero()))
    throw MonoidError("submonoid of '" + m->name() + "' must contain 0");
  for (ColorId x : subset)
    for (ColorId y : subset) {
      ColorId p = m->op(x, y);
      if (!contains(p))
        throw MonoidError("subset of '" + m->name() + "' is not closed: " +
                          m->name_of(x) + "*" + m->name_of(y) + " = " +
                          m->name_of(p) + " escapes it");
    }
  std::vector<ElementInfo> els;
  std::vector<int> new_id(static_cast<std::size_t>(m->size()), -1);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    new_id[static_cast<std::size_t>(subset[i].index())] = static_cast<int>(i);
    els.push_back({m->name_of(subset[i]), m->rgb_of(subset[i])});
  }
  std::vector<ColorId> t;
  t.reserve(subset.size() * subset.size());
  for (ColorId x : subset)
    for (ColorId y : subset)
      t.push_back(ColorId(new_id[static_cast<std::size_t>(m->op(x, y).index())]));
  if (name.empty()) name = m->name() + "-sub";
  std::optional<ColorId> zero;
  if (m->has_zero()) zero = ColorId(new_id[static_cast<std::size_t>(m->zero().index())]);
  return detail::finish(ColorMonoid(std::move(name), std::move(els), std::move(t),
                                    ColorId(new_id[static_cast<std::size_t>(m->one().index())]),
                                    zero));
}

inline MonoidPtr make_submonoid(const MonoidPtr& m,
                                const std::vector<std::string>& names,
                                std::string name = "") {
  std::vector<ColorId> subset;
  subset.reserve(names.size());
  for (const auto& nm : names) subset.push_back(m->require(nm));
  return make_submonoid(m, std::move(subset), std::move(name));
}

/// Builtin monoid lookup by name: "bw", "vt-<k>", "cmy-rgb", "gray-<k>",
/// plus the derived models used by the construction families
/// ("cmb-lattice", "rb-lattice", "cmy-independent", "cmb-independent").
inline MonoidPtr builtin_monoid(const std::string& spec) {
  auto suffix_int = [&](const std::string& prefix) -> std::optional<int> {
    if (spec.rfind(prefix, 0) != 0) return std::nullopt;
    try {
      std::size_t used = 0;
      int v = std::stoi(spec.substr(prefix.size()), &used);
      if (used != spec.size() - prefix.size()) return std::nullopt;
      return v;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  };
  if (spec == "bw") return make_bw();
  if (spec == "cmy-rgb") return make_cmy_rgb_lattice();
  if (auto k = suffix_int("vt-")) return make_verheul_tilborg(*k);
  if (auto k = suffix_int("gray-")) return make_grayscale_chain(*k);
  if (spec == "cmb-lattice")
    return make_submonoid(make_cmy_rgb_lattice(), {"0", "B", "M", "C", "1"},
                          "cmb-lattice");
  if (spec == "rb-lattice")
    return make_submonoid(make_cmy_rgb_lattice(), {"0", "R", "B", "1"}, "rb-lattice");
  if (spec == "cmy-independent")
    return make_independent_colors("cmy-independent", {{"Y", {255, 255, 0}},
                                                       {"M", {255, 0, 255}},
                                                       {"C", {0, 255, 255}}});
  if (spec == "cmb-independent")
    return make_independent_colors("cmb-independent", {{"C", {0, 255, 255}},
                                                       {"M", {255, 0, 255}},
                                                       {"B", {0, 0, 255}}});
  throw MonoidError("unknown builtin monoid '" + spec + "'");
}

}  // namespace monovcs

#endif  // MONOVCS_COLOR_MONOID_HPP
