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

/// Polynomials whose variables are the elements of a color monoid.
///
/// A basis polynomial is homogeneous of degree n with nonnegative integer
/// coefficients; each monomial stands for a block of columns of a basis
/// matrix (see basis.hpp).  General signed polynomials appear as
/// differences of basis polynomials, so the full ring structure is
/// implemented, together with:
///
///  * the formal derivative sum  delta = sum over every variable of d/dx,
///    which mirrors deleting one row of the expanded matrix: restricting an
///    n-row expansion to l rows is the same as applying delta n-l times;
///  * evaluation in the monoid ring (variables multiply through the monoid
///    operation), which yields the spectrum of the fully stacked matrix;
///  * positive/negative part splitting, used to turn difference
///    polynomials back into basis polynomials.
///
/// Coefficients are arbitrary-precision integers: repeated derivatives
/// multiply coefficients by factorial factors and must never overflow
/// silently.
///
/// Text syntax: variables are the monoid's element names, with `a` and `z`
/// standing for 1 (white) and 0 (black); juxtaposition multiplies, `^`
/// raises to an integer power, and parenthesized factors are allowed, so
/// "(m-a)*(c-z)*(a-z)^2" and "ma^2 + 2caz" both parse.

#ifndef MONOVCS_POLY_HPP
#define MONOVCS_POLY_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "monovcs/color_monoid.hpp"
#include "monovcs/error.hpp"

namespace monovcs {

using Int = boost::multiprecision::cpp_int;

/// A product of variables with positive integer exponents, kept as a sorted
/// (variable, exponent) list.  The empty monomial is the constant 1.
class Monomial {
 public:
  Monomial() = default;

  explicit Monomial(std::vector<std::pair<ColorId, int>> exps) : exps_(std::move(exps)) {
    std::sort(exps_.begin(), exps_.end());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i].second <= 0) throw PolyError("monomial exponents must be positive");
      if (i > 0 && exps_[i - 1].first == exps_[i].first)
        throw PolyError("duplicate variable in monomial");
    }
  }

  static Monomial variable(ColorId v, int exp = 1) {
    return Monomial({{v, exp}});
  }

  const std::vector<std::pair<ColorId, int>>& exponents() const { return exps_; }
  bool is_constant() const { return exps_.empty(); }

  int degree() const {
    int d = 0;
    for (const auto& [v, e] : exps_) d += e;
    return d;
  }

  int exponent_of(ColorId v) const {
    for (const auto& [w, e] : exps_)
      if (w == v) return e;
    return 0;
  }

  Monomial times(const Monomial& o) const {
    std::vector<std::pair<ColorId, int>> out;
    std::size_t i = 0, j = 0;
    while (i < exps_.size() || j < o.exps_.size()) {
      if (j == o.exps_.size() || (i < exps_.size() && exps_[i].first < o.exps_[j].first))
        out.push_back(exps_[i++]);
      else if (i == exps_.size() || o.exps_[j].first < exps_[i].first)
        out.push_back(o.exps_[j++]);
      else {
        out.emplace_back(exps_[i].first, exps_[i].second + o.exps_[j].second);
        ++i, ++j;
      }
    }
    Monomial m;
    m.exps_ = std::move(out);
    return m;
  }

  /// Derivative with respect to `v`: returns the lowered monomial, or
  /// nullopt (with factor 0) when `v` does not occur.
  std::optional<std::pair<Monomial, int>> lowered(ColorId v) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i].first == v) {
        Monomial m = *this;
        int e = m.exps_[i].second;
        if (e == 1)
          m.exps_.erase(m.exps_.begin() + static_cast<std::ptrdiff_t>(i));
        else
          m.exps_[i].second = e - 1;
        return std::make_pair(std::move(m), e);
      }
    return std::nullopt;
  }

  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<std::pair<ColorId, int>> exps_;
};

/// Spectrum of a fully stacked matrix: how many columns fold to each color.
struct StackSpectrum {
  MonoidPtr monoid;
  std::map<ColorId, Int> weights;  // zero weights are not stored

  Int total() const {
    Int t = 0;
    for (const auto& [c, w] : weights) t += w;
    return t;
  }

  friend bool operator==(const StackSpectrum& a, const StackSpectrum& b) {
    return *a.monoid == *b.monoid && a.weights == b.weights;
  }
};

class Poly;
inline std::string to_string(const Poly& p);

/// Sparse polynomial over a fixed color monoid's variable set.
class Poly {
 public:
  explicit Poly(MonoidPtr monoid) : monoid_(std::move(monoid)) {
    if (!monoid_) throw PolyError("polynomial needs an ambient monoid");
  }

  static Poly zero(MonoidPtr m) { return Poly(std::move(m)); }

  static Poly constant(MonoidPtr m, Int c) {
    Poly p(std::move(m));
    if (c != 0) p.terms_[Monomial()] = std::move(c);
    return p;
  }

  static Poly variable(MonoidPtr m, ColorId v, int exp = 1) {
    Poly p(std::move(m));
    p.monoid_->name_of(v);  // range check
    if (exp < 0) throw PolyError("negative exponent");
    if (exp == 0)
      p.terms_[Monomial()] = 1;
    else
      p.terms_[Monomial::variable(v, exp)] = 1;
    return p;
  }

  const MonoidPtr& monoid() const { return monoid_; }
  const std::map<Monomial, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Int coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
  }

  /// Sum of all coefficients; for a basis polynomial of degree n the full
  /// expansion has exactly n! times this many columns.
  Int coefficient_sum() const {
    Int s = 0;
    for (const auto& [m, c] : terms_) s += c;
    return s;
  }

  /// Total degree (maximum over monomials); nullopt for the zero
  /// polynomial.
  std::optional<int> degree() const {
    std::optional<int> d;
    for (const auto& [m, c] : terms_) d = std::max(d.value_or(0), m.degree());
    return d;
  }

  bool is_homogeneous() const {
    std::optional<int> d;
    for (const auto& [m, c] : terms_) {
      if (d && m.degree() != *d) return false;
      d = m.degree();
    }
    return true;
  }

  bool has_negative_coefficient() const {
    for (const auto& [m, c] : terms_)
      if (c < 0) return true;
    return false;
  }

  Poly& add_term(const Monomial& m, const Int& c) {
    for (const auto& [v, e] : m.exponents()) monoid_->name_of(v);  // range check
    if (c == 0) return *this;
    Int& slot = terms_[m];
    slot += c;
    if (slot == 0) terms_.erase(m);
    return *this;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    require_same_monoid(a, b);
    Poly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }

  friend Poly operator-(const Poly& a, const Poly& b) {
    require_same_monoid(a, b);
    Poly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
  }

  Poly operator-() const {
    Poly r(monoid_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    require_same_monoid(a, b);
    Poly r(a.monoid_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma.times(mb), ca * cb);
    return r;
  }

  friend Poly operator*(const Int& k, const Poly& p) {
    Poly r(p.monoid_);
    if (k == 0) return r;
    for (const auto& [m, c] : p.terms_) r.terms_[m] = k * c;
    return r;
  }
  friend Poly operator*(const Poly& p, const Int& k) { return k * p; }

  friend bool operator==(const Poly& a, const Poly& b) {
    return *a.monoid_ == *b.monoid_ && a.terms_ == b.terms_;
  }

  static void require_same_monoid(const Poly& a, const Poly& b) {
    if (a.monoid_ == b.monoid_) return;
    if (*a.monoid_ == *b.monoid_) return;
    throw DomainMismatchError("polynomials over different monoids ('" +
                              a.monoid_->name() + "' vs '" + b.monoid_->name() +
                              "') cannot be combined");
  }

 private:
  MonoidPtr monoid_;
  std::map<Monomial, Int> terms_;
};

inline Poly pow(const Poly& p, int e) {
  if (e < 0) throw PolyError("negative polynomial power");
  Poly r = Poly::constant(p.monoid(), 1);
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

/// Formal partial derivative with respect to one variable.
inline Poly partial(const Poly& p, ColorId v) {
  p.monoid()->name_of(v);  // range check
  Poly r(p.monoid());
  for (const auto& [m, c] : p.terms())
    if (auto low = m.lowered(v)) r.add_term(low->first, c * low->second);
  return r;
}

/// The row-deletion operator: the sum of partials over every variable of
/// the monoid.  Applying it n-l times to a degree-n basis polynomial gives
/// the polynomial of the matrix restricted to l rows.
inline Poly delta(const Poly& p) {
  Poly r(p.monoid());
  for (const auto& [m, c] : p.terms())
    for (const auto& [v, e] : m.exponents()) {
      auto low = m.lowered(v);
      r.add_term(low->first, c * low->second);
    }
  return r;
}

inline Poly delta_pow(const Poly& p, int e) {
  if (e < 0) throw PolyError("negative derivative order");
  Poly r = p;
  for (int i = 0; i < e; ++i) r = delta(r);
  return r;
}

/// Evaluates a basis polynomial in the monoid ring: every monomial's
/// variables are stacked through the monoid operation and its coefficient
/// is added to the resulting color's weight.  This is the spectrum of the
/// fully stacked basis matrix (up to the uniform expansion factor).
inline StackSpectrum eval_monoid_ring(const Poly& p) {
  StackSpectrum s;
  s.monoid = p.monoid();
  for (const auto& [m, c] : p.terms()) {
    if (c < 0)
      throw PolyError("not a basis polynomial: negative coefficient on a monomial");
    ColorId acc = s.monoid->one();
    for (const auto& [v, e] : m.exponents())
      for (int i = 0; i < e; ++i) acc = s.monoid->op(acc, v);
    Int& w = s.weights[acc];
    w += c;
    if (w == 0) s.weights.erase(acc);
  }
  return s;
}

/// Drops every monomial containing the black variable; this is evaluation
/// at z = 0 and exposes the recovering part of a basis polynomial.
inline Poly drop_black(const Poly& p) {
  ColorId z = p.monoid()->zero();  // throws when the monoid has no 0
  Poly r(p.monoid());
  for (const auto& [m, c] : p.terms())
    if (m.exponent_of(z) == 0) r.add_term(m, c);
  return r;
}

/// Splits into positive and negative parts: p = first - second, both with
/// nonnegative coefficients and disjoint monomial support.
inline std::pair<Poly, Poly> split_signs(const Poly& p) {
  Poly pos(p.monoid()), neg(p.monoid());
  for (const auto& [m, c] : p.terms()) {
    if (c > 0)
      pos.add_term(m, c);
    else
      neg.add_term(m, -c);
  }
  return {std::move(pos), std::move(neg)};
}

/// Monomial-wise maximum of coefficients (absent = 0).  With positive
/// parts as inputs this is the least basis polynomial dominating both.
inline Poly monomial_max(const Poly& a, const Poly& b) {
  Poly::require_same_monoid(a, b);
  Poly r = a;
  for (const auto& [m, c] : b.terms())
    if (c > r.coefficient(m)) r.add_term(m, c - r.coefficient(m));
  return r;
}

namespace detail {

// Display order of variables inside a printed monomial: the chromatic
// elements in id order, then a (white), then z (black).
inline int display_rank(const ColorMonoid& m, ColorId v) {
  if (v == m.one()) return m.size();
  if (m.has_zero() && v == m.zero()) return m.size() + 1;
  return v.index();
}

inline std::string display_name(const ColorMonoid& m, ColorId v) {
  // 'a' and 'z' abbreviate white and black unless those names are taken by
  // other elements.
  if (v == m.one()) {
    auto taken = m.find("a");
    if (!taken || *taken == v) return "a";
  }
  if (m.has_zero() && v == m.zero()) {
    auto taken = m.find("z");
    if (!taken || *taken == v) return "z";
  }
  const std::string& n = m.name_of(v);
  if (n.size() == 1 && std::isalpha(static_cast<unsigned char>(n[0])))
    return {static_cast<char>(std::tolower(static_cast<unsigned char>(n[0])))};
  return n;
}

inline std::vector<std::pair<int, int>> display_exponents(const ColorMonoid& mo,
                                                          const Monomial& m) {
  std::vector<std::pair<int, int>> v;  // (rank, exponent)
  for (const auto& [var, e] : m.exponents()) v.emplace_back(display_rank(mo, var), e);
  std::sort(v.begin(), v.end());
  return v;
}

// Descending graded-lexicographic order on display exponent vectors; ties
// cannot happen for distinct monomials.
inline bool display_less(const ColorMonoid& mo, const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  auto ea = display_exponents(mo, a), eb = display_exponents(mo, b);
  std::vector<int> va, vb;
  for (int r = 0; r <= mo.size() + 1; ++r) {
    int xa = 0, xb = 0;
    for (auto& [rank, e] : ea)
      if (rank == r) xa = e;
    for (auto& [rank, e] : eb)
      if (rank == r) xb = e;
    va.push_back(xa);
    vb.push_back(xb);
  }
  return va > vb;
}

inline void print_monomial(std::ostream& os, const ColorMonoid& mo, const Monomial& m,
                           const Int& coeff) {
  Int mag = coeff < 0 ? Int(-coeff) : coeff;
  if (mag != 1 || m.is_constant()) os << mag.str();
  std::vector<std::pair<ColorId, int>> vars(m.exponents());
  std::sort(vars.begin(), vars.end(), [&](const auto& x, const auto& y) {
    return display_rank(mo, x.first) < display_rank(mo, y.first);
  });
  for (const auto& [v, e] : vars) {
    os << display_name(mo, v);
    if (e >= 2) os << "^" << e;
  }
}

}  // namespace detail

/// Canonical expanded rendering, e.g. "mc + 2az - a^2".
inline std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  const ColorMonoid& mo = *p.monoid();
  std::vector<const Monomial*> order;
  for (const auto& [m, c] : p.terms()) order.push_back(&m);
  std::sort(order.begin(), order.end(), [&](const Monomial* a, const Monomial* b) {
    return detail::display_less(mo, *a, *b);
  });
  std::ostringstream os;
  bool first = true;
  for (const Monomial* m : order) {
    const Int& c = p.coefficient(*m);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    detail::print_monomial(os, mo, *m, c);
  }
  return os.str();
}

/// Spectrum rendering in the same variable syntax, e.g. "2r + 2z".
inline std::string to_string(const StackSpectrum& s) {
  if (s.weights.empty()) return "0";
  const ColorMonoid& mo = *s.monoid;
  std::vector<ColorId> order;
  for (const auto& [c, w] : s.weights) order.push_back(c);
  std::sort(order.begin(), order.end(), [&](ColorId a, ColorId b) {
    return detail::display_rank(mo, a) < detail::display_rank(mo, b);
  });
  std::ostringstream os;
  bool first = true;
  for (ColorId c : order) {
    if (!first) os << " + ";
    first = false;
    const Int& w = s.weights.at(c);
    if (w != 1) os << w.str();
    os << detail::display_name(mo, c);
  }
  return os.str();
}

namespace detail {

class PolyParser {
 public:
  PolyParser(MonoidPtr monoid, std::string text)
      : monoid_(std::move(monoid)), text_(std::move(text)) {
    // Variable tokens: exact element names (unless they start with a
    // digit), single-letter lowercase forms, and the a/z abbreviations.
    for (int i = 0; i < monoid_->size(); ++i) {
      const std::string& n = monoid_->name_of(ColorId(i));
      if (std::isdigit(static_cast<unsigned char>(n[0]))) continue;
      vars_[n] = ColorId(i);
    }
    for (int i = 0; i < monoid_->size(); ++i) {
      const std::string& n = monoid_->name_of(ColorId(i));
      if (n.size() == 1 && std::isalpha(static_cast<unsigned char>(n[0]))) {
        std::string low = {static_cast<char>(std::tolower(static_cast<unsigned char>(n[0])))};
        vars_.try_emplace(low, ColorId(i));
      }
    }
    vars_.try_emplace("a", monoid_->one());
    if (monoid_->has_zero()) vars_.try_emplace("z", monoid_->zero());
  }

  Poly parse() {
    Poly p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw PolyError("polynomial syntax error at offset " + std::to_string(pos_) +
                    ": " + msg);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Poly expression() {
    bool negative = false;
    skip_space();
    if (eat('+')) negative = false;
    else if (eat('-')) negative = true;
    Poly acc = term();
    if (negative) acc = -acc;
    while (true) {
      if (eat('+'))
        acc = acc + term();
      else if (eat('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  Poly term() {
    Poly acc = factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (c == '(' || std::isdigit(static_cast<unsigned char>(c)) ||
                 std::isalpha(static_cast<unsigned char>(c))) {
        acc = acc * factor();  // juxtaposition
      } else {
        return acc;
      }
    }
  }

  Poly factor() {
    skip_space();
    if (pos_ >= text_.size()) fail("expected a factor");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly::constant(monoid_, integer());
    if (c == '(') {
      ++pos_;
      Poly inner = expression();
      if (!eat(')')) fail("expected ')'");
      return power_suffix(std::move(inner));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      // Longest-match lookup against the variable tokens.
      std::string best;
      for (const auto& [name, id] : vars_)
        if (name.size() > best.size() && text_.compare(pos_, name.size(), name) == 0)
          best = name;
      if (best.empty()) fail("unknown variable");
      pos_ += best.size();
      return power_suffix(Poly::variable(monoid_, vars_.at(best)));
    }
    fail("expected a factor");
  }

  Poly power_suffix(Poly base) {
    if (eat('^')) {
      skip_space();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("expected an exponent after '^'");
      Int e = integer();
      if (e > 64) fail("exponent too large");
      return pow(base, e.convert_to<int>());
    }
    return base;
  }

  Int integer() {
    std::string digits;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      digits += text_[pos_++];
    return Int(digits);
  }

  MonoidPtr monoid_;
  std::string text_;
  std::size_t pos_ = 0;
  std::map<std::string, ColorId> vars_;
};

}  // namespace detail

inline Poly parse_poly(const MonoidPtr& monoid, const std::string& text) {
  return detail::PolyParser(monoid, text).parse();
}

}  // namespace monovcs

#endif  // MONOVCS_POLY_HPP
