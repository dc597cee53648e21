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

/// Threshold visual cryptography schemes and their verification.
///
/// A (t, n) scheme holds one basis matrix per shareable color.  It is
/// correct when
///
///  i)  security: for every subset A of fewer than t participants the
///      restricted matrices of all colors are equal as column multisets,
///      so any t-1 shares reveal nothing about the secret color;
///  ii) recovery: for every subset A of exactly t participants the
///      restricted matrices split, up to column order, into C_j | Z_j | R
///      where every column of C_j stacks to color j, every column of Z_j
///      contains a literal 0 (and hence stacks to black), and the residue
///      R contains no 0 entry and is one common multiset shared by all
///      colors.  The split is existential: it holds as soon as some
///      choice of R works.
///
/// Verification is exhaustive over participant subsets; the schemes in
/// scope are desk-sized (n <= 8), which keeps even the largest check well
/// under a second.

#ifndef MONOVCS_SCHEME_HPP
#define MONOVCS_SCHEME_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "monovcs/basis.hpp"
#include "monovcs/color_monoid.hpp"
#include "monovcs/error.hpp"
#include "monovcs/poly.hpp"

namespace monovcs {

/// The C | Z | R split of a restricted matrix against a target color.
/// Z takes every column with a literal 0 entry; of the rest, C takes the
/// columns stacking to the target and R the remainder.
struct Decomposition {
  std::vector<Column> recovering;  // C
  std::vector<Column> zeroed;      // Z
  std::vector<Column> residual;    // R
};

inline Decomposition decompose(const BasisMatrix& restricted, ColorId target) {
  const ColorMonoid& m = *restricted.monoid();
  ColorId zero = m.zero();
  Decomposition d;
  for (int c = 0; c < restricted.cols(); ++c) {
    Column col = restricted.column(c);
    if (std::find(col.begin(), col.end(), zero) != col.end())
      d.zeroed.push_back(std::move(col));
    else if (m.op_fold(col) == target)
      d.recovering.push_back(std::move(col));
    else
      d.residual.push_back(std::move(col));
  }
  return d;
}

struct VerificationFailure {
  std::string property;   // "security" or "recovery"
  std::vector<int> rows;  // the participant subset, 0-based
  std::string detail;
};

struct VerificationReport {
  bool security_ok = false;
  bool recovery_ok = false;
  int pixel_expansion = 0;
  int contrast = 0;  // min recovering columns over all colors and t-subsets
  std::vector<VerificationFailure> failures;

  bool passed() const { return security_ok && recovery_ok; }
};

class Scheme {
 public:
  Scheme(std::string name, MonoidPtr monoid, int n, int t, std::vector<ColorId> colors,
         std::vector<BasisMatrix> matrices,
         std::optional<std::vector<Poly>> polys = std::nullopt,
         ExpansionStrategy strategy = ExpansionStrategy::FullSymmetric)
      : name_(std::move(name)),
        monoid_(std::move(monoid)),
        n_(n),
        t_(t),
        colors_(std::move(colors)),
        matrices_(std::move(matrices)),
        polys_(std::move(polys)),
        strategy_(strategy) {
    if (!monoid_) throw SchemeError("scheme needs a monoid");
    if (!monoid_->has_zero())
      throw SchemeError("scheme monoid '" + monoid_->name() +
                        "' has no 0 element; verification is undefined without one");
    if (n_ < 1) throw SchemeError("scheme needs n >= 1");
    if (t_ < 1 || t_ > n_)
      throw SchemeError("threshold t = " + std::to_string(t_) +
                        " outside 1.." + std::to_string(n_));
    if (colors_.empty()) throw SchemeError("scheme needs at least one color");
    if (matrices_.size() != colors_.size())
      throw SchemeError("scheme needs exactly one basis matrix per color");
    for (std::size_t i = 0; i < colors_.size(); ++i) {
      monoid_->name_of(colors_[i]);  // range check
      for (std::size_t j = i + 1; j < colors_.size(); ++j)
        if (colors_[i] == colors_[j])
          throw SchemeError("duplicate scheme color '" + monoid_->name_of(colors_[i]) + "'");
    }
    for (const auto& mat : matrices_) {
      if (!(*mat.monoid() == *monoid_))
        throw SchemeError("basis matrix monoid differs from the scheme monoid");
      if (mat.rows() != n_)
        throw SchemeError("basis matrix has " + std::to_string(mat.rows()) +
                          " rows, scheme has n = " + std::to_string(n_));
      if (mat.cols() != matrices_.front().cols())
        throw SchemeError("basis matrices disagree on pixel expansion (" +
                          std::to_string(mat.cols()) + " vs " +
                          std::to_string(matrices_.front().cols()) + ")");
    }
    if (polys_) {
      if (polys_->size() != colors_.size())
        throw SchemeError("scheme needs exactly one polynomial per color");
      for (std::size_t j = 0; j < polys_->size(); ++j) {
        BasisMatrix expanded = expand((*polys_)[j], n_, strategy_);
        if (!columns_equal(expanded, matrices_[j]))
          throw SchemeError("polynomial for color '" + monoid_->name_of(colors_[j]) +
                            "' does not expand to its basis matrix");
      }
    }
  }

  const std::string& name() const { return name_; }
  const MonoidPtr& monoid() const { return monoid_; }
  int participants() const { return n_; }
  int threshold() const { return t_; }
  int pixel_expansion() const { return matrices_.front().cols(); }
  const std::vector<ColorId>& colors() const { return colors_; }
  const std::vector<BasisMatrix>& matrices() const { return matrices_; }
  const std::optional<std::vector<Poly>>& polys() const { return polys_; }
  ExpansionStrategy strategy() const { return strategy_; }

  int color_index(ColorId c) const {
    for (std::size_t i = 0; i < colors_.size(); ++i)
      if (colors_[i] == c) return static_cast<int>(i);
    throw SchemeError("color '" + monoid_->name_of(c) + "' is not shared by this scheme");
  }

  const BasisMatrix& matrix_for(ColorId c) const {
    return matrices_[static_cast<std::size_t>(color_index(c))];
  }

  /// Returns a copy with a single basis matrix entry replaced; tamper
  /// helper for tests and demos.
  Scheme with_entry(int color_idx, int r, int c, ColorId v) const {
    if (color_idx < 0 || color_idx >= static_cast<int>(matrices_.size()))
      throw SchemeError("color index out of range");
    Scheme s = *this;
    s.polys_.reset();  // the tampered matrix no longer matches any polynomial
    s.matrices_[static_cast<std::size_t>(color_idx)] =
        s.matrices_[static_cast<std::size_t>(color_idx)].with_entry(r, c, v);
    return s;
  }

 private:
  std::string name_;
  MonoidPtr monoid_;
  int n_;
  int t_;
  std::vector<ColorId> colors_;
  std::vector<BasisMatrix> matrices_;
  std::optional<std::vector<Poly>> polys_;
  ExpansionStrategy strategy_;
};

namespace detail {

inline void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  if (k == 0 || k > n) return;
  while (true) {
    f(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

inline std::string subset_names(const std::vector<int>& rows) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < rows.size(); ++i) os << (i ? "," : "") << rows[i] + 1;
  os << "}";
  return os.str();
}

inline std::string column_names(const ColorMonoid& m, const Column& col) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < col.size(); ++i) os << (i ? " " : "") << m.name_of(col[i]);
  os << "]";
  return os.str();
}

}  // namespace detail

/// Property i: every restriction to t-1 participants looks identical
/// across all colors (smaller subsets follow by deleting rows).  When
/// polynomials are attached, the equivalent calculus-side condition is
/// also checked: the (n-t+1)-fold delta derivatives all coincide.
inline bool verify_security(const Scheme& s, std::vector<VerificationFailure>* failures = nullptr) {
  bool ok = true;
  auto note = [&](std::vector<int> rows, std::string detail) {
    ok = false;
    if (failures) failures->push_back({"security", std::move(rows), std::move(detail)});
  };
  if (s.threshold() >= 2) {
    detail::for_each_subset(s.participants(), s.threshold() - 1,
                            [&](const std::vector<int>& rows) {
      BasisMatrix first = restrict(s.matrices().front(), rows);
      for (std::size_t j = 1; j < s.matrices().size(); ++j) {
        if (!columns_equal(first, restrict(s.matrices()[j], rows)))
          note(rows, "restrictions for colors '" +
                         s.monoid()->name_of(s.colors().front()) + "' and '" +
                         s.monoid()->name_of(s.colors()[j]) + "' differ on rows " +
                         detail::subset_names(rows));
      }
    });
  }
  if (s.polys()) {
    int e = s.participants() - s.threshold() + 1;
    Poly first = delta_pow(s.polys()->front(), e);
    for (std::size_t j = 1; j < s.polys()->size(); ++j) {
      Poly dj = delta_pow((*s.polys())[j], e);
      if (!(dj == first))
        note({}, "delta^" + std::to_string(e) + " of the polynomials for '" +
                     s.monoid()->name_of(s.colors().front()) + "' and '" +
                     s.monoid()->name_of(s.colors()[j]) + "' differ: " +
                     to_string(first) + " vs " + to_string(dj));
    }
  }
  return ok;
}

/// Property ii over every t-subset.  Returns the contrast (minimum number
/// of recovering columns) through `contrast_out` when recovery holds.
///
/// The common residue R is found, not guessed: a 0-free column must sit
/// in R at least as often as some color fails to stack it to its target
/// (those copies fit nowhere else) and can sit there at most as often as
/// it occurs in every color.  Recovery holds exactly when the lower
/// bounds stay under the upper bounds; the minimal R then maximizes all
/// |C_j| simultaneously, which is what the contrast reports.
///
/// A target of 0 is also recovered by columns with a literal 0 entry:
/// their product is 0, so they qualify for C_j.
inline bool verify_recovery(const Scheme& s, int* contrast_out = nullptr,
                            std::vector<VerificationFailure>* failures = nullptr) {
  bool ok = true;
  long contrast = 0;
  bool have_contrast = false;
  auto note = [&](std::vector<int> rows, std::string detail) {
    ok = false;
    if (failures) failures->push_back({"recovery", std::move(rows), std::move(detail)});
  };
  const ColorMonoid& m = *s.monoid();
  const ColorId zero = m.zero();
  const std::size_t k = s.colors().size();

  detail::for_each_subset(s.participants(), s.threshold(), [&](const std::vector<int>& rows) {
    struct Counts {
      ColorId fold{0};
      std::vector<long> per_color;  // occurrences in each color's restriction
      long in_residue = 0;
    };
    std::map<Column, Counts> zero_free;
    std::vector<long> zeroed(k, 0);  // columns with a literal 0, per color

    for (std::size_t j = 0; j < k; ++j) {
      BasisMatrix restricted = restrict(s.matrices()[j], rows);
      for (int c = 0; c < restricted.cols(); ++c) {
        Column col = restricted.column(c);
        if (std::find(col.begin(), col.end(), zero) != col.end()) {
          ++zeroed[j];
          continue;
        }
        auto [it, fresh] = zero_free.try_emplace(std::move(col));
        if (fresh) {
          it->second.fold = m.op_fold(it->first);
          it->second.per_color.assign(k, 0);
        }
        ++it->second.per_color[j];
      }
    }

    for (auto& [col, counts] : zero_free) {
      long need = 0, cap = counts.per_color[0];
      std::size_t need_j = 0, cap_j = 0;
      for (std::size_t j = 0; j < k; ++j) {
        const long a = counts.per_color[j];
        const long forced = counts.fold == s.colors()[j] ? 0 : a;
        if (forced > need) {
          need = forced;
          need_j = j;
        }
        if (a < cap) {
          cap = a;
          cap_j = j;
        }
      }
      if (need > cap)
        note(rows, "column " + detail::column_names(m, col) + " must appear in the residue " +
                       std::to_string(need) + " times for color '" +
                       m.name_of(s.colors()[need_j]) + "' but occurs only " +
                       std::to_string(cap) + " times for color '" +
                       m.name_of(s.colors()[cap_j]) + "' on rows " + detail::subset_names(rows));
      counts.in_residue = std::min(need, cap);
    }

    for (std::size_t j = 0; j < k; ++j) {
      long recovered = s.colors()[j] == zero ? zeroed[j] : 0;
      for (const auto& [col, counts] : zero_free)
        if (counts.fold == s.colors()[j])
          recovered += counts.per_color[j] - counts.in_residue;
      if (recovered == 0)
        note(rows, "no column recovers color '" + m.name_of(s.colors()[j]) + "' on rows " +
                       detail::subset_names(rows));
      contrast = have_contrast ? std::min(contrast, recovered) : recovered;
      have_contrast = true;
    }
  });
  if (contrast_out) *contrast_out = static_cast<int>(ok && have_contrast ? contrast : 0);
  return ok;
}

inline VerificationReport verify(const Scheme& s) {
  VerificationReport r;
  r.pixel_expansion = s.pixel_expansion();
  r.security_ok = verify_security(s, &r.failures);
  r.recovery_ok = verify_recovery(s, &r.contrast, &r.failures);
  return r;
}

/// Stacks the rows in `rows` (repeats allowed, for idempotence checks) of
/// the basis matrix for `color`; one entry per column.
inline std::vector<ColorId> stack_rows(const Scheme& s, ColorId color,
                                       const std::vector<int>& rows) {
  return column_products(restrict(s.matrix_for(color), rows));
}

inline std::string to_string(const Scheme& s, const VerificationReport& r) {
  std::ostringstream os;
  os << "scheme: " << (s.name().empty() ? std::string("(unnamed)") : s.name()) << "\n"
     << "monoid: " << s.monoid()->name() << " (" << s.monoid()->size() << " elements)\n"
     << "participants: n = " << s.participants() << ", threshold: t = " << s.threshold()
     << "\n"
     << "colors:";
  for (ColorId c : s.colors()) os << " " << s.monoid()->name_of(c);
  os << "\npixel expansion: q = " << r.pixel_expansion << "\n"
     << "security: " << (r.security_ok ? "PASS" : "FAIL") << "\n"
     << "recovery: " << (r.recovery_ok ? "PASS" : "FAIL");
  if (r.recovery_ok) os << " (contrast " << r.contrast << ")";
  os << "\n";
  for (const auto& f : r.failures) os << "  [" << f.property << "] " << f.detail << "\n";
  return os.str();
}

}  // namespace monovcs

#endif  // MONOVCS_SCHEME_HPP
