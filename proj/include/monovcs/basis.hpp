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

/// Basis matrices and their polynomial encoding.
///
/// A basis matrix is an n x q matrix of colors: n rows for the
/// participants, q columns for the subpixels a secret pixel expands into.
/// A homogeneous degree-n basis polynomial encodes one: the monomial
/// u * x1...xn contributes u copies of every ordered arrangement of the
/// column (x1,...,xn), i.e. u * n! columns in total (repeated variables
/// produce literally repeated columns).  The gcd-reduced expansion divides
/// all column multiplicities by their common gcd, shrinking q without
/// changing any of the scheme properties.
///
/// Matrices are compared as column multisets throughout; column order is
/// canonical (lexicographic) but never meaningful.

#ifndef MONOVCS_BASIS_HPP
#define MONOVCS_BASIS_HPP

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "monovcs/color_monoid.hpp"
#include "monovcs/error.hpp"
#include "monovcs/poly.hpp"

namespace monovcs {

using Column = std::vector<ColorId>;

enum class ExpansionStrategy { FullSymmetric, GcdReduced };

inline std::string to_string(ExpansionStrategy s) {
  return s == ExpansionStrategy::FullSymmetric ? "full" : "gcd-reduced";
}

inline ExpansionStrategy parse_strategy(const std::string& s) {
  if (s == "full") return ExpansionStrategy::FullSymmetric;
  if (s == "gcd-reduced") return ExpansionStrategy::GcdReduced;
  throw IoError("unknown expansion strategy '" + s + "'");
}

class BasisMatrix {
 public:
  BasisMatrix(MonoidPtr monoid, int rows, std::vector<Column> columns)
      : monoid_(std::move(monoid)), rows_(rows), cols_(static_cast<int>(columns.size())) {
    if (!monoid_) throw Error("basis matrix needs an ambient monoid");
    if (rows_ < 1) throw Error("basis matrix needs at least one row");
    if (cols_ < 1) throw Error("basis matrix needs at least one column");
    entries_.resize(static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_));
    for (int c = 0; c < cols_; ++c) {
      if (static_cast<int>(columns[static_cast<std::size_t>(c)].size()) != rows_)
        throw Error("ragged basis matrix column");
      for (int r = 0; r < rows_; ++r) {
        ColorId v = columns[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
        monoid_->name_of(v);  // range check
        at(r, c) = v;
      }
    }
  }

  const MonoidPtr& monoid() const { return monoid_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  ColorId entry(int r, int c) const {
    bounds(r, c);
    return entries_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                    static_cast<std::size_t>(c)];
  }

  /// Replaces one entry; used by tamper tests and nowhere else.
  BasisMatrix with_entry(int r, int c, ColorId v) const {
    bounds(r, c);
    monoid_->name_of(v);
    BasisMatrix m = *this;
    m.at(r, c) = v;
    return m;
  }

  Column column(int c) const {
    Column col(static_cast<std::size_t>(rows_));
    for (int r = 0; r < rows_; ++r) col[static_cast<std::size_t>(r)] = entry(r, c);
    return col;
  }

  friend bool operator==(const BasisMatrix& a, const BasisMatrix& b) {
    return *a.monoid_ == *b.monoid_ && a.rows_ == b.rows_ && a.entries_ == b.entries_;
  }

 private:
  void bounds(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
      throw Error("basis matrix index out of range");
  }
  ColorId& at(int r, int c) {
    return entries_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                    static_cast<std::size_t>(c)];
  }

  MonoidPtr monoid_;
  int rows_;
  int cols_;
  std::vector<ColorId> entries_;  // row-major
};

namespace detail {

inline Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace detail

/// Expands a basis polynomial into its matrix.  The polynomial must be
/// nonzero, homogeneous of degree `n` and free of negative coefficients.
inline BasisMatrix expand(const Poly& p, int n,
                          ExpansionStrategy strategy = ExpansionStrategy::FullSymmetric) {
  if (n < 1) throw ExpansionError("expansion needs n >= 1");
  if (p.is_zero()) throw ExpansionError("cannot expand the zero polynomial");
  if (!p.is_homogeneous() || p.degree() != n) {
    std::ostringstream os;
    os << "cannot expand '" << to_string(p) << "': not homogeneous of degree " << n;
    throw ExpansionError(os.str());
  }
  if (p.has_negative_coefficient())
    throw ExpansionError("cannot expand '" + to_string(p) +
                         "': negative coefficient (not a basis polynomial)");

  // Column multiset: each distinct arrangement of a monomial's variable
  // word appears with multiplicity u * (product of exponent factorials),
  // which sums to the u * n! ordered sequences of the definition.
  std::map<Column, Int> counts;
  for (const auto& [m, u] : p.terms()) {
    Column word;
    Int repeat = u;
    for (const auto& [v, e] : m.exponents()) {
      word.insert(word.end(), static_cast<std::size_t>(e), v);
      repeat *= detail::factorial(e);
    }
    // word is sorted (exponent lists are id-sorted), so next_permutation
    // visits every distinct arrangement exactly once.
    Column arr = word;
    do {
      counts[arr] += repeat;
    } while (std::next_permutation(arr.begin(), arr.end()));
  }

  if (strategy == ExpansionStrategy::GcdReduced) {
    Int g = 0;
    for (const auto& [col, c] : counts) g = boost::multiprecision::gcd(g, c);
    for (auto& [col, c] : counts) c /= g;
  }

  Int total = 0;
  for (const auto& [col, c] : counts) total += c;
  if (total > 1000000)
    throw ExpansionError("pixel expansion " + total.str() + " is unreasonably large");

  std::vector<Column> columns;
  columns.reserve(total.convert_to<std::size_t>());
  for (const auto& [col, c] : counts)
    for (Int i = 0; i < c; ++i) columns.push_back(col);
  return BasisMatrix(p.monoid(), n, std::move(columns));
}

/// Keeps the given rows (0-based, repeats allowed) of every column.
inline BasisMatrix restrict(const BasisMatrix& s, const std::vector<int>& rows) {
  if (rows.empty()) throw Error("restriction needs at least one row");
  for (int r : rows)
    if (r < 0 || r >= s.rows())
      throw Error("restriction row " + std::to_string(r) + " out of range for " +
                  std::to_string(s.rows()) + " rows");
  std::vector<Column> columns;
  columns.reserve(static_cast<std::size_t>(s.cols()));
  for (int c = 0; c < s.cols(); ++c) {
    Column col;
    col.reserve(rows.size());
    for (int r : rows) col.push_back(s.entry(r, c));
    columns.push_back(std::move(col));
  }
  return BasisMatrix(s.monoid(), static_cast<int>(rows.size()), std::move(columns));
}

/// The columns as a canonically sorted multiset.
inline std::vector<Column> column_multiset(const BasisMatrix& s) {
  std::vector<Column> cols;
  cols.reserve(static_cast<std::size_t>(s.cols()));
  for (int c = 0; c < s.cols(); ++c) cols.push_back(s.column(c));
  std::sort(cols.begin(), cols.end());
  return cols;
}

/// Column-multiset equality.  Requires equal row counts (comparing
/// restrictions of different arity is a usage bug); differing q is an
/// honest "false".
inline bool columns_equal(const BasisMatrix& a, const BasisMatrix& b) {
  if (!(*a.monoid() == *b.monoid()))
    throw DomainMismatchError("comparing matrices over different monoids");
  if (a.rows() != b.rows())
    throw Error("comparing matrices with different row counts (" +
                std::to_string(a.rows()) + " vs " + std::to_string(b.rows()) + ")");
  if (a.cols() != b.cols()) return false;
  return column_multiset(a) == column_multiset(b);
}

/// Stacks every column through the monoid: the visible result of
/// superimposing all rows of the matrix.
inline std::vector<ColorId> column_products(const BasisMatrix& s) {
  std::vector<ColorId> out;
  out.reserve(static_cast<std::size_t>(s.cols()));
  for (int c = 0; c < s.cols(); ++c) out.push_back(s.monoid()->op_fold(s.column(c)));
  return out;
}

/// Text format: a "n q monoid-name" header line, then n rows of
/// space-separated element names.
inline std::string to_text(const BasisMatrix& s) {
  std::ostringstream os;
  os << s.rows() << " " << s.cols() << " " << s.monoid()->name() << "\n";
  for (int r = 0; r < s.rows(); ++r) {
    for (int c = 0; c < s.cols(); ++c) {
      if (c) os << " ";
      os << s.monoid()->name_of(s.entry(r, c));
    }
    os << "\n";
  }
  return os.str();
}

inline BasisMatrix matrix_from_text(const MonoidPtr& monoid, const std::string& text) {
  std::istringstream is(text);
  int n = 0, q = 0;
  std::string monoid_name;
  if (!(is >> n >> q >> monoid_name))
    throw IoError("basis matrix text needs a 'n q monoid-name' header");
  if (n < 1 || q < 1) throw IoError("basis matrix header has non-positive dimensions");
  std::vector<Column> columns(static_cast<std::size_t>(q), Column(static_cast<std::size_t>(n)));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < q; ++c) {
      std::string name;
      if (!(is >> name))
        throw IoError("basis matrix text ends before row " + std::to_string(r + 1) +
                      " is complete");
      auto id = monoid->find(name);
      if (!id)
        throw IoError("basis matrix entry '" + name + "' is not an element of monoid '" +
                      monoid->name() + "'");
      columns[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)] = *id;
    }
  std::string extra;
  if (is >> extra) throw IoError("trailing content after basis matrix rows: '" + extra + "'");
  return BasisMatrix(monoid, n, std::move(columns));
}

}  // namespace monovcs

#endif  // MONOVCS_BASIS_HPP
