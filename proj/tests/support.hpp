#ifndef MONOVCS_TESTS_SUPPORT_HPP
#define MONOVCS_TESTS_SUPPORT_HPP

// Shared helpers for the test suite: readable matrix literals, column
// multisets as name lists, and a seeded random polynomial generator for
// property tests.

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <monovcs/monovcs.hpp>

namespace monovcs::test {

// Matrix literal from rows of element names:
//   mat(m, {{"M", "C", "1", "0"},
//           {"C", "M", "0", "1"}})
inline BasisMatrix mat(const MonoidPtr& m,
                       const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty() || rows.front().empty()) throw Error("mat() needs a nonempty grid");
  std::vector<Column> cols(rows.front().size());
  for (const auto& row : rows) {
    if (row.size() != cols.size()) throw Error("mat() rows disagree on length");
    for (std::size_t c = 0; c < row.size(); ++c)
      cols[c].push_back(m->require(row[c]));
  }
  return BasisMatrix(m, static_cast<int>(rows.size()), cols);
}

// Column multiset as sorted name rows, for readable assertion diffs.
inline std::vector<std::vector<std::string>> column_names(const BasisMatrix& s) {
  std::vector<std::vector<std::string>> out;
  for (int c = 0; c < s.cols(); ++c) {
    std::vector<std::string> col;
    for (ColorId v : s.column(c)) col.push_back(s.monoid()->name_of(v));
    out.push_back(std::move(col));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::string> names_of(const MonoidPtr& m,
                                         const std::vector<ColorId>& ids) {
  std::vector<std::string> out;
  for (ColorId c : ids) out.push_back(m->name_of(c));
  return out;
}

inline std::vector<std::vector<std::string>> sorted_names(
    const MonoidPtr& m, const std::vector<Column>& cols) {
  std::vector<std::vector<std::string>> out;
  for (const Column& col : cols) out.push_back(names_of(m, col));
  std::sort(out.begin(), out.end());
  return out;
}

// Random homogeneous polynomial of the given degree in the first `vars`
// monoid elements, with positive coefficients.  Never returns zero.
inline Poly random_homogeneous(const MonoidPtr& m, int degree, int vars,
                               std::mt19937& gen) {
  std::uniform_int_distribution<int> var_pick(0, vars - 1);
  std::uniform_int_distribution<int> coeff_pick(1, 3);
  std::uniform_int_distribution<int> term_count(1, 4);
  Poly p = Poly::zero(m);
  int terms = term_count(gen);
  for (int t = 0; t < terms; ++t) {
    Poly term = Poly::constant(m, coeff_pick(gen));
    for (int d = 0; d < degree; ++d)
      term = term * Poly::variable(m, ColorId(var_pick(gen)));
    p = p + term;
  }
  return p;
}

}  // namespace monovcs::test

#endif  // MONOVCS_TESTS_SUPPORT_HPP
