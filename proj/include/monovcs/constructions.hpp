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

/// Scheme construction from difference polynomials.
///
/// The construction recipe: pick one difference polynomial g_i per
/// non-reference color, each homogeneous of degree n with vanishing
/// (n-t+1)-fold delta derivative (that is the security condition: a
/// restriction to t-1 rows applies delta exactly n-t+1 times, so equal
/// derivatives mean indistinguishable restrictions).  The reference basis
/// polynomial is the monomial-wise maximum of the positive parts, which
/// makes every f_i = f_ref - g_i coefficient-nonnegative, and all the f's
/// share the same derivative by construction.
///
/// The named families bundle known-good difference polynomials for
/// (n,n), (n-1,n), (2,n) and (3,n) thresholds over independent colors,
/// an (n,n) family over the chained monoid where C*M = B, and the two
/// four-color (2,2) variants that illustrate how a richer monoid shrinks
/// the pixel expansion (q = 6 against q = 8 for independent colors).

#ifndef MONOVCS_CONSTRUCTIONS_HPP
#define MONOVCS_CONSTRUCTIONS_HPP

#include <string>
#include <utility>
#include <vector>

#include "monovcs/basis.hpp"
#include "monovcs/color_monoid.hpp"
#include "monovcs/error.hpp"
#include "monovcs/poly.hpp"
#include "monovcs/scheme.hpp"

namespace monovcs {

/// Order of delta that must vanish for a (t, n) threshold: restricting to
/// t-1 of n rows deletes n-t+1 rows.
inline int security_exponent(int t, int n) {
  if (t < 2 || t > n)
    throw ConstructionError("security exponent needs 2 <= t <= n, got t = " +
                            std::to_string(t) + ", n = " + std::to_string(n));
  return n - t + 1;
}

/// Turns difference polynomials g_i into basis polynomials
/// [f_ref, f_ref - g_1, ..., f_ref - g_r] with f_ref the monomial-wise
/// maximum of the positive parts.  Every g must be homogeneous of degree n
/// with delta^(n-t+1) g = 0; the outputs are then nonnegative, homogeneous
/// of degree n, and share a common delta^(n-t+1).
inline std::vector<Poly> derive_basis_from_differences(const std::vector<Poly>& gs, int t,
                                                       int n) {
  if (gs.empty()) throw ConstructionError("need at least one difference polynomial");
  int e = security_exponent(t, n);
  for (std::size_t i = 0; i < gs.size(); ++i) {
    const Poly& g = gs[i];
    if (!g.is_homogeneous() || (!g.is_zero() && g.degree() != n))
      throw ConstructionError("difference polynomial #" + std::to_string(i + 1) + " ('" +
                              to_string(g) + "') is not homogeneous of degree " +
                              std::to_string(n));
    Poly d = delta_pow(g, e);
    if (!d.is_zero())
      throw ConstructionError("difference polynomial #" + std::to_string(i + 1) + " ('" +
                              to_string(g) + "') violates the security condition: delta^" +
                              std::to_string(e) + " = " + to_string(d));
  }
  Poly f_ref(gs.front().monoid());
  for (const Poly& g : gs) f_ref = monomial_max(f_ref, split_signs(g).first);
  std::vector<Poly> fs;
  fs.reserve(gs.size() + 1);
  fs.push_back(f_ref);
  for (const Poly& g : gs) fs.push_back(f_ref - g);
  return fs;
}

enum class Family {
  NN,                    // (n, n) over independent C, Y, M
  N1N,                   // (n-1, n) over independent C, Y, M
  TwoN,                  // (2, n) over independent C, Y, M, gcd-reduced
  ThreeN,                // (3, n) over independent C, Y, M
  PropNN,                // (n, n) over {0, C, M, B, 1} with C*M = B
  Example22Independent,  // (2, 2), four colors, independent C, M, B
  Example22Monoid,       // (2, 2), four colors, C*M = B
};

inline std::string to_string(Family f) {
  switch (f) {
    case Family::NN: return "nn";
    case Family::N1N: return "n1n";
    case Family::TwoN: return "two_n";
    case Family::ThreeN: return "three_n";
    case Family::PropNN: return "prop_nn";
    case Family::Example22Independent: return "example22_independent";
    case Family::Example22Monoid: return "example22_monoid";
  }
  throw ConstructionError("unreachable family");
}

inline Family parse_family(const std::string& s) {
  for (Family f : {Family::NN, Family::N1N, Family::TwoN, Family::ThreeN, Family::PropNN,
                   Family::Example22Independent, Family::Example22Monoid})
    if (to_string(f) == s) return f;
  throw ConstructionError("unknown construction family '" + s + "'");
}

inline std::vector<std::string> family_names() {
  return {"nn", "n1n", "two_n", "three_n", "prop_nn", "example22_independent",
          "example22_monoid"};
}

struct FamilyParams {
  Family family;
  int n;
};

/// A family instance before expansion: the ambient monoid, the shared
/// colors (reference color first), the difference polynomials and the
/// threshold/strategy the scheme is meant to use.
struct FamilyDefinition {
  std::string name;
  MonoidPtr monoid;
  int n = 0;
  int t = 0;
  std::vector<ColorId> colors;
  std::vector<Poly> gs;
  ExpansionStrategy strategy = ExpansionStrategy::FullSymmetric;
};

inline FamilyDefinition family_definition(FamilyParams params) {
  const int n = params.n;
  if (n < 2) throw ConstructionError("construction families need n >= 2");
  FamilyDefinition def;
  def.name = to_string(params.family) + "-" + std::to_string(n);
  def.n = n;

  auto independent_cym = [&]() {
    def.monoid = builtin_monoid("cmy-independent");
    def.colors = {def.monoid->require("M"), def.monoid->require("C"),
                  def.monoid->require("Y")};
  };
  auto v = [&](const char* name) { return parse_poly(def.monoid, name); };

  switch (params.family) {
    case Family::NN: {
      independent_cym();
      def.t = n;
      Poly az = v("a - z");
      def.gs = {v("m - c") * pow(az, n - 1), v("m - y") * pow(az, n - 1)};
      break;
    }
    case Family::N1N: {
      if (n < 3) throw ConstructionError("family n1n needs n >= 3");
      independent_cym();
      def.t = n - 1;
      Poly core = v("a") * pow(v("a - z"), n - 2);
      def.gs = {v("m - c") * core, v("m - y") * core};
      break;
    }
    case Family::TwoN: {
      independent_cym();
      def.t = 2;
      def.strategy = ExpansionStrategy::GcdReduced;
      Poly core = pow(v("a"), n - 1) - pow(v("z"), n - 1);
      def.gs = {v("m - c") * core, v("m - y") * core};
      break;
    }
    case Family::ThreeN: {
      if (n < 3) throw ConstructionError("family three_n needs n >= 3");
      independent_cym();
      def.t = 3;
      Poly core = Int(n - 2) * pow(v("a"), n - 1) -
                  Int(n - 1) * (pow(v("a"), n - 2) * v("z")) + pow(v("z"), n - 1);
      def.gs = {v("m - c") * core, v("m - y") * core};
      break;
    }
    case Family::PropNN: {
      def.monoid = builtin_monoid("cmb-lattice");
      def.colors = {def.monoid->require("B"), def.monoid->require("C"),
                    def.monoid->require("M")};
      def.t = n;
      Poly az = pow(v("a - z"), n - 2);
      def.gs = {v("(m - a)(c - z)") * az, v("(m - z)(c - a)") * az};
      break;
    }
    case Family::Example22Independent: {
      if (n != 2)
        throw ConstructionError("family example22_independent is a (2,2) scheme");
      def.monoid = builtin_monoid("cmb-independent");
      def.colors = {def.monoid->require("M"), def.monoid->require("C"),
                    def.monoid->require("B"), def.monoid->one()};
      def.t = 2;
      def.gs = {v("(m - c)(a - z)"), v("(m - b)(a - z)"), v("(m - a)(a - z)")};
      break;
    }
    case Family::Example22Monoid: {
      if (n != 2) throw ConstructionError("family example22_monoid is a (2,2) scheme");
      def.monoid = builtin_monoid("cmb-lattice");
      def.colors = {def.monoid->require("B"), def.monoid->require("C"),
                    def.monoid->require("M"), def.monoid->one()};
      def.t = 2;
      def.gs = {v("mc + az - mz - ca"), v("mc + az - cz - ma"),
                v("mc + 2az - mz - cz - a^2")};
      break;
    }
  }
  return def;
}

/// Builds and verifies a family instance.  A verification failure here is
/// a bug in the construction, not bad user input, and throws.
inline Scheme build(FamilyParams params) {
  FamilyDefinition def = family_definition(params);
  std::vector<Poly> fs = derive_basis_from_differences(def.gs, def.t, def.n);
  if (fs.size() != def.colors.size())
    throw ConstructionError("family '" + def.name + "' declares " +
                            std::to_string(def.colors.size()) + " colors but derived " +
                            std::to_string(fs.size()) + " polynomials");
  std::vector<BasisMatrix> matrices;
  matrices.reserve(fs.size());
  for (const Poly& f : fs) matrices.push_back(expand(f, def.n, def.strategy));
  Scheme s(def.name, def.monoid, def.n, def.t, def.colors, std::move(matrices), fs,
           def.strategy);
  VerificationReport r = verify(s);
  if (!r.passed())
    throw ConstructionError("family '" + def.name +
                            "' produced an invalid scheme:\n" + to_string(s, r));
  return s;
}

}  // namespace monovcs

#endif  // MONOVCS_CONSTRUCTIONS_HPP
