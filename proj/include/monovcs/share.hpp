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

/// Splitting a secret image into shares and stacking shares back together.
///
/// Each secret pixel becomes a tile of q subpixels per share: the basis
/// matrix for the pixel's color is taken, its columns are permuted by a
/// fresh uniform permutation, and row i of the result fills participant
/// i's tile. Permutations are drawn from per-pixel RNG streams derived
/// from a master seed, so a (scheme, image, seed) triple reproduces the
/// same shares on any platform.

#ifndef MONOVCS_SHARE_HPP
#define MONOVCS_SHARE_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "monovcs/error.hpp"
#include "monovcs/image.hpp"
#include "monovcs/scheme.hpp"

namespace monovcs {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Seed for the RNG stream of one pixel. Mixing both inputs through
// splitmix64 keeps nearby pixel indices from producing correlated states.
inline std::uint64_t pixel_stream_seed(std::uint64_t master, std::uint64_t pixel) {
  return splitmix64(splitmix64(master) ^ splitmix64(pixel + 0x632BE59BD9B4E019ull));
}

// Unbiased draw from [0, n) by rejection; mt19937_64 output is fixed by
// the standard, so results are identical across platforms.
inline std::uint64_t bounded(std::mt19937_64& gen, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v;
  do {
    v = gen();
  } while (v >= limit);
  return v % n;
}

inline std::vector<int> random_permutation(int q, std::mt19937_64& gen) {
  std::vector<int> perm(static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i) perm[static_cast<std::size_t>(i)] = i;
  for (int i = q - 1; i > 0; --i) {
    auto j = static_cast<int>(bounded(gen, static_cast<std::uint64_t>(i) + 1));
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
  }
  return perm;
}

}  // namespace detail

/// Subpixel layout of one secret pixel inside a share.
struct TileGeometry {
  int rows = 1;
  int cols = 1;

  // Near-square tile: rows = ceil(sqrt(q)), cols = ceil(q / rows).
  static TileGeometry for_expansion(int q) {
    if (q < 1) throw Error("pixel expansion must be positive");
    TileGeometry t;
    t.rows = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(q))));
    t.cols = (q + t.rows - 1) / t.rows;
    return t;
  }

  int cells() const { return rows * cols; }
  friend bool operator==(const TileGeometry&, const TileGeometry&) = default;
};

struct SplitOptions {
  std::uint64_t seed = 0;
  bool secure = false;  // harvest entropy instead of using `seed`
};

/// Everything needed to interpret a set of share images.
struct ShareMeta {
  std::string scheme_name;
  std::string monoid_name;
  int participants = 0;
  int threshold = 0;
  int pixel_expansion = 0;
  TileGeometry tile;
  int secret_width = 0;
  int secret_height = 0;
  bool secure = false;
  std::optional<std::uint64_t> seed;  // absent when secure
  std::string rng = "splitmix64+mt19937_64";
};

struct ShareSet {
  std::vector<Image> shares;
  ShareMeta meta;
};

inline ShareSet split(const SecretGrid& grid, const Scheme& scheme, SplitOptions opts) {
  for (ColorId c : grid.cells) scheme.color_index(c);  // every cell shareable
  const int q = scheme.pixel_expansion();
  const int n = scheme.participants();
  const TileGeometry tile = TileGeometry::for_expansion(q);

  std::uint64_t master = opts.seed;
  if (opts.secure) {
    std::random_device rd;
    master = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  }

  const Rgb black = scheme.monoid()->has_zero()
                        ? scheme.monoid()->rgb_of(scheme.monoid()->zero())
                        : Rgb{0, 0, 0};
  ShareSet out;
  out.shares.assign(static_cast<std::size_t>(n),
                    Image(grid.width * tile.cols, grid.height * tile.rows, black));

  for (int y = 0; y < grid.height; ++y)
    for (int x = 0; x < grid.width; ++x) {
      const std::size_t idx = static_cast<std::size_t>(y) *
                                  static_cast<std::size_t>(grid.width) +
                              static_cast<std::size_t>(x);
      const BasisMatrix& m = scheme.matrix_for(grid.cells[idx]);
      std::mt19937_64 gen(detail::pixel_stream_seed(master, idx));
      const std::vector<int> perm = detail::random_permutation(q, gen);
      for (int i = 0; i < n; ++i) {
        Image& share = out.shares[static_cast<std::size_t>(i)];
        for (int j = 0; j < q; ++j) {
          const int px = x * tile.cols + j % tile.cols;
          const int py = y * tile.rows + j / tile.cols;
          share.at(px, py) =
              scheme.monoid()->rgb_of(m.entry(i, perm[static_cast<std::size_t>(j)]));
        }
        // cells beyond q stay at the padding color
      }
    }

  out.meta.scheme_name = scheme.name();
  out.meta.monoid_name = scheme.monoid()->name();
  out.meta.participants = n;
  out.meta.threshold = scheme.threshold();
  out.meta.pixel_expansion = q;
  out.meta.tile = tile;
  out.meta.secret_width = grid.width;
  out.meta.secret_height = grid.height;
  out.meta.secure = opts.secure;
  if (!opts.secure) out.meta.seed = master;
  return out;
}

/// Physical stacking: subpixel-wise monoid product of the share images.
/// Pixels are mapped to monoid elements by nearest palette color first,
/// so shares that went through lossy round trips still stack.
inline Image stack_images(const std::vector<Image>& shares, const MonoidPtr& monoid) {
  if (shares.empty()) throw Error("nothing to stack");
  for (const Image& s : shares)
    if (s.width != shares.front().width || s.height != shares.front().height)
      throw IoError("share dimensions differ");
  Palette palette(monoid);
  Image out(shares.front().width, shares.front().height);
  for (std::size_t i = 0; i < out.pixels.size(); ++i) {
    ColorId acc = monoid->one();
    for (const Image& s : shares) acc = monoid->op(acc, palette.nearest(s.pixels[i]));
    out.pixels[i] = monoid->rgb_of(acc);
  }
  return out;
}

}  // namespace monovcs

#endif  // MONOVCS_SHARE_HPP
