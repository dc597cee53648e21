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

/// RGB images, binary PPM (P6) I/O, palettes and secret quantization.
// TODO: optional PNG output alongside PPM.

#ifndef MONOVCS_IMAGE_HPP
#define MONOVCS_IMAGE_HPP

#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "monovcs/color_monoid.hpp"
#include "monovcs/error.hpp"
#include "monovcs/scheme.hpp"

namespace monovcs {

struct Image {
  int width = 0;
  int height = 0;
  std::vector<Rgb> pixels;  // row-major

  Image() = default;
  Image(int w, int h, Rgb fill = {0, 0, 0})
      : width(w), height(h),
        pixels(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill) {
    if (w < 1 || h < 1) throw Error("image dimensions must be positive");
  }

  Rgb& at(int x, int y) {
    bounds(x, y);
    return pixels[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
                  static_cast<std::size_t>(x)];
  }
  const Rgb& at(int x, int y) const { return const_cast<Image*>(this)->at(x, y); }

  friend bool operator==(const Image& a, const Image& b) {
    return a.width == b.width && a.height == b.height && a.pixels == b.pixels;
  }

 private:
  void bounds(int x, int y) const {
    if (x < 0 || x >= width || y < 0 || y >= height)
      throw Error("pixel (" + std::to_string(x) + "," + std::to_string(y) +
                  ") outside " + std::to_string(width) + "x" + std::to_string(height));
  }
};

namespace detail {

// PPM headers are whitespace-separated tokens with '#' comments.
inline std::string ppm_token(std::istream& is) {
  std::string tok;
  int c;
  while ((c = is.get()) != EOF) {
    if (c == '#') {
      while ((c = is.get()) != EOF && c != '\n') {
      }
      continue;
    }
    if (std::isspace(c)) {
      if (!tok.empty()) return tok;
      continue;
    }
    tok += static_cast<char>(c);
  }
  if (tok.empty()) throw IoError("unexpected end of PPM header");
  return tok;
}

}  // namespace detail

inline Image read_ppm(std::istream& is) {
  if (detail::ppm_token(is) != "P6") throw IoError("not a binary PPM (P6) stream");
  int w, h, maxval;
  try {
    w = std::stoi(detail::ppm_token(is));
    h = std::stoi(detail::ppm_token(is));
    maxval = std::stoi(detail::ppm_token(is));
  } catch (const std::exception&) {
    throw IoError("malformed PPM header");
  }
  if (w < 1 || h < 1) throw IoError("PPM dimensions must be positive");
  if (maxval < 1 || maxval > 255)
    throw IoError("unsupported PPM maxval " + std::to_string(maxval));
  Image img(w, h);
  std::vector<char> raw(static_cast<std::size_t>(w) * h * 3);
  is.read(raw.data(), static_cast<std::streamsize>(raw.size()));
  if (is.gcount() != static_cast<std::streamsize>(raw.size()))
    throw IoError("PPM pixel data truncated");
  for (std::size_t i = 0; i < img.pixels.size(); ++i)
    for (std::size_t ch = 0; ch < 3; ++ch) {
      int v = static_cast<unsigned char>(raw[i * 3 + ch]);
      img.pixels[i][ch] = static_cast<std::uint8_t>(maxval == 255 ? v : v * 255 / maxval);
    }
  return img;
}

inline void write_ppm(std::ostream& os, const Image& img) {
  os << "P6\n" << img.width << " " << img.height << "\n255\n";
  for (const Rgb& p : img.pixels)
    os.write(reinterpret_cast<const char*>(p.data()), 3);
  if (!os) throw IoError("PPM write failed");
}

inline Image read_ppm_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open image '" + path + "'");
  return read_ppm(f);
}

inline void write_ppm_file(const std::string& path, const Image& img) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot create image '" + path + "'");
  write_ppm(f, img);
}

/// Display colors for monoid elements; the inverse direction picks the
/// nearest entry by squared RGB distance, breaking ties toward the lowest
/// element id.
class Palette {
 public:
  explicit Palette(MonoidPtr monoid) : monoid_(std::move(monoid)) {
    for (int i = 0; i < monoid_->size(); ++i) ids_.push_back(ColorId(i));
  }

  Palette(MonoidPtr monoid, std::vector<ColorId> ids)
      : monoid_(std::move(monoid)), ids_(std::move(ids)) {
    if (ids_.empty()) throw Error("palette needs at least one color");
    for (ColorId c : ids_) monoid_->name_of(c);  // range check
  }

  const MonoidPtr& monoid() const { return monoid_; }
  const std::vector<ColorId>& ids() const { return ids_; }

  Rgb rgb(ColorId c) const { return monoid_->rgb_of(c); }

  ColorId nearest(Rgb p) const {
    long best = -1;
    ColorId best_id = ids_.front();
    for (ColorId c : ids_) {
      Rgb q = monoid_->rgb_of(c);
      long d = 0;
      for (int ch = 0; ch < 3; ++ch) {
        long diff = static_cast<long>(p[static_cast<std::size_t>(ch)]) -
                    static_cast<long>(q[static_cast<std::size_t>(ch)]);
        d += diff * diff;
      }
      if (best < 0 || d < best || (d == best && c < best_id)) {
        best = d;
        best_id = c;
      }
    }
    return best_id;
  }

 private:
  MonoidPtr monoid_;
  std::vector<ColorId> ids_;
};

/// A secret image as monoid colors.
struct SecretGrid {
  int width = 0;
  int height = 0;
  std::vector<ColorId> cells;  // row-major

  ColorId at(int x, int y) const {
    return cells[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
                 static_cast<std::size_t>(x)];
  }
};

/// Maps every pixel to the nearest shareable color of the scheme.
inline SecretGrid quantize(const Image& img, const Palette& palette, const Scheme& scheme) {
  if (!(*palette.monoid() == *scheme.monoid()))
    throw DomainMismatchError("palette and scheme use different monoids");
  Palette shareable(scheme.monoid(), scheme.colors());
  SecretGrid g;
  g.width = img.width;
  g.height = img.height;
  g.cells.reserve(img.pixels.size());
  for (const Rgb& p : img.pixels) g.cells.push_back(shareable.nearest(p));
  return g;
}

/// Renders a secret grid back to an image through the monoid palette.
inline Image render(const SecretGrid& g, const Palette& palette) {
  Image img(g.width, g.height);
  for (std::size_t i = 0; i < g.cells.size(); ++i)
    img.pixels[i] = palette.rgb(g.cells[i]);
  return img;
}

}  // namespace monovcs

#endif  // MONOVCS_IMAGE_HPP
