// Image handling and the share pipeline: PPM IO, quantization, tiled
// splitting and physical stacking.

#include <algorithm>
#include <map>
#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include <monovcs/constructions.hpp>
#include <monovcs/image.hpp>
#include <monovcs/share.hpp>

#include "support.hpp"

using namespace monovcs;

namespace {

Scheme bw_reduced() {
  MonoidPtr m = make_bw();
  std::vector<Poly> polys = {parse_poly(m, "2az"), parse_poly(m, "a^2 + z^2")};
  std::vector<BasisMatrix> mats = {
      expand(polys[0], 2, ExpansionStrategy::GcdReduced),
      expand(polys[1], 2, ExpansionStrategy::GcdReduced)};
  return Scheme("bw", m, 2, 2, {m->zero(), m->one()}, mats, polys,
                ExpansionStrategy::GcdReduced);
}

// tile of share `i` at secret pixel (x, y), as sorted palette ids
std::vector<ColorId> tile_ids(const Image& share, const Palette& pal,
                              TileGeometry tile, int x, int y, int q) {
  std::vector<ColorId> ids;
  for (int j = 0; j < q; ++j)
    ids.push_back(pal.nearest(share.at(x * tile.cols + j % tile.cols,
                                       y * tile.rows + j / tile.cols)));
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace

TEST_CASE("PPM round trip") {
  Image img(3, 2);
  img.at(0, 0) = {255, 0, 0};
  img.at(1, 0) = {0, 255, 0};
  img.at(2, 0) = {0, 0, 255};
  img.at(0, 1) = {10, 20, 30};
  img.at(1, 1) = {255, 255, 255};
  std::ostringstream os;
  write_ppm(os, img);
  std::string bytes = os.str();
  CHECK(bytes.substr(0, 11) == "P6\n3 2\n255\n");
  CHECK(bytes.size() == 11 + 3 * 2 * 3);
  std::istringstream is(bytes);
  CHECK(read_ppm(is) == img);
}

TEST_CASE("PPM reading scales smaller maxval to 255") {
  std::string raw = "P6 2 1 15\n";
  raw += '\x0f';  // 15 -> 255
  raw += '\x00';
  raw += '\x07';  // 7 -> 119
  raw += '\x0f';
  raw += '\x0f';
  raw += '\x00';
  std::istringstream is(raw);
  Image img = read_ppm(is);
  CHECK(img.at(0, 0) == Rgb{255, 0, 119});
  CHECK(img.at(1, 0) == Rgb{255, 255, 0});
}

TEST_CASE("PPM reading rejects malformed input") {
  auto reject = [](const std::string& bytes) {
    std::istringstream is(bytes);
    CHECK_THROWS_AS(read_ppm(is), IoError);
  };
  reject("P5 2 2 255\n....");            // grayscale magic
  reject("P6 # comment only");           // header ends early
  reject("P6 0 2 255\n");                // empty dimensions
  reject("P6 2 2 70000\n");              // 16-bit maxval unsupported
  reject("P6 two 2 255\n");              // non-numeric
  reject(std::string("P6 2 2 255\nxx"));  // truncated raster
  CHECK_THROWS_AS(read_ppm_file("/nonexistent/p.ppm"), IoError);
}

TEST_CASE("comments and odd whitespace in PPM headers") {
  std::string raw = "P6\n# made by hand\n2 # width\n1\n255\n";
  raw += std::string(6, '\x00');
  std::istringstream is(raw);
  Image img = read_ppm(is);
  CHECK(img.width == 2);
  CHECK(img.height == 1);
}

TEST_CASE("palette picks the nearest display color") {
  MonoidPtr m = builtin_monoid("cmb-lattice");
  Palette pal(m);
  CHECK(pal.ids().size() == 5);
  for (int i = 0; i < m->size(); ++i)
    CHECK(pal.nearest(m->rgb_of(ColorId(i))) == ColorId(i));
  CHECK(m->name_of(pal.nearest({250, 250, 250})) == "1");
  CHECK(m->name_of(pal.nearest({5, 0, 10})) == "0");

  // equidistant from C and M: the lower element id (M) wins
  Palette cm(m, {m->require("C"), m->require("M")});
  CHECK(cm.nearest({100, 100, 255}) == m->require("M"));

  CHECK_THROWS_AS(Palette(m, {}), Error);
  CHECK_THROWS_AS(Palette(m, {ColorId(99)}), MonoidError);
}

TEST_CASE("quantize maps pixels onto shareable colors only") {
  Scheme s = build({Family::Example22Monoid, 2});
  MonoidPtr m = s.monoid();
  Palette pal(m);
  Image img(2, 2);
  img.at(0, 0) = {255, 0, 255};    // magenta
  img.at(1, 0) = {250, 250, 250};  // near white
  img.at(0, 1) = {255, 0, 0};      // red: not in the monoid
  img.at(1, 1) = {0, 0, 0};        // black: in the monoid but not shared
  SecretGrid g = quantize(img, pal, s);
  CHECK(g.at(0, 0) == m->require("M"));
  CHECK(g.at(1, 0) == m->one());
  CHECK(g.at(0, 1) == m->require("M"));  // nearest shareable
  // 0 is not a scheme color, so black lands on the nearest shared color
  CHECK(std::find(s.colors().begin(), s.colors().end(), g.at(1, 1)) !=
        s.colors().end());

  CHECK_THROWS_AS(quantize(img, Palette(make_bw()), s), DomainMismatchError);

  // images already in scheme colors survive the round trip
  Image pure(2, 1);
  pure.at(0, 0) = m->rgb_of(m->require("C"));
  pure.at(1, 0) = m->rgb_of(m->one());
  CHECK(render(quantize(pure, pal, s), pal) == pure);
}

TEST_CASE("tile geometry is near-square and row-major") {
  auto geo = [](int q) { return TileGeometry::for_expansion(q); };
  CHECK(geo(1) == TileGeometry{1, 1});
  CHECK(geo(2) == TileGeometry{2, 1});
  CHECK(geo(4) == TileGeometry{2, 2});
  CHECK(geo(6) == TileGeometry{3, 2});
  CHECK(geo(8) == TileGeometry{3, 3});
  CHECK(geo(9) == TileGeometry{3, 3});
  CHECK(geo(18) == TileGeometry{5, 4});
  for (int q = 1; q <= 64; ++q) {
    CHECK(geo(q).cells() >= q);
    CHECK(geo(q).cells() - geo(q).rows < q);  // no wasted full row
  }
  CHECK_THROWS_AS(TileGeometry::for_expansion(0), Error);
}

TEST_CASE("random permutation utilities") {
  std::mt19937_64 gen(1234);
  for (int q : {1, 2, 5, 17}) {
    std::vector<int> p = detail::random_permutation(q, gen);
    std::sort(p.begin(), p.end());
    std::vector<int> expect(static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i) expect[static_cast<std::size_t>(i)] = i;
    CHECK(p == expect);
  }
  for (int i = 0; i < 1000; ++i) CHECK(detail::bounded(gen, 7) < 7);
  // the per-pixel stream seeds differ between neighbors
  CHECK(detail::pixel_stream_seed(42, 0) != detail::pixel_stream_seed(42, 1));
  CHECK(detail::pixel_stream_seed(42, 0) != detail::pixel_stream_seed(43, 0));
}

TEST_CASE("splitting a single black and white pixel") {
  Scheme s = bw_reduced();
  MonoidPtr m = s.monoid();

  SECTION("white: both shares are identical") {
    SecretGrid g{1, 1, {m->one()}};
    ShareSet set = split(g, s, {.seed = 5});
    REQUIRE(set.shares.size() == 2);
    CHECK(set.shares[0].width == 1);
    CHECK(set.shares[0].height == 2);
    CHECK(set.shares[0] == set.shares[1]);
    Image stacked = stack_images(set.shares, m);
    // one white and one black subpixel survive the stack
    std::vector<Rgb> px = stacked.pixels;
    std::sort(px.begin(), px.end());
    CHECK(px == std::vector<Rgb>{{0, 0, 0}, {255, 255, 255}});
  }

  SECTION("black: the shares complement each other") {
    SecretGrid g{1, 1, {m->zero()}};
    ShareSet set = split(g, s, {.seed = 5});
    CHECK(set.shares[0] != set.shares[1]);
    for (const Rgb& p : stack_images(set.shares, m).pixels) CHECK(p == Rgb{0, 0, 0});
  }

  SECTION("a single share leaks nothing: same subpixel multiset either way") {
    ShareSet white = split({1, 1, {m->one()}}, s, {.seed = 5});
    ShareSet black = split({1, 1, {m->zero()}}, s, {.seed = 5});
    std::vector<Rgb> w = white.shares[0].pixels, b = black.shares[0].pixels;
    std::sort(w.begin(), w.end());
    std::sort(b.begin(), b.end());
    CHECK(w == b);
  }
}

TEST_CASE("split refuses cells outside the scheme colors") {
  Scheme s = bw_reduced();
  SecretGrid g{1, 1, {ColorId(0)}};
  g.cells[0] = ColorId(1);
  CHECK_NOTHROW(split(g, s, {}));
  Scheme lattice = build({Family::PropNN, 2});
  SecretGrid bad{1, 1, {lattice.monoid()->one()}};  // 1 is not shared by prop_nn
  CHECK_THROWS_AS(split(bad, lattice, {}), SchemeError);
}

TEST_CASE("split is deterministic in the seed") {
  Scheme s = build({Family::Example22Monoid, 2});
  MonoidPtr m = s.monoid();
  SecretGrid g{4, 3, {}};
  for (int i = 0; i < 12; ++i)
    g.cells.push_back(s.colors()[static_cast<std::size_t>(i) % 4]);
  ShareSet a = split(g, s, {.seed = 99});
  ShareSet b = split(g, s, {.seed = 99});
  CHECK(a.shares == b.shares);
  CHECK(a.meta.seed == std::uint64_t{99});
  ShareSet c = split(g, s, {.seed = 100});
  CHECK(a.shares != c.shares);

  ShareSet secure = split(g, s, {.secure = true});
  CHECK(secure.meta.secure);
  CHECK_FALSE(secure.meta.seed.has_value());

  CHECK(a.meta.scheme_name == s.name());
  CHECK(a.meta.participants == 2);
  CHECK(a.meta.threshold == 2);
  CHECK(a.meta.pixel_expansion == 6);
  CHECK(a.meta.tile == TileGeometry{3, 2});
  CHECK(a.meta.secret_width == 4);
  CHECK(a.meta.secret_height == 3);
}

TEST_CASE("each share tile carries exactly its basis matrix row") {
  Scheme s = build({Family::Example22Monoid, 2});
  MonoidPtr m = s.monoid();
  Palette pal(m);
  SecretGrid g{4, 2, {}};
  for (int i = 0; i < 8; ++i)
    g.cells.push_back(s.colors()[static_cast<std::size_t>(i) % 4]);
  ShareSet set = split(g, s, {.seed = 31337});
  const TileGeometry tile = set.meta.tile;
  const int q = s.pixel_expansion();
  for (int i = 0; i < s.participants(); ++i)
    for (int y = 0; y < g.height; ++y)
      for (int x = 0; x < g.width; ++x) {
        std::vector<ColorId> got = tile_ids(set.shares[static_cast<std::size_t>(i)],
                                            pal, tile, x, y, q);
        std::vector<ColorId> row;
        const BasisMatrix& mat = s.matrix_for(g.at(x, y));
        for (int c = 0; c < q; ++c) row.push_back(mat.entry(i, c));
        std::sort(row.begin(), row.end());
        REQUIRE(got == row);
      }
}

TEST_CASE("tiles bigger than the expansion are padded with black") {
  Scheme s = build({Family::Example22Independent, 2});  // q = 8, tile 3x3
  MonoidPtr m = s.monoid();
  SecretGrid g{2, 1, {m->require("C"), m->one()}};
  ShareSet set = split(g, s, {.seed = 7});
  REQUIRE(set.meta.tile == TileGeometry{3, 3});
  for (const Image& share : set.shares)
    for (int x = 0; x < g.width; ++x)
      // cell 8 (the 9th) sits at tile position (2, 2)
      CHECK(share.at(x * 3 + 2, 2) == m->rgb_of(m->zero()));
}

TEST_CASE("stacking all shares realizes the column products") {
  Scheme s = build({Family::Example22Monoid, 2});
  MonoidPtr m = s.monoid();
  Palette pal(m);
  SecretGrid g{2, 2,
               {m->require("B"), m->require("C"), m->require("M"), m->one()}};
  ShareSet set = split(g, s, {.seed = 1});
  Image stacked = stack_images(set.shares, m);
  const int q = s.pixel_expansion();
  for (int y = 0; y < 2; ++y)
    for (int x = 0; x < 2; ++x) {
      std::vector<ColorId> got = tile_ids(stacked, pal, set.meta.tile, x, y, q);
      std::vector<ColorId> want = column_products(s.matrix_for(g.at(x, y)));
      std::sort(want.begin(), want.end());
      REQUIRE(got == want);
    }
}

TEST_CASE("stack_images validates and is idempotent") {
  MonoidPtr m = make_bw();
  Image a(2, 2, {255, 255, 255});
  Image b(3, 2, {0, 0, 0});
  CHECK_THROWS_AS(stack_images({a, b}, m), IoError);
  CHECK_THROWS_AS(stack_images({}, m), Error);
  CHECK(stack_images({a, a}, m) == a);
  // stacking with an all-white share changes nothing
  Scheme s = bw_reduced();
  ShareSet set = split({2, 2, {m->zero(), m->one(), m->one(), m->zero()}}, s,
                       {.seed = 11});
  Image white(set.shares[0].width, set.shares[0].height, {255, 255, 255});
  CHECK(stack_images({set.shares[0], white}, m) == set.shares[0]);
}
