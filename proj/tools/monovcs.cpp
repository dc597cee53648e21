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

// monovcs: construct, verify and use color visual cryptography schemes.
//
// Exit codes: 0 on success, 1 when a verification property fails, 2 on
// I/O or format errors.

#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <monovcs/monovcs.hpp>

namespace {

using namespace monovcs;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitFormat = 2;

// Monoid argument: a JSON file path or "builtin:<spec>".
MonoidPtr monoid_from_arg(const std::string& arg) {
  if (arg.rfind("builtin:", 0) == 0) return builtin_monoid(arg.substr(8));
  MonoidPtr m = load_monoid_file(arg);
  m->require_valid();
  return m;
}

/// Subpixel counts of the full n-participant stack, straight from the
/// basis matrix columns.
StackSpectrum full_stack_spectrum(const Scheme& s, std::size_t color_idx) {
  StackSpectrum spec;
  spec.monoid = s.monoid();
  std::vector<int> all_rows;
  for (int i = 0; i < s.participants(); ++i) all_rows.push_back(i);
  for (ColorId c : stack_rows(s, s.colors()[color_idx], all_rows)) spec.weights[c] += 1;
  return spec;
}

int cmd_monoid_check(const std::string& file) {
  MonoidPtr m = load_monoid_file(file);
  LawReport r = m->check_laws();
  std::cout << "monoid: " << m->name() << " (" << m->size() << " elements)\n"
            << "commutative: " << (r.commutative ? "yes" : "NO") << "\n"
            << "associative: " << (r.associative ? "yes" : "NO") << "\n"
            << "neutral 1:   " << (r.has_neutral ? "yes" : "NO") << "\n"
            << "absorbing 0: "
            << (m->has_zero() ? (r.has_absorbing ? "yes" : "NO") : "none designated")
            << "\n"
            << "idempotent:  " << (r.idempotent ? "yes (semilattice)" : "no") << "\n";
  for (const LawViolation& v : r.counterexamples)
    std::cout << "  violation: " << m->describe(v) << "\n";
  std::cout << (r.valid ? "laws hold" : "laws VIOLATED") << "\n";
  return r.valid ? kExitOk : kExitVerification;
}

int cmd_monoid_builtin(const std::string& spec, const std::string& out) {
  MonoidPtr m = builtin_monoid(spec);
  if (out.empty()) {
    std::cout << monoid_to_json(*m).dump(2) << "\n";
  } else {
    save_monoid_file(out, *m);
    std::cout << "wrote " << out << "\n";
  }
  return kExitOk;
}

void print_polys(const Scheme& s) {
  if (!s.polys()) return;
  std::cout << "basis polynomials (" << to_string(s.strategy()) << " expansion):\n";
  for (std::size_t i = 0; i < s.colors().size(); ++i)
    std::cout << "  f_" << s.monoid()->name_of(s.colors()[i]) << " = "
              << to_string((*s.polys())[i]) << "\n";
}

int cmd_construct(const std::string& family, int n, const std::string& out,
                  bool show_polys) {
  FamilyParams params;
  params.family = parse_family(family);
  params.n = n;
  Scheme s = build(params);
  VerificationReport r = verify(s);
  std::cout << to_string(s, r);
  if (show_polys) print_polys(s);
  if (!out.empty()) {
    save_scheme_file(out, s);
    std::cout << "wrote " << out << "\n";
  }
  return r.passed() ? kExitOk : kExitVerification;
}

int cmd_verify(const std::string& scheme_file) {
  Scheme s = load_scheme_file(scheme_file);
  VerificationReport r = verify(s);
  std::cout << to_string(s, r);
  return r.passed() ? kExitOk : kExitVerification;
}

int cmd_report(const std::string& scheme_file) {
  Scheme s = load_scheme_file(scheme_file);
  VerificationReport r = verify(s);
  std::cout << to_string(s, r);
  print_polys(s);
  std::cout << "full-stack spectra (subpixel counts when all " << s.participants()
            << " shares are stacked):\n";
  for (std::size_t i = 0; i < s.colors().size(); ++i)
    std::cout << "  " << s.monoid()->name_of(s.colors()[i]) << ": "
              << to_string(full_stack_spectrum(s, i)) << "\n";
  return r.passed() ? kExitOk : kExitVerification;
}

int cmd_split(const std::string& scheme_file, const std::string& image_file,
              std::uint64_t seed, bool secure, bool force, const std::string& prefix) {
  Scheme s = load_scheme_file(scheme_file);
  VerificationReport r = verify(s);
  if (!r.passed() && !force) {
    std::cout << to_string(s, r);
    std::cerr << "error: scheme fails verification; pass --force to split anyway\n";
    return kExitVerification;
  }
  Image img = read_ppm_file(image_file);
  Palette palette(s.monoid());
  SecretGrid grid = quantize(img, palette, s);
  SplitOptions opts;
  opts.seed = seed;
  opts.secure = secure;
  ShareSet shares = split(grid, s, opts);
  for (std::size_t i = 0; i < shares.shares.size(); ++i)
    write_ppm_file(prefix + "_" + std::to_string(i + 1) + ".ppm", shares.shares[i]);
  save_meta_file(prefix + "_meta.json", shares.meta);
  std::cout << "wrote " << shares.shares.size() << " shares " << shares.shares[0].width
            << "x" << shares.shares[0].height << " (tile " << shares.meta.tile.rows << "x"
            << shares.meta.tile.cols << ", q = " << shares.meta.pixel_expansion << ") to "
            << prefix << "_1.." << shares.shares.size() << ".ppm\n"
            << "wrote " << prefix << "_meta.json\n";
  return kExitOk;
}

int cmd_stack(const std::vector<std::string>& image_files, const std::string& monoid_arg,
              const std::string& out) {
  MonoidPtr m = monoid_from_arg(monoid_arg);
  std::vector<Image> images;
  images.reserve(image_files.size());
  for (const std::string& f : image_files) images.push_back(read_ppm_file(f));
  Image stacked = stack_images(images, m);
  write_ppm_file(out, stacked);
  std::cout << "stacked " << images.size() << " shares into " << out << " ("
            << stacked.width << "x" << stacked.height << ")\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"monoid-based color visual cryptography"};
  app.require_subcommand(1);

  auto* monoid = app.add_subcommand("monoid", "inspect color monoids");
  monoid->require_subcommand(1);
  std::string monoid_file;
  auto* monoid_check = monoid->add_subcommand("check", "validate the monoid laws of a JSON table");
  monoid_check->add_option("file", monoid_file, "monoid JSON file")->required();
  std::string builtin_spec, builtin_out;
  auto* monoid_builtin =
      monoid->add_subcommand("builtin", "print or save a builtin monoid as JSON");
  monoid_builtin->add_option("spec", builtin_spec,
                             "bw, cmy-rgb, vt-<k>, gray-<k>, cmb-lattice, rb-lattice, "
                             "cmy-independent, cmb-independent")
      ->required();
  monoid_builtin->add_option("--out", builtin_out, "output file (default: stdout)");

  std::string family = "nn";
  int n = 2;
  std::string construct_out;
  bool show_polys = false;
  auto* construct = app.add_subcommand("construct", "build a scheme from a named family");
  std::string family_list;
  for (const std::string& f : family_names()) family_list += (family_list.empty() ? "" : ", ") + f;
  construct->add_option("--family", family, "one of: " + family_list)->required();
  construct->add_option("--n", n, "number of participants")->required();
  construct->add_option("--out", construct_out, "write the scheme as JSON");
  construct->add_flag("--show-polys", show_polys, "print the basis polynomials");

  std::string verify_file;
  auto* verify_cmd = app.add_subcommand("verify", "check both scheme properties");
  verify_cmd->add_option("scheme", verify_file, "scheme JSON file")->required();

  std::string report_file;
  auto* report_cmd = app.add_subcommand("report", "verification report plus stack spectra");
  report_cmd->add_option("scheme", report_file, "scheme JSON file")->required();

  std::string split_scheme, split_image, split_prefix;
  std::uint64_t seed = 0;
  bool secure = false, force = false;
  auto* split_cmd = app.add_subcommand("split", "split a secret image into share images");
  split_cmd->add_option("scheme", split_scheme, "scheme JSON file")->required();
  split_cmd->add_option("image", split_image, "secret image (PPM P6)")->required();
  split_cmd->add_option("--seed", seed, "64-bit RNG seed (default 0)");
  split_cmd->add_flag("--secure", secure, "use OS entropy and omit the seed from metadata");
  split_cmd->add_flag("--force", force, "split even if the scheme fails verification");
  split_cmd->add_option("--out-prefix", split_prefix, "output prefix P -> P_1.ppm.. + P_meta.json")
      ->required();

  std::vector<std::string> stack_files;
  std::string stack_monoid, stack_out;
  auto* stack_cmd = app.add_subcommand("stack", "stack share images into one image");
  stack_cmd->add_option("images", stack_files, "share images (PPM P6)")->required();
  stack_cmd->add_option("--monoid", stack_monoid, "monoid JSON file or builtin:<spec>")
      ->required();
  stack_cmd->add_option("--out", stack_out, "output image")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitFormat;
  }

  try {
    if (monoid_check->parsed()) return cmd_monoid_check(monoid_file);
    if (monoid_builtin->parsed()) return cmd_monoid_builtin(builtin_spec, builtin_out);
    if (construct->parsed()) return cmd_construct(family, n, construct_out, show_polys);
    if (verify_cmd->parsed()) return cmd_verify(verify_file);
    if (report_cmd->parsed()) return cmd_report(report_file);
    if (split_cmd->parsed())
      return cmd_split(split_scheme, split_image, seed, secure, force, split_prefix);
    if (stack_cmd->parsed()) return cmd_stack(stack_files, stack_monoid, stack_out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFormat;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFormat;
  }
  return kExitOk;
}
