// Command-line front end: build Bruen-Drudge classes, switch, verify,
// print patterns and spectra, compare invariants.
//
// Exit codes: 0 success/pass, 1 verification failure, 2 usage or data error.

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cl3/class_io.hpp"
#include "cl3/pattern.hpp"
#include "cl3/quadric.hpp"
#include "cl3/verify.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 1729;

std::optional<std::vector<int>> parse_modulus(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

void print_histogram(std::ostream& os, const char* key, const std::map<int, long long>& h) {
  os << key << "=";
  bool first = true;
  for (const auto& [v, c] : h) {
    if (!first) os << ' ';
    os << v << ':' << c;
    first = false;
  }
  if (h.empty()) os << "none";
  os << "\n";
}

struct FamilySpec {
  cl3::BdBase base;
  int label;
};

FamilySpec family_spec(const std::string& name) {
  if (name == "bd-S1") return {cl3::BdBase::Secants, 1};
  if (name == "bd-S2") return {cl3::BdBase::Secants, 2};
  if (name == "bd-E1") return {cl3::BdBase::Externals, 1};
  return {cl3::BdBase::Externals, 2};  // bd-E2; names are pre-validated
}

int cmd_build(int p, int h, const std::string& modulus, const std::string& family,
              const std::string& out) {
  const cl3::Field field(p, h, parse_modulus(modulus));
  const cl3::Geometry g(field);
  const cl3::QuadraticForm form = cl3::default_elliptic_form(g.field());
  const cl3::EllipticQuadric quad(g, form);
  const FamilySpec fs = family_spec(family);
  const cl3::LineClass cls = quad.bruen_drudge(fs.base, fs.label);
  cl3::write_class_file(out, cls, form);
  std::cout << "family=" << family << "\n";
  std::cout << "size=" << cls.size() << "\n";
  std::cout << "x=" << cls.size() / g.lines_per_point() << "\n";
  std::cout << "out=" << out << "\n";
  return 0;
}

int cmd_switch(const std::string& in, const std::string& pair, const std::string& out) {
  const cl3::LoadedClass loaded = cl3::load_class_file(in);
  const std::vector<cl3::SwitchablePair> pairs = cl3::switchable_pairs(loaded.cls);
  if (pairs.empty()) cl3::fail(cl3::Errc::NoSwitchablePair, "class has no switchable pair");

  cl3::SwitchablePair chosen = pairs.front();
  if (pair != "auto") {
    cl3::Id point = -1;
    try {
      point = std::stoi(pair);
    } catch (...) {
      cl3::fail(cl3::Errc::InvalidArgument, "pair selector must be 'auto' or a point id");
    }
    bool found = false;
    for (const auto& c : pairs)
      if (c.point == point) {
        chosen = c;
        found = true;
        break;
      }
    if (!found)
      cl3::fail(cl3::Errc::NoSwitchablePair,
                "no switchable pair at point " + std::to_string(point));
  }

  const cl3::LineClass switched = cl3::switch_class(loaded.cls, chosen.point, chosen.plane);
  cl3::write_class_file(out, switched, loaded.form);
  std::cout << "pair_point=" << chosen.point << "\n";
  std::cout << "pair_plane=" << chosen.plane << "\n";
  std::cout << "size=" << switched.size() << "\n";
  std::cout << "out=" << out << "\n";
  return 0;
}

int cmd_verify(const std::string& in, int spreads, std::uint64_t seed, int workers) {
  const cl3::LoadedClass loaded = cl3::load_class_file(in);
  try {
    const cl3::VerificationReport rep = cl3::full_verify(loaded.cls, spreads, seed, workers);
    cl3::write_report(std::cout, loaded.header, rep);
    return rep.pass() ? 0 : 1;
  } catch (const cl3::Error& e) {
    if (e.code() == cl3::Errc::SizeNotMultiple) {
      std::cerr << "verification failed: " << e.what() << "\n";
      return 1;
    }
    throw;
  }
}

int cmd_pattern(const std::string& in, long long line) {
  const cl3::LoadedClass loaded = cl3::load_class_file(in);
  const cl3::Geometry& g = *loaded.geometry;
  if (line < 0 || line >= g.n_lines())
    cl3::fail(cl3::Errc::InvalidArgument,
              "line id out of range [0, " + std::to_string(g.n_lines()) + ")");
  const long long per = g.lines_per_point();
  if (loaded.cls.size() % per != 0)
    cl3::fail(cl3::Errc::SizeNotMultiple, "cannot infer a parameter: size " +
                                              std::to_string(loaded.cls.size()) +
                                              " is not a multiple of " + std::to_string(per));
  const long long x = loaded.cls.size() / per;

  const cl3::PatternMatrix t = cl3::pattern(loaded.cls, static_cast<cl3::Id>(line));
  std::cout << "line=" << line << "\n";
  std::cout << "in_class=" << (t.in_class ? "true" : "false") << "\n";
  std::cout << "x=" << x << "\n";
  std::cout << "row_planes=";
  for (int i = 0; i < t.dim; ++i) std::cout << (i ? " " : "") << t.row_planes[i];
  std::cout << "\ncol_points=";
  for (int j = 0; j < t.dim; ++j) std::cout << (j ? " " : "") << t.col_points[j];
  std::cout << "\nmatrix=\n";
  for (int i = 0; i < t.dim; ++i) {
    for (int j = 0; j < t.dim; ++j) std::cout << (j ? " " : "") << t.at(i, j);
    std::cout << "\n";
  }
  const cl3::PatternIdentityReport rep = cl3::check_pattern_identities(t, loaded.cls, x);
  std::cout << "identity_row_col_sums=" << (rep.row_col_sums ? "pass" : "fail") << "\n";
  std::cout << "identity_linear_relation=" << (rep.linear_relation ? "pass" : "fail") << "\n";
  std::cout << "identity_additivity=" << (rep.additivity ? "pass" : "fail") << "\n";
  std::cout << "identity_square_sum=" << (rep.square_sum ? "pass" : "fail") << "\n";
  return 0;
}

int cmd_spectrum(const std::string& in) {
  const cl3::LoadedClass loaded = cl3::load_class_file(in);
  std::cout << "size=" << loaded.cls.size() << "\n";
  print_histogram(std::cout, "plane_spectrum", cl3::plane_spectrum(loaded.cls));
  print_histogram(std::cout, "point_spectrum", cl3::point_spectrum(loaded.cls));
  return 0;
}

int cmd_compare(const std::string& a_path, const std::string& b_path) {
  const cl3::LoadedClass a = cl3::load_class_file(a_path);
  const cl3::LoadedClass b = cl3::load_class_file(b_path, a.geometry);
  const cl3::Comparison c = cl3::compare_invariants(a.cls, b.cls);
  std::cout << "result=" << cl3::to_string(c) << "\n";
  std::cout << "size_a=" << a.cls.size() << "\n";
  std::cout << "size_b=" << b.cls.size() << "\n";
  print_histogram(std::cout, "plane_spectrum_a", cl3::plane_spectrum(a.cls));
  print_histogram(std::cout, "point_spectrum_a", cl3::point_spectrum(a.cls));
  print_histogram(std::cout, "plane_spectrum_b", cl3::plane_spectrum(b.cls));
  print_histogram(std::cout, "point_spectrum_b", cl3::point_spectrum(b.cls));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cameron-Liebler line classes in PG(3,q)"};
  app.require_subcommand(1);
  // --h is the extension degree, so help lives on --help alone.
  app.set_help_flag("--help", "print help");

  int p = 0, h = 1;
  std::string modulus, family, in, out, pair = "auto";
  std::string path_a, path_b;
  int spreads = 100, workers = 1;
  std::uint64_t seed = kDefaultSeed;
  long long line = -1;

  CLI::App* build = app.add_subcommand("build", "Construct a Bruen-Drudge line class");
  build->set_help_flag("--help", "print help");
  build->add_option("--p", p, "prime characteristic")->required();
  build->add_option("--h", h, "extension degree (default 1)");
  build->add_option("--modulus", modulus,
                    "modulus polynomial, comma-separated ascending coefficients");
  build->add_option("--family", family, "bd-S1 | bd-S2 | bd-E1 | bd-E2")
      ->required()
      ->check(CLI::IsMember({"bd-S1", "bd-S2", "bd-E1", "bd-E2"}));
  build->add_option("--out", out, "output class file")->required();

  CLI::App* sw = app.add_subcommand("switch", "Switch a class at a switchable pair");
  sw->add_option("--in", in, "input class file")->required();
  sw->add_option("--pair", pair, "'auto' (smallest pair) or a point id");
  sw->add_option("--out", out, "output class file")->required();

  CLI::App* verify = app.add_subcommand("verify", "Full Cameron-Liebler verification");
  verify->add_option("--in", in, "input class file")->required();
  verify->add_option("--spreads", spreads, "sampled spreads (default 100)");
  verify->add_option("--seed", seed, "rng seed (default 1729)");
  verify->add_option("--workers", workers, "degree-check threads (default 1)");

  CLI::App* pattern = app.add_subcommand("pattern", "Pattern matrix of one line");
  pattern->add_option("--in", in, "input class file")->required();
  pattern->add_option("--line", line, "line id")->required();

  CLI::App* spectrum = app.add_subcommand("spectrum", "Plane and point spectra");
  spectrum->add_option("--in", in, "input class file")->required();

  CLI::App* compare = app.add_subcommand("compare", "Compare two classes by invariants");
  compare->add_option("a", path_a, "first class file")->required();
  compare->add_option("b", path_b, "second class file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (build->parsed()) return cmd_build(p, h, modulus, family, out);
    if (sw->parsed()) return cmd_switch(in, pair, out);
    if (verify->parsed()) return cmd_verify(in, spreads, seed, workers);
    if (pattern->parsed()) return cmd_pattern(in, line);
    if (spectrum->parsed()) return cmd_spectrum(in);
    if (compare->parsed()) return cmd_compare(path_a, path_b);
  } catch (const cl3::Error& e) {
    std::cerr << "error: " << e.what() << " [" << cl3::to_string(e.code()) << "]\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
