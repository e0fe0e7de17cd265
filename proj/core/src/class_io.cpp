#include "cl3/class_io.hpp"

#include <fstream>
#include <sstream>

#include "cl3/rng.hpp"

namespace cl3 {

namespace {

constexpr const char* kConvention = "first-nonzero-1";

std::string modulus_text(const std::vector<int>& modulus) {
  std::string s;
  for (std::size_t i = 0; i < modulus.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(modulus[i]);
  }
  return s;
}

std::string form_text(const Field& f, const std::array<Field::Code, 10>& form) {
  std::string s;
  for (int i = 0; i < 10; ++i) {
    if (i) s += ' ';
    s += f.to_string(form[i]);
  }
  return s;
}

// Strips "key=" from a header line; FormatError when the key differs.
std::string header_value(std::istream& is, const std::string& key) {
  std::string line;
  if (!std::getline(is, line)) fail(Errc::FormatError, "missing header line '" + key + "='");
  const std::string prefix = key + "=";
  if (line.rfind(prefix, 0) != 0)
    fail(Errc::FormatError, "expected header line '" + key + "=', got '" + line + "'");
  return line.substr(prefix.size());
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size()) fail(Errc::FormatError, "bad " + what + " '" + s + "'");
    return v;
  } catch (const Error&) {
    throw;
  } catch (...) {
    fail(Errc::FormatError, "bad " + what + " '" + s + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep)) out.push_back(tok);
  return out;
}

}  // namespace

ClassFileHeader make_header(const Field& f, const QuadraticForm& form) {
  ClassFileHeader hdr;
  hdr.p = f.p();
  hdr.h = f.h();
  hdr.modulus = f.modulus();
  hdr.form = form.coeffs;
  return hdr;
}

void write_class_file(std::ostream& os, const LineClass& L, const QuadraticForm& form) {
  const Geometry& g = L.geometry();
  const Field& f = g.field();
  const ClassFileHeader hdr = make_header(f, form);
  os << "p=" << hdr.p << "\n";
  os << "h=" << hdr.h << "\n";
  os << "modulus=" << modulus_text(hdr.modulus) << "\n";
  os << "form=" << form_text(f, hdr.form) << "\n";
  os << "convention=" << kConvention << "\n";
  for (Id l = 0; l < g.n_lines(); ++l) {
    if (!L.contains(l)) continue;
    auto t = g.plucker(l);
    for (int i = 0; i < 6; ++i) {
      if (i) os << ' ';
      os << f.to_string(t[i]);
    }
    os << "\n";
  }
}

void write_class_file(const std::string& path, const LineClass& L, const QuadraticForm& form) {
  std::ofstream os(path);
  if (!os) fail(Errc::FormatError, "cannot open '" + path + "' for writing");
  write_class_file(os, L, form);
  if (!os) fail(Errc::FormatError, "short write to '" + path + "'");
}

ClassFileHeader read_class_header(std::istream& is) {
  ClassFileHeader hdr;
  hdr.p = parse_int(header_value(is, "p"), "p");
  hdr.h = parse_int(header_value(is, "h"), "h");
  for (const std::string& tok : split(header_value(is, "modulus"), ','))
    hdr.modulus.push_back(parse_int(tok, "modulus coefficient"));

  const std::vector<std::string> form_toks = split(header_value(is, "form"), ' ');
  if (form_toks.size() != 10)
    fail(Errc::FormatError, "form needs 10 coefficients, got " +
                                std::to_string(form_toks.size()));
  // Coefficients are parsed against the field once it exists; stash text via
  // a temporary field below in load_class_file. Here we only validate shape,
  // so re-parse there. To keep the header self-contained we parse now with a
  // scratch field.
  const Field scratch(hdr.p, hdr.h, hdr.modulus);
  for (int i = 0; i < 10; ++i) hdr.form[i] = scratch.parse(form_toks[i]);

  const std::string conv = header_value(is, "convention");
  if (conv != kConvention)
    fail(Errc::FormatError, "unsupported convention '" + conv + "'");
  return hdr;
}

LoadedClass load_class_file(const std::string& path, std::shared_ptr<const Geometry> reuse) {
  std::ifstream is(path);
  if (!is) fail(Errc::FormatError, "cannot open '" + path + "'");

  ClassFileHeader hdr = read_class_header(is);
  Field field(hdr.p, hdr.h, hdr.modulus);

  std::shared_ptr<const Geometry> geom;
  if (reuse && reuse->field().same_as(field)) {
    geom = std::move(reuse);
  } else {
    geom = std::make_shared<const Geometry>(field);
  }
  const Field& f = geom->field();

  QuadraticForm form;
  form.coeffs = hdr.form;

  LineClass cls(*geom);
  std::string line;
  std::size_t lineno = 5;
  while (std::getline(is, line)) {
    ++lineno;
    const std::string where = " on line " + std::to_string(lineno);
    const std::vector<std::string> toks = split(line, ' ');
    if (toks.size() != 6)
      fail(Errc::FormatError, "expected 6 coordinates" + where);
    std::array<Field::Code, 6> t;
    for (int i = 0; i < 6; ++i) t[i] = f.parse(toks[i]);
    const auto id = geom->line_id(t);
    if (!id)
      fail(Errc::UnknownLine,
           "tuple is not a normalized line of the geometry" + where);
    if (cls.contains(*id)) fail(Errc::FormatError, "duplicate member" + where);
    cls.set(*id, true);
  }

  return LoadedClass{std::move(hdr), geom, form, std::move(cls)};
}

void write_report(std::ostream& os, const ClassFileHeader& hdr, const VerificationReport& r) {
  const Field f(hdr.p, hdr.h, hdr.modulus);
  os << "p=" << hdr.p << "\n";
  os << "h=" << hdr.h << "\n";
  os << "modulus=" << modulus_text(hdr.modulus) << "\n";
  os << "form=" << form_text(f, hdr.form) << "\n";
  os << "convention=" << kConvention << "\n";
  os << "rng=" << SeededRng::kName << "\n";
  os << "seed=" << r.seed << "\n";
  os << "size=" << r.size << "\n";
  os << "x=" << r.x << "\n";
  os << "degree_check=" << (r.degree.pass ? "pass" : "fail") << "\n";
  os << "expected_nonmember_degree=" << r.degree.expected_nonmember << "\n";
  os << "expected_member_degree=" << r.degree.expected_member << "\n";
  if (!r.degree.pass) {
    os << "counterexample_line=" << r.degree.counterexample << "\n";
    os << "counterexample_degree=" << r.degree.counterexample_degree << "\n";
  }
  os << "regular_spread_intersection=" << r.regular_spread_intersection << "\n";
  os << "spreads_sampled=" << r.spreads_sampled << "\n";
  os << "spread_intersections=";
  if (r.spread_histogram.empty()) {
    os << "none";
  } else {
    bool first = true;
    for (const auto& [v, c] : r.spread_histogram) {
      if (!first) os << ' ';
      os << v << ':' << c;
      first = false;
    }
  }
  os << "\n";
  const auto histogram = [&os](const char* key, const std::map<int, long long>& h) {
    os << key << "=";
    bool first = true;
    for (const auto& [v, c] : h) {
      if (!first) os << ' ';
      os << v << ':' << c;
      first = false;
    }
    if (h.empty()) os << "none";
    os << "\n";
  };
  histogram("plane_spectrum", r.plane_spec);
  histogram("point_spectrum", r.point_spec);
  os << "switchable_pairs=" << r.switchable_pair_count << "\n";
  os << "contained_plane=" << (r.contained_plane ? "true" : "false") << "\n";
  os << "disjoint_plane=" << (r.disjoint_plane ? "true" : "false") << "\n";
  os << "contained_star=" << (r.contained_star ? "true" : "false") << "\n";
  os << "disjoint_star=" << (r.disjoint_star ? "true" : "false") << "\n";
  os << "result=" << (r.pass() ? "pass" : "fail") << "\n";
}

}  // namespace cl3
