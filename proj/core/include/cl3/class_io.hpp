#pragma once

#include <iosfwd>
#include <memory>
#include <string>

#include "cl3/line_class.hpp"
#include "cl3/quadric.hpp"
#include "cl3/verify.hpp"

namespace cl3 {

/// Provenance carried by class files and reports: the field model and the
/// quadratic form the class was built against.
struct ClassFileHeader {
  int p = 0;
  int h = 1;
  std::vector<int> modulus;            // h+1 ascending coefficients, monic
  std::array<Field::Code, 10> form{};  // quadratic form coefficients
};

ClassFileHeader make_header(const Field& f, const QuadraticForm& form);

/// Text format: five header lines (p=, h=, modulus=, form=,
/// convention=first-nonzero-1), then one member per line as six
/// space-separated coordinates, each a comma-separated coefficient list.
/// Members are written in ascending id order, already normalized.
void write_class_file(std::ostream& os, const LineClass& L, const QuadraticForm& form);
void write_class_file(const std::string& path, const LineClass& L, const QuadraticForm& form);

/// FormatError on any deviation from the five-line header.
ClassFileHeader read_class_header(std::istream& is);

struct LoadedClass {
  ClassFileHeader header;
  std::shared_ptr<const Geometry> geometry;
  QuadraticForm form;
  LineClass cls;
};

/// Builds the field and geometry named by the header, or reuses `reuse` when
/// its field matches. Member tuples must be normalized and name existing
/// lines: FormatError on malformed or duplicate entries, UnknownLine when a
/// tuple is not in the line table.
LoadedClass load_class_file(const std::string& path,
                            std::shared_ptr<const Geometry> reuse = nullptr);

/// Stable key=value rendering: provenance header, generator identity and
/// seed, then the report fields in fixed order. Identical inputs produce
/// identical bytes; the worker count never appears.
void write_report(std::ostream& os, const ClassFileHeader& hdr, const VerificationReport& r);

}  // namespace cl3
