#include "cl3/field.hpp"

#include <algorithm>
#include <sstream>

namespace cl3 {

namespace {

// Dense q*q add/mul tables are built below this bound (2 tables * 2 bytes *
// q^2 = 4 MiB at the limit). Larger fields fall back to digit arithmetic.
constexpr int kDenseLimit = 1024;

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Polynomials over GF(p): coefficient vectors, ascending degree, reduced
// mod p, no trailing zeros (the zero polynomial is the empty vector).
using Poly = std::vector<int>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  trim(r);
  return r;
}

// Remainder of a modulo monic divisor m.
Poly poly_mod(Poly a, const Poly& m, int p) {
  const int dm = static_cast<int>(m.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= dm) {
    const int shift = static_cast<int>(a.size()) - 1 - dm;
    const int lead = a.back();
    for (int i = 0; i <= dm; ++i) {
      int& c = a[shift + i];
      c = ((c - lead * m[i]) % p + p) % p;
    }
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

Poly poly_from_code(long long code, int p) {
  Poly c;
  while (code > 0) {
    c.push_back(static_cast<int>(code % p));
    code /= p;
  }
  return c;
}

// Monic polynomial of degree d whose lower coefficients are the base-p
// digits of `code`.
Poly monic_from_code(long long code, int d, int p) {
  Poly c(d + 1, 0);
  for (int i = 0; i < d && code > 0; ++i, code /= p) c[i] = static_cast<int>(code % p);
  c[d] = 1;
  return c;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool poly_irreducible(const Poly& m, int p) {
  const int deg = static_cast<int>(m.size()) - 1;
  if (deg == 1) return true;
  for (int d = 1; 2 * d <= deg; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
      if (poly_mod(m, monic_from_code(code, d, p), p).empty()) return false;
    }
  }
  return true;
}

Poly default_modulus(int p, int h) {
  long long count = 1;
  for (int i = 0; i < h; ++i) count *= p;
  for (long long code = 0; code < count; ++code) {
    Poly cand = monic_from_code(code, h, p);
    if (poly_irreducible(cand, p)) return cand;
  }
  fail(Errc::InvalidArgument, "no irreducible polynomial found");  // unreachable
}

}  // namespace

Field::Field(int p, int h, std::optional<std::vector<int>> modulus) : p_(p), h_(h) {
  if (!is_prime(p)) fail(Errc::NotPrime, "p = " + std::to_string(p));
  if (p == 2) fail(Errc::EvenCharacteristic, "characteristic must be odd");
  if (h < 1) fail(Errc::InvalidArgument, "extension degree must be >= 1");

  long long q = 1;
  for (int i = 0; i < h; ++i) {
    q *= p;
    if (q > (1 << 14)) fail(Errc::TooLarge, "q exceeds 2^14");
  }
  q_ = static_cast<int>(q);

  if (modulus) {
    Poly m = *modulus;
    if (static_cast<int>(m.size()) != h + 1 || m.back() != 1)
      fail(Errc::InvalidArgument, "modulus must be monic of degree h");
    for (int& c : m) c = ((c % p) + p) % p;
    if (m.back() != 1) fail(Errc::InvalidArgument, "modulus must be monic of degree h");
    if (!poly_irreducible(m, p))
      fail(Errc::ReduciblePolynomial, "modulus factors over GF(p)");
    modulus_ = std::move(m);
  } else {
    modulus_ = default_modulus(p, h);
  }

  neg_tab_.resize(q_);
  for (int a = 0; a < q_; ++a) {
    std::vector<int> c = coeffs(static_cast<Code>(a));
    for (int& v : c) v = (p_ - v) % p_;
    neg_tab_[a] = from_coeffs(c);
  }

  dense_ = q_ <= kDenseLimit;
  if (dense_) {
    add_tab_.resize(static_cast<std::size_t>(q_) * q_);
    mul_tab_.resize(static_cast<std::size_t>(q_) * q_);
    for (int a = 0; a < q_; ++a)
      for (int b = 0; b < q_; ++b) {
        add_tab_[static_cast<std::size_t>(a) * q_ + b] =
            add_generic(static_cast<Code>(a), static_cast<Code>(b));
        mul_tab_[static_cast<std::size_t>(a) * q_ + b] =
            mul_generic(static_cast<Code>(a), static_cast<Code>(b));
      }
  }

  inv_tab_.resize(q_, 0);
  for (int a = 1; a < q_; ++a)
    inv_tab_[a] = pow_generic(static_cast<Code>(a), q_ - 2);

  square_tab_.resize(q_, 0);
  for (int a = 1; a < q_; ++a)
    square_tab_[a] = pow_generic(static_cast<Code>(a), (q_ - 1) / 2) == 1 ? 1 : 0;

  frob_tab_.resize(static_cast<std::size_t>(h_) * q_);
  long long pk = 1;
  for (int k = 0; k < h_; ++k) {
    for (int a = 0; a < q_; ++a)
      frob_tab_[static_cast<std::size_t>(k) * q_ + a] = pow_generic(static_cast<Code>(a), pk);
    pk *= p_;
  }
}

Field::Code Field::add_generic(Code a, Code b) const {
  int r = 0, mult = 1;
  int x = a, y = b;
  while (x > 0 || y > 0) {
    r += ((x % p_) + (y % p_)) % p_ * mult;
    x /= p_;
    y /= p_;
    mult *= p_;
  }
  return static_cast<Code>(r);
}

Field::Code Field::mul_generic(Code a, Code b) const {
  Poly r = poly_mod(poly_mul(poly_from_code(a, p_), poly_from_code(b, p_), p_), modulus_, p_);
  int code = 0, mult = 1;
  for (int c : r) {
    code += c * mult;
    mult *= p_;
  }
  return static_cast<Code>(code);
}

Field::Code Field::pow_generic(Code a, long long e) const {
  Code r = 1, base = a;
  while (e > 0) {
    if (e & 1) r = mul_generic(r, base);
    base = mul_generic(base, base);
    e >>= 1;
  }
  return r;
}

Field::Code Field::add(Code a, Code b) const {
  if (dense_) return add_tab_[static_cast<std::size_t>(a) * q_ + b];
  return add_generic(a, b);
}

Field::Code Field::sub(Code a, Code b) const { return add(a, neg_tab_[b]); }

Field::Code Field::neg(Code a) const { return neg_tab_[a]; }

Field::Code Field::mul(Code a, Code b) const {
  if (dense_) return mul_tab_[static_cast<std::size_t>(a) * q_ + b];
  return mul_generic(a, b);
}

Field::Code Field::inv(Code a) const {
  if (a == 0) fail(Errc::DivisionByZero, "inverse of zero");
  return inv_tab_[a];
}

Field::Code Field::pow(Code a, long long e) const {
  if (e < 0) {
    if (a == 0) fail(Errc::DivisionByZero, "negative power of zero");
    return pow(inv(a), -e);
  }
  if (a == 0) return e == 0 ? one() : zero();
  // Exponents live in Z/(q-1) for nonzero bases.
  e %= q_ - 1;
  Code r = 1, base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

bool Field::is_square(Code a) const {
  if (a == 0) fail(Errc::ZeroArgument, "0 has no square class");
  return square_tab_[a] != 0;
}

Field::Code Field::frobenius(Code a, int k) const {
  if (k < 0 || k >= h_) fail(Errc::InvalidArgument, "automorphism index out of range");
  return frob_tab_[static_cast<std::size_t>(k) * q_ + a];
}

std::vector<int> Field::coeffs(Code a) const {
  std::vector<int> c(h_, 0);
  int x = a;
  for (int i = 0; i < h_ && x > 0; ++i) {
    c[i] = x % p_;
    x /= p_;
  }
  return c;
}

Field::Code Field::from_coeffs(const std::vector<int>& c) const {
  if (static_cast<int>(c.size()) > h_)
    fail(Errc::InvalidArgument, "too many coefficients");
  int code = 0, mult = 1;
  for (int v : c) {
    code += (((v % p_) + p_) % p_) * mult;
    mult *= p_;
  }
  return static_cast<Code>(code);
}

std::string Field::to_string(Code a) const {
  std::vector<int> c = coeffs(a);
  std::string s;
  for (int i = 0; i < h_; ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  return s;
}

Field::Code Field::parse(const std::string& s) const {
  std::vector<int> c;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t pos = 0;
      int v = std::stoi(tok, &pos);
      if (pos != tok.size() || v < 0 || v >= p_)
        fail(Errc::FormatError, "bad coefficient '" + tok + "'");
      c.push_back(v);
    } catch (const Error&) {
      throw;
    } catch (...) {
      fail(Errc::FormatError, "bad coefficient '" + tok + "'");
    }
  }
  if (static_cast<int>(c.size()) != h_)
    fail(Errc::FormatError, "expected " + std::to_string(h_) + " coefficients");
  return from_coeffs(c);
}

bool Field::same_as(const Field& other) const noexcept {
  return p_ == other.p_ && h_ == other.h_ && modulus_ == other.modulus_;
}

namespace {
const Field& check_same(const Field& a, const Field& b) {
  if (!a.same_as(b)) fail(Errc::MixedFields, "elements of different fields");
  return a;
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
  return {check_same(*field_, *o.field_), field_->add(code_, o.code_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  return {check_same(*field_, *o.field_), field_->sub(code_, o.code_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  return {check_same(*field_, *o.field_), field_->mul(code_, o.code_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  return {check_same(*field_, *o.field_), field_->mul(code_, field_->inv(o.code_))};
}
FieldElement FieldElement::operator-() const { return {*field_, field_->neg(code_)}; }
FieldElement FieldElement::inverse() const { return {*field_, field_->inv(code_)}; }
FieldElement FieldElement::pow(long long e) const { return {*field_, field_->pow(code_, e)}; }

const char* to_string(Errc c) {
  switch (c) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::EvenCharacteristic: return "EvenCharacteristic";
    case Errc::ReduciblePolynomial: return "ReduciblePolynomial";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ZeroArgument: return "ZeroArgument";
    case Errc::MixedFields: return "MixedFields";
    case Errc::TooLarge: return "TooLarge";
    case Errc::EqualPoints: return "EqualPoints";
    case Errc::NonIncidentPair: return "NonIncidentPair";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::NotElliptic: return "NotElliptic";
    case Errc::NotTangent: return "NotTangent";
    case Errc::NotIncident: return "NotIncident";
    case Errc::ConditionsViolated: return "ConditionsViolated";
    case Errc::NoSolution: return "NoSolution";
    case Errc::NoSwitchablePair: return "NoSwitchablePair";
    case Errc::PartitionFailure: return "PartitionFailure";
    case Errc::SizeNotMultiple: return "SizeNotMultiple";
    case Errc::GeometryMismatch: return "GeometryMismatch";
    case Errc::FormatError: return "FormatError";
    case Errc::UnknownLine: return "UnknownLine";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace cl3
