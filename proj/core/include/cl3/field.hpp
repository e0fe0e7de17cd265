#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cl3/errors.hpp"

namespace cl3 {

/// Arithmetic in GF(q), q = p^h with p an odd prime.
///
/// Elements are stored as integer codes in [0, q): the base-p digits of a
/// code are the coefficients of its polynomial-basis representative, least
/// significant digit = constant term. Code order (0, 1, 2, ...) is the
/// canonical element ordering used everywhere downstream.
///
/// A Field is immutable after construction; all operations are pure and
/// safe to share across threads.
class Field {
 public:
  using Code = std::uint16_t;

  /// Builds GF(p^h). If `modulus` is omitted, the default modulus is the
  /// monic irreducible of degree h whose coefficient tuple has the smallest
  /// integer encoding sum(c_i p^i); it is recorded and reported so files
  /// stay reproducible. An explicit modulus must be monic of degree h with
  /// coefficients in [0, p), listed ascending (constant term first).
  explicit Field(int p, int h = 1,
                 std::optional<std::vector<int>> modulus = std::nullopt);

  int p() const noexcept { return p_; }
  int h() const noexcept { return h_; }
  int q() const noexcept { return q_; }

  /// Modulus polynomial, length h+1, ascending degree, monic. For h = 1 this
  /// is the convention polynomial t + c (default t).
  const std::vector<int>& modulus() const noexcept { return modulus_; }

  Code zero() const noexcept { return 0; }
  Code one() const noexcept { return 1; }

  Code add(Code a, Code b) const;
  Code sub(Code a, Code b) const;
  Code neg(Code a) const;
  Code mul(Code a, Code b) const;
  Code inv(Code a) const;  // DivisionByZero on 0
  Code pow(Code a, long long e) const;

  /// True iff a is a nonzero square, i.e. a^((q-1)/2) = 1. Exactly (q-1)/2
  /// nonzero elements are squares. Rejects 0 with ZeroArgument.
  bool is_square(Code a) const;

  /// a^(p^k), the k-th power of the Frobenius automorphism; 0 <= k < h.
  Code frobenius(Code a, int k) const;

  std::vector<int> coeffs(Code a) const;
  Code from_coeffs(const std::vector<int>& c) const;

  /// Canonical text form: coefficients ascending, comma separated ("2" for
  /// prime fields, "0,1" for t in GF(p^2), ...).
  std::string to_string(Code a) const;
  Code parse(const std::string& s) const;

  /// Structural identity: same p, h and modulus. Two fields that agree here
  /// produce identical codes for identical elements.
  bool same_as(const Field& other) const noexcept;

 private:
  int p_ = 0;
  int h_ = 0;
  int q_ = 0;
  std::vector<int> modulus_;

  // Dense op tables, built when q is small enough that q*q entries are cheap.
  bool dense_ = false;
  std::vector<Code> add_tab_;  // q*q
  std::vector<Code> mul_tab_;  // q*q
  std::vector<Code> neg_tab_;  // q
  std::vector<Code> inv_tab_;  // q, entry 0 unused
  std::vector<Code> frob_tab_;  // h*q
  std::vector<std::uint8_t> square_tab_;  // q, entry 0 unused

  Code add_generic(Code a, Code b) const;
  Code mul_generic(Code a, Code b) const;
  Code pow_generic(Code a, long long e) const;
};

/// Value type pairing a code with its field, with structural field checks on
/// every binary operation (MixedFields when they differ).
class FieldElement {
 public:
  FieldElement(const Field& f, Field::Code c) : field_(&f), code_(c) {}

  const Field& field() const noexcept { return *field_; }
  Field::Code code() const noexcept { return code_; }
  std::vector<int> coeffs() const { return field_->coeffs(code_); }
  bool is_zero() const noexcept { return code_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(long long e) const;
  bool is_square() const { return field_->is_square(code_); }

  bool operator==(const FieldElement& o) const {
    return field_->same_as(*o.field_) && code_ == o.code_;
  }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

 private:
  const Field* field_;
  Field::Code code_;
};

}  // namespace cl3
