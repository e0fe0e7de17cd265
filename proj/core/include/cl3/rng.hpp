#pragma once

#include <cstdint>
#include <random>

namespace cl3 {

/// Seeded mt19937_64 with a rejection-sampled uniform, so that identical
/// seeds give identical draws on every platform (std distributions do not
/// guarantee that).
class SeededRng {
 public:
  static constexpr const char* kName = "mt19937_64";

  explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform draw from [0, n).
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
      v = eng_();
    } while (v >= limit);
    return v % n;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace cl3
