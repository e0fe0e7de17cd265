#pragma once

#include <optional>
#include <utility>

#include "cl3/errors.hpp"

// Runs f and reports which library error code it threw, if any.  Lets tests
// assert on the code rather than the message text.
template <class F>
std::optional<cl3::Errc> thrown_code(F&& f) {
  try {
    std::forward<F>(f)();
  } catch (const cl3::Error& e) {
    return e.code();
  }
  return std::nullopt;
}
