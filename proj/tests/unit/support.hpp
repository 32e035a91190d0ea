#pragma once

#include <functional>
#include <string>

#include "btau/rational.hpp"

// Message of the btau::Error thrown by f, or "" when nothing is thrown.
inline std::string error_message(const std::function<void()>& f) {
  try {
    f();
  } catch (const btau::Error& e) {
    return e.what();
  }
  return "";
}

inline bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }
