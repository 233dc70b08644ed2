#ifndef MMLAB_LIMITS_HPP
#define MMLAB_LIMITS_HPP

#include <cstdlib>
#include <string>

#include "mmlab/error.hpp"

namespace mmlab {

/// Enumeration bounds. Exceeding one raises TooLarge; nothing is ever truncated.
struct Limits {
  int max_order = 8;             // validators, circuits, bases, q1
  int max_class_size = 4;
  int max_iso_order = 5;         // isomorphism search
  int max_iso_class_size = 3;
  int max_ort_order = 7;         // brute-force orienting transversals
  int max_cycle_order = 6;       // multimatroid cycle space
  int max_minor_scan_order = 6;  // has_minor
  int max_strongly_binary_order = 10;
  int max_extension_order = 4;
  int max_matroid_enum = 16;     // matroid circuits, Tutte
  int max_cycle_space_cols = 24;
  int max_interlace_vertices = 12;
  int max_global_interlace_vertices = 9;
  int max_eulerian_vertices = 20;

  /// MMLAB_MAX_ORDER raises (or lowers) every order-type bound to the given value.
  static Limits from_environment() {
    Limits l;
    if (const char* env = std::getenv("MMLAB_MAX_ORDER"); env != nullptr && *env != '\0') {
      char* end = nullptr;
      const long v = std::strtol(env, &end, 10);
      require(end != nullptr && *end == '\0' && v >= 0 && v <= 64, ErrorCode::InvalidArgument,
              "MMLAB_MAX_ORDER must be an integer in [0,64]");
      const int n = static_cast<int>(v);
      l.max_order = l.max_iso_order = l.max_ort_order = l.max_cycle_order = n;
      l.max_minor_scan_order = l.max_strongly_binary_order = l.max_extension_order = n;
    }
    return l;
  }
};

inline const Limits& limits() {
  static const Limits instance = Limits::from_environment();
  return instance;
}

inline void check_bound(int value, int bound, const std::string& what) {
  require(value <= bound, ErrorCode::TooLarge,
          what + " = " + std::to_string(value) + " exceeds bound " + std::to_string(bound));
}

}  // namespace mmlab

#endif  // MMLAB_LIMITS_HPP
