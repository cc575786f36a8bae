#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace hopfdg {

/// Resource bounds shared by every enumeration in the library.
struct Limits {
  /// Largest vertex set for which compositions are enumerated.
  std::size_t max_vertices = 9;
  /// Largest ground set for which all 2^|I| subsets are scanned.
  std::size_t max_subset_vertices = 20;
  /// Largest number of maps scanned by a brute-force counter.
  std::uint64_t max_work = 100'000'000;
  /// Worker threads for brute-force scans; results do not depend on it.
  unsigned threads = 1;

  /// Defaults, with max_work overridden by HOPFDG_MAX_WORK when set.
  static Limits from_environment();
};

void require_composition_bound(std::size_t vertices, const Limits& limits,
                               const char* what);
void require_subset_bound(std::size_t vertices, const Limits& limits,
                          const char* what);
/// Throws SizeLimitError unless base^exponent <= limits.max_work.
void require_work_bound(std::uint64_t base, std::size_t exponent,
                        const Limits& limits, const char* what);

}  // namespace hopfdg
