#include "hopfdg/limits.hpp"

#include <cstdlib>
#include <string>

#include "hopfdg/error.hpp"

namespace hopfdg {

Limits Limits::from_environment() {
  Limits limits;
  if (const char* env = std::getenv("HOPFDG_MAX_WORK"); env && *env) {
    try {
      limits.max_work = std::stoull(env);
    } catch (const std::exception&) {
      throw PreconditionError(std::string("HOPFDG_MAX_WORK is not a number: ") +
                              env);
    }
  }
  return limits;
}

void require_composition_bound(std::size_t vertices, const Limits& limits,
                               const char* what) {
  if (vertices > limits.max_vertices) {
    throw SizeLimitError(std::string(what) + ": " + std::to_string(vertices) +
                         " vertices exceeds the composition bound " +
                         std::to_string(limits.max_vertices));
  }
}

void require_subset_bound(std::size_t vertices, const Limits& limits,
                          const char* what) {
  if (vertices > limits.max_subset_vertices) {
    throw SizeLimitError(std::string(what) + ": " + std::to_string(vertices) +
                         " elements exceeds the subset bound " +
                         std::to_string(limits.max_subset_vertices));
  }
}

void require_work_bound(std::uint64_t base, std::size_t exponent,
                        const Limits& limits, const char* what) {
  std::uint64_t work = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && work > limits.max_work / base) {
      throw SizeLimitError(std::string(what) + ": " + std::to_string(base) +
                           "^" + std::to_string(exponent) +
                           " maps exceeds the work bound " +
                           std::to_string(limits.max_work));
    }
    work *= base;
  }
  if (work > limits.max_work) {
    throw SizeLimitError(std::string(what) + ": work bound exceeded");
  }
}

}  // namespace hopfdg
