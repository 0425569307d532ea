#include <cstdlib>
#include <string>

#include "gf2e/counters.hpp"
#include "gf2e/tuning.hpp"

namespace gf2e {

Tuning& tuning() {
  static Tuning instance = [] {
    Tuning t;
    if (const char* env = std::getenv("GF2E_CROSSOVER"); env && *env) {
      try {
        const auto v = std::stoull(env);
        if (v > 0) t.crossover = static_cast<std::size_t>(v);
      } catch (const std::exception&) {
        // malformed value: keep the default
      }
    }
    return t;
  }();
  return instance;
}

OpCounters& op_counters() {
  thread_local OpCounters counters;
  return counters;
}

}  // namespace gf2e
