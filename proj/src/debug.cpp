#include "equicolor/debug.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace equicolor {
namespace {

bool from_environment() {
  const char* value = std::getenv("EQUICOLOR_DEBUG_ASSERT");
  return value != nullptr && std::strcmp(value, "1") == 0;
}

std::atomic<bool>& flag() {
  static std::atomic<bool> enabled{from_environment()};
  return enabled;
}

}  // namespace

bool debug_asserts_enabled() { return flag().load(std::memory_order_relaxed); }

void set_debug_asserts(bool enabled) { flag().store(enabled, std::memory_order_relaxed); }

}  // namespace equicolor
