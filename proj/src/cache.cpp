#include "mops/cache.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace mops {

namespace {

std::size_t initialLimit() {
  std::size_t mb = 1024;
  if (const char* env = std::getenv("MOPS_CACHE_MB")) {
    try {
      long v = std::stol(env);
      if (v > 0) mb = static_cast<std::size_t>(v);
    } catch (...) {
    }
  }
  return mb << 20;
}

std::atomic<std::size_t>& limit() {
  static std::atomic<std::size_t> value{initialLimit()};
  return value;
}

}  // namespace

std::size_t CacheBudget::limitBytes() { return limit().load(); }

void CacheBudget::setLimitMB(std::size_t mb) { limit().store(mb << 20); }

}  // namespace mops
