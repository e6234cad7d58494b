#include "icx/limits.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace icx::limits {
namespace {

std::uint64_t env_or(const char* name, std::uint64_t fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  char* end = nullptr;
  unsigned long long parsed = std::strtoull(v, &end, 10);
  if (end == v || parsed == 0) return fallback;
  return static_cast<std::uint64_t>(parsed);
}

std::atomic<std::uint64_t>& group_order_cap() {
  static std::atomic<std::uint64_t> cap{env_or("ICX_MAX_GROUP_ORDER", 1'000'000)};
  return cap;
}

std::atomic<std::uint64_t>& faces_cap() {
  static std::atomic<std::uint64_t> cap{env_or("ICX_MAX_FACES", 50'000)};
  return cap;
}

std::atomic<std::uint64_t>& product_pairs_cap() {
  static std::atomic<std::uint64_t> cap{env_or("ICX_MAX_PRODUCT_PAIRS", 1'000'000)};
  return cap;
}

std::atomic<std::uint64_t>& exhaustive_rank_cap() {
  static std::atomic<std::uint64_t> cap{env_or("ICX_MAX_EXHAUSTIVE_RANK", 8)};
  return cap;
}

} // namespace

std::uint64_t max_group_order() { return group_order_cap().load(); }
void set_max_group_order(std::uint64_t v) { group_order_cap().store(v); }

std::size_t max_faces() { return static_cast<std::size_t>(faces_cap().load()); }
void set_max_faces(std::size_t v) { faces_cap().store(v); }

std::uint64_t max_product_pairs() { return product_pairs_cap().load(); }
void set_max_product_pairs(std::uint64_t v) { product_pairs_cap().store(v); }

int max_exhaustive_rank() { return static_cast<int>(exhaustive_rank_cap().load()); }
void set_max_exhaustive_rank(int v) { exhaustive_rank_cap().store(static_cast<std::uint64_t>(v)); }

} // namespace icx::limits
