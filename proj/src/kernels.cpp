#include "codb/kernels.hpp"

#include <atomic>
#include <cstdlib>

namespace codb::kernels {
namespace {

#if defined(CODB_WITH_BMI2)
bool cpu_has_bmi2() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("bmi2") && __builtin_cpu_supports("popcnt");
}
#endif

const KernelTable* initial() {
  const char* forced = std::getenv("CODB_KERNELS");
  if (forced != nullptr && std::string_view(forced) == "scalar") return &scalar();
  if (const KernelTable* fast = bmi2()) return fast;
  return &scalar();
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{initial()};
  return table;
}

}  // namespace

const KernelTable* bmi2() {
#if defined(CODB_WITH_BMI2)
  static const bool supported = cpu_has_bmi2();
  return supported ? detail::bmi2_table() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() { return *current().load(std::memory_order_relaxed); }

bool use(std::string_view name) {
  if (name == "scalar") {
    current().store(&scalar(), std::memory_order_relaxed);
    return true;
  }
  if (name == "bmi2" && bmi2() != nullptr) {
    current().store(bmi2(), std::memory_order_relaxed);
    return true;
  }
  return false;
}

std::vector<std::string_view> available() {
  std::vector<std::string_view> names{"scalar"};
  if (bmi2() != nullptr) names.push_back("bmi2");
  return names;
}

}  // namespace codb::kernels
