#include <cstdlib>
#include <string_view>

#include "spinchain/kernels.hpp"

namespace spinchain::kernels {

#if defined(SPINCHAIN_HAVE_AVX2_TU)
const KernelTable* avx2_table_impl();
#endif

std::string_view to_string(Backend backend) {
  return backend == Backend::Avx2 ? "avx2" : "scalar";
}

const KernelTable* avx2_table() {
#if defined(SPINCHAIN_HAVE_AVX2_TU)
  return avx2_table_impl();
#else
  return nullptr;
#endif
}

bool cpu_supports(Backend backend) {
  if (backend == Backend::Scalar) return true;
#if defined(SPINCHAIN_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable& table_for(Backend backend) {
  if (backend == Backend::Avx2 && avx2_table() != nullptr && cpu_supports(Backend::Avx2)) {
    return *avx2_table();
  }
  return scalar_table();
}

namespace {
const KernelTable& select() {
  const char* env = std::getenv("SPINCHAIN_KERNELS");
  if (env != nullptr && std::string_view(env) == "scalar") return scalar_table();
  return table_for(Backend::Avx2);
}
}  // namespace

const KernelTable& active() {
  static const KernelTable& table = select();
  return table;
}

}  // namespace spinchain::kernels
