#include <cstdlib>
#include <string_view>

#include "openspace/kernels.hpp"

namespace openspace::kernels {

std::string_view backend_name(Backend backend) noexcept {
  switch (backend) {
    case Backend::Scalar:
      return "scalar";
    case Backend::Avx2:
      return "avx2";
  }
  return "unknown";
}

bool backend_available(Backend backend) noexcept {
  switch (backend) {
    case Backend::Scalar:
      return true;
    case Backend::Avx2:
#if defined(OPENSPACE_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

namespace {

Backend select_backend() noexcept {
  if (const char* env = std::getenv("OPENSPACE_BACKEND")) {
    const std::string_view want(env);
    if (want == "scalar") return Backend::Scalar;
    if (want == "avx2") return backend_available(Backend::Avx2) ? Backend::Avx2 : Backend::Scalar;
  }
  return backend_available(Backend::Avx2) ? Backend::Avx2 : Backend::Scalar;
}

}  // namespace

Backend active_backend() noexcept {
  static const Backend selected = select_backend();
  return selected;
}

const KernelTable& table(Backend backend) noexcept {
#if defined(OPENSPACE_HAVE_AVX2)
  if (backend == Backend::Avx2 && backend_available(Backend::Avx2)) return avx2::kTable;
#else
  (void)backend;
#endif
  return scalar::kTable;
}

const KernelTable& active() noexcept { return table(active_backend()); }

}  // namespace openspace::kernels
