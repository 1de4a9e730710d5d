#pragma once

// Per-row pixel kernels used by the raster conversions and filters.
//
// Every kernel has a scalar reference implementation and, where the build
// and CPU allow it, an AVX2 variant. The variant is chosen once at runtime;
// the variants are required to be bit-identical to the scalar path, and the
// kernel equivalence tests hold them to that.

#include <cstdint>
#include <span>
#include <string_view>

#include "openspace/raster.hpp"

namespace openspace::kernels {

enum class Backend { Scalar, Avx2 };

std::string_view backend_name(Backend backend) noexcept;

/// Compiled in and supported by the running CPU.
bool backend_available(Backend backend) noexcept;

/// Best available backend, unless OPENSPACE_BACKEND=scalar|avx2 says otherwise
/// (an unavailable request falls back to scalar).
Backend active_backend() noexcept;

struct KernelTable {
  /// out[i] = round(0.299 r + 0.587 g + 0.114 b)
  void (*luma)(std::span<const Rgb> in, std::span<std::uint8_t> out);
  /// out[i] = 255 - in[i]
  void (*invert)(std::span<const std::uint8_t> in, std::span<std::uint8_t> out);
  /// out[i] = lower <= in[i] <= upper
  void (*band)(std::span<const std::uint8_t> in, std::uint8_t lower, std::uint8_t upper,
               std::span<std::uint8_t> out);
  /// out[i] = 2g - r - b > threshold
  void (*excess_green)(std::span<const Rgb> in, int threshold, std::span<std::uint8_t> out);
  /// out[i] = min(round(in[i]), 255); inputs are finite and >= 0
  void (*clamp_round)(std::span<const double> in, std::span<std::uint8_t> out);
  /// Sobel magnitude of one row. `above`, `center`, `below` are the three
  /// source rows padded by one replicated pixel on each side, so each holds
  /// out.size() + 2 bytes; out[i] is centred on padded index i + 1.
  void (*sobel)(const std::uint8_t* above, const std::uint8_t* center, const std::uint8_t* below,
                std::span<double> out);
};

const KernelTable& table(Backend backend) noexcept;
const KernelTable& active() noexcept;

namespace scalar {
extern const KernelTable kTable;
}

#if defined(OPENSPACE_HAVE_AVX2)
namespace avx2 {
extern const KernelTable kTable;
}
#endif

}  // namespace openspace::kernels
