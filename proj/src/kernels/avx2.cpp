// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include <cstring>

#include "openspace/kernels.hpp"

namespace openspace::kernels::avx2 {
namespace {

static_assert(sizeof(Rgb) == 3, "Rgb must be tightly packed");

// Low byte of each of the eight 32-bit lanes, stored as eight bytes.
inline void store8_u8(std::uint8_t* dst, __m256i v) {
  const __m128i lo = _mm256_castsi256_si128(v);
  const __m128i hi = _mm256_extracti128_si256(v, 1);
  const __m128i words = _mm_packus_epi32(lo, hi);
  _mm_storel_epi64(reinterpret_cast<__m128i*>(dst), _mm_packus_epi16(words, words));
}

inline __m256i load8_u8(const std::uint8_t* src) {
  return _mm256_cvtepu8_epi32(_mm_loadl_epi64(reinterpret_cast<const __m128i*>(src)));
}

// Gathers 4 bytes starting at each of eight consecutive pixels: r in bits
// 0-7, g in 8-15, b in 16-23. Reads one byte past the eighth pixel.
inline void gather_rgb(const Rgb* px, __m256i& r, __m256i& g, __m256i& b) {
  const __m256i offsets = _mm256_setr_epi32(0, 3, 6, 9, 12, 15, 18, 21);
  const __m256i word = _mm256_i32gather_epi32(reinterpret_cast<const int*>(px), offsets, 1);
  const __m256i byte_mask = _mm256_set1_epi32(0xFF);
  r = _mm256_and_si256(word, byte_mask);
  g = _mm256_and_si256(_mm256_srli_epi32(word, 8), byte_mask);
  b = _mm256_and_si256(_mm256_srli_epi32(word, 16), byte_mask);
}

void luma(std::span<const Rgb> in, std::span<std::uint8_t> out) {
  const std::size_t n = in.size();
  std::size_t i = 0;
  const __m256i wr = _mm256_set1_epi32(299);
  const __m256i wg = _mm256_set1_epi32(587);
  const __m256i wb = _mm256_set1_epi32(114);
  const __m256i half = _mm256_set1_epi32(500);
  // Integer division by 1000 through doubles: for x < 2^24 the quotient is
  // never rounded across an integer boundary, so truncation is exact.
  const __m256d thousand = _mm256_set1_pd(1000.0);
  for (; i + 9 <= n; i += 8) {
    __m256i r, g, b;
    gather_rgb(in.data() + i, r, g, b);
    __m256i sum = _mm256_add_epi32(_mm256_mullo_epi32(r, wr), _mm256_mullo_epi32(g, wg));
    sum = _mm256_add_epi32(sum, _mm256_mullo_epi32(b, wb));
    sum = _mm256_add_epi32(sum, half);
    const __m256d lo = _mm256_div_pd(_mm256_cvtepi32_pd(_mm256_castsi256_si128(sum)), thousand);
    const __m256d hi = _mm256_div_pd(_mm256_cvtepi32_pd(_mm256_extracti128_si256(sum, 1)), thousand);
    const __m256i q = _mm256_set_m128i(_mm256_cvttpd_epi32(hi), _mm256_cvttpd_epi32(lo));
    store8_u8(out.data() + i, q);
  }
  if (i < n) scalar::kTable.luma(in.subspan(i), out.subspan(i));
}

void invert(std::span<const std::uint8_t> in, std::span<std::uint8_t> out) {
  const std::size_t n = in.size();
  std::size_t i = 0;
  const __m256i ones = _mm256_set1_epi8(static_cast<char>(0xFF));
  for (; i + 32 <= n; i += 32) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in.data() + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i), _mm256_xor_si256(v, ones));
  }
  if (i < n) scalar::kTable.invert(in.subspan(i), out.subspan(i));
}

void band(std::span<const std::uint8_t> in, std::uint8_t lower, std::uint8_t upper,
          std::span<std::uint8_t> out) {
  const std::size_t n = in.size();
  std::size_t i = 0;
  const __m256i lo = _mm256_set1_epi8(static_cast<char>(lower));
  const __m256i hi = _mm256_set1_epi8(static_cast<char>(upper));
  const __m256i one = _mm256_set1_epi8(1);
  for (; i + 32 <= n; i += 32) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in.data() + i));
    const __m256i ge = _mm256_cmpeq_epi8(_mm256_max_epu8(v, lo), v);
    const __m256i le = _mm256_cmpeq_epi8(_mm256_min_epu8(v, hi), v);
    const __m256i bit = _mm256_and_si256(_mm256_and_si256(ge, le), one);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i), bit);
  }
  if (i < n) scalar::kTable.band(in.subspan(i), lower, upper, out.subspan(i));
}

void excess_green(std::span<const Rgb> in, int threshold, std::span<std::uint8_t> out) {
  const std::size_t n = in.size();
  std::size_t i = 0;
  const __m256i t = _mm256_set1_epi32(threshold);
  const __m256i one = _mm256_set1_epi32(1);
  for (; i + 9 <= n; i += 8) {
    __m256i r, g, b;
    gather_rgb(in.data() + i, r, g, b);
    const __m256i exg = _mm256_sub_epi32(_mm256_add_epi32(g, g), _mm256_add_epi32(r, b));
    store8_u8(out.data() + i, _mm256_and_si256(_mm256_cmpgt_epi32(exg, t), one));
  }
  if (i < n) scalar::kTable.excess_green(in.subspan(i), threshold, out.subspan(i));
}

void clamp_round(std::span<const double> in, std::span<std::uint8_t> out) {
  const std::size_t n = in.size();
  std::size_t i = 0;
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d cap = _mm256_set1_pd(255.0);
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(in.data() + i);
    // round-half-away-from-zero for non-negative v, matching std::round.
    const __m256d whole = _mm256_round_pd(v, _MM_FROUND_TO_ZERO | _MM_FROUND_NO_EXC);
    const __m256d frac = _mm256_sub_pd(v, whole);
    const __m256d bump = _mm256_and_pd(_mm256_cmp_pd(frac, half, _CMP_GE_OQ), one);
    const __m256d rounded = _mm256_min_pd(_mm256_add_pd(whole, bump), cap);
    const __m128i ints = _mm256_cvttpd_epi32(rounded);
    const __m128i words = _mm_packus_epi32(ints, ints);
    const __m128i bytes = _mm_packus_epi16(words, words);
    const int packed = _mm_cvtsi128_si32(bytes);
    std::memcpy(out.data() + i, &packed, 4);
  }
  if (i < n) scalar::kTable.clamp_round(in.subspan(i), out.subspan(i));
}

void sobel(const std::uint8_t* above, const std::uint8_t* center, const std::uint8_t* below,
           std::span<double> out) {
  const std::size_t n = out.size();
  std::size_t i = 0;
  // Each 8-wide step reads bytes [i, i + 10) of the padded rows; loadl reads 8.
  for (; i + 8 <= n; i += 8) {
    const __m256i a0 = load8_u8(above + i), a1 = load8_u8(above + i + 1), a2 = load8_u8(above + i + 2);
    const __m256i c0 = load8_u8(center + i), c2 = load8_u8(center + i + 2);
    const __m256i b0 = load8_u8(below + i), b1 = load8_u8(below + i + 1), b2 = load8_u8(below + i + 2);

    const __m256i left = _mm256_add_epi32(_mm256_add_epi32(a0, b0), _mm256_slli_epi32(c0, 1));
    const __m256i right = _mm256_add_epi32(_mm256_add_epi32(a2, b2), _mm256_slli_epi32(c2, 1));
    const __m256i top = _mm256_add_epi32(_mm256_add_epi32(a0, a2), _mm256_slli_epi32(a1, 1));
    const __m256i bottom = _mm256_add_epi32(_mm256_add_epi32(b0, b2), _mm256_slli_epi32(b1, 1));
    const __m256i gx = _mm256_sub_epi32(left, right);
    const __m256i gy = _mm256_sub_epi32(top, bottom);
    const __m256i sq = _mm256_add_epi32(_mm256_mullo_epi32(gx, gx), _mm256_mullo_epi32(gy, gy));

    const __m256d lo = _mm256_cvtepi32_pd(_mm256_castsi256_si128(sq));
    const __m256d hi = _mm256_cvtepi32_pd(_mm256_extracti128_si256(sq, 1));
    _mm256_storeu_pd(out.data() + i, _mm256_sqrt_pd(lo));
    _mm256_storeu_pd(out.data() + i + 4, _mm256_sqrt_pd(hi));
  }
  if (i < n) scalar::kTable.sobel(above + i, center + i, below + i, out.subspan(i));
}

}  // namespace

const KernelTable kTable{luma, invert, band, excess_green, clamp_round, sobel};

}  // namespace openspace::kernels::avx2
