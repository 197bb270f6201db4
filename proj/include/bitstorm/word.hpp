#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>

// Bit-level value primitives shared by the interpreter, the reference
// evaluator and the fault engine. Everything here is deterministic: fp32
// arithmetic is IEEE-754 binary32 round-to-nearest-even, fp16 conversions
// round once from a double intermediate, and the transcendental helpers
// go through double precision so golden and reference runs agree bitwise.

namespace bitstorm {

using Word32 = uint32_t;

inline constexpr Word32 flip_bit(Word32 w, unsigned bit) {
    return w ^ (Word32{1} << (bit & 31u));
}

inline float f32_from_bits(Word32 w) { return std::bit_cast<float>(w); }
inline Word32 f32_bits(float f) { return std::bit_cast<Word32>(f); }

// ---- fp16 (IEEE-754 binary16) packed two per word: lane0 = bits 0..15,
// ---- lane1 = bits 16..31.

inline uint16_t lo16(Word32 w) { return static_cast<uint16_t>(w & 0xffffu); }
inline uint16_t hi16(Word32 w) { return static_cast<uint16_t>(w >> 16); }
inline Word32 pack16(uint16_t lo, uint16_t hi) {
    return static_cast<Word32>(lo) | (static_cast<Word32>(hi) << 16);
}

// Exact widening conversion.
inline float f16_to_f32(uint16_t h) {
    const uint32_t sign = (h & 0x8000u) << 16;
    const uint32_t exp = (h >> 10) & 0x1fu;
    const uint32_t frac = h & 0x3ffu;
    uint32_t out;
    if (exp == 0) {
        if (frac == 0) {
            out = sign;
        } else {
            // subnormal: renormalize
            int e = -1;
            uint32_t f = frac;
            do {
                f <<= 1;
                ++e;
            } while ((f & 0x400u) == 0);
            out = sign | ((127 - 15 - e) << 23) | ((f & 0x3ffu) << 13);
        }
    } else if (exp == 31) {
        out = sign | 0x7f800000u | (frac << 13);  // inf / nan (payload kept)
    } else {
        out = sign | ((exp + 127 - 15) << 23) | (frac << 13);
    }
    return f32_from_bits(out);
}

// Round a double to binary16 with a single round-to-nearest-even step.
// Power-of-two scalings below are exact in double, so the integer rounding
// is the only rounding that happens.
inline uint16_t f16_from_double(double v) {
    const uint16_t sign = std::signbit(v) ? 0x8000u : 0u;
    if (std::isnan(v)) return static_cast<uint16_t>(sign | 0x7e00u);
    double a = std::fabs(v);
    if (a >= 65520.0) return static_cast<uint16_t>(sign | 0x7c00u);  // inf
    if (a == 0.0) return sign;

    auto round_even = [](double q) -> uint64_t {
        uint64_t i = static_cast<uint64_t>(q);
        const double frac = q - static_cast<double>(i);
        if (frac > 0.5 || (frac == 0.5 && (i & 1u))) ++i;
        return i;
    };

    int e = std::ilogb(a);
    if (e < -14) {
        // subnormal range: unit is 2^-24
        const uint64_t s = round_even(std::ldexp(a, 24));
        return static_cast<uint16_t>(sign | s);  // s == 1024 rolls into normal
    }
    uint64_t s = round_even(std::ldexp(a, 10 - e));  // in [1024, 2048]
    if (s == 2048) {
        s = 1024;
        ++e;
        if (e > 15) return static_cast<uint16_t>(sign | 0x7c00u);
    }
    return static_cast<uint16_t>(sign | ((e + 15) << 10) | (s - 1024));
}

inline uint16_t f32_to_f16(float f) { return f16_from_double(static_cast<double>(f)); }

// ---- fp32 scalar ops (the only fp32 arithmetic paths in the project).

inline float fadd32(float a, float b) { return a + b; }
inline float fmul32(float a, float b) { return a * b; }
inline float ffma32(float a, float b, float c) { return std::fmaf(a, b, c); }

// MUFU helpers: evaluated in double, rounded once to fp32.
inline float mufu_rcp(float x) { return 1.0f / x; }
inline float mufu_rsq(float x) { return static_cast<float>(1.0 / std::sqrt(static_cast<double>(x))); }
inline float mufu_ex2(float x) { return static_cast<float>(std::exp2(static_cast<double>(x))); }
inline float mufu_lg2(float x) { return static_cast<float>(std::log2(static_cast<double>(x))); }

// ---- fp16 lane ops: exact double arithmetic, one rounding to fp16.

inline uint16_t h16_add(uint16_t a, uint16_t b) {
    return f16_from_double(static_cast<double>(f16_to_f32(a)) + static_cast<double>(f16_to_f32(b)));
}
inline uint16_t h16_mul(uint16_t a, uint16_t b) {
    return f16_from_double(static_cast<double>(f16_to_f32(a)) * static_cast<double>(f16_to_f32(b)));
}
inline uint16_t h16_fma(uint16_t a, uint16_t b, uint16_t c) {
    return f16_from_double(std::fma(static_cast<double>(f16_to_f32(a)),
                                    static_cast<double>(f16_to_f32(b)),
                                    static_cast<double>(f16_to_f32(c))));
}

// ---- deterministic RNG / hashing

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}
    uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // Unbiased draw in [0, n) via bitmask rejection.
    uint64_t below(uint64_t n) {
        if (n <= 1) return 0;
        uint64_t mask = ~uint64_t{0} >> std::countl_zero(n - 1);
        uint64_t v;
        do {
            v = next() & mask;
        } while (v >= n);
        return v;
    }

private:
    uint64_t state_;
};

inline constexpr uint64_t kFnvOffset = 14695981039346656037ull;
inline constexpr uint64_t kFnvPrime = 1099511628211ull;

inline uint64_t fnv1a64(const void* data, size_t len, uint64_t h = kFnvOffset) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= kFnvPrime;
    }
    return h;
}

}  // namespace bitstorm
