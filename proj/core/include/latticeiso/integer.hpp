#ifndef LATTICEISO_INTEGER_HPP
#define LATTICEISO_INTEGER_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace latticeiso {

// Exact arbitrary-precision integer used throughout the number-theory layer.
using Integer = mpz_class;

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

// Largest coordinate magnitude accepted at API boundaries.  Keeps every
// squared norm and 2x2 determinant of user-supplied vectors inside i128.
inline constexpr i64 kMaxCoordinate = i64{1} << 31;

inline i64 to_i64(const Integer& n) {
    if (!n.fits_slong_p()) {
        throw std::overflow_error("integer does not fit in 64 bits: " + n.get_str());
    }
    return static_cast<i64>(n.get_si());
}

inline Integer to_integer(i64 n) {
    Integer z;
    // mpz_class(long) is safe on LP64; go through mpz_import-free path.
    z = static_cast<long>(n);
    return z;
}

// Floor square root for nonnegative 64-bit values.
inline i64 isqrt(i64 n) {
    if (n < 0) throw std::invalid_argument("isqrt of negative value");
    if (n == 0) return 0;
    auto s = static_cast<i64>(std::sqrt(static_cast<double>(n)));
    while (s > 0 && static_cast<i128>(s) * s > n) --s;
    while (static_cast<i128>(s + 1) * (s + 1) <= n) ++s;
    return s;
}

inline i64 ceil_isqrt(i64 n) {
    const i64 s = isqrt(n);
    return s * s == n ? s : s + 1;
}

inline bool is_perfect_square(i64 n, i64* root = nullptr) {
    if (n < 0) return false;
    const i64 s = isqrt(n);
    if (root) *root = s;
    return s * s == n;
}

}  // namespace latticeiso

#endif  // LATTICEISO_INTEGER_HPP
