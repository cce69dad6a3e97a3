#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "quandles/errors.hpp"

namespace quandles {

/// Arbitrary-precision integer. Moduli of the form n^(p^k) - 1 overflow any
/// native width almost immediately, so everything theorem-facing runs on this.
using bigint = mpz_class;

/// base^exp as an exact integer.
inline bigint pow_u64(std::uint64_t base, std::uint64_t exp) {
    bigint r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exp));
    return r;
}

/// Canonical residue of v in [0, m). Works for negative v; m must be positive.
inline bigint mod_reduce(const bigint& v, const bigint& m) {
    if (m <= 0) throw domain_error("mod_reduce: modulus must be positive");
    bigint r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline std::string to_decimal(const bigint& v) { return v.get_str(10); }

inline bigint from_decimal(const std::string& s) {
    bigint r;
    if (s.empty() || mpz_set_str(r.get_mpz_t(), s.c_str(), 10) != 0)
        throw domain_error("not a decimal integer: \"" + s + "\"");
    return r;
}

inline bool fits_u64(const bigint& v) {
    return v >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const bigint& v) {
    if (!fits_u64(v)) throw domain_error("value does not fit in 64 bits: " + to_decimal(v));
    std::uint64_t lo = mpz_getlimbn(v.get_mpz_t(), 0);
    return lo;
}

/// Number of bits in |v|; 0 for v = 0.
inline std::size_t bit_length(const bigint& v) {
    if (v == 0) return 0;
    return mpz_sizeinbase(v.get_mpz_t(), 2);
}

} // namespace quandles
