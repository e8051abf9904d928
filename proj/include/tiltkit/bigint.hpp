// Exact integers via GMP, plus the handful of helpers the algebra layer needs.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tiltkit {

using Int = mpz_class;

// Nonnegative gcd; gcd(0,0) = 0.
inline Int gcd_int(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm_int(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

// Remainder in [0, m) for m > 0.
inline Int mod_floor(const Int& a, const Int& m) {
    if (m <= 0) throw std::domain_error("mod_floor needs a positive modulus");
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

// Quotient with symmetric remainder |a - q b| <= |b| / 2.
inline Int div_round(const Int& a, const Int& b) {
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (2 * abs(r) > abs(b)) q += (sgn(r) == sgn(b)) ? 1 : -1;
    return q;
}

// Exact conversion to int64 for surfaces that need native integers.
inline std::int64_t to_i64(const Int& a) {
    if (!a.fits_slong_p()) throw std::overflow_error("value exceeds int64 range: " + a.get_str());
    return static_cast<std::int64_t>(a.get_si());
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

}  // namespace tiltkit
