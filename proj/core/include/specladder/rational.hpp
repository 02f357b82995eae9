#pragma once

#include <gmpxx.h>

#include <cmath>
#include <optional>
#include <string>

namespace specladder {

// Exact rational scalar. All closed-form spectra in this library are rational
// (or have rational squared amplitudes), so the algebra layer can run with no
// rounding at all and invariants can be checked as exact identities.
using Rat = mpq_class;

inline double to_double(const Rat& x) { return x.get_d(); }
inline double to_double(double x) { return x; }

inline Rat abs_val(const Rat& x) { return abs(x); }
inline double abs_val(double x) { return std::abs(x); }

inline std::string to_string(const Rat& x) { return x.get_str(); }

// Exact square root of a nonnegative rational, or nullopt when the value is
// not a perfect square of a rational. Negative input also yields nullopt.
inline std::optional<Rat> exact_sqrt(const Rat& x) {
    if (x < 0) return std::nullopt;
    Rat c = x;
    c.canonicalize();
    const mpz_class& num = c.get_num();
    const mpz_class& den = c.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class rnum, rden;
    mpz_sqrt(rnum.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rden.get_mpz_t(), den.get_mpz_t());
    return Rat(rnum, rden);
}

}  // namespace specladder
