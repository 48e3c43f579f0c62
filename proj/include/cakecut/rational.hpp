#pragma once

#include <gmpxx.h>

#include <string>

#include "cakecut/errors.hpp"

namespace cakecut {

// Exact rational arithmetic. mpq_class keeps values canonical (gcd = 1,
// positive denominator) through all arithmetic, which is exactly the Rat
// invariant; we only add parsing/formatting and a few integer helpers.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw DomainError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p" or "p/q" with optional sign; q must be nonzero.
inline Rational rat_parse(const std::string& text) {
    if (text.empty()) throw InputError("empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw InputError("zero denominator in '" + text + "'");
        Rational r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw InputError("malformed rational literal '" + text + "'");
    }
}

// Canonical form: "p" when the denominator is 1, otherwise "p/q".
inline std::string rat_str(const Rational& r) { return r.get_str(); }

inline BigInt big_pow(const BigInt& base, unsigned long exp) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

inline BigInt big_factorial(unsigned long n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

// ceil(a / b) for positive integers.
inline BigInt big_ceil_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline long ceil_div_long(long a, long b) { return (a + b - 1) / b; }

}  // namespace cakecut
