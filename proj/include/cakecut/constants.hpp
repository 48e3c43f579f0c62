#pragma once

#include <string>
#include <vector>

#include "cakecut/errors.hpp"
#include "cakecut/rational.hpp"

namespace cakecut {

enum class ConstantsSource { Paper, Override };

// Protocol constants. Paper values: C = n^4 * 2^(n^2) * n^(3n^2),
// C' = C * (n!)^n, B = minimal integer with (n/(n-2))^B >= n*C'.
struct Constants {
    int n = 0;
    BigInt C;
    BigInt Cp;
    BigInt B;
    ConstantsSource source = ConstantsSource::Paper;
};

// Minimal integer b >= 0 with (n/(n-2))^b >= n*Cp, decided purely with
// big-integer comparisons: n^b >= (n-2)^b * n * Cp.
inline BigInt domination_rounds(int n, const BigInt& Cp) {
    if (n < 3) throw DomainError("domination rounds need n >= 3");
    BigInt target = BigInt(n) * Cp;
    BigInt num(1), den(1);
    BigInt b(0);
    while (num < den * target) {
        num *= n;
        den *= n - 2;
        ++b;
    }
    return b;
}

inline Constants constants_paper(int n) {
    if (n < 3) throw DomainError("paper constants need n >= 3");
    auto nn = static_cast<unsigned long>(n);
    Constants k;
    k.n = n;
    k.C = big_pow(BigInt(n), 4) * big_pow(BigInt(2), nn * nn) * big_pow(BigInt(n), 3 * nn * nn);
    k.Cp = k.C * big_pow(big_factorial(nn), nn);
    k.B = domination_rounds(n, k.Cp);
    k.source = ConstantsSource::Paper;
    return k;
}

inline Constants constants_override(int n, BigInt C, BigInt Cp, BigInt B) {
    if (C < 1 || Cp < C || B < 1) throw InputError("override constants need C >= 1, C' >= C, B >= 1");
    Constants k;
    k.n = n;
    k.C = std::move(C);
    k.Cp = std::move(Cp);
    k.B = std::move(B);
    k.source = ConstantsSource::Override;
    return k;
}

namespace detail {

// Decides e^m >= x exactly via certified rational bounds on e. Equality
// e^m = x is impossible for m >= 1 and integer x, so refining the Taylor
// tail always separates the two sides.
inline bool exp_pow_at_least(long m, const BigInt& x) {
    if (m <= 0) return x <= 1;
    for (unsigned long k = 24;; k *= 2) {
        Rational lower(0);
        BigInt fact(1);
        for (unsigned long i = 0;; ++i) {
            if (i > 0) fact *= i;
            lower += Rational(BigInt(1), fact);
            if (i == k) break;
        }
        Rational tail(BigInt(2), big_factorial(k + 1));
        Rational upper = lower + tail;

        auto um = static_cast<unsigned long>(m);
        BigInt ln = big_pow(lower.get_num(), um), ld = big_pow(lower.get_den(), um);
        if (ln >= x * ld) return true;  // lower^m >= x  =>  e^m > x
        BigInt un = big_pow(upper.get_num(), um), ud = big_pow(upper.get_den(), um);
        if (un < x * ud) return false;  // upper^m < x  =>  e^m < x
    }
}

}  // namespace detail

// Smallest integer m >= 0 with e^m >= x (i.e. ceil(ln x) for non-powers of e).
inline long ceil_log_e(const BigInt& x) {
    if (x <= 1) return 0;
    // log2(x)*ln(2) approximates ln(x) within well under 1; verify exactly
    // around the estimate.
    long bits = static_cast<long>(mpz_sizeinbase(x.get_mpz_t(), 2));
    long guess = static_cast<long>(static_cast<double>(bits) * 0.6931471805599453) - 2;
    if (guess < 1) guess = 1;
    long m = guess;
    while (!detail::exp_pow_at_least(m, x)) ++m;
    while (m > 0 && detail::exp_pow_at_least(m - 1, x)) --m;
    return m;
}

// ceil(n ln n) == smallest m with e^m >= n^n.
inline long ceil_n_ln_n(int n) {
    if (n < 1) throw DomainError("ceil_n_ln_n needs n >= 1");
    return ceil_log_e(big_pow(BigInt(n), static_cast<unsigned long>(n)));
}

// ceil(n^2 ln n) == smallest m with e^m >= n^(n^2).
inline long ceil_n2_ln_n(int n) {
    if (n < 1) throw DomainError("ceil_n2_ln_n needs n >= 1");
    auto nn = static_cast<unsigned long>(n);
    return ceil_log_e(big_pow(BigInt(n), nn * nn));
}

// SubCore cut-query budget: T'(1) = 0,
// T'(m) = 2 T'(m-1) + m(m-1) + sum_{i=1}^{m-2} T'(i).
inline BigInt query_bound_Q(int n_sub) {
    if (n_sub < 1) throw DomainError("query_bound_Q needs n_sub >= 1");
    std::vector<BigInt> t(static_cast<std::size_t>(n_sub) + 1);
    t[1] = 0;
    BigInt prefix(0);  // sum of t[1..m-2]
    for (int m = 2; m <= n_sub; ++m) {
        if (m >= 3) prefix += t[static_cast<std::size_t>(m) - 2];
        t[static_cast<std::size_t>(m)] =
            2 * t[static_cast<std::size_t>(m) - 1] + BigInt(m) * (m - 1) + prefix;
    }
    return t[static_cast<std::size_t>(n_sub)];
}

}  // namespace cakecut
