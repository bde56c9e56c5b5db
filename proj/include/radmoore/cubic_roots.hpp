#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bigint.hpp"

namespace radmoore {

// Characteristic polynomial of the transfer matrix:
// (x - (d-1)) (x^3 - x^2 - (d-3)x - (d-1)), coefficients highest degree first.
struct CharacteristicPolynomial {
    std::array<long long, 5> quartic;
    std::array<long long, 4> cubic;
};

inline CharacteristicPolynomial characteristic_polynomial(int d) {
    if (d < 4) throw std::domain_error("characteristic_polynomial: degree must be greater than 3");
    CharacteristicPolynomial p;
    p.cubic = {1, -1, -(static_cast<long long>(d) - 3), -(static_cast<long long>(d) - 1)};
    p.quartic = {1, -static_cast<long long>(d), 2,
                 (static_cast<long long>(d) - 1) * (d - 4),
                 (static_cast<long long>(d) - 1) * (d - 1)};
    return p;
}

// Roots of q(x) = x^3 - x^2 - (d-3)x - (d-1), plus the discriminant
// Delta = -(d^3 - 20d^2 + 56d - 44)/27 in the sign convention that is
// positive exactly when q has one real root (d <= 16).
struct CubicRoots {
    std::vector<double> real_roots;                   // descending
    std::optional<std::complex<double>> complex_pair; // the member with imag > 0
    BigInt discriminant_numerator;                    // Delta = numerator / 27
    static constexpr int discriminant_denominator = 27;
};

namespace roots_detail {

inline long double eval_q(int d, long double x) {
    return ((x - 1) * x - (d - 3)) * x - (d - 1);
}

inline long double polish(int d, long double x) {
    for (int it = 0; it < 4; ++it) {
        long double f = eval_q(d, x);
        long double fp = (3 * x - 2) * x - (d - 3);
        if (fp == 0) break;
        x -= f / fp;
    }
    return x;
}

}  // namespace roots_detail

inline CubicRoots cubic_roots(int d) {
    if (d < 4) throw std::domain_error("cubic_roots: degree must be greater than 3");
    CubicRoots out;
    {
        BigInt D(d);
        out.discriminant_numerator =
            -(D * D * D - BigInt(20) * D * D + BigInt(56) * D - BigInt(44));
    }

    // Depressed form: x = t + 1/3, t^3 + p t + q.
    const long double c2 = -1.0L;
    const long double c1 = -static_cast<long double>(d - 3);
    const long double c0 = -static_cast<long double>(d - 1);
    const long double p = c1 - c2 * c2 / 3.0L;
    const long double q = 2.0L * c2 * c2 * c2 / 27.0L - c2 * c1 / 3.0L + c0;
    const long double disc = q * q / 4.0L + p * p * p / 27.0L;

    if (disc > 0) {  // one real root (d <= 16)
        long double s = std::sqrt(disc);
        long double t = std::cbrt(-q / 2.0L + s) + std::cbrt(-q / 2.0L - s);
        long double alpha = roots_detail::polish(d, t + 1.0L / 3.0L);
        out.real_roots.push_back(static_cast<double>(alpha));
        // remaining pair from the quadratic factor x^2 - (1-alpha)x + (d-1)/alpha
        long double sum2 = 1.0L - alpha;
        long double prod2 = static_cast<long double>(d - 1) / alpha;
        long double re = sum2 / 2.0L;
        long double im2 = prod2 - re * re;
        out.complex_pair = std::complex<double>(static_cast<double>(re),
                                                static_cast<double>(std::sqrt(std::max(im2, 0.0L))));
    } else {  // three real roots (d >= 17)
        long double m = 2.0L * std::sqrt(-p / 3.0L);
        long double arg = std::clamp(3.0L * q / (p * m), -1.0L, 1.0L);
        long double theta = std::acos(arg) / 3.0L;
        for (int k = 0; k < 3; ++k) {
            long double t = m * std::cos(theta - 2.0L * static_cast<long double>(M_PI) * k / 3.0L);
            out.real_roots.push_back(static_cast<double>(roots_detail::polish(d, t + 1.0L / 3.0L)));
        }
        std::sort(out.real_roots.begin(), out.real_roots.end(), std::greater<>());
    }
    return out;
}

// Laguerre interval containing all real roots of q when there are three of
// them: (1 +- 2 sqrt(3d-8)) / 3.
inline std::pair<double, double> laguerre_interval(int d) {
    if (d < 17)
        throw std::domain_error("laguerre_interval: not applicable below d = 17 (fewer than three real roots)");
    double s = 2.0 * std::sqrt(3.0 * d - 8.0);
    return {(1.0 - s) / 3.0, (1.0 + s) / 3.0};
}

// Cauchy bound on the complex pair: modulus at most 1 + max(1, (d-3)/(d-1)) <= 2.
inline bool cauchy_bound_check(int d) {
    if (d < 4 || d > 16)
        throw std::domain_error("cauchy_bound_check: applicable for 4 <= d <= 16 only");
    CubicRoots r = cubic_roots(d);
    return std::abs(*r.complex_pair) <= 2.0 + 1e-9;
}

struct AsymptoticRatios {
    double r_alpha;   // alpha / sqrt(d)
    double r_beta;    // beta / (-sqrt(d)), beta the most negative root
    double gamma_val; // the remaining root
};

inline AsymptoticRatios asymptotic_ratios(int d) {
    if (d < 17) throw std::domain_error("asymptotic_ratios: need three real roots (d >= 17)");
    CubicRoots r = cubic_roots(d);
    double alpha = r.real_roots[0];
    double beta = r.real_roots[2];
    double gamma = r.real_roots[1];
    double sq = std::sqrt(static_cast<double>(d));
    return {alpha / sq, beta / (-sq), gamma};
}

// ---- degree-7 closed forms -------------------------------------------------
//
// For d = 7 the eigenvalues are 6, 3 and -1 +- i, and the level counts and
// bound sums have small closed forms in Q[i].  They are evaluated in complex
// long double arithmetic; the imaginary parts must cancel.

struct D7Levels {
    long long a, a_prime, b, b_prime;
};

struct D7ClosedForms {
    long long central;     // value of the printed C(7,k) expression, equal to
                           // central_upper_bound(7,k) - 1
    long long noncentral;  // printed lower bound, equal to noncentral_lower_bound(7,k)
};

namespace roots_detail {

using Cx = std::complex<long double>;

inline Cx ipow(Cx base, int e) {
    Cx r(1.0L, 0.0L);
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

inline long long round_real(Cx z, const char* what) {
    if (std::abs(z.imag()) > 1e-6L)
        throw std::runtime_error(std::string("d=7 closed form: imaginary residue in ") + what);
    return llroundl(z.real());
}

inline long double pow_ld(long double base, int e) {
    long double r = 1.0L;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace roots_detail

inline D7Levels closed_form_levels_d7(int j) {
    using namespace roots_detail;
    if (j < 1) throw std::domain_error("closed_form_levels_d7: level must be at least 1");
    if (j > 24) throw std::domain_error("closed_form_levels_d7: level too large for float evaluation");
    const Cx w1(-1.0L, 1.0L);   // i - 1
    const Cx w2(-1.0L, -1.0L);  // -i - 1
    const Cx w1j = ipow(w1, j - 1);
    const Cx w2j = ipow(w2, j);
    const long double p6 = pow_ld(6.0L, j - 1);
    const long double p3 = pow_ld(3.0L, j - 1);

    Cx a = 7.0L * p6 - (60.0L / 17) * p3 - Cx(-13.0L / 17, 1.0L / 17) * w1j +
           Cx(-7.0L / 17, 6.0L / 17) * w2j;
    Cx ap = (36.0L / 17) * p3 + Cx(-18.0L / 17, 4.0L / 17) * w1j - Cx(-11.0L / 17, 7.0L / 17) * w2j;
    Cx b = (12.0L / 17) * p3 + Cx(11.0L / 17, 7.0L / 17) * w1j + Cx(-2.0L / 17, 9.0L / 17) * w2j;
    Cx bp = (12.0L / 17) * p3 - Cx(6.0L / 17, 10.0L / 17) * w1j - Cx(2.0L / 17, 8.0L / 17) * w2j;

    return {round_real(a, "a"), round_real(ap, "a'"), round_real(b, "b"), round_real(bp, "b'")};
}

inline D7ClosedForms closed_form_d7(int k) {
    using namespace roots_detail;
    if (k < 1) throw std::domain_error("closed_form_d7: radius must be at least 1");
    if (k > 24) throw std::domain_error("closed_form_d7: radius too large for float evaluation");
    const Cx w1(-1.0L, 1.0L);
    const Cx w2(-1.0L, -1.0L);
    const Cx w1k = ipow(w1, k);
    const Cx w2k = ipow(w2, k);
    const long double p6 = pow_ld(6.0L, k);
    const long double p3 = pow_ld(3.0L, k);

    Cx central = (7.0L / 5) * p6 - (12.0L / 17) * p3 - Cx(-13.0L / 85, 1.0L / 85) * w1k +
                 Cx(13.0L / 85, 1.0L / 85) * w2k - 1.0L;
    Cx noncentral = (12.0L / 17) * p3 + Cx(-13.0L / 85, 1.0L / 85) * w1k -
                    Cx(13.0L / 85, 1.0L / 85) * w2k - 2.0L / 5;

    return {round_real(central, "central bound"), round_real(noncentral, "noncentral bound")};
}

}  // namespace radmoore
