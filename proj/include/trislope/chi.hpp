#pragma once

// Orbifold correction term
//
//   chi(n,a,b) = (1/n) * sum_{i=1}^{n-1} (zeta^{ia} + zeta^{ib}) / (2 - zeta^i - zeta^{-i}),
//
// zeta a primitive n-th root of unity. chi() evaluates it exactly through the
// cyclotomic identity
//
//   sum_{i=1}^{n-1} zeta^{ia} / (2 - zeta^i - zeta^{-i}) = (n^2-1)/12 - a(n-a)/2
//
// for 0 <= a < n; chi_numeric_oracle() evaluates the defining sum directly in
// high-precision complex arithmetic and is the independent referee for that
// identity (the two must agree, and the test suite insists on it).

#include "trislope/rational.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <stdexcept>

namespace trislope {

struct ChiQuery {
    int n;
    int a;
    int b;

    ChiQuery(int n_, long long a_, long long b_) : n(n_) {
        if (n_ < 2)
            throw std::domain_error("chi: stabilizer order must be >= 2, got " + std::to_string(n_));
        a = reduce(a_);
        b = reduce(b_);
    }

private:
    int reduce(long long x) const {
        long long r = x % n;
        return static_cast<int>(r < 0 ? r + n : r);
    }
};

namespace detail {
// sum_{i=1}^{n-1} zeta^{ic} / (2 - zeta^i - zeta^{-i}) for 0 <= c < n
inline Rational character_sum(int n, int c) {
    return Rational(BigInt(n) * n - 1, 12) - Rational(BigInt(c) * (n - c), 2);
}
} // namespace detail

inline Rational chi(const ChiQuery& q) {
    return (detail::character_sum(q.n, q.a) + detail::character_sum(q.n, q.b)) / Rational(q.n);
}

using Real = boost::multiprecision::cpp_bin_float_50;

inline Real to_real(const Rational& x) {
    return Real(x.numerator()) / Real(x.denominator());
}

// Direct evaluation of the defining root-of-unity sum at 50 working decimal
// digits. `digits` is the accuracy the caller may rely on; the backend's
// precision caps it at 45.
inline Real chi_numeric_oracle(const ChiQuery& q, int digits = 30) {
    if (digits < 15)
        throw std::domain_error("chi_numeric_oracle: need at least 15 digits");
    if (digits > 45)
        throw std::domain_error("chi_numeric_oracle: backend provides at most 45 digits");

    using Complex = boost::multiprecision::cpp_complex_50;
    const Real two_pi_over_n = 2 * boost::math::constants::pi<Real>() / q.n;
    const auto zeta_pow = [&](long long k) {
        const Real t = two_pi_over_n * Real(k);
        return Complex(cos(t), sin(t));
    };

    Complex total = 0;
    for (long long i = 1; i < q.n; ++i) {
        const Complex numerator = zeta_pow(i * q.a) + zeta_pow(i * q.b);
        const Complex denominator = Complex(2) - zeta_pow(i) - zeta_pow(-i);
        total += numerator / denominator;
    }
    total /= q.n;

    if (abs(total.imag()) > Real("1e-40"))
        throw std::logic_error("chi_numeric_oracle: sum has a non-real residue");
    return total.real();
}

} // namespace trislope
