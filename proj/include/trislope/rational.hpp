#pragma once

// Exact arbitrary-precision rational scalar. Every quantity in the engine
// (intersection numbers, lambda, kappa, delta, mu, tau, residuals) is one of
// these; there is no floating point on any computation path.

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace trislope {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}          // NOLINT: implicit by design
    Rational(const BigInt& n) : v_(n) {}      // NOLINT
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}
    Rational(BigInt num, BigInt den) {
        if (den == 0)
            throw std::domain_error("Rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        v_ = Backend(num, den);   // backend keeps lowest terms, positive denominator
    }

    // Accepts "p" or "p/q" with optional sign; rejects anything else.
    static Rational parse(std::string_view text) {
        const auto slash = text.find('/');
        try {
            if (slash == std::string_view::npos)
                return Rational(BigInt(std::string(text)));
            BigInt num{std::string(text.substr(0, slash))};
            BigInt den{std::string(text.substr(slash + 1))};
            return Rational(num, den);
        } catch (const std::runtime_error&) {
            throw std::domain_error("Rational: cannot parse '" + std::string(text) + "'");
        }
    }

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_.sign(); }

    // Exact conversion; refuses non-integers and values outside long long.
    long long to_integer() const {
        if (!is_integer())
            throw std::domain_error("Rational: " + str() + " is not an integer");
        return numerator().convert_to<long long>();
    }

    // "34", "-2/9": the human-facing form.
    std::string str() const {
        std::string s = numerator().str();
        if (!is_integer())
            s += "/" + denominator().str();
        return s;
    }

    // Always "p/q" (so "34/1"): the CSV/JSON wire form.
    std::string fraction_str() const {
        return numerator().str() + "/" + denominator().str();
    }

    friend Rational operator+(const Rational& x, const Rational& y) { return Rational(x.v_ + y.v_); }
    friend Rational operator-(const Rational& x, const Rational& y) { return Rational(x.v_ - y.v_); }
    friend Rational operator*(const Rational& x, const Rational& y) { return Rational(x.v_ * y.v_); }
    friend Rational operator/(const Rational& x, const Rational& y) {
        if (y.is_zero())
            throw std::domain_error("Rational: division by zero");
        return Rational(x.v_ / y.v_);
    }
    Rational operator-() const { return Rational(Backend(-v_)); }

    Rational& operator+=(const Rational& y) { v_ += y.v_; return *this; }
    Rational& operator-=(const Rational& y) { v_ -= y.v_; return *this; }
    Rational& operator*=(const Rational& y) { v_ *= y.v_; return *this; }
    Rational& operator/=(const Rational& y) { return *this = *this / y; }

    friend bool operator==(const Rational& x, const Rational& y) { return x.v_ == y.v_; }
    friend bool operator!=(const Rational& x, const Rational& y) { return x.v_ != y.v_; }
    friend bool operator<(const Rational& x, const Rational& y) { return x.v_ < y.v_; }
    friend bool operator<=(const Rational& x, const Rational& y) { return x.v_ <= y.v_; }
    friend bool operator>(const Rational& x, const Rational& y) { return x.v_ > y.v_; }
    friend bool operator>=(const Rational& x, const Rational& y) { return x.v_ >= y.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& x) {
        return os << x.str();
    }

private:
    using Backend = boost::multiprecision::cpp_rational;
    explicit Rational(Backend v) : v_(std::move(v)) {}
    Backend v_;
};

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

} // namespace trislope
