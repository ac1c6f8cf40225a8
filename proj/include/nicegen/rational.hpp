#ifndef NICEGEN_RATIONAL_HPP
#define NICEGEN_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>
#include <concepts>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nicegen/errors.hpp"

namespace nicegen {

// Arbitrary-precision signed integer. Everything in the library is exact;
// intermediate products in elimination overflow 64 bits already for modest
// sizes, so a fixed-width integer is not an option.
using Int = boost::multiprecision::cpp_int;

/// Exact rational scalar, kept in canonical form at all times:
/// denominator >= 1, gcd(|num|, den) == 1, zero stored as 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    template <std::integral T>
    Rational(T n) : num_(n), den_(1) {}
    Rational(const Int& n) : num_(n), den_(1) {}
    Rational(Int n, Int d) { init(std::move(n), std::move(d)); }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational& operator+=(const Rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        reduce();
        return *this;
    }
    Rational& operator-=(const Rational& o) { return *this += -o; }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        reduce();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) throw division_by_zero("rational division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        reduce();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    // Canonical form makes equality structural.
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    Rational reciprocal() const {
        if (num_ == 0) throw division_by_zero("reciprocal of zero");
        return Rational(den_, num_);
    }

    /// "p/q" when den != 1, plain "p" otherwise.
    std::string to_string() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

private:
    void init(Int n, Int d) {
        if (d == 0) throw division_by_zero("rational with zero denominator");
        num_ = std::move(n);
        den_ = std::move(d);
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        reduce();
    }

    void reduce() {
        assert(den_ > 0);
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
        assert(boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_) == 1);
    }

    Int num_;
    Int den_;
};

/// Canonical reduced form of n/d; sign carried by the numerator.
inline Rational normalize(Int n, Int d) { return Rational(std::move(n), std::move(d)); }

/// Least common multiple of the denominators of a non-empty sequence.
/// Multiplying every element by the result yields integers, and no smaller
/// positive integer does.
inline Int lcd(std::span<const Rational> values) {
    if (values.empty()) throw contract_violation("lcd of an empty sequence");
    Int m = 1;
    for (const Rational& v : values) m = boost::multiprecision::lcm(m, v.den());
    return m;
}

inline Int lcd(const std::vector<Rational>& values) {
    return lcd(std::span<const Rational>(values.data(), values.size()));
}

}  // namespace nicegen

#endif
