#pragma once

#include "chaingraph/rational.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace chaingraph {

/// Element of the field Q(sqrt5), stored as a + b*sqrt5 with rational a, b.
/// sqrt5 is irrational, so the representation is unique and equality is
/// componentwise. Multiplication follows
///   (a + b*sqrt5)(c + d*sqrt5) = (ac + 5bd) + (ad + bc)*sqrt5.
class QuadraticNumber {
public:
    QuadraticNumber() = default;
    QuadraticNumber(long long n) : a_(n) {}
    QuadraticNumber(Rational a) : a_(std::move(a)) {}
    QuadraticNumber(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    const Rational& rational_part() const { return a_; }
    const Rational& root5_part() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    QuadraticNumber operator-() const { return {-a_, -b_}; }
    QuadraticNumber operator+(const QuadraticNumber& o) const { return {a_ + o.a_, b_ + o.b_}; }
    QuadraticNumber operator-(const QuadraticNumber& o) const { return {a_ - o.a_, b_ - o.b_}; }
    QuadraticNumber operator*(const QuadraticNumber& o) const {
        return {a_ * o.a_ + 5 * (b_ * o.b_), a_ * o.b_ + b_ * o.a_};
    }

    /// Field inverse: (a - b*sqrt5) / (a^2 - 5 b^2). The norm vanishes only at
    /// zero because 5 is not a rational square.
    QuadraticNumber inverse() const {
        if (is_zero())
            throw std::domain_error("QuadraticNumber: inverse of zero");
        Rational norm = a_ * a_ - 5 * (b_ * b_);
        return {a_ / norm, -b_ / norm};
    }

    QuadraticNumber operator/(const QuadraticNumber& o) const { return *this * o.inverse(); }

    QuadraticNumber& operator+=(const QuadraticNumber& o) { return *this = *this + o; }
    QuadraticNumber& operator-=(const QuadraticNumber& o) { return *this = *this - o; }
    QuadraticNumber& operator*=(const QuadraticNumber& o) { return *this = *this * o; }

    bool operator==(const QuadraticNumber& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const QuadraticNumber& o) const { return !(*this == o); }

    double to_double() const {
        static const double sqrt5 = std::sqrt(5.0);
        return a_.to_double() + b_.to_double() * sqrt5;
    }

    std::string to_string() const {
        if (b_.is_zero())
            return a_.to_string();
        std::string s;
        if (!a_.is_zero())
            s = a_.to_string() + (b_.sign() > 0 ? "+" : "");
        if (b_ == Rational(1))
            s += "sqrt5";
        else if (b_ == Rational(-1))
            s += "-sqrt5";
        else
            s += b_.to_string() + "*sqrt5";
        return s;
    }

    /// (sqrt5 - 1)/2, the positive root of x^2 + x - 1 = 0 (the reciprocal of
    /// the golden ratio). An eigenvalue of certain half graphs.
    static QuadraticNumber inverse_golden_ratio() {
        return {Rational(-1, 2), Rational(1, 2)};
    }

private:
    Rational a_;
    Rational b_;
};

inline QuadraticNumber operator*(long long a, const QuadraticNumber& x) {
    return QuadraticNumber(a) * x;
}

} // namespace chaingraph
