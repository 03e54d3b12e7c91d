#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace degcut {

/// Exact rational number, always stored reduced with a positive denominator.
class Rational {
public:
    using integer = boost::multiprecision::cpp_int;

    Rational() = default;
    Rational(long long value) : num_(value) {} // NOLINT(google-explicit-constructor)
    Rational(integer num, integer den);

    /// Accepts "p" or "p/q".
    static Rational parse(std::string_view text);

    const integer& num() const { return num_; }
    const integer& den() const { return den_; }
    int sign() const { return num_.sign(); }
    bool is_zero() const { return num_.is_zero(); }

    double to_double() const;
    std::string to_string() const;

    Rational operator-() const { return Rational(-num_, den_, raw_tag{}); }
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        integer lhs = a.num_ * b.den_;
        integer rhs = b.num_ * a.den_;
        return lhs < rhs ? std::strong_ordering::less
                         : (lhs > rhs ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    struct raw_tag {};
    Rational(integer num, integer den, raw_tag) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();

    integer num_ = 0;
    integer den_ = 1;
};

} // namespace degcut
