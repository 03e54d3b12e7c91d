#pragma once

#include <compare>
#include <string>

#include "degcut/rational.hpp"

namespace degcut {

/// Exact element a + b*sqrt(k) of Q[sqrt k] for a fixed positive radicand k.
///
/// Values with different radicands never mix; arithmetic between them throws
/// invalid_input. Ordering is decided exactly: when a and b disagree in sign
/// the result follows from comparing a^2 with b^2 k.
class QuadSurd {
public:
    QuadSurd(Rational a, Rational b, long long radicand);
    /// The rational a viewed in Q[sqrt radicand].
    static QuadSurd rational(Rational a, long long radicand) { return {std::move(a), 0, radicand}; }
    /// sqrt(radicand) itself.
    static QuadSurd root(long long radicand) { return {0, 1, radicand}; }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    long long radicand() const { return k_; }

    int sign() const;
    double to_double() const;
    /// "a + b*sqrt(k)" with rationals printed as p/q.
    std::string to_string() const;

    QuadSurd operator-() const { return {-a_, -b_, k_}; }
    QuadSurd& operator+=(const QuadSurd& o);
    QuadSurd& operator-=(const QuadSurd& o);
    QuadSurd& operator*=(const QuadSurd& o);
    QuadSurd& operator/=(const QuadSurd& o);

    friend QuadSurd operator+(QuadSurd x, const QuadSurd& y) { return x += y; }
    friend QuadSurd operator-(QuadSurd x, const QuadSurd& y) { return x -= y; }
    friend QuadSurd operator*(QuadSurd x, const QuadSurd& y) { return x *= y; }
    friend QuadSurd operator/(QuadSurd x, const QuadSurd& y) { return x /= y; }

    friend QuadSurd operator+(QuadSurd x, const Rational& r) { return x += rational(r, x.k_); }
    friend QuadSurd operator-(QuadSurd x, const Rational& r) { return x -= rational(r, x.k_); }
    friend QuadSurd operator*(QuadSurd x, const Rational& r) {
        x.a_ *= r;
        x.b_ *= r;
        return x;
    }
    friend QuadSurd operator+(const Rational& r, const QuadSurd& x) { return x + r; }
    friend QuadSurd operator*(const Rational& r, const QuadSurd& x) { return x * r; }

    /// Representation equality; radicands must match.
    friend bool operator==(const QuadSurd& x, const QuadSurd& y);
    friend std::strong_ordering operator<=>(const QuadSurd& x, const QuadSurd& y);
    friend bool operator==(const QuadSurd& x, const Rational& r) { return x == rational(r, x.k_); }
    friend std::strong_ordering operator<=>(const QuadSurd& x, const Rational& r) { return x <=> rational(r, x.k_); }

private:
    void same_field(const QuadSurd& o) const;

    Rational a_;
    Rational b_;
    long long k_;
};

} // namespace degcut
