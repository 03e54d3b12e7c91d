#include "degcut/quad_surd.hpp"

#include <cmath>

#include "degcut/errors.hpp"

namespace degcut {

QuadSurd::QuadSurd(Rational a, Rational b, long long radicand) : a_(std::move(a)), b_(std::move(b)), k_(radicand) {
    if (radicand <= 0)
        throw invalid_input("radicand must be positive");
}

void QuadSurd::same_field(const QuadSurd& o) const {
    if (k_ != o.k_)
        throw invalid_input("mixing sqrt(" + std::to_string(k_) + ") and sqrt(" + std::to_string(o.k_) + ")");
}

int QuadSurd::sign() const {
    const int sa = a_.sign();
    const int sb = b_.sign();
    if (sb == 0)
        return sa;
    if (sa == 0 || sa == sb)
        return sb;
    // Opposite signs: |a| against |b| sqrt(k).
    auto c = a_ * a_ <=> b_ * b_ * Rational(k_);
    if (c == 0)
        return 0;
    return c > 0 ? sa : sb;
}

double QuadSurd::to_double() const { return a_.to_double() + b_.to_double() * std::sqrt(static_cast<double>(k_)); }

std::string QuadSurd::to_string() const {
    return a_.to_string() + " + " + b_.to_string() + "*sqrt(" + std::to_string(k_) + ")";
}

QuadSurd& QuadSurd::operator+=(const QuadSurd& o) {
    same_field(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QuadSurd& QuadSurd::operator-=(const QuadSurd& o) {
    same_field(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QuadSurd& QuadSurd::operator*=(const QuadSurd& o) {
    same_field(o);
    Rational a = a_ * o.a_ + b_ * o.b_ * Rational(k_);
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

QuadSurd& QuadSurd::operator/=(const QuadSurd& o) {
    same_field(o);
    // 1 / (c + d sqrt k) = (c - d sqrt k) / (c^2 - d^2 k)
    Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * Rational(k_);
    if (norm.is_zero()) {
        // Only possible for o == 0 or a perfect-square radicand, where o is rational.
        long long root = std::llround(std::sqrt(static_cast<double>(k_)));
        while (root * root > k_)
            --root;
        while ((root + 1) * (root + 1) <= k_)
            ++root;
        Rational value = o.a_ + o.b_ * Rational(root);
        if (root * root != k_ || value.is_zero())
            throw invalid_input("division by zero");
        a_ /= value;
        b_ /= value;
        return *this;
    }
    *this *= QuadSurd(o.a_ / norm, -o.b_ / norm, k_);
    return *this;
}

bool operator==(const QuadSurd& x, const QuadSurd& y) {
    x.same_field(y);
    return (x - y).sign() == 0;
}

std::strong_ordering operator<=>(const QuadSurd& x, const QuadSurd& y) {
    int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

} // namespace degcut
