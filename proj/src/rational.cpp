#include "degcut/rational.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "degcut/errors.hpp"

namespace degcut {

Rational::Rational(integer num, integer den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw invalid_input("zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    integer g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse(std::string_view text) {
    try {
        auto slash = text.find('/');
        if (slash == std::string_view::npos)
            return Rational(integer(std::string(text)), integer(1));
        return Rational(integer(std::string(text.substr(0, slash))), integer(std::string(text.substr(slash + 1))));
    } catch (const std::runtime_error&) {
        throw invalid_input("not a rational: " + std::string(text));
    }
}

double Rational::to_double() const {
    using boost::multiprecision::cpp_bin_float_double;
    return static_cast<double>(cpp_bin_float_double(num_) / cpp_bin_float_double(den_));
}

std::string Rational::to_string() const {
    if (den_ == 1)
        return num_.str();
    return num_.str() + "/" + den_.str();
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw invalid_input("division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

} // namespace degcut
