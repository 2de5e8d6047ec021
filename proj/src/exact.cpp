#include "volset/exact.hpp"

#include <stdexcept>

namespace volset {

namespace {

int sign_of(const Rational& x)
{
    return x.sign();
}

} // namespace

std::string to_string(const Rational& r)
{
    const auto num = boost::multiprecision::numerator(r);
    const auto den = boost::multiprecision::denominator(r);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

Surd::Surd(Rational a, Rational b, std::uint64_t radicand) : a_(std::move(a)), b_(std::move(b)), r_(radicand)
{
    normalize();
}

Surd Surd::sqrt_of(std::uint64_t n)
{
    return Surd(0, 1, n);
}

void Surd::normalize()
{
    if (b_ == 0) {
        r_ = 0;
        return;
    }
    // pull square factors out so equal values share a radicand
    for (std::uint64_t f = 2; f * f <= r_;) {
        if (r_ % (f * f) == 0) {
            r_ /= f * f;
            b_ *= f;
        } else {
            ++f;
        }
    }
    if (r_ == 1) {
        a_ += b_;
        b_ = 0;
        r_ = 0;
    }
}

std::uint64_t Surd::common_radicand(const Surd& x, const Surd& y)
{
    if (x.r_ != 0 && y.r_ != 0 && x.r_ != y.r_)
        throw std::domain_error("Surd: mixed radicands");
    return x.r_ != 0 ? x.r_ : y.r_;
}

int Surd::sign() const
{
    const int sa = sign_of(a_);
    const int sb = sign_of(b_);
    if (sb == 0)
        return sa;
    if (sa == 0 || sa == sb)
        return sb;
    // opposite signs: compare a^2 with b^2 r
    const Rational lhs = a_ * a_;
    const Rational rhs = b_ * b_ * r_;
    if (lhs == rhs)
        return 0;
    return lhs > rhs ? sa : sb;
}

Surd operator+(const Surd& x, const Surd& y)
{
    const auto r = Surd::common_radicand(x, y);
    return Surd(x.a_ + y.a_, x.b_ + y.b_, r);
}

Surd operator-(const Surd& x, const Surd& y)
{
    const auto r = Surd::common_radicand(x, y);
    return Surd(x.a_ - y.a_, x.b_ - y.b_, r);
}

Surd Surd::operator-() const
{
    return Surd(-a_, -b_, r_);
}

Surd operator*(const Surd& x, const Surd& y)
{
    const auto r = Surd::common_radicand(x, y);
    return Surd(x.a_ * y.a_ + x.b_ * y.b_ * r, x.a_ * y.b_ + x.b_ * y.a_, r);
}

Surd operator/(const Surd& x, const Surd& y)
{
    if (y.sign() == 0)
        throw std::domain_error("Surd: division by zero");
    const auto r = Surd::common_radicand(x, y);
    // multiply by the conjugate; c^2 - d^2 r != 0 since r is not a square
    const Rational norm = y.a_ * y.a_ - y.b_ * y.b_ * r;
    const Surd conj(y.a_, -y.b_, r);
    const Surd num = x * conj;
    return Surd(num.a_ / norm, num.b_ / norm, r);
}

std::string Surd::str() const
{
    if (b_ == 0)
        return to_string(a_);
    std::string s;
    if (a_ != 0)
        s = to_string(a_) + (b_ > 0 ? " + " : " - ");
    else if (b_ < 0)
        s = "-";
    const Rational mag = b_ > 0 ? b_ : Rational(-b_);
    if (mag != 1)
        s += to_string(mag) + "*";
    s += "sqrt(" + std::to_string(r_) + ")";
    return s;
}

} // namespace volset
