#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace volset {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact value a + b*sqrt(r) with rational a, b. Values built from a perfect
/// square radicand collapse to plain rationals. Mixing two different
/// irrational radicands is an error.
class Surd {
public:
    Surd() = default;
    Surd(Rational a) : a_(std::move(a)) {}
    Surd(std::int64_t a) : a_(a) {}
    Surd(Rational a, Rational b, std::uint64_t radicand);

    static Surd sqrt_of(std::uint64_t n);

    const Rational& rational_part() const { return a_; }
    const Rational& surd_part() const { return b_; }
    std::uint64_t radicand() const { return r_; }
    bool is_rational() const { return b_ == 0; }

    /// Exact sign, decided by squaring.
    int sign() const;

    friend Surd operator+(const Surd& x, const Surd& y);
    friend Surd operator-(const Surd& x, const Surd& y);
    friend Surd operator*(const Surd& x, const Surd& y);
    friend Surd operator/(const Surd& x, const Surd& y);
    Surd operator-() const;

    friend bool operator==(const Surd& x, const Surd& y) { return (x - y).sign() == 0; }
    friend std::strong_ordering operator<=>(const Surd& x, const Surd& y)
    {
        const int s = (x - y).sign();
        return s < 0 ? std::strong_ordering::less
                     : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// "a", "a + b*sqrt(r)" with rationals printed as n or n/m.
    std::string str() const;

private:
    void normalize();
    static std::uint64_t common_radicand(const Surd& x, const Surd& y);

    Rational a_ = 0;
    Rational b_ = 0;
    std::uint64_t r_ = 0;
};

std::string to_string(const Rational& r);

} // namespace volset
