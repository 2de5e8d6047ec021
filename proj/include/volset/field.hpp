#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace volset {

/// Element of GF(p^k), stored as its canonical index: the coefficients
/// c_0 + c_1 x + ... + c_{k-1} x^{k-1} packed base-p, c_0 least significant.
struct Elem {
    std::uint32_t value = 0;

    constexpr Elem() = default;
    constexpr explicit Elem(std::uint32_t v) : value(v) {}

    friend constexpr auto operator<=>(Elem, Elem) = default;
};

class FieldError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct FieldSpec {
    std::uint32_t p = 0;
    std::uint32_t k = 0;
    std::uint32_t q = 0;
    /// Monic modulus c_0..c_k (low degree first); empty for prime fields.
    std::vector<std::uint32_t> modulus;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t n);

/// Irreducibility over F_p of a monic polynomial given low-degree-first,
/// by trial division with every monic polynomial of degree <= deg/2.
bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t p);

/// Lexicographically smallest monic irreducible of degree k, comparing c_0 first.
std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t k);

/// Validates parameters; picks the default modulus when k > 1 and none is given.
FieldSpec make_field_spec(std::uint32_t p, std::uint32_t k,
                          std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

/// Arithmetic in GF(p^k), p odd. Cheap to copy: the lookup tables are shared
/// and immutable.
class Field {
public:
    explicit Field(FieldSpec spec);

    static Field make(std::uint32_t p, std::uint32_t k = 1,
                      std::optional<std::vector<std::uint32_t>> modulus = std::nullopt)
    {
        return Field(make_field_spec(p, k, std::move(modulus)));
    }

    const FieldSpec& spec() const { return spec_; }
    std::uint32_t p() const { return spec_.p; }
    std::uint32_t k() const { return spec_.k; }
    std::uint32_t q() const { return spec_.q; }

    static constexpr Elem zero() { return Elem{0}; }
    static constexpr Elem one() { return Elem{1}; }

    bool valid(Elem a) const { return a.value < spec_.q; }

    /// Checked conversion from an index.
    Elem element(std::uint64_t index) const;

    /// Image of an integer in the prime subfield.
    Elem from_int(std::int64_t n) const;

    Elem add(Elem a, Elem b) const
    {
        if (add_)
            return Elem{add_[a.value * spec_.q + b.value]};
        return add_slow(a, b);
    }

    Elem mul(Elem a, Elem b) const
    {
        if (mul_)
            return Elem{mul_[a.value * spec_.q + b.value]};
        return mul_slow(a, b);
    }

    Elem neg(Elem a) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;

    /// All q elements in increasing index order.
    std::vector<Elem> elements() const;

    std::vector<std::uint32_t> coefficients(Elem a) const;
    Elem from_coefficients(std::span<const std::uint32_t> coeffs) const;

    /// Schoolbook product reduced by the modulus; the reference path the
    /// tables are built from.
    Elem poly_mul(Elem a, Elem b) const;

    friend bool operator==(const Field& a, const Field& b) { return a.spec_ == b.spec_; }

private:
    struct Tables;

    Elem add_slow(Elem a, Elem b) const;
    Elem mul_slow(Elem a, Elem b) const;

    FieldSpec spec_;
    std::shared_ptr<const Tables> tables_;
    const std::uint8_t* add_ = nullptr;
    const std::uint8_t* mul_ = nullptr;
};

std::string describe(const FieldSpec& spec);

} // namespace volset
