#include "volset/field.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace volset {

namespace {

constexpr std::uint32_t kTableLimit = 256;
constexpr std::uint64_t kMaxOrder = 1u << 24;

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p)
{
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t quot = r / new_r;
        std::tie(t, new_t) = std::make_pair(new_t, t - quot * new_t);
        std::tie(r, new_r) = std::make_pair(new_r, r - quot * new_r);
    }
    if (t < 0)
        t += p;
    return static_cast<std::uint32_t>(t);
}

// Remainder of a modulo the monic polynomial m, coefficients mod p.
Poly poly_rem(Poly a, const Poly& m, std::uint32_t p)
{
    trim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const std::size_t shift = a.size() - 1 - dm;
        const std::uint64_t lead = a.back();
        for (std::size_t i = 0; i <= dm; ++i) {
            const std::uint64_t sub = (lead * m[i]) % p;
            a[i + shift] = static_cast<std::uint32_t>((a[i + shift] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

} // namespace

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t f = 2; f * f <= n; ++f)
        if (n % f == 0)
            return false;
    return true;
}

bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t p)
{
    Poly m(monic.begin(), monic.end());
    if (m.size() < 2 || m.back() != 1)
        return false;
    const std::size_t deg = m.size() - 1;
    if (deg == 1)
        return true;

    for (std::size_t fd = 1; fd <= deg / 2; ++fd) {
        // every monic divisor candidate of degree fd
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < fd; ++i)
            count *= p;
        Poly f(fd + 1, 0);
        f[fd] = 1;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::uint64_t rest = idx;
            for (std::size_t i = 0; i < fd; ++i) {
                f[i] = static_cast<std::uint32_t>(rest % p);
                rest /= p;
            }
            if (poly_rem(m, f, p).empty())
                return false;
        }
    }
    return true;
}

std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t k)
{
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < k; ++i)
        count *= p;
    Poly m(k + 1, 0);
    m[k] = 1;
    // c_0 is the most significant position of the search order
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::uint64_t rest = idx;
        for (std::uint32_t i = k; i-- > 0;) {
            m[i] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        if (is_irreducible(m, p))
            return m;
    }
    throw FieldError("no irreducible polynomial found");
}

FieldSpec make_field_spec(std::uint32_t p, std::uint32_t k, std::optional<std::vector<std::uint32_t>> modulus)
{
    if (p == 2)
        throw FieldError("even characteristic unsupported");
    if (!is_prime(p))
        throw FieldError("p = " + std::to_string(p) + " is not prime");
    if (k == 0)
        throw FieldError("k must be positive");

    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        q *= p;
        if (q > kMaxOrder)
            throw FieldError("field order exceeds 2^24");
    }

    FieldSpec spec;
    spec.p = p;
    spec.k = k;
    spec.q = static_cast<std::uint32_t>(q);

    if (modulus) {
        auto& m = *modulus;
        if (m.size() != k + 1 || m.back() != 1)
            throw FieldError("modulus must be monic of degree " + std::to_string(k));
        if (std::any_of(m.begin(), m.end(), [p](std::uint32_t c) { return c >= p; }))
            throw FieldError("modulus coefficient out of range");
        if (k > 1 && !is_irreducible(m, p))
            throw FieldError("modulus is reducible");
        if (k > 1)
            spec.modulus = std::move(m);
    } else if (k > 1) {
        spec.modulus = smallest_irreducible(p, k);
    }
    return spec;
}

struct Field::Tables {
    std::vector<std::uint8_t> add;
    std::vector<std::uint8_t> mul;
    std::vector<std::uint32_t> neg;
    std::vector<std::uint32_t> inv;
    // large extension fields only
    std::vector<std::uint32_t> exp;
    std::vector<std::uint32_t> log;
};

Field::Field(FieldSpec spec) : spec_(std::move(spec))
{
    auto tables = std::make_shared<Tables>();
    const std::uint32_t q = spec_.q;
    const std::uint32_t p = spec_.p;

    tables->neg.resize(q);
    for (std::uint32_t a = 0; a < q; ++a) {
        auto c = coefficients(Elem{a});
        for (auto& x : c)
            x = (p - x) % p;
        tables->neg[a] = from_coefficients(c).value;
    }

    if (q <= kTableLimit) {
        tables->add.resize(std::size_t(q) * q);
        tables->mul.resize(std::size_t(q) * q);
        tables->inv.assign(q, 0);
        for (std::uint32_t a = 0; a < q; ++a) {
            for (std::uint32_t b = 0; b < q; ++b) {
                tables->add[a * q + b] = static_cast<std::uint8_t>(add_slow(Elem{a}, Elem{b}).value);
                const auto prod = poly_mul(Elem{a}, Elem{b}).value;
                tables->mul[a * q + b] = static_cast<std::uint8_t>(prod);
                if (prod == 1)
                    tables->inv[a] = b;
            }
        }
    } else if (spec_.k > 1) {
        // exp/log over a primitive element found by search
        const std::uint32_t order = q - 1;
        std::vector<std::uint32_t> prime_factors;
        for (std::uint32_t n = order, f = 2; n > 1; ++f) {
            if (f * f > n)
                f = n;
            if (n % f == 0) {
                prime_factors.push_back(f);
                while (n % f == 0)
                    n /= f;
            }
        }
        auto slow_pow = [&](Elem a, std::uint64_t e) {
            Elem r = one();
            while (e) {
                if (e & 1)
                    r = poly_mul(r, a);
                a = poly_mul(a, a);
                e >>= 1;
            }
            return r;
        };
        std::uint32_t gen = 2;
        for (;; ++gen) {
            bool primitive = true;
            for (auto f : prime_factors)
                if (slow_pow(Elem{gen}, order / f) == one()) {
                    primitive = false;
                    break;
                }
            if (primitive)
                break;
        }
        tables->exp.resize(2 * std::size_t(order));
        tables->log.assign(q, 0);
        Elem x = one();
        for (std::uint32_t i = 0; i < order; ++i) {
            tables->exp[i] = tables->exp[i + order] = x.value;
            tables->log[x.value] = i;
            x = poly_mul(x, Elem{gen});
        }
    }

    tables_ = std::move(tables);
    if (!tables_->add.empty()) {
        add_ = tables_->add.data();
        mul_ = tables_->mul.data();
    }
}

Elem Field::element(std::uint64_t index) const
{
    if (index >= spec_.q)
        throw FieldError("element index " + std::to_string(index) + " out of range for q = " +
                         std::to_string(spec_.q));
    return Elem{static_cast<std::uint32_t>(index)};
}

Elem Field::from_int(std::int64_t n) const
{
    const std::int64_t p = spec_.p;
    return Elem{static_cast<std::uint32_t>(((n % p) + p) % p)};
}

Elem Field::add_slow(Elem a, Elem b) const
{
    const std::uint32_t p = spec_.p;
    if (spec_.k == 1) {
        const std::uint32_t s = a.value + b.value;
        return Elem{s >= p ? s - p : s};
    }
    std::uint32_t out = 0, place = 1;
    for (std::uint32_t i = 0; i < spec_.k; ++i) {
        const std::uint32_t da = a.value / place % p;
        const std::uint32_t db = b.value / place % p;
        out += (da + db) % p * place;
        place *= p;
    }
    return Elem{out};
}

Elem Field::mul_slow(Elem a, Elem b) const
{
    if (spec_.k == 1)
        return Elem{static_cast<std::uint32_t>(std::uint64_t(a.value) * b.value % spec_.p)};
    if (a.value == 0 || b.value == 0)
        return zero();
    return Elem{tables_->exp[tables_->log[a.value] + tables_->log[b.value]]};
}

Elem Field::neg(Elem a) const
{
    return Elem{tables_->neg[a.value]};
}

Elem Field::inv(Elem a) const
{
    if (a.value == 0)
        throw FieldError("inverse of zero");
    if (!tables_->inv.empty())
        return Elem{tables_->inv[a.value]};
    if (spec_.k == 1)
        return Elem{inverse_mod(a.value, spec_.p)};
    const std::uint32_t order = spec_.q - 1;
    return Elem{tables_->exp[(order - tables_->log[a.value]) % order]};
}

Elem Field::pow(Elem a, std::uint64_t e) const
{
    Elem r = one();
    while (e) {
        if (e & 1)
            r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::vector<Elem> Field::elements() const
{
    std::vector<Elem> out(spec_.q);
    for (std::uint32_t i = 0; i < spec_.q; ++i)
        out[i] = Elem{i};
    return out;
}

std::vector<std::uint32_t> Field::coefficients(Elem a) const
{
    std::vector<std::uint32_t> c(spec_.k);
    std::uint32_t rest = a.value;
    for (auto& x : c) {
        x = rest % spec_.p;
        rest /= spec_.p;
    }
    return c;
}

Elem Field::from_coefficients(std::span<const std::uint32_t> coeffs) const
{
    if (coeffs.size() != spec_.k)
        throw FieldError("coefficient count must equal k");
    std::uint32_t out = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] >= spec_.p)
            throw FieldError("coefficient out of range");
        out = out * spec_.p + coeffs[i];
    }
    return Elem{out};
}

Elem Field::poly_mul(Elem a, Elem b) const
{
    const std::uint32_t p = spec_.p;
    if (spec_.k == 1)
        return Elem{static_cast<std::uint32_t>(std::uint64_t(a.value) * b.value % p)};
    const auto ca = coefficients(a);
    const auto cb = coefficients(b);
    Poly prod(2 * spec_.k - 1, 0);
    for (std::size_t i = 0; i < ca.size(); ++i)
        for (std::size_t j = 0; j < cb.size(); ++j)
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t(ca[i]) * cb[j]) % p);
    Poly r = poly_rem(std::move(prod), spec_.modulus, p);
    r.resize(spec_.k, 0);
    return from_coefficients(r);
}

std::string describe(const FieldSpec& spec)
{
    std::ostringstream os;
    os << "GF(" << spec.q << ")";
    if (spec.k > 1) {
        os << " mod [";
        for (std::size_t i = 0; i < spec.modulus.size(); ++i)
            os << (i ? "," : "") << spec.modulus[i];
        os << "]";
    }
    return os.str();
}

} // namespace volset
