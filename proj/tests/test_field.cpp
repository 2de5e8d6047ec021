#include <doctest.h>

#include "oracles.hpp"
#include "volset/field.hpp"

using namespace volset;

TEST_CASE("field parameters")
{
    const auto s5 = make_field_spec(5, 1);
    CHECK(s5.q == 5);
    CHECK(s5.modulus.empty());

    const auto s9 = make_field_spec(3, 2, std::vector<std::uint32_t>{1, 0, 1});
    CHECK(s9.q == 9);
    CHECK(s9.modulus == std::vector<std::uint32_t>{1, 0, 1});

    // default modulus for GF(9) is the smallest irreducible, x^2 + 1
    CHECK(make_field_spec(3, 2).modulus == std::vector<std::uint32_t>{1, 0, 1});

    CHECK_THROWS_WITH_AS(make_field_spec(2, 1), doctest::Contains("even characteristic"), FieldError);
    CHECK_THROWS_AS(make_field_spec(9, 1), FieldError);
    CHECK_THROWS_AS(make_field_spec(3, 0), FieldError);
    CHECK_THROWS_AS(make_field_spec(3, 2, std::vector<std::uint32_t>{2, 0, 1}), FieldError); // x^2 + 2 = (x-1)(x+1)
    CHECK_THROWS_AS(make_field_spec(3, 2, std::vector<std::uint32_t>{1, 1}), FieldError);
    CHECK_THROWS_AS(make_field_spec(3, 2, std::vector<std::uint32_t>{1, 0, 2}), FieldError);
}

TEST_CASE("irreducibility against root search")
{
    // degree 2 and 3 polynomials are irreducible iff they have no root
    for (std::uint32_t p : {3u, 5u, 7u})
        for (std::uint32_t deg : {2u, 3u}) {
            std::uint32_t total = 1;
            for (std::uint32_t i = 0; i < deg; ++i)
                total *= p;
            for (std::uint32_t code = 0; code < total; ++code) {
                std::vector<std::uint32_t> poly(deg + 1, 0);
                std::uint32_t c = code;
                for (std::uint32_t i = 0; i < deg; ++i, c /= p)
                    poly[i] = c % p;
                poly[deg] = 1;
                bool root = false;
                for (std::uint32_t x = 0; x < p && !root; ++x) {
                    std::uint64_t v = 0;
                    for (std::size_t i = poly.size(); i-- > 0;)
                        v = (v * x + poly[i]) % p;
                    root = v == 0;
                }
                CHECK(is_irreducible(poly, p) == !root);
            }
        }
}

TEST_CASE("small examples")
{
    const auto f5 = Field::make(5);
    CHECK(f5.add(Elem{3}, Elem{4}) == Elem{2});
    CHECK(f5.inv(Elem{2}) == Elem{3});
    CHECK(f5.neg(Elem{1}) == Elem{4});
    CHECK_THROWS(f5.inv(Elem{0}));

    const auto f9 = Field::make(3, 2, std::vector<std::uint32_t>{1, 0, 1});
    const Elem x{3}; // coefficients (0, 1)
    CHECK(f9.mul(x, x) == Elem{2});

    const auto f3 = Field::make(3);
    const auto els = f3.elements();
    CHECK(els == std::vector<Elem>{Elem{0}, Elem{1}, Elem{2}});
    CHECK(f9.elements().size() == 9);
}

TEST_CASE("arithmetic matches polynomial oracle")
{
    struct Case {
        std::uint32_t p, k;
    };
    for (auto c : {Case{3, 1}, Case{5, 1}, Case{7, 1}, Case{3, 2}, Case{5, 2}, Case{3, 3}, Case{7, 2}, Case{3, 4}}) {
        const auto f = Field::make(c.p, c.k);
        const oracle::PolyField o(c.p, c.k, f.spec().modulus.empty() ? std::vector<std::uint32_t>{0, 1}
                                                                     : f.spec().modulus);
        CAPTURE(c.p);
        CAPTURE(c.k);
        for (std::uint32_t a = 0; a < f.q(); ++a)
            for (std::uint32_t b = 0; b < f.q(); ++b) {
                REQUIRE(f.add(Elem{a}, Elem{b}).value == o.add(a, b));
                REQUIRE(f.mul(Elem{a}, Elem{b}).value == o.mul(a, b));
                REQUIRE(f.poly_mul(Elem{a}, Elem{b}).value == o.mul(a, b));
            }
    }
}

TEST_CASE("large fields use the untabulated paths")
{
    // 3^7 = 2187 > 256 forces exp/log tables; 65537 is a large prime field
    for (auto [p, k] : {std::pair{3u, 7u}, std::pair{65537u, 1u}, std::pair{17u, 3u}}) {
        const auto f = Field::make(p, k);
        const oracle::PolyField o(p, k, f.spec().modulus.empty() ? std::vector<std::uint32_t>{0, 1} : f.spec().modulus);
        std::uint64_t state = 12345;
        auto next = [&] {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            return static_cast<std::uint32_t>((state >> 33) % f.q());
        };
        for (int i = 0; i < 3000; ++i) {
            const Elem a{next()}, b{next()};
            REQUIRE(f.mul(a, b).value == o.mul(a.value, b.value));
            REQUIRE(f.add(a, b).value == o.add(a.value, b.value));
            if (a != Field::zero())
                REQUIRE(f.mul(a, f.inv(a)) == Field::one());
        }
    }
}

TEST_CASE("field axioms, exhaustive for q <= 49")
{
    for (auto [p, k] : {std::pair{3u, 1u}, std::pair{5u, 1u}, std::pair{7u, 1u}, std::pair{3u, 2u}, std::pair{11u, 1u},
                        std::pair{5u, 2u}, std::pair{3u, 3u}, std::pair{7u, 2u}}) {
        const auto f = Field::make(p, k);
        const auto q = f.q();
        CAPTURE(q);
        for (std::uint32_t a = 0; a < q; ++a) {
            const Elem A{a};
            REQUIRE(f.add(A, Field::zero()) == A);
            REQUIRE(f.mul(A, Field::one()) == A);
            REQUIRE(f.add(A, f.neg(A)) == Field::zero());
            if (a) {
                REQUIRE(f.mul(A, f.inv(A)) == Field::one());
                REQUIRE(f.pow(A, q - 1) == Field::one());
            }
            const auto coeffs = f.coefficients(A);
            REQUIRE(f.from_coefficients(coeffs) == A);
            for (std::uint32_t b = 0; b < q; ++b) {
                const Elem B{b};
                REQUIRE(f.add(A, B) == f.add(B, A));
                REQUIRE(f.mul(A, B) == f.mul(B, A));
                REQUIRE(f.sub(f.add(A, B), B) == A);
                if (b)
                    REQUIRE(f.mul(f.div(A, B), B) == A);
                // associativity and distributivity on a stride of c
                for (std::uint32_t c = (a + b) % 3; c < q; c += 3) {
                    const Elem C{c};
                    REQUIRE(f.add(f.add(A, B), C) == f.add(A, f.add(B, C)));
                    REQUIRE(f.mul(f.mul(A, B), C) == f.mul(A, f.mul(B, C)));
                    REQUIRE(f.mul(A, f.add(B, C)) == f.add(f.mul(A, B), f.mul(A, C)));
                }
            }
        }
    }
}

TEST_CASE("pow against repeated multiplication")
{
    const auto f = Field::make(5);
    for (std::uint32_t a = 1; a < 5; ++a) {
        Elem r = Field::one();
        for (int i = 0; i < 4; ++i)
            r = f.mul(r, Elem{a});
        CHECK(r == Field::one());
        CHECK(f.pow(Elem{a}, 4) == r);
    }
}

TEST_CASE("element index checks")
{
    const auto f = Field::make(5);
    CHECK(f.element(4) == Elem{4});
    CHECK_THROWS(f.element(5));
    CHECK(f.from_int(-1) == Elem{4});
    CHECK(f.from_int(7) == Elem{2});
}
