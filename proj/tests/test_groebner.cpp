#include <gtest/gtest.h>

#include <algorithm>

#include "locmem/groebner.hpp"
#include "test_support.hpp"

using namespace locmem;
using namespace locmem::testing;

namespace {

Ideal random_ideal(Rng& rng, Field f, std::size_t nvars) {
    Ideal ideal(f, nvars);
    int gens = static_cast<int>(uniform(rng, 1, 3));
    for (int g = 0; g < gens; ++g) ideal.add(random_polynomial(rng, f, nvars, 2, 3));
    return ideal;
}

bool is_reduced(const GroebnerBasis& gb) {
    for (std::size_t i = 0; i < gb.basis.size(); ++i) {
        if (gb.basis[i].leading_coeff() != 1) return false;
        for (std::size_t j = 0; j < gb.basis.size(); ++j) {
            if (i == j) continue;
            const Monomial& lt = leading_term(gb.basis[j], gb.order).mono;
            for (const auto& t : gb.basis[i].terms())
                if (lt.divides(t.mono)) return false;
        }
    }
    return true;
}

}  // namespace

TEST(Groebner, KnownBasis) {
    const std::size_t n = 2;
    Ideal ideal(Field::rationals(), n, {y(n, 1) * y(n, 1) - y(n, 2), y(n, 1) * y(n, 2) - c(n, 1)});
    GroebnerBasis lexgb = buchberger(ideal, MonomialOrder{OrderKind::lex, n});
    // lex, y1 > y2: {y1 - y2^2, y2^3 - 1}
    ASSERT_EQ(lexgb.basis.size(), 2u);
    EXPECT_EQ(lexgb.basis[0], y(n, 1) - y(n, 2) * y(n, 2));
    EXPECT_EQ(lexgb.basis[1], y(n, 2) * y(n, 2) * y(n, 2) - c(n, 1));
}

TEST(Groebner, UnitIdeal) {
    const std::size_t n = 2;
    Ideal ideal(Field::rationals(), n, {y(n, 1), y(n, 1) - c(n, 1)});
    GroebnerBasis gb = buchberger(ideal);
    EXPECT_TRUE(gb.is_unit_ideal());
    EXPECT_TRUE(ideal_membership(y(n, 2) * y(n, 2) + c(n, 7), gb));
}

TEST(Groebner, ReducedBasisUniqueUnderShuffling) {
    Rng rng(314);
    for (int i = 0; i < 20; ++i) {
        Field f = (i % 2 == 0) ? Field::rationals() : Field::prime(7);
        std::size_t nvars = static_cast<std::size_t>(uniform(rng, 1, 3));
        Ideal ideal = random_ideal(rng, f, nvars);
        GroebnerBasis ref = buchberger(ideal);
        EXPECT_TRUE(is_reduced(ref)) << "ideal " << i;
        for (int s = 0; s < 3; ++s) {
            std::vector<Polynomial> gens = ideal.generators();
            std::shuffle(gens.begin(), gens.end(), rng);
            // redundant combinations do not change the ideal
            gens.push_back(gens.front() * random_polynomial(rng, f, nvars, 1, 2) + gens.back());
            GroebnerBasis other = buchberger(Ideal(f, nvars, gens));
            EXPECT_EQ(other.basis, ref.basis) << "ideal " << i << " shuffle " << s;
        }
    }
}

TEST(Groebner, MembershipAgreesWithMacaulayOracle) {
    Rng rng(77);
    Field f = Field::rationals();
    for (int i = 0; i < 30; ++i) {
        const std::size_t nvars = 3;
        Ideal ideal = random_ideal(rng, f, nvars);
        GroebnerBasis gb = buchberger(ideal);
        // combinations of generators are members
        Polynomial member(f, nvars);
        for (const auto& g : ideal.generators()) member = member + g * random_polynomial(rng, f, nvars, 1, 2);
        EXPECT_TRUE(ideal_membership(member, gb));
        EXPECT_TRUE(normal_form(member, gb.basis, gb.order).is_zero());
        // a random polynomial certified by the oracle must be accepted
        Polynomial probe = random_polynomial(rng, f, nvars, 2, 3);
        if (macaulay_member(probe, ideal.generators(), 4)) EXPECT_TRUE(ideal_membership(probe, gb));
        // and every element reported as a member of a proper ideal reduces to zero
        if (!gb.is_unit_ideal() && ideal_membership(probe, gb))
            EXPECT_TRUE(normal_form(probe, gb.basis, gb.order).is_zero());
    }
}

TEST(Groebner, GroebnerBasisSpansSameIdeal) {
    Rng rng(8);
    Field f = Field::rationals();
    for (int i = 0; i < 15; ++i) {
        Ideal ideal = random_ideal(rng, f, 2);
        GroebnerBasis gb = buchberger(ideal);
        for (const auto& g : ideal.generators()) EXPECT_TRUE(normal_form(g, gb.basis, gb.order).is_zero());
        for (const auto& b : gb.basis) EXPECT_TRUE(macaulay_member(b, ideal.generators(), 7)) << b.to_string();
    }
}

TEST(Radical, GoldenCases) {
    const std::size_t n = 3;
    Field f = Field::rationals();
    EXPECT_TRUE(radical_membership(y(n, 1), Ideal(f, n, {y(n, 1) * y(n, 1)})));
    EXPECT_FALSE(radical_membership(y(n, 2), Ideal(f, n, {y(n, 1), y(n, 3)})));
    EXPECT_TRUE(radical_membership(y(n, 1) + y(n, 2), Ideal(f, n, {y(n, 1) * y(n, 1) * y(n, 1), y(n, 2) * y(n, 2)})));
    EXPECT_FALSE(ideal_membership(y(n, 1), Ideal(f, n, {y(n, 1) * y(n, 1)})));
    // zero ideal: only 0 is in the radical
    EXPECT_FALSE(radical_membership(y(n, 1), Ideal(f, n)));
    EXPECT_TRUE(radical_membership(Polynomial(f, n), Ideal(f, n)));
}

TEST(Radical, AgreesWithNullstellensatzCertificates) {
    Rng rng(12);
    Field f = Field::rationals();
    const std::size_t nvars = 2;
    for (int i = 0; i < 20; ++i) {
        Polynomial base = random_polynomial(rng, f, nvars, 1, 2);
        Polynomial other = random_polynomial(rng, f, nvars, 1, 2);
        // f^2 * (unit-free multiple) keeps f in the radical
        Ideal ideal(f, nvars, {base * base, other * base * base});
        EXPECT_TRUE(radical_membership(base, ideal));
        EXPECT_TRUE(radical_certificate(base, ideal.generators(), 2, 4));
        Polynomial probe = random_polynomial(rng, f, nvars, 1, 2);
        if (radical_certificate(probe, ideal.generators(), 3, 6)) EXPECT_TRUE(radical_membership(probe, ideal));
    }
}

TEST(Radical, PrimeFieldCases) {
    const std::size_t n = 2;
    Field f = Field::prime(5);
    Polynomial x1 = y(n, 1, f), x2 = y(n, 2, f);
    EXPECT_TRUE(radical_membership(x1 * x2, Ideal(f, n, {x1 * x1, x2 * x2 * x2})));
    EXPECT_FALSE(radical_membership(x1 + x2, Ideal(f, n, {x1 * x2})));
}
