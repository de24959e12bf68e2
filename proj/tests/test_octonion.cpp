#include <kmo/octonion.hpp>
#include <kmo/quad.hpp>
#include <kmo/verifier.hpp>

#include "support/oracles.hpp"
#include "support/random.hpp"

#include <gtest/gtest.h>

using kmo::Octonion;
using kmo::QuadElem;
using kmo::Rational;
using RO = Octonion<Rational>;

namespace {

RO e(std::size_t r) { return RO::basis(r, Rational()); }

RO from_ints(std::array<long, 8> v)
{
    return RO::from_fn([&](std::size_t r) { return Rational(v[r]); });
}

} // namespace

TEST(OctonionTable, MatchesTextTranscription)
{
    const auto text = kmo::test::parse_table_text();
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = 0; j < 8; ++j) {
            const auto& want = text[i][j];
            const auto got = kmo::kOctonionTable(i, j);
            EXPECT_EQ(got.sign, want.sign) << "e" << i << "*e" << j;
            EXPECT_EQ(got.index, static_cast<std::size_t>(want.index)) << "e" << i << "*e" << j;
            EXPECT_EQ(e(i) * e(j), e(want.index) * Rational(want.sign)) << "e" << i << "*e" << j;
        }
    }
}

TEST(OctonionTable, SpotEntries)
{
    EXPECT_EQ(e(1) * e(2), e(3));
    EXPECT_EQ(e(2) * e(1), -e(3));
    EXPECT_EQ(e(5) * e(6), -e(3));
    EXPECT_EQ(e(4) * e(4), -e(0));
    EXPECT_EQ(e(0) * e(7), e(7));
}

TEST(OctonionTable, WellFormedness)
{
    EXPECT_TRUE(kmo::is_well_formed(kmo::kOctonionTable));
    EXPECT_FALSE(kmo::is_well_formed(kmo::corrupted_table()));
}

TEST(OctonionConj, Examples)
{
    const RO a = from_ints({1, 2, 3, 4, 5, 6, 7, 8});
    EXPECT_EQ(conj(a), from_ints({1, -2, -3, -4, -5, -6, -7, -8}));
    EXPECT_EQ(conj(conj(a)), a);
    EXPECT_EQ(a + conj(a), RO::real(Rational(2)));
}

TEST(OctonionNorm, Examples)
{
    EXPECT_EQ(norm_sq(from_ints({0, 1, 3, 7, 15, 31, 63, 127})), Rational(21343));
    EXPECT_EQ(norm_sq(RO::zero(Rational())), Rational(0));
    const RO a = from_ints({1, 2, 3, 4, 5, 6, 7, 8});
    EXPECT_EQ((a * conj(a)), RO::real(norm_sq(a)));
}

TEST(OctonionAssociator, Examples)
{
    // (e1e2)e4 = e3e4 = e7, e1(e2e4) = e1e6 = −e7
    EXPECT_EQ(associator(e(1), e(2), e(4)), e(7) * Rational(2));
    EXPECT_TRUE(associator(e(1), e(2), e(3)).is_zero());
    EXPECT_EQ(commutator(e(1), e(2)), e(3) * Rational(2));
}

TEST(OctonionRing, MixedRingsThrow)
{
    auto bad = [] {
        return Octonion<QuadElem>::from_fn([](std::size_t r) { return QuadElem::one(r == 3 ? 2 : 1); });
    };
    EXPECT_THROW(bad(), kmo::ParameterMismatch);
    const auto a = Octonion<QuadElem>::basis(1, QuadElem::one(1));
    const auto b = Octonion<QuadElem>::basis(1, QuadElem::one(2));
    EXPECT_THROW(a * b, kmo::ParameterMismatch);
    EXPECT_THROW(a + b, kmo::ParameterMismatch);
}

TEST(CayleyDickson, AgreesOnBasisPairs)
{
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = 0; j < 8; ++j) {
            EXPECT_EQ(kmo::cd_mul_oracle(e(i), e(j)), e(i) * e(j)) << "e" << i << "*e" << j;
        }
    }
}

TEST(CayleyDickson, AgreesOnRandomOctonions)
{
    kmo::test::Gen gen(1);
    for (int t = 0; t < 10000; ++t) {
        const RO a = gen.integer_octonion(), b = gen.integer_octonion();
        ASSERT_EQ(kmo::cd_mul_oracle(a, b), a * b);
    }
}

TEST(TextOracle, AgreesOnRandomRationalOctonions)
{
    kmo::test::Gen gen(2);
    for (int t = 0; t < 1000; ++t) {
        const RO a = gen.rational_octonion(), b = gen.rational_octonion();
        ASSERT_EQ((a * b).coords(), kmo::test::text_mul(a.coords(), b.coords()));
    }
}

// --- properties ------------------------------------------------------------

TEST(OctonionProperties, NormComposition)
{
    kmo::test::Gen gen(5);
    for (int t = 0; t < 1000; ++t) {
        const RO a = gen.rational_octonion(), b = gen.rational_octonion();
        ASSERT_EQ(norm_sq(a * b), norm_sq(a) * norm_sq(b));
    }
}

TEST(OctonionProperties, NormCompositionOverQuadRing)
{
    kmo::test::Gen gen(6);
    for (std::int64_t k = 1; k <= 3; ++k) {
        for (int t = 0; t < 400; ++t) {
            const auto a = gen.quad_octonion(k), b = gen.quad_octonion(k);
            ASSERT_EQ(norm_sq(a * b), norm_sq(a) * norm_sq(b));
        }
    }
}

TEST(OctonionProperties, Alternativity)
{
    kmo::test::Gen gen(7);
    for (int t = 0; t < 1000; ++t) {
        const RO a = gen.rational_octonion(), b = gen.rational_octonion();
        ASSERT_TRUE(associator(a, a, b).is_zero());
        ASSERT_TRUE(associator(a, b, b).is_zero());
        ASSERT_TRUE(associator(a, b, a).is_zero());
    }
}

TEST(OctonionProperties, ConjugationIsAnAntiAutomorphism)
{
    kmo::test::Gen gen(8);
    for (int t = 0; t < 1000; ++t) {
        const RO a = gen.rational_octonion(), b = gen.rational_octonion();
        ASSERT_EQ(conj(a * b), conj(b) * conj(a));
        ASSERT_EQ(a * conj(a), conj(a) * a);
        ASSERT_EQ(a * conj(a), RO::real(norm_sq(a)));
    }
}

TEST(OctonionProperties, NotAssociativeOrCommutativeInGeneral)
{
    kmo::test::Gen gen(9);
    int nonassoc = 0, noncomm = 0;
    for (int t = 0; t < 200; ++t) {
        const RO a = gen.integer_octonion(), b = gen.integer_octonion(), c = gen.integer_octonion();
        nonassoc += associator(a, b, c).is_zero() ? 0 : 1;
        noncomm += commutator(a, b).is_zero() ? 0 : 1;
    }
    EXPECT_GT(nonassoc, 150);
    EXPECT_GT(noncomm, 150);
}

TEST(OctonionProperties, Bilinearity)
{
    kmo::test::Gen gen(10);
    for (int t = 0; t < 1000; ++t) {
        const RO a = gen.rational_octonion(), b = gen.rational_octonion(), c = gen.rational_octonion();
        const Rational s = gen.rational();
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ((a * s) * b, (a * b) * s);
    }
}
