#include <kmo/verifier.hpp>

#include "support/oracles.hpp"

#include <gtest/gtest.h>

using kmo::IdentityContext;
using kmo::OctKind;
using kmo::Ordering;
using kmo::Rational;
using kmo::RatOctonion;
using kmo::Statement;
using kmo::Status;
using Arr = std::array<Rational, 8>;

namespace {

constexpr auto MO = OctKind::MO;
constexpr auto MLO = OctKind::MLO;
constexpr auto K1 = Statement::KEqualsOne;

void expect_pass(const kmo::CheckResult& r)
{
    EXPECT_EQ(r.status, Status::Pass) << to_string(r.identity.name) << " residual " << r.residual << " " << r.note;
    EXPECT_TRUE(r.residual.is_zero());
}

// k = 1 constants from the text table: α = Σ 2ʳe_r, β = Σ e_r.
Arr alpha1()
{
    Arr a{};
    for (unsigned long r = 0; r < 8; ++r) {
        a[r] = Rational(kmo::pow2(r));
    }
    return a;
}

Arr beta1()
{
    Arr b{};
    b.fill(Rational(1));
    return b;
}

Arr table_mul(const Arr& a, const Arr& b) { return kmo::test::text_mul(a, b); }

Rational p2(long e) { return e >= 0 ? Rational(kmo::pow2(e)) : Rational(kmo::BigInt(1), kmo::pow2(-e)); }

Arr seq_k1(OctKind f, unsigned long n) { return kmo::test::mo_k1(n, f == MLO); }

} // namespace

// --- Catalan ---------------------------------------------------------------

TEST(Catalan, Examples)
{
    expect_pass(kmo::check_catalan(MO, 1, 2, 1, Ordering::LR));
    expect_pass(kmo::check_catalan(MO, 2, 3, 2, Ordering::RL));
    for (const auto f : {MO, MLO}) {
        for (const auto o : {Ordering::LR, Ordering::RL}) {
            for (std::int64_t k = 1; k <= 3; ++k) {
                expect_pass(kmo::check_catalan(f, k, 4, 0, o));
            }
        }
    }
}

TEST(Catalan, KOneAgainstTextTableOracle)
{
    const Arr a = alpha1(), b = beta1();
    const Arr ab = table_mul(a, b), ba = table_mul(b, a);
    for (const auto f : {MO, MLO}) {
        const IdentityContext ctx(f, 1, 30);
        for (long n = 0; n <= 12; ++n) {
            for (long r = 0; r <= n; ++r) {
                const Arr lr = kmo::test::sub(table_mul(seq_k1(f, n + r), seq_k1(f, n - r)), table_mul(seq_k1(f, n), seq_k1(f, n)));
                const Rational s = f == MO ? Rational(1) : Rational(-1);
                const Arr rhs = kmo::test::scaled(
                    kmo::test::add(kmo::test::scaled(ab, s * (Rational(1) - p2(r))), kmo::test::scaled(ba, s * (Rational(1) - p2(-r)))),
                    p2(n));
                ASSERT_EQ(lr, rhs) << "n=" << n << " r=" << r;
                expect_pass(kmo::check_catalan(ctx, n, r, Ordering::LR));
                expect_pass(kmo::check_catalan(ctx, n, r, Ordering::LR, K1));
                expect_pass(kmo::check_catalan(ctx, n, r, Ordering::RL));
                expect_pass(kmo::check_catalan(ctx, n, r, Ordering::RL, K1));
            }
        }
    }
}

TEST(Catalan, OrderingsGiveDifferentLeftHandSides)
{
    const Arr s3 = seq_k1(MO, 3), s1 = seq_k1(MO, 1);
    EXPECT_NE(table_mul(s3, s1), table_mul(s1, s3));
}

TEST(Catalan, RejectsRGreaterThanN)
{
    EXPECT_THROW(kmo::check_catalan(MO, 2, 2, 3, Ordering::LR), kmo::InvalidArgument);
}

// --- Cassini ---------------------------------------------------------------

TEST(Cassini, Examples)
{
    expect_pass(kmo::check_cassini(MO, 1, 1, Ordering::LR));
    expect_pass(kmo::check_cassini(MLO, 3, 2, Ordering::RL));
    EXPECT_THROW(kmo::check_cassini(MO, 2, 0, Ordering::LR), kmo::InvalidArgument);
}

TEST(Cassini, DirectKOneComputation)
{
    // MO₂MO₀ − MO₁² from the text table, against 2⁰(βα − 2αβ).
    const Arr lhs = kmo::test::sub(table_mul(seq_k1(MO, 2), seq_k1(MO, 0)), table_mul(seq_k1(MO, 1), seq_k1(MO, 1)));
    const Arr a = alpha1(), b = beta1();
    EXPECT_EQ(lhs, kmo::test::sub(table_mul(b, a), kmo::test::scaled(table_mul(a, b), Rational(2))));
}

TEST(Cassini, EqualsCatalanAtROne)
{
    for (const auto f : {MO, MLO}) {
        for (std::int64_t k = 1; k <= 5; ++k) {
            const IdentityContext ctx(f, k, 20);
            for (std::uint64_t n = 1; n <= 15; ++n) {
                for (const auto o : {Ordering::LR, Ordering::RL}) {
                    const auto cas = kmo::check_cassini(ctx, n, o);
                    const auto cat = kmo::check_catalan(ctx, n, 1, o);
                    ASSERT_EQ(cas.status, cat.status);
                    ASSERT_EQ(cas.residual, cat.residual);
                }
            }
        }
    }
}

TEST(Cassini, KOneLucasFactorIsHalfThePrintedOne)
{
    const Arr a = alpha1(), b = beta1();
    for (long n = 1; n <= 10; ++n) {
        const Arr lhs = kmo::test::sub(table_mul(seq_k1(MLO, n + 1), seq_k1(MLO, n - 1)), table_mul(seq_k1(MLO, n), seq_k1(MLO, n)));
        const Arr inner = kmo::test::sub(kmo::test::scaled(table_mul(a, b), Rational(2)), table_mul(b, a));
        EXPECT_EQ(lhs, kmo::test::scaled(inner, p2(n - 1)));
        EXPECT_NE(lhs, kmo::test::scaled(inner, p2(n)));
    }
}

TEST(Cassini, StatedKOneForm)
{
    const IdentityContext mo(MO, 1, 10), mlo(MLO, 1, 10);
    for (std::uint64_t n = 1; n <= 9; ++n) {
        for (const auto o : {Ordering::LR, Ordering::RL}) {
            expect_pass(kmo::check_cassini(mo, n, o, K1));
            expect_pass(kmo::check_cassini(mlo, n, o, K1));
            expect_pass(kmo::check_cassini_k1_as_stated(mo, n, o));
            const auto stated = kmo::check_cassini_k1_as_stated(mlo, n, o);
            EXPECT_EQ(stated.status, Status::Fail);
            EXPECT_FALSE(stated.residual.is_zero());
        }
    }
}

// --- d'Ocagne, Vajda -------------------------------------------------------

TEST(Docagne, Examples)
{
    expect_pass(kmo::check_docagne(MO, 2, 1, 3));
    expect_pass(kmo::check_docagne(MLO, 1, 2, 0, K1));
    expect_pass(kmo::check_docagne(MLO, 1, 2, 0));
}

TEST(Docagne, NEqualsRIsACommutator)
{
    for (const auto f : {MO, MLO}) {
        for (std::int64_t k = 1; k <= 4; ++k) {
            const IdentityContext ctx(f, k, 12);
            for (std::uint64_t n = 0; n <= 10; ++n) {
                const RatOctonion comm = commutator(ctx.term(n), ctx.term(n + 1));
                EXPECT_EQ(ctx.product(n, n + 1) - ctx.product(n + 1, n), comm);
                EXPECT_FALSE(comm.is_zero());
                expect_pass(kmo::check_docagne(ctx, n, n));
            }
        }
    }
}

TEST(Docagne, KOneAgainstTextTableOracle)
{
    const Arr a = alpha1(), b = beta1();
    for (const auto f : {MO, MLO}) {
        for (long n = 0; n <= 8; ++n) {
            for (long r = 0; r <= 8; ++r) {
                const Arr lhs = kmo::test::sub(table_mul(seq_k1(f, r), seq_k1(f, n + 1)), table_mul(seq_k1(f, r + 1), seq_k1(f, n)));
                const Rational s = f == MO ? Rational(1) : Rational(-1);
                const Arr rhs = kmo::test::sub(kmo::test::scaled(table_mul(a, b), s * p2(r)), kmo::test::scaled(table_mul(b, a), s * p2(n)));
                ASSERT_EQ(lhs, rhs);
            }
        }
    }
}

TEST(Vajda, Examples)
{
    expect_pass(kmo::check_vajda(MO, 2, 1, 1, 2));
    expect_pass(kmo::check_vajda(MLO, 1, 2, 2, 1, K1));
    for (const auto f : {MO, MLO}) {
        for (std::int64_t k = 1; k <= 3; ++k) {
            for (std::uint64_t j = 0; j <= 4; ++j) {
                expect_pass(kmo::check_vajda(f, k, 3, 0, j));
            }
        }
    }
}

TEST(Vajda, KOneAgainstTextTableOracle)
{
    const Arr a = alpha1(), b = beta1();
    for (const auto f : {MO, MLO}) {
        for (long n = 0; n <= 6; ++n) {
            for (long i = 0; i <= 5; ++i) {
                for (long j = 0; j <= 5; ++j) {
                    const Arr lhs =
                        kmo::test::sub(table_mul(seq_k1(f, n + i), seq_k1(f, n + j)), table_mul(seq_k1(f, n), seq_k1(f, n + i + j)));
                    const Rational s = f == MO ? Rational(1) : Rational(-1);
                    const Rational scale = p2(n) * Rational(kmo::test::mersenne_k1(i));
                    const Arr inner =
                        kmo::test::sub(kmo::test::scaled(table_mul(b, a), s * p2(j)), kmo::test::scaled(table_mul(a, b), s));
                    ASSERT_EQ(lhs, kmo::test::scaled(inner, scale));
                }
            }
        }
    }
}

// --- generating function ---------------------------------------------------

TEST(Genfunc, Examples)
{
    expect_pass(kmo::check_genfunc_ordinary(MO, 1, 16));
    expect_pass(kmo::check_genfunc_ordinary(MO, 1, 16, K1));
    expect_pass(kmo::check_genfunc_ordinary(MLO, 3, 16));
    const auto s0 = kmo::oct_seq({MO, 2}, 0), s1 = kmo::oct_seq({MO, 2}, 1);
    const auto series = kmo::expand_ordinary_genfunc(s0, s1, 2, 8);
    EXPECT_EQ(series.coefficients.size(), 8u);
    EXPECT_EQ(series.coefficients[0], s0);
    EXPECT_THROW(kmo::expand_ordinary_genfunc(s0, s1, 2, 1), kmo::InvalidArgument);
}

TEST(Genfunc, KIndependentDenominatorDoesNotReproduceSequence)
{
    // Under 1 − 3x + 2x² the coefficients obey c₂ = 3c₁ − 2c₀, which the k = 2 sequence does not.
    const auto s0 = kmo::oct_seq({MO, 2}, 0), s1 = kmo::oct_seq({MO, 2}, 1);
    const RatOctonion c2 = s1 * Rational(3) - s0 * Rational(2);
    EXPECT_NE(c2, kmo::oct_seq({MO, 2}, 2));
}

// --- finite sum ------------------------------------------------------------

TEST(FiniteSum, Shadows)
{
    expect_pass(kmo::check_finite_sum(MO, 2, 2));
    EXPECT_EQ(Rational(2 * 6 - 34 + 1 + 0) / Rational(-3), Rational(0 + 1 + 6));
    expect_pass(kmo::check_finite_sum(MO, 1, 1, K1));
    expect_pass(kmo::check_finite_sum(MLO, 1, 1, K1));
    // e₀ shadows: M₂ − (α₀ + β₀) = 1 = M₀ + M₁ and m₂ − (α₀ − β₀) = 5 = m₀ + m₁
    EXPECT_EQ(Rational(kmo::test::mersenne_k1(2)) - (alpha1()[0] + beta1()[0]), Rational(1));
    EXPECT_EQ(Rational(kmo::test::lucas_k1(2)) - (alpha1()[0] - beta1()[0]), Rational(5));
}

TEST(FiniteSum, GeneralFormSkippedAtKOne)
{
    const auto r = kmo::check_finite_sum(MO, 1, 5);
    EXPECT_EQ(r.status, Status::Skipped);
    EXPECT_NE(r.note.find("k != 1"), std::string::npos);
}

TEST(FiniteSum, PassesAcrossK)
{
    for (const auto f : {MO, MLO}) {
        for (std::int64_t k = 2; k <= 5; ++k) {
            const IdentityContext ctx(f, k, 30);
            for (std::uint64_t n = 0; n <= 24; ++n) {
                expect_pass(kmo::check_finite_sum(ctx, n));
            }
        }
    }
}

// --- norm, binet -----------------------------------------------------------

TEST(NormAndBinet, PassBothStatements)
{
    for (const auto f : {MO, MLO}) {
        const IdentityContext ctx(f, 1, 22);
        for (std::uint64_t n = 0; n <= 20; ++n) {
            expect_pass(kmo::check_norm_closed(ctx, n));
            expect_pass(kmo::check_norm_closed(ctx, n, K1));
            expect_pass(kmo::check_binet(ctx, n));
            expect_pass(kmo::check_binet(ctx, n, K1));
        }
    }
}

// --- errors and sensitivity ------------------------------------------------

TEST(Verifier, InputErrors)
{
    const IdentityContext ctx(MO, 2, 5);
    EXPECT_THROW((void)ctx.term(6), kmo::InvalidArgument);
    EXPECT_THROW(kmo::check_catalan(ctx, 5, 1, Ordering::LR), kmo::InvalidArgument);
    EXPECT_THROW(kmo::check_binet(ctx, 1, K1), kmo::InvalidArgument);
    EXPECT_THROW(IdentityContext(MO, 0, 5), kmo::InvalidArgument);
}

TEST(Verifier, CorruptedTableIsDetected)
{
    const IdentityContext bad(MO, 2, 12, kmo::corrupted_table());
    for (const auto o : {Ordering::LR, Ordering::RL}) {
        const auto r = kmo::check_cassini(bad, 3, o);
        EXPECT_EQ(r.status, Status::Fail);
        EXPECT_FALSE(r.residual.is_zero());
    }
    EXPECT_EQ(kmo::check_catalan(bad, 4, 3, Ordering::LR).status, Status::Fail);
}

TEST(Verifier, ResultIdentifiesItself)
{
    const auto r = kmo::check_vajda(MLO, 3, 2, 1, 4);
    EXPECT_EQ(r.identity.family, MLO);
    EXPECT_EQ(r.identity.name, kmo::IdentityName::Vajda);
    EXPECT_FALSE(r.identity.k1_specialized);
    EXPECT_EQ(r.params, (kmo::Params{{"k", 3}, {"n", 2}, {"i", 1}, {"j", 4}}));
}

TEST(Verifier, NamesRoundTrip)
{
    for (const auto name : kmo::kAllIdentities) {
        EXPECT_EQ(kmo::parse_identity_name(to_string(name)), name);
    }
    EXPECT_FALSE(kmo::parse_identity_name("nope").has_value());
    EXPECT_EQ(kmo::parse_family("MLO"), MLO);
    EXPECT_FALSE(kmo::parse_family("mo").has_value());
}
