#pragma once

/**
 * @file verifier.hpp
 * @brief Exact verification of the closed forms and identities satisfied by
 *        the k-Mersenne and k-Mersenne-Lucas octonions.
 *
 * Every check evaluates its two sides along separate routes:
 *
 *   LHS  octonion products of sequence terms, over Rational, with the terms
 *        taken from the recurrence.
 *   RHS  α/β arithmetic in Octonion<QuadElem>, reduced and only then compared.
 *
 * The residual LHS − RHS is kept as an octonion so a failure points at the
 * offending coordinate. Notation: S_n is MO_{k,n} or mO_{k,n}, Δ = λ₁ − λ₂,
 * Δ² = 9k² − 8.
 */

#include "kmo/errors.hpp"
#include "kmo/octonion.hpp"
#include "kmo/octonion_sequences.hpp"
#include "kmo/quad.hpp"
#include "kmo/rational.hpp"
#include "kmo/sequences.hpp"

#include <algorithm>
#include <atomic>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

namespace kmo {

enum class IdentityName {
    CatalanLR,
    CatalanRL,
    CassiniLR,
    CassiniRL,
    Docagne,
    Vajda,
    GenfuncOrdinary,
    FiniteSum,
    NormClosed,
    Binet,
};

inline constexpr std::array kAllIdentities = {
    IdentityName::CatalanLR, IdentityName::CatalanRL, IdentityName::CassiniLR,      IdentityName::CassiniRL,
    IdentityName::Docagne,   IdentityName::Vajda,     IdentityName::GenfuncOrdinary, IdentityName::FiniteSum,
    IdentityName::NormClosed, IdentityName::Binet,
};

constexpr std::string_view to_string(IdentityName name)
{
    switch (name) {
    case IdentityName::CatalanLR: return "catalan_lr";
    case IdentityName::CatalanRL: return "catalan_rl";
    case IdentityName::CassiniLR: return "cassini_lr";
    case IdentityName::CassiniRL: return "cassini_rl";
    case IdentityName::Docagne: return "docagne";
    case IdentityName::Vajda: return "vajda";
    case IdentityName::GenfuncOrdinary: return "genfunc_ordinary";
    case IdentityName::FiniteSum: return "finite_sum";
    case IdentityName::NormClosed: return "norm_closed";
    case IdentityName::Binet: return "binet";
    }
    return "?";
}

inline std::optional<IdentityName> parse_identity_name(std::string_view text)
{
    for (auto name : kAllIdentities) {
        if (to_string(name) == text) {
            return name;
        }
    }
    return std::nullopt;
}

inline std::optional<OctKind> parse_family(std::string_view text)
{
    if (text == "MO") {
        return OctKind::MO;
    }
    if (text == "MLO") {
        return OctKind::MLO;
    }
    return std::nullopt;
}

/// LR: S_{n+r}·S_{n−r};  RL: S_{n−r}·S_{n+r}.
enum class Ordering { LR, RL };

/// General: the statement for arbitrary k, with α, β over the quadratic ring.
/// KEqualsOne: the specialised statement, with α = Σ 2ʳe_r and β = Σ e_r.
enum class Statement { General, KEqualsOne };

struct IdentityId {
    OctKind family;
    IdentityName name;
    bool k1_specialized = false;

    friend auto operator<=>(const IdentityId&, const IdentityId&) = default;
};

enum class Status { Pass, Fail, Skipped };

constexpr std::string_view to_string(Status s)
{
    switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skipped: return "SKIPPED";
    }
    return "?";
}

using Params = std::map<std::string, std::int64_t>;

struct CheckResult {
    IdentityId identity;
    Params params;
    Status status;
    RatOctonion residual;
    std::string note;
};

/// Coefficients of a truncated formal power series; index = power of x.
struct SeriesTruncation {
    std::vector<RatOctonion> coefficients;
};

/// Table with the sign of e₁e₃ flipped. Used only to demonstrate that the
/// verifier detects a corrupted multiplication. (A flip at (i, i+1), e.g.
/// e₁e₂, cancels out of every Cassini left-hand side.)
inline BasisTable corrupted_table()
{
    BasisTable t = kOctonionTable;
    t.entries[1][3].sign = -t.entries[1][3].sign;
    return t;
}

/**
 * Per (family, k) state shared by all checks: the sequence terms up to
 * max_index (definition route), α, β and their two products (closed route).
 * Immutable after construction.
 */
class IdentityContext {
public:
    IdentityContext(OctKind family, std::int64_t k, std::uint64_t max_index, const BasisTable& lhs_table = kOctonionTable)
        : params_{family, k}, lhs_table_(lhs_table), ab_(kmo::alpha_beta(k)),
          alpha_beta_(ab_.alpha * ab_.beta), beta_alpha_(ab_.beta * ab_.alpha)
    {
        const auto window = seq_window(params_.scalar(), 0, static_cast<std::size_t>(max_index) + 8);
        terms_.reserve(static_cast<std::size_t>(max_index) + 1);
        for (std::size_t n = 0; n <= max_index; ++n) {
            terms_.push_back(RatOctonion::from_fn([&](std::size_t r) { return Rational(window[n + r]); }));
        }
        if (k == 1) {
            k1_.emplace(K1Constants::make(ab_));
        }
    }

    [[nodiscard]] OctKind family() const noexcept { return params_.kind; }
    [[nodiscard]] std::int64_t k() const noexcept { return params_.k; }
    [[nodiscard]] const OctSeqParams& params() const noexcept { return params_; }
    [[nodiscard]] std::uint64_t max_index() const noexcept { return terms_.size() - 1; }

    /// S_n from the recurrence.
    [[nodiscard]] const RatOctonion& term(std::uint64_t n) const
    {
        if (n >= terms_.size()) {
            throw InvalidArgument("IdentityContext: index " + std::to_string(n) + " beyond prepared range " +
                                  std::to_string(max_index()));
        }
        return terms_[n];
    }

    /// S_a·S_b with the LHS table.
    [[nodiscard]] RatOctonion product(std::uint64_t a, std::uint64_t b) const
    {
        return multiply(term(a), term(b), lhs_table_);
    }

    /// S_n from the closed form (αλ₁ⁿ ∓ βλ₂ⁿ), projected to the rationals.
    [[nodiscard]] RatOctonion closed_term(std::uint64_t n) const
    {
        return project_rational(oct_seq_closed_quad(params_, n, ab_));
    }

    [[nodiscard]] const AlphaBeta& constants() const noexcept { return ab_; }
    [[nodiscard]] const QuadOctonion& alpha() const noexcept { return ab_.alpha; }
    [[nodiscard]] const QuadOctonion& beta() const noexcept { return ab_.beta; }
    [[nodiscard]] const QuadOctonion& alpha_times_beta() const noexcept { return alpha_beta_; }
    [[nodiscard]] const QuadOctonion& beta_times_alpha() const noexcept { return beta_alpha_; }

    [[nodiscard]] QuadElem lambda_pow(std::uint64_t e) const { return pow(QuadElem::lambda(k()), e); }
    [[nodiscard]] QuadElem lambda_conj_pow(std::uint64_t e) const { return pow(QuadElem::lambda_conj(k()), e); }
    [[nodiscard]] QuadElem lift(const Rational& r) const { return {k(), r}; }
    [[nodiscard]] Rational disc() const { return Rational(discriminant(k()).value); }

    /// α, β at λ₁ = 2, λ₂ = 1 and their products. k = 1 only.
    struct K1Constants {
        RatOctonion alpha, beta, alpha_beta, beta_alpha;

        static K1Constants make(const AlphaBeta& ab)
        {
            RatOctonion a = evaluate_at(ab.alpha, Rational(2));
            RatOctonion b = evaluate_at(ab.beta, Rational(2));
            RatOctonion ab_prod = a * b;
            RatOctonion ba_prod = b * a;
            return {std::move(a), std::move(b), std::move(ab_prod), std::move(ba_prod)};
        }
    };

    [[nodiscard]] const K1Constants& k1() const
    {
        if (!k1_) {
            throw InvalidArgument("k=1 specialised statement requested with k=" + std::to_string(k()));
        }
        return *k1_;
    }

private:
    OctSeqParams params_;
    BasisTable lhs_table_;
    AlphaBeta ab_;
    QuadOctonion alpha_beta_;
    QuadOctonion beta_alpha_;
    std::vector<RatOctonion> terms_;
    std::optional<K1Constants> k1_;
};

namespace detail {

inline Rational two_pow(std::int64_t e)
{
    return e >= 0 ? Rational(pow2(static_cast<unsigned long>(e))) : Rational(BigInt(1), pow2(static_cast<unsigned long>(-e)));
}

inline QuadOctonion lift(const IdentityContext& ctx, const RatOctonion& a)
{
    return map_coords(a, [&](const Rational& r) { return ctx.lift(r); });
}

inline CheckResult judge(IdentityId id, Params params, const QuadOctonion& residual, std::string note = {})
{
    bool irrational = false;
    RatOctonion rational_part = map_coords(residual, [&](const QuadElem& x) {
        irrational = irrational || !x.is_rational();
        return x.a();
    });
    const Status status = residual.is_zero() ? Status::Pass : Status::Fail;
    if (irrational) {
        if (!note.empty()) {
            note += "; ";
        }
        note += "residual has a nonzero λ component";
    }
    return {id, std::move(params), status, std::move(rational_part), std::move(note)};
}

inline CheckResult judge(const IdentityContext& ctx, IdentityId id, Params params, const RatOctonion& lhs,
                         const QuadOctonion& rhs, std::string note = {})
{
    return judge(id, std::move(params), lift(ctx, lhs) - rhs, std::move(note));
}

inline CheckResult judge(IdentityId id, Params params, const RatOctonion& lhs, const RatOctonion& rhs,
                         std::string note = {})
{
    RatOctonion residual = lhs - rhs;
    const Status status = residual.is_zero() ? Status::Pass : Status::Fail;
    return {id, std::move(params), status, std::move(residual), std::move(note)};
}

inline IdentityId id_for(const IdentityContext& ctx, IdentityName name, Statement st)
{
    return {ctx.family(), name, st == Statement::KEqualsOne};
}

inline void require_statement(const IdentityContext& ctx, Statement st)
{
    if (st == Statement::KEqualsOne && ctx.k() != 1) {
        throw InvalidArgument("k=1 specialised statement requested with k=" + std::to_string(ctx.k()));
    }
}

inline IdentityName catalan_name(Ordering o) { return o == Ordering::LR ? IdentityName::CatalanLR : IdentityName::CatalanRL; }
inline IdentityName cassini_name(Ordering o) { return o == Ordering::LR ? IdentityName::CassiniLR : IdentityName::CassiniRL; }

/// Combination c_ab·αβ + c_ba·βα over the quadratic ring.
inline QuadOctonion combine(const IdentityContext& ctx, const QuadElem& c_ab, const QuadElem& c_ba)
{
    return ctx.alpha_times_beta() * c_ab + ctx.beta_times_alpha() * c_ba;
}

inline RatOctonion combine_k1(const IdentityContext& ctx, const Rational& c_ab, const Rational& c_ba)
{
    const auto& c = ctx.k1();
    return c.alpha_beta * c_ab + c.beta_alpha * c_ba;
}

/// Catalan right-hand side, general k.
inline QuadOctonion catalan_rhs(const IdentityContext& ctx, std::uint64_t n, std::uint64_t r, Ordering o)
{
    const QuadElem two_r = ctx.lift(two_pow(static_cast<std::int64_t>(r)));
    const QuadElem l2r = ctx.lambda_pow(2 * r);
    const QuadElem c2r = conj(l2r);
    // MO:  2^{n−r}[αβ(2ʳ − λ₁²ʳ) + βα(2ʳ − λ₂²ʳ)]/Δ²   (RL swaps λ₁ and λ₂)
    // MLO: 2^{n−r}[αβ(λ₁²ʳ − 2ʳ) + βα(λ₂²ʳ − 2ʳ)]
    const QuadElem& first = o == Ordering::LR ? l2r : c2r;
    const QuadElem& second = o == Ordering::LR ? c2r : l2r;
    const Rational scale = two_pow(static_cast<std::int64_t>(n - r));
    if (ctx.family() == OctKind::MO) {
        return combine(ctx, two_r - first, two_r - second) * scale / ctx.disc();
    }
    return combine(ctx, first - two_r, second - two_r) * scale;
}

} // namespace detail

/// S_{n+r}S_{n−r} − S_n² (LR) or S_{n−r}S_{n+r} − S_n² (RL). Requires r ≤ n.
inline CheckResult check_catalan(const IdentityContext& ctx, std::uint64_t n, std::uint64_t r, Ordering o,
                                 Statement st = Statement::General)
{
    detail::require_statement(ctx, st);
    if (r > n) {
        throw InvalidArgument("catalan: requires r <= n (n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")");
    }
    const auto id = detail::id_for(ctx, detail::catalan_name(o), st);
    Params params{{"k", ctx.k()}, {"n", static_cast<std::int64_t>(n)}, {"r", static_cast<std::int64_t>(r)}};
    const RatOctonion lhs = (o == Ordering::LR ? ctx.product(n + r, n - r) : ctx.product(n - r, n + r)) - ctx.product(n, n);
    if (st == Statement::General) {
        return detail::judge(ctx, id, std::move(params), lhs, detail::catalan_rhs(ctx, n, r, o));
    }
    // MO:  2ⁿ[αβ(1 − 2ʳ) + βα(1 − 2⁻ʳ)]   MLO: 2ⁿ[αβ(2ʳ − 1) + βα(2⁻ʳ − 1)]   (RL swaps the exponents)
    const auto ri = static_cast<std::int64_t>(r);
    Rational up = detail::two_pow(ri);
    Rational down = detail::two_pow(-ri);
    if (o == Ordering::RL) {
        std::swap(up, down);
    }
    const Rational sign = ctx.family() == OctKind::MO ? Rational(1) : Rational(-1);
    const RatOctonion rhs =
        detail::combine_k1(ctx, sign * (Rational(1) - up), sign * (Rational(1) - down)) * detail::two_pow(static_cast<std::int64_t>(n));
    return detail::judge(id, std::move(params), lhs, rhs);
}

namespace detail {

// Cassini at k = 1: MO 2^{n−1}(βα − 2αβ), MLO 2^{n−1}(2αβ − βα), RL swaps αβ and βα.
// `scale_exponent_offset` selects 2^{n−1} (0) or the factor-2 larger stated form (1).
inline RatOctonion cassini_k1_rhs(const IdentityContext& ctx, std::uint64_t n, Ordering o, int scale_exponent_offset)
{
    const auto& c = ctx.k1();
    const RatOctonion& ab = o == Ordering::LR ? c.alpha_beta : c.beta_alpha;
    const RatOctonion& ba = o == Ordering::LR ? c.beta_alpha : c.alpha_beta;
    const RatOctonion inner = ctx.family() == OctKind::MO ? ba - ab * Rational(2) : ab * Rational(2) - ba;
    return inner * two_pow(static_cast<std::int64_t>(n) - 1 + scale_exponent_offset);
}

} // namespace detail

/**
 * S_{n+1}S_{n−1} − S_n² (LR) or S_{n−1}S_{n+1} − S_n² (RL), n ≥ 1.
 * The RHS is evaluated from the Cassini statement and, separately, from the
 * Catalan statement at r = 1; both must match the LHS.
 */
inline CheckResult check_cassini(const IdentityContext& ctx, std::uint64_t n, Ordering o, Statement st = Statement::General)
{
    detail::require_statement(ctx, st);
    if (n < 1) {
        throw InvalidArgument("cassini: requires n >= 1");
    }
    const auto id = detail::id_for(ctx, detail::cassini_name(o), st);
    Params params{{"k", ctx.k()}, {"n", static_cast<std::int64_t>(n)}};
    const RatOctonion lhs = (o == Ordering::LR ? ctx.product(n + 1, n - 1) : ctx.product(n - 1, n + 1)) - ctx.product(n, n);

    if (st == Statement::KEqualsOne) {
        return detail::judge(id, std::move(params), lhs, detail::cassini_k1_rhs(ctx, n, o, 0));
    }

    // MO:  2^{n−1}[αβ(2 − λ₁²) + βα(2 − λ₂²)]/Δ²   MLO: 2^{n−1}[αβ(λ₁² − 2) + βα(λ₂² − 2)]
    const QuadElem l2 = ctx.lambda_pow(2);
    const QuadElem c2 = conj(l2);
    const QuadElem two = ctx.lift(Rational(2));
    const QuadElem& first = o == Ordering::LR ? l2 : c2;
    const QuadElem& second = o == Ordering::LR ? c2 : l2;
    const Rational scale = detail::two_pow(static_cast<std::int64_t>(n) - 1);
    const QuadOctonion rhs = ctx.family() == OctKind::MO
                                 ? detail::combine(ctx, two - first, two - second) * scale / ctx.disc()
                                 : detail::combine(ctx, first - two, second - two) * scale;

    const QuadOctonion lifted = detail::lift(ctx, lhs);
    const QuadOctonion direct = lifted - rhs;
    const QuadOctonion via_catalan = lifted - detail::catalan_rhs(ctx, n, 1, o);
    if (direct.is_zero() && !via_catalan.is_zero()) {
        return detail::judge(id, std::move(params), via_catalan, "mismatch against the Catalan reduction at r=1");
    }
    return detail::judge(id, std::move(params), direct);
}

/**
 * Cassini at k = 1 for the Mersenne-Lucas family in its commonly stated form
 * 2ⁿ(2αβ − βα), which is twice the correct value. For MO the stated and
 * correct forms coincide. Kept so the discrepancy stays demonstrable.
 */
inline CheckResult check_cassini_k1_as_stated(const IdentityContext& ctx, std::uint64_t n, Ordering o)
{
    detail::require_statement(ctx, Statement::KEqualsOne);
    if (n < 1) {
        throw InvalidArgument("cassini: requires n >= 1");
    }
    const auto id = detail::id_for(ctx, detail::cassini_name(o), Statement::KEqualsOne);
    Params params{{"k", ctx.k()}, {"n", static_cast<std::int64_t>(n)}};
    const RatOctonion lhs = (o == Ordering::LR ? ctx.product(n + 1, n - 1) : ctx.product(n - 1, n + 1)) - ctx.product(n, n);
    const int offset = ctx.family() == OctKind::MLO ? 1 : 0;
    return detail::judge(id, std::move(params), lhs, detail::cassini_k1_rhs(ctx, n, o, offset), "stated form");
}

/// S_r·S_{n+1} − S_{r+1}·S_n.
inline CheckResult check_docagne(const IdentityContext& ctx, std::uint64_t n, std::uint64_t r, Statement st = Statement::General)
{
    detail::require_statement(ctx, st);
    const auto id = detail::id_for(ctx, IdentityName::Docagne, st);
    Params params{{"k", ctx.k()}, {"n", static_cast<std::int64_t>(n)}, {"r", static_cast<std::int64_t>(r)}};
    const RatOctonion lhs = ctx.product(r, n + 1) - ctx.product(r + 1, n);
    if (st == Statement::KEqualsOne) {
        // MO: αβ2ʳ − βα2ⁿ   MLO: βα2ⁿ − αβ2ʳ
        const Rational two_r = detail::two_pow(static_cast<std::int64_t>(r));
        const Rational two_n = detail::two_pow(static_cast<std::int64_t>(n));
        const Rational sign = ctx.family() == OctKind::MO ? Rational(1) : Rational(-1);
        return detail::judge(id, std::move(params), lhs, detail::combine_k1(ctx, sign * two_r, -sign * two_n));
    }
    // MO: (αβλ₁ʳλ₂ⁿ − βαλ₁ⁿλ₂ʳ)/Δ   MLO: Δ(βαλ₁ⁿλ₂ʳ − αβλ₁ʳλ₂ⁿ)
    const QuadElem ab_coef = ctx.lambda_pow(r) * ctx.lambda_conj_pow(n);
    const QuadElem ba_coef = ctx.lambda_pow(n) * ctx.lambda_conj_pow(r);
    const QuadOctonion rhs = ctx.family() == OctKind::MO
                                 ? map_coords(detail::combine(ctx, ab_coef, -ba_coef), [](const QuadElem& x) { return div_by_root_diff(x); })
                                 : detail::combine(ctx, -ab_coef, ba_coef) * root_diff(ctx.k());
    return detail::judge(ctx, id, std::move(params), lhs, rhs);
}

/// S_{n+i}S_{n+j} − S_n·S_{n+i+j}.
inline CheckResult check_vajda(const IdentityContext& ctx, std::uint64_t n, std::uint64_t i, std::uint64_t j,
                               Statement st = Statement::General)
{
    detail::require_statement(ctx, st);
    const auto id = detail::id_for(ctx, IdentityName::Vajda, st);
    Params params{{"k", ctx.k()},
                  {"n", static_cast<std::int64_t>(n)},
                  {"i", static_cast<std::int64_t>(i)},
                  {"j", static_cast<std::int64_t>(j)}};
    const RatOctonion lhs = ctx.product(n + i, n + j) - ctx.product(n, n + i + j);
    const Rational scale = detail::two_pow(static_cast<std::int64_t>(n)) * Rational(seq_value({SeqKind::Mersenne, ctx.k()}, i));
    if (st == Statement::KEqualsOne) {
        // MO: 2ⁿMᵢ[βα2ʲ − αβ]   MLO: 2ⁿMᵢ(αβ − βα2ʲ)
        const Rational two_j = detail::two_pow(static_cast<std::int64_t>(j));
        const Rational sign = ctx.family() == OctKind::MO ? Rational(1) : Rational(-1);
        return detail::judge(id, std::move(params), lhs, detail::combine_k1(ctx, -sign, sign * two_j) * scale);
    }
    // MO: 2ⁿM_{k,i}[βαλ₁ʲ − αβλ₂ʲ]/Δ   MLO: 2ⁿM_{k,i}Δ(αβλ₂ʲ − βαλ₁ʲ)
    const QuadElem l1j = ctx.lambda_pow(j);
    const QuadElem l2j = conj(l1j);
    const QuadOctonion rhs = ctx.family() == OctKind::MO
                                 ? map_coords(detail::combine(ctx, -l2j, l1j) * scale, [](const QuadElem& x) { return div_by_root_diff(x); })
                                 : detail::combine(ctx, l2j, -l1j) * root_diff(ctx.k()) * scale;
    return detail::judge(ctx, id, std::move(params), lhs, rhs);
}

/**
 * First `order` coefficients of (S₀ + x(S₁ − 3kS₀)) / (1 − 3kx + 2x²),
 * via c₀ = N₀, c₁ = N₁ + 3k·c₀, c_n = 3k·c_{n−1} − 2·c_{n−2}.
 */
inline SeriesTruncation expand_ordinary_genfunc(const RatOctonion& s0, const RatOctonion& s1, std::int64_t k, std::size_t order)
{
    require_valid_k(k);
    if (order < 2) {
        throw InvalidArgument("genfunc: truncation order must be >= 2");
    }
    const Rational three_k(QuadElem::three_k(k));
    const RatOctonion numer0 = s0;
    const RatOctonion numer1 = s1 - s0 * three_k;
    SeriesTruncation series;
    series.coefficients.reserve(order);
    series.coefficients.push_back(numer0);
    series.coefficients.push_back(numer1 + series.coefficients[0] * three_k);
    for (std::size_t t = 2; t < order; ++t) {
        const auto& c = series.coefficients;
        series.coefficients.push_back(c[t - 1] * three_k - c[t - 2] * Rational(2));
    }
    return series;
}

/// Series coefficients 0..order−1 against S_0..S_{order−1}. The numerator is
/// seeded from the closed route.
inline CheckResult check_genfunc_ordinary(const IdentityContext& ctx, std::size_t order, Statement st = Statement::General)
{
    detail::require_statement(ctx, st);
    const auto id = detail::id_for(ctx, IdentityName::GenfuncOrdinary, st);
    Params params{{"k", ctx.k()}, {"N", static_cast<std::int64_t>(order)}};
    const auto series = expand_ordinary_genfunc(ctx.closed_term(0), ctx.closed_term(1), ctx.k(), order);
    for (std::size_t t = 0; t < order; ++t) {
        RatOctonion diff = series.coefficients[t] - ctx.term(t);
        if (!diff.is_zero()) {
            return {id, std::move(params), Status::Fail, std::move(diff), "first mismatch at coefficient " + std::to_string(t)};
        }
    }
    return {id, std::move(params), Status::Pass, RatOctonion::zero(Rational()), {}};
}

/**
 * Σ_{j≤n} S_j. General statement (k ≠ 1):
 *     (2S_n − S_{n+1} + S₁ + S₀(1 − 3k)) / (3(1 − k));
 * at k = 1 it is SKIPPED. The k = 1 statement is S_{n+1} − (α + nβ) for MO and
 * S_{n+1} − (α − nβ) for MLO. RHS terms come from the closed route.
 */
inline CheckResult check_finite_sum(const IdentityContext& ctx, std::uint64_t n, Statement st = Statement::General)
{
    detail::require_statement(ctx, st);
    const auto id = detail::id_for(ctx, IdentityName::FiniteSum, st);
    Params params{{"k", ctx.k()}, {"n", static_cast<std::int64_t>(n)}};
    if (st == Statement::General && ctx.k() == 1) {
        return {id, std::move(params), Status::Skipped, RatOctonion::zero(Rational()),
                "skipped: general formula requires k != 1 (denominator 3(1-k) vanishes)"};
    }
    RatOctonion lhs = RatOctonion::zero(Rational());
    for (std::uint64_t t = 0; t <= n; ++t) {
        lhs += ctx.term(t);
    }
    if (st == Statement::KEqualsOne) {
        const auto& c = ctx.k1();
        const Rational nn(static_cast<std::int64_t>(n));
        const RatOctonion tail = ctx.family() == OctKind::MO ? c.alpha + c.beta * nn : c.alpha - c.beta * nn;
        return detail::judge(id, std::move(params), lhs, ctx.closed_term(n + 1) - tail);
    }
    const Rational k(ctx.k());
    const RatOctonion numer = ctx.closed_term(n) * Rational(2) - ctx.closed_term(n + 1) + ctx.closed_term(1) +
                              ctx.closed_term(0) * (Rational(1) - Rational(3) * k);
    return detail::judge(id, std::move(params), lhs, numer / (Rational(3) * (Rational(1) - k)));
}

/// N(S_n)² from the coordinates against its closed form. At k = 1 the closed
/// form is 21845·4ⁿ ∓ 510·2ⁿ + 8.
inline CheckResult check_norm_closed(const IdentityContext& ctx, std::uint64_t n, Statement st = Statement::General)
{
    detail::require_statement(ctx, st);
    const auto id = detail::id_for(ctx, IdentityName::NormClosed, st);
    Params params{{"k", ctx.k()}, {"n", static_cast<std::int64_t>(n)}};
    const RatOctonion lhs = RatOctonion::real(norm_sq(ctx.term(n)));
    Rational rhs;
    if (st == Statement::KEqualsOne) {
        const Rational two_n(pow2(n));
        const Rational middle = Rational(510) * two_n;
        rhs = Rational(21845) * two_n * two_n + (ctx.family() == OctKind::MO ? -middle : middle) + Rational(8);
    } else {
        rhs = oct_seq_norm_sq_closed(ctx.params(), n);
    }
    return detail::judge(id, std::move(params), lhs, RatOctonion::real(rhs));
}

/**
 * S_n from the recurrence against the closed form. Because the n-th
 * coefficient of the exponential generating function is, by construction,
 * this closed form over n!, a PASS here also certifies that series formally.
 */
inline CheckResult check_binet(const IdentityContext& ctx, std::uint64_t n, Statement st = Statement::General)
{
    detail::require_statement(ctx, st);
    const auto id = detail::id_for(ctx, IdentityName::Binet, st);
    Params params{{"k", ctx.k()}, {"n", static_cast<std::int64_t>(n)}};
    if (st == Statement::KEqualsOne) {
        // MO: α2ⁿ − β   MLO: α2ⁿ + β
        const auto& c = ctx.k1();
        const RatOctonion scaled = c.alpha * Rational(pow2(n));
        return detail::judge(id, std::move(params), ctx.term(n), ctx.family() == OctKind::MO ? scaled - c.beta : scaled + c.beta);
    }
    return detail::judge(ctx, id, std::move(params), ctx.term(n), oct_seq_closed_quad(ctx.params(), n, ctx.constants()));
}

// Convenience overloads that prepare their own context.

inline CheckResult check_catalan(OctKind f, std::int64_t k, std::uint64_t n, std::uint64_t r, Ordering o,
                                 Statement st = Statement::General)
{
    return check_catalan(IdentityContext(f, k, n + r), n, r, o, st);
}
inline CheckResult check_cassini(OctKind f, std::int64_t k, std::uint64_t n, Ordering o, Statement st = Statement::General)
{
    return check_cassini(IdentityContext(f, k, n + 1), n, o, st);
}
inline CheckResult check_docagne(OctKind f, std::int64_t k, std::uint64_t n, std::uint64_t r, Statement st = Statement::General)
{
    return check_docagne(IdentityContext(f, k, std::max(n, r) + 1), n, r, st);
}
inline CheckResult check_vajda(OctKind f, std::int64_t k, std::uint64_t n, std::uint64_t i, std::uint64_t j,
                               Statement st = Statement::General)
{
    return check_vajda(IdentityContext(f, k, n + i + j), n, i, j, st);
}
inline CheckResult check_genfunc_ordinary(OctKind f, std::int64_t k, std::size_t order, Statement st = Statement::General)
{
    return check_genfunc_ordinary(IdentityContext(f, k, order), order, st);
}
inline CheckResult check_finite_sum(OctKind f, std::int64_t k, std::uint64_t n, Statement st = Statement::General)
{
    return check_finite_sum(IdentityContext(f, k, n + 1), n, st);
}
inline CheckResult check_norm_closed(OctKind f, std::int64_t k, std::uint64_t n, Statement st = Statement::General)
{
    return check_norm_closed(IdentityContext(f, k, n), n, st);
}
inline CheckResult check_binet(OctKind f, std::int64_t k, std::uint64_t n, Statement st = Statement::General)
{
    return check_binet(IdentityContext(f, k, n), n, st);
}

} // namespace kmo
