#pragma once

/**
 * @file octonion_sequences.hpp
 * @brief k-Mersenne octonions MO_{k,n} = Σ M_{k,n+r} e_r and
 *        k-Mersenne-Lucas octonions mO_{k,n} = Σ m_{k,n+r} e_r.
 *
 * Closed forms are evaluated in Octonion<QuadElem> using
 *
 *     α = Σ λ₁ʳ e_r,   β = Σ λ₂ʳ e_r,
 *
 * and only then projected coordinatewise to the rationals.
 */

#include "kmo/octonion.hpp"
#include "kmo/quad.hpp"
#include "kmo/rational.hpp"
#include "kmo/sequences.hpp"

#include <cstdint>
#include <string_view>

namespace kmo {

using RatOctonion = Octonion<Rational>;
using QuadOctonion = Octonion<QuadElem>;

enum class OctKind { MO, MLO };

constexpr std::string_view to_string(OctKind kind)
{
    return kind == OctKind::MO ? "MO" : "MLO";
}

struct OctSeqParams {
    OctKind kind;
    std::int64_t k;

    [[nodiscard]] SeqParams scalar() const
    {
        return {kind == OctKind::MO ? SeqKind::Mersenne : SeqKind::MersenneLucas, k};
    }
};

/// Coordinate r is the scalar sequence at index n + r.
inline RatOctonion oct_seq(const OctSeqParams& p, std::uint64_t n)
{
    const auto window = seq_window(p.scalar(), n, 8);
    return RatOctonion::from_fn([&](std::size_t r) { return Rational(window[r]); });
}

/// Standard conjugate: real part kept at index n, imaginary parts negated.
inline RatOctonion oct_seq_conj(const OctSeqParams& p, std::uint64_t n)
{
    return conj(oct_seq(p, n));
}

struct AlphaBeta {
    QuadOctonion alpha;
    QuadOctonion beta;
};

inline AlphaBeta alpha_beta(std::int64_t k)
{
    require_valid_k(k);
    QuadOctonion alpha = QuadOctonion::from_fn([&](std::size_t r) { return pow(QuadElem::lambda(k), r); });
    QuadOctonion beta = map_coords(alpha, [](const QuadElem& x) { return conj(x); });
    return {std::move(alpha), std::move(beta)};
}

/// Throws NonRationalError if any coordinate keeps a λ component.
inline RatOctonion project_rational(const QuadOctonion& a)
{
    return map_coords(a, [](const QuadElem& x) { return as_rational(x); });
}

/// Image under λ ↦ root (k = 1 only, root ∈ {1, 2}).
inline RatOctonion evaluate_at(const QuadOctonion& a, const Rational& root)
{
    return map_coords(a, [&](const QuadElem& x) { return evaluate_at(x, root); });
}

/// (αλ₁ⁿ − βλ₂ⁿ)/(λ₁ − λ₂) for MO, αλ₁ⁿ + βλ₂ⁿ for MLO, before projection.
inline QuadOctonion oct_seq_closed_quad(const OctSeqParams& p, std::uint64_t n, const AlphaBeta& ab)
{
    const QuadElem l1n = pow(QuadElem::lambda(p.k), n);
    const QuadElem l2n = conj(l1n);
    if (p.kind == OctKind::MO) {
        return (ab.alpha * l1n - ab.beta * l2n) * root_diff(p.k) / Rational(discriminant(p.k).value);
    }
    return ab.alpha * l1n + ab.beta * l2n;
}

inline RatOctonion oct_seq_closed(const OctSeqParams& p, std::uint64_t n)
{
    try {
        return project_rational(oct_seq_closed_quad(p, n, alpha_beta(p.k)));
    } catch (const NonRationalError& e) {
        throw InternalInconsistency(std::string("oct_seq_closed: ") + e.what());
    }
}

/**
 * Closed-form squared norm
 *
 *     [λ₁²ⁿ Σ_{r<8} λ₁²ʳ + λ₂²ⁿ Σ_{r<8} λ₂²ʳ ∓ 255·2ⁿ⁺¹] / (9k² − 8)   (MO, −)
 *      λ₁²ⁿ Σ_{r<8} λ₁²ʳ + λ₂²ⁿ Σ_{r<8} λ₂²ʳ + 255·2ⁿ⁺¹            (MLO)
 */
inline Rational oct_seq_norm_sq_closed(const OctSeqParams& p, std::uint64_t n)
{
    const QuadElem l1sq = pow(QuadElem::lambda(p.k), 2);
    QuadElem geometric = QuadElem::zero(p.k);
    QuadElem term = QuadElem::one(p.k);
    for (int r = 0; r < 8; ++r) {
        geometric += term;
        term *= l1sq;
    }
    const QuadElem lead = pow(l1sq, n) * geometric;
    const QuadElem sum = lead + conj(lead);
    const Rational cross = Rational(255) * Rational(pow2(n + 1));
    try {
        if (p.kind == OctKind::MO) {
            return as_rational(sum - QuadElem(p.k, cross)) / Rational(discriminant(p.k).value);
        }
        return as_rational(sum + QuadElem(p.k, cross));
    } catch (const NonRationalError& e) {
        throw InternalInconsistency(std::string("oct_seq_norm_sq_closed: ") + e.what());
    }
}

} // namespace kmo
