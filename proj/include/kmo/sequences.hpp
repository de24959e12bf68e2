#pragma once

/**
 * @file sequences.hpp
 * @brief k-Mersenne and k-Mersenne-Lucas numbers.
 *
 * Both satisfy x_{n+1} = 3k·x_n − 2·x_{n−1}; Mersenne starts (0, 1) and
 * Mersenne-Lucas starts (2, 3k). Three independent evaluators are provided:
 * the recurrence itself, the Binet form in the quadratic ring, and a
 * companion-matrix power for large n.
 */

#include "kmo/errors.hpp"
#include "kmo/quad.hpp"
#include "kmo/rational.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace kmo {

enum class SeqKind { Mersenne, MersenneLucas };

constexpr std::string_view to_string(SeqKind kind)
{
    return kind == SeqKind::Mersenne ? "M" : "m";
}

struct SeqParams {
    SeqKind kind;
    std::int64_t k;
};

namespace detail {

inline void validate(const SeqParams& p) { require_valid_k(p.k); }

inline BigInt initial0(const SeqParams& p) { return p.kind == SeqKind::Mersenne ? BigInt(0) : BigInt(2); }

inline BigInt initial1(const SeqParams& p)
{
    return p.kind == SeqKind::Mersenne ? BigInt(1) : QuadElem::three_k(p.k);
}

} // namespace detail

/// Terms n, n+1, ..., n+count−1 by forward iteration.
inline std::vector<BigInt> seq_window(const SeqParams& p, std::uint64_t n, std::size_t count)
{
    detail::validate(p);
    const BigInt three_k = QuadElem::three_k(p.k);
    std::vector<BigInt> out;
    out.reserve(count);
    BigInt prev = detail::initial0(p);
    BigInt cur = detail::initial1(p);
    for (std::uint64_t idx = 0; out.size() < count; ++idx) {
        if (idx >= n) {
            out.push_back(prev);
        }
        BigInt next = three_k * cur - 2 * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return out;
}

/// Iterative recurrence from the initial conditions.
inline BigInt seq_value(const SeqParams& p, std::uint64_t n)
{
    detail::validate(p);
    const BigInt three_k = QuadElem::three_k(p.k);
    BigInt prev = detail::initial0(p);
    BigInt cur = detail::initial1(p);
    for (std::uint64_t idx = 0; idx < n; ++idx) {
        BigInt next = three_k * cur - 2 * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return prev;
}

/// Binet form: (λ₁ⁿ − λ₂ⁿ)/(λ₁ − λ₂) or λ₁ⁿ + λ₂ⁿ, evaluated in the quadratic ring.
inline BigInt seq_binet(const SeqParams& p, std::uint64_t n)
{
    detail::validate(p);
    const QuadElem l1n = pow(QuadElem::lambda(p.k), n);
    const QuadElem l2n = conj(l1n);
    const QuadElem value = p.kind == SeqKind::Mersenne ? div_by_root_diff(l1n - l2n) : l1n + l2n;
    if (!value.is_rational() || !value.a().is_integer()) {
        throw InternalInconsistency("seq_binet: closed form did not reduce to an integer: " + value.to_string());
    }
    return value.a().to_integer();
}

namespace detail {

struct Mat2 {
    BigInt a, b, c, d;
};

inline Mat2 mul(const Mat2& x, const Mat2& y)
{
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

} // namespace detail

/**
 * O(log n) multiplications via the companion matrix
 *
 *     C = [3k  −2]     (x_{n+1}, x_n)ᵀ = Cⁿ (x₁, x₀)ᵀ
 *         [ 1   0]
 */
inline BigInt seq_fast(const SeqParams& p, std::uint64_t n)
{
    detail::validate(p);
    detail::Mat2 acc{1, 0, 0, 1};
    detail::Mat2 base{QuadElem::three_k(p.k), -2, 1, 0};
    for (std::uint64_t e = n; e != 0; e >>= 1U) {
        if ((e & 1U) != 0) {
            acc = detail::mul(acc, base);
        }
        if (e > 1) {
            base = detail::mul(base, base);
        }
    }
    return acc.c * detail::initial1(p) + acc.d * detail::initial0(p);
}

} // namespace kmo
