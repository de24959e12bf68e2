#pragma once

/**
 * @file quad.hpp
 * @brief Arithmetic in Q[λ]/(λ² − 3kλ + 2).
 *
 * The class of λ stands for the larger characteristic root λ₁ of the
 * k-Mersenne recurrence and its conjugate 3k − λ for λ₂. Every Binet-type
 * expression is evaluated here with no rounding.
 *
 * At k = 1 the polynomial factors as (λ − 1)(λ − 2), so the ring is not a
 * field. There is deliberately no general inverse: the only divisions offered
 * are by nonzero rationals and by λ₁ − λ₂ (through the discriminant 9k² − 8,
 * which is never zero for integer k).
 */

#include "kmo/errors.hpp"
#include "kmo/rational.hpp"

#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>

namespace kmo {

inline void require_valid_k(std::int64_t k)
{
    if (k < 1) {
        throw InvalidArgument("k must be a positive integer, got " + std::to_string(k));
    }
}

/// The discriminant 9k² − 8, which equals (λ₁ − λ₂)².
struct Discriminant {
    std::int64_t k;
    BigInt value;
};

inline Discriminant discriminant(std::int64_t k)
{
    require_valid_k(k);
    const BigInt kk(static_cast<long>(k));
    return {k, 9 * kk * kk - 8};
}

class QuadElem {
public:
    /// a + bλ in the ring of parameter k.
    QuadElem(std::int64_t k, Rational a, Rational b = {}) : k_(k), a_(std::move(a)), b_(std::move(b))
    {
        require_valid_k(k);
    }

    static QuadElem one(std::int64_t k) { return {k, Rational(1)}; }
    static QuadElem zero(std::int64_t k) { return {k, Rational()}; }
    /// The class of λ, i.e. λ₁.
    static QuadElem lambda(std::int64_t k) { return {k, Rational(), Rational(1)}; }
    /// 3k − λ, i.e. λ₂.
    static QuadElem lambda_conj(std::int64_t k) { return {k, Rational(three_k(k)), Rational(-1)}; }

    [[nodiscard]] std::int64_t k() const noexcept { return k_; }
    [[nodiscard]] const Rational& a() const noexcept { return a_; }
    [[nodiscard]] const Rational& b() const noexcept { return b_; }
    [[nodiscard]] bool is_rational() const { return b_.is_zero(); }
    [[nodiscard]] bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    QuadElem& operator+=(const QuadElem& o)
    {
        check(o);
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    QuadElem& operator-=(const QuadElem& o)
    {
        check(o);
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    // (a₁ + b₁λ)(a₂ + b₂λ) = (a₁a₂ − 2b₁b₂) + (a₁b₂ + a₂b₁ + 3k·b₁b₂)λ
    QuadElem& operator*=(const QuadElem& o)
    {
        check(o);
        const Rational bb = b_ * o.b_;
        const Rational a = a_ * o.a_ - 2 * bb;
        const Rational b = a_ * o.b_ + o.a_ * b_ + Rational(three_k(k_)) * bb;
        a_ = a;
        b_ = b;
        return *this;
    }
    QuadElem& operator*=(const Rational& c)
    {
        a_ *= c;
        b_ *= c;
        return *this;
    }
    /// Division by a nonzero rational; throws std::domain_error on zero.
    QuadElem& operator/=(const Rational& c)
    {
        a_ /= c;
        b_ /= c;
        return *this;
    }

    friend QuadElem operator+(QuadElem x, const QuadElem& y) { return x += y; }
    friend QuadElem operator-(QuadElem x, const QuadElem& y) { return x -= y; }
    friend QuadElem operator*(QuadElem x, const QuadElem& y) { return x *= y; }
    friend QuadElem operator*(QuadElem x, const Rational& c) { return x *= c; }
    friend QuadElem operator*(const Rational& c, QuadElem x) { return x *= c; }
    friend QuadElem operator/(QuadElem x, const Rational& c) { return x /= c; }
    friend QuadElem operator-(const QuadElem& x) { return {x.k_, -x.a_, -x.b_}; }

    /// Elements of different rings never compare equal.
    friend bool operator==(const QuadElem& x, const QuadElem& y)
    {
        return x.k_ == y.k_ && x.a_ == y.a_ && x.b_ == y.b_;
    }

    [[nodiscard]] std::string to_string() const
    {
        std::ostringstream os;
        os << '(' << a_ << ") + (" << b_ << ")λ [k=" << k_ << ']';
        return os.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const QuadElem& x) { return os << x.to_string(); }

    static BigInt three_k(std::int64_t k) { return 3 * BigInt(static_cast<long>(k)); }

private:
    void check(const QuadElem& o) const
    {
        if (k_ != o.k_) {
            throw ParameterMismatch("QuadElem: ring parameter mismatch (k=" + std::to_string(k_) +
                                    " vs k=" + std::to_string(o.k_) + ")");
        }
    }

    std::int64_t k_;
    Rational a_;
    Rational b_;
};

/// Raised when a value that must be rational still has a λ component.
class NonRationalError : public std::domain_error {
public:
    explicit NonRationalError(QuadElem element)
        : std::domain_error("expected a rational, got " + element.to_string()), element_(std::move(element))
    {
    }
    [[nodiscard]] const QuadElem& element() const noexcept { return element_; }

private:
    QuadElem element_;
};

/// λ ↦ 3k − λ. Swaps the two roots; fixes exactly the rationals.
inline QuadElem conj(const QuadElem& x)
{
    return {x.k(), x.a() + Rational(QuadElem::three_k(x.k())) * x.b(), -x.b()};
}

/// x^n by square-and-multiply; x^0 = 1.
inline QuadElem pow(QuadElem x, std::uint64_t n)
{
    QuadElem acc = QuadElem::one(x.k());
    while (n != 0) {
        if ((n & 1U) != 0) {
            acc *= x;
        }
        n >>= 1U;
        if (n != 0) {
            x *= x;
        }
    }
    return acc;
}

/// λ₁ − λ₂ = 2λ − 3k. Its square is 9k² − 8.
inline QuadElem root_diff(std::int64_t k)
{
    return {k, -Rational(QuadElem::three_k(k)), Rational(2)};
}

/// x / (λ₁ − λ₂), computed as x·(2λ − 3k)/(9k² − 8).
inline QuadElem div_by_root_diff(const QuadElem& x)
{
    return x * root_diff(x.k()) / Rational(discriminant(x.k()).value);
}

inline Rational as_rational(const QuadElem& x)
{
    if (!x.is_rational()) {
        throw NonRationalError(x);
    }
    return x.a();
}

/// Ring norm x·conj(x), always rational.
inline Rational norm(const QuadElem& x)
{
    return as_rational(x * conj(x));
}

/**
 * Evaluation homomorphism λ ↦ root. Only defined when root is a rational
 * zero of λ² − 3kλ + 2, which for integer k happens only at k = 1
 * (root ∈ {1, 2}).
 */
inline Rational evaluate_at(const QuadElem& x, const Rational& root)
{
    const Rational three_k(QuadElem::three_k(x.k()));
    if (!(root * root - three_k * root + 2).is_zero()) {
        throw InvalidArgument("evaluate_at: " + root.to_string() + " is not a root of λ² − 3kλ + 2 for k=" +
                              std::to_string(x.k()));
    }
    return x.a() + x.b() * root;
}

inline QuadElem zero_like(const QuadElem& x) { return QuadElem::zero(x.k()); }
inline QuadElem one_like(const QuadElem& x) { return QuadElem::one(x.k()); }
inline bool same_ring(const QuadElem& x, const QuadElem& y) noexcept { return x.k() == y.k(); }

} // namespace kmo
