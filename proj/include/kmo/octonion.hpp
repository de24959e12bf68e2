#pragma once

/**
 * @file octonion.hpp
 * @brief Octonions over an exact scalar ring.
 *
 * Basis e₀ = 1, e₁ = i, e₂ = j, e₃ = k, e₄ = e, e₅ = ie, e₆ = je, e₇ = ke.
 * Multiplication is driven by the data in kOctonionTable; cd_mul_oracle is an
 * independent Cayley–Dickson route that exists to catch transcription errors
 * in that data.
 *
 * Cayley–Dickson convention. Write a = p + q·e with quaternions p = (a₀..a₃),
 * q = (a₄..a₇). Then
 *
 *     (p₁, q₁)(p₂, q₂) = (p₁p₂ − q̄₂q₁,  q₂p₁ + q₁p̄₂)
 *
 * with the Hamilton product on quaternions. This is the convention that
 * reproduces the table on all 64 basis pairs.
 */

#include "kmo/errors.hpp"

#include <array>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <type_traits>
#include <utility>

namespace kmo {

/// Scalar ring usable as octonion coordinates. The *_like hooks exist
/// because some rings (QuadElem) carry a parameter and have no default zero.
template <class S>
concept ExactScalar = std::copy_constructible<S> && requires(const S& a, const S& b) {
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
    { -a } -> std::convertible_to<S>;
    { a == b } -> std::convertible_to<bool>;
    { zero_like(a) } -> std::convertible_to<S>;
    { one_like(a) } -> std::convertible_to<S>;
    { same_ring(a, b) } -> std::convertible_to<bool>;
};

/// e_i · e_j = sign · e_index
struct BasisProduct {
    int sign;
    std::size_t index;

    friend constexpr bool operator==(const BasisProduct&, const BasisProduct&) = default;
};

struct BasisTable {
    std::array<std::array<BasisProduct, 8>, 8> entries;

    [[nodiscard]] constexpr const BasisProduct& operator()(std::size_t i, std::size_t j) const
    {
        return entries[i][j];
    }
    friend constexpr bool operator==(const BasisTable&, const BasisTable&) = default;
};

namespace detail {
constexpr BasisProduct P(std::size_t i) { return {+1, i}; }
constexpr BasisProduct N(std::size_t i) { return {-1, i}; }
} // namespace detail

// Row i, column j holds e_i · e_j.
inline constexpr BasisTable kOctonionTable = [] {
    using detail::N;
    using detail::P;
    return BasisTable{{{
        {P(0), P(1), P(2), P(3), P(4), P(5), P(6), P(7)},
        {P(1), N(0), P(3), N(2), P(5), N(4), N(7), P(6)},
        {P(2), N(3), N(0), P(1), P(6), P(7), N(4), N(5)},
        {P(3), P(2), N(1), N(0), P(7), N(6), P(5), N(4)},
        {P(4), N(5), N(6), N(7), N(0), P(1), P(2), P(3)},
        {P(5), P(4), N(7), P(6), N(1), N(0), N(3), P(2)},
        {P(6), P(7), P(4), N(5), N(2), P(3), N(0), N(1)},
        {P(7), N(6), P(5), P(4), N(3), N(2), P(1), N(0)},
    }}};
}();

/// Identity row/column, e_i² = −1, and anticommutativity off the diagonal.
constexpr bool is_well_formed(const BasisTable& t)
{
    for (std::size_t i = 0; i < 8; ++i) {
        if (t(0, i) != BasisProduct{1, i} || t(i, 0) != BasisProduct{1, i}) {
            return false;
        }
        if (i > 0 && t(i, i) != BasisProduct{-1, 0}) {
            return false;
        }
        for (std::size_t j = 1; j < 8; ++j) {
            if (i == 0 || i == j) {
                continue;
            }
            if (t(i, j).index != t(j, i).index || t(i, j).sign != -t(j, i).sign || t(i, j).index == 0) {
                return false;
            }
        }
    }
    return true;
}

static_assert(is_well_formed(kOctonionTable));

namespace detail {
template <std::size_t N_, class F>
auto generate(F&& f)
{
    return [&]<std::size_t... I>(std::index_sequence<I...>) {
        return std::array<std::invoke_result_t<F&, std::size_t>, N_>{f(I)...};
    }(std::make_index_sequence<N_>{});
}
} // namespace detail

template <ExactScalar S>
class Octonion;

template <class T>
struct is_octonion : std::false_type {};
template <class S>
struct is_octonion<Octonion<S>> : std::true_type {};

template <ExactScalar S>
class Octonion {
public:
    static constexpr std::size_t dimension = 8;
    using scalar_type = S;
    using Coords = std::array<S, dimension>;

    /// All coordinates must live in the same ring.
    explicit Octonion(Coords coords) : c_(std::move(coords))
    {
        for (std::size_t r = 1; r < dimension; ++r) {
            if (!same_ring(c_[0], c_[r])) {
                throw ParameterMismatch("Octonion: coordinates from different scalar rings");
            }
        }
    }

    template <class F>
        requires std::convertible_to<std::invoke_result_t<F&, std::size_t>, S>
    static Octonion from_fn(F&& f)
    {
        return Octonion(detail::generate<dimension>([&](std::size_t r) -> S { return f(r); }));
    }

    static Octonion zero(const S& like)
    {
        return from_fn([&](std::size_t) { return zero_like(like); });
    }

    static Octonion basis(std::size_t r, const S& like)
    {
        return from_fn([&](std::size_t t) { return t == r ? one_like(like) : zero_like(like); });
    }

    /// s·e₀
    static Octonion real(const S& s)
    {
        return from_fn([&](std::size_t t) { return t == 0 ? s : zero_like(s); });
    }

    [[nodiscard]] const S& operator[](std::size_t r) const { return c_[r]; }
    [[nodiscard]] const Coords& coords() const noexcept { return c_; }
    [[nodiscard]] const S& real_part() const { return c_[0]; }

    [[nodiscard]] bool is_zero() const
    {
        const S z = zero_like(c_[0]);
        for (const auto& x : c_) {
            if (!(x == z)) {
                return false;
            }
        }
        return true;
    }

    Octonion& operator+=(const Octonion& o)
    {
        check(o);
        for (std::size_t r = 0; r < dimension; ++r) {
            c_[r] = c_[r] + o.c_[r];
        }
        return *this;
    }
    Octonion& operator-=(const Octonion& o)
    {
        check(o);
        for (std::size_t r = 0; r < dimension; ++r) {
            c_[r] = c_[r] - o.c_[r];
        }
        return *this;
    }

    friend Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
    friend Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
    friend Octonion operator-(const Octonion& a)
    {
        return from_fn([&](std::size_t r) { return -a.c_[r]; });
    }

    /// Scaling by anything the coordinates multiply with (S itself, or a
    /// Rational for QuadElem coordinates). Scalars are central.
    template <class T>
        requires(!is_octonion<T>::value) && requires(const S& s, const T& t) {
            { s * t } -> std::convertible_to<S>;
        }
    friend Octonion operator*(const Octonion& a, const T& t)
    {
        return from_fn([&](std::size_t r) { return S(a.c_[r] * t); });
    }
    template <class T>
        requires(!is_octonion<T>::value) && requires(const S& s, const T& t) {
            { s * t } -> std::convertible_to<S>;
        }
    friend Octonion operator*(const T& t, const Octonion& a)
    {
        return a * t;
    }
    template <class T>
        requires(!is_octonion<T>::value) && requires(const S& s, const T& t) {
            { s / t } -> std::convertible_to<S>;
        }
    friend Octonion operator/(const Octonion& a, const T& t)
    {
        return from_fn([&](std::size_t r) { return S(a.c_[r] / t); });
    }

    friend bool operator==(const Octonion& a, const Octonion& b) { return a.c_ == b.c_; }

    friend std::ostream& operator<<(std::ostream& os, const Octonion& a)
    {
        os << '(';
        for (std::size_t r = 0; r < dimension; ++r) {
            os << (r ? ", " : "") << a.c_[r];
        }
        return os << ')';
    }

    void check(const Octonion& o) const
    {
        if (!same_ring(c_[0], o.c_[0])) {
            throw ParameterMismatch("Octonion: operands from different scalar rings");
        }
    }

private:
    Coords c_;
};

/// Bilinear extension of a basis table. Coordinate t of the result is the sum
/// of sign(i,j)·a_i·b_j over all (i,j) with index(i,j) = t.
template <ExactScalar S>
Octonion<S> multiply(const Octonion<S>& a, const Octonion<S>& b, const BasisTable& table = kOctonionTable)
{
    a.check(b);
    auto acc = detail::generate<8>([&](std::size_t) { return zero_like(a[0]); });
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = 0; j < 8; ++j) {
            const auto& e = table(i, j);
            if (e.sign > 0) {
                acc[e.index] = acc[e.index] + a[i] * b[j];
            } else {
                acc[e.index] = acc[e.index] - a[i] * b[j];
            }
        }
    }
    return Octonion<S>(std::move(acc));
}

template <ExactScalar S>
Octonion<S> operator*(const Octonion<S>& a, const Octonion<S>& b)
{
    return multiply(a, b);
}

/// ā = a₀ − Σ a_r e_r
template <ExactScalar S>
Octonion<S> conj(const Octonion<S>& a)
{
    return Octonion<S>::from_fn([&](std::size_t r) -> S { return r == 0 ? a[0] : S(-a[r]); });
}

/// N(a)² = Σ a_r². The square root generally leaves the ring, so it is never taken.
template <ExactScalar S>
S norm_sq(const Octonion<S>& a)
{
    S acc = zero_like(a[0]);
    for (const auto& x : a.coords()) {
        acc = acc + x * x;
    }
    return acc;
}

/// (ab)c − a(bc)
template <ExactScalar S>
Octonion<S> associator(const Octonion<S>& a, const Octonion<S>& b, const Octonion<S>& c)
{
    return (a * b) * c - a * (b * c);
}

/// ab − ba
template <ExactScalar S>
Octonion<S> commutator(const Octonion<S>& a, const Octonion<S>& b)
{
    return a * b - b * a;
}

namespace detail {

template <ExactScalar S>
struct Quaternion {
    S w, x, y, z;
};

template <ExactScalar S>
Quaternion<S> hamilton(const Quaternion<S>& p, const Quaternion<S>& q)
{
    return {
        p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
        p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
        p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
        p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w,
    };
}

template <ExactScalar S>
Quaternion<S> qconj(const Quaternion<S>& p)
{
    return {p.w, -p.x, -p.y, -p.z};
}

template <ExactScalar S>
Quaternion<S> qadd(const Quaternion<S>& p, const Quaternion<S>& q)
{
    return {p.w + q.w, p.x + q.x, p.y + q.y, p.z + q.z};
}

template <ExactScalar S>
Quaternion<S> qsub(const Quaternion<S>& p, const Quaternion<S>& q)
{
    return {p.w - q.w, p.x - q.x, p.y - q.y, p.z - q.z};
}

} // namespace detail

/// Cayley–Dickson product; see the convention in the file header.
template <ExactScalar S>
Octonion<S> cd_mul_oracle(const Octonion<S>& a, const Octonion<S>& b)
{
    a.check(b);
    using Q = detail::Quaternion<S>;
    const Q p1{a[0], a[1], a[2], a[3]};
    const Q q1{a[4], a[5], a[6], a[7]};
    const Q p2{b[0], b[1], b[2], b[3]};
    const Q q2{b[4], b[5], b[6], b[7]};
    const Q lo = detail::qsub(detail::hamilton(p1, p2), detail::hamilton(detail::qconj(q2), q1));
    const Q hi = detail::qadd(detail::hamilton(q2, p1), detail::hamilton(q1, detail::qconj(p2)));
    return Octonion<S>({lo.w, lo.x, lo.y, lo.z, hi.w, hi.x, hi.y, hi.z});
}

/// Coordinatewise map into another scalar ring.
template <ExactScalar S, class F>
auto map_coords(const Octonion<S>& a, F&& f)
{
    using T = std::invoke_result_t<F&, const S&>;
    return Octonion<T>::from_fn([&](std::size_t r) -> T { return f(a[r]); });
}

} // namespace kmo
