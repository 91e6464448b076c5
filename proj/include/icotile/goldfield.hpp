#pragma once

// Exact arithmetic in the golden field Q(phi), phi = (1 + sqrt 5) / 2.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace icotile {

/// The real number a + b*phi with a, b arbitrary-precision rationals.
///
/// The (a, b) pair is canonical: gmp keeps both rationals in lowest terms,
/// so equality of values is equality of pairs.
class GoldenRational {
public:
    GoldenRational() = default;
    GoldenRational(long a) : a_(a), b_(0) {}  // NOLINT(google-explicit-constructor)
    GoldenRational(mpq_class a, mpq_class b);
    GoldenRational(long a, long b) : a_(a), b_(b) {}

    static GoldenRational phi() { return {0L, 1L}; }

    /// Parses the serialized form produced by str(), e.g. "1/2-3φ" or "2+0φ".
    /// A plain rational ("3/4"), a bare "φ" / "-φ", and "phi" in place of "φ" are also accepted.
    static GoldenRational parse(std::string_view text);

    const mpq_class& rational_part() const { return a_; }
    const mpq_class& phi_part() const { return b_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }

    /// Image under the Galois map phi -> 1 - phi.
    GoldenRational conjugate() const;

    /// Exact sign of a + b*phi. No floating point is involved.
    int sign() const;

    /// The field norm a^2 + ab - b^2 = x * conj(x).
    mpq_class norm() const;

    /// Throws std::domain_error for zero.
    GoldenRational inverse() const;

    double to_double() const;

    /// "a+bφ" with both parts always present, e.g. "0+1φ", "1/2-3/4φ".
    std::string str() const;

    GoldenRational operator-() const { return {-a_, -b_}; }
    GoldenRational& operator+=(const GoldenRational& o);
    GoldenRational& operator-=(const GoldenRational& o);
    GoldenRational& operator*=(const GoldenRational& o);
    GoldenRational& operator/=(const GoldenRational& o);

    friend GoldenRational operator+(GoldenRational x, const GoldenRational& y) { return x += y; }
    friend GoldenRational operator-(GoldenRational x, const GoldenRational& y) { return x -= y; }
    friend GoldenRational operator*(GoldenRational x, const GoldenRational& y) { return x *= y; }
    friend GoldenRational operator/(GoldenRational x, const GoldenRational& y) { return x /= y; }

    friend bool operator==(const GoldenRational& x, const GoldenRational& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const GoldenRational& x, const GoldenRational& y) { return !(x == y); }
    friend bool operator<(const GoldenRational& x, const GoldenRational& y) { return (x - y).sign() < 0; }
    friend bool operator>(const GoldenRational& x, const GoldenRational& y) { return y < x; }
    friend bool operator<=(const GoldenRational& x, const GoldenRational& y) { return !(y < x); }
    friend bool operator>=(const GoldenRational& x, const GoldenRational& y) { return !(x < y); }

    friend std::ostream& operator<<(std::ostream& os, const GoldenRational& x);

private:
    mpq_class a_{0};
    mpq_class b_{0};
};

inline GoldenRational abs(const GoldenRational& x) { return x.sign() < 0 ? -x : x; }

inline constexpr double kPhi = 1.6180339887498948482;

using GoldenVec3 = std::array<GoldenRational, 3>;
using GoldenVec6 = std::array<GoldenRational, 6>;

template <std::size_t N>
GoldenRational dot(const std::array<GoldenRational, N>& x, const std::array<GoldenRational, N>& y) {
    GoldenRational s;
    for (std::size_t i = 0; i < N; ++i) s += x[i] * y[i];
    return s;
}

template <std::size_t N>
std::array<GoldenRational, N> conjugate(const std::array<GoldenRational, N>& x) {
    std::array<GoldenRational, N> out;
    for (std::size_t i = 0; i < N; ++i) out[i] = x[i].conjugate();
    return out;
}

template <std::size_t N>
std::array<double, N> to_double(const std::array<GoldenRational, N>& x) {
    std::array<double, N> out{};
    for (std::size_t i = 0; i < N; ++i) out[i] = x[i].to_double();
    return out;
}

GoldenVec3 cross(const GoldenVec3& x, const GoldenVec3& y);

/// det of the 3x3 matrix with columns c0, c1, c2.
GoldenRational det3(const GoldenVec3& c0, const GoldenVec3& c1, const GoldenVec3& c2);

}  // namespace icotile
