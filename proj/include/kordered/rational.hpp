#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace kord {

// Exact fraction with positive denominator, always in lowest terms.
// Comparisons cross-multiply in 128-bit arithmetic.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }
    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string to_string() const;

    // Accepts "3/10", "0.3", "2" and "-1.25".
    static Rational parse(std::string_view text);

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return Rational(-num_, den_); }

    friend bool operator==(const Rational& a, const Rational& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
        const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
        const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
        return lhs <=> rhs;
    }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

Rational abs(const Rational& r);

// Orders value against r^(1/root) * scale without rounding (value, r, scale >= 0).
// Used for the sqrt(alpha) and alpha^(1/4) thresholds.
std::strong_ordering compare_with_root(const Rational& value, const Rational& r, int root, const Rational& scale);

} // namespace kord
