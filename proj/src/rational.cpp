#include "kordered/rational.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

#include "kordered/errors.hpp"

namespace kord {

namespace {

Rational make_checked(__int128 num, __int128 den) {
    if (den == 0) {
        throw DomainError("rational with zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    __int128 a = num < 0 ? -num : num;
    __int128 b = den;
    while (b != 0) {
        const __int128 t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        num /= a;
        den /= a;
    }
    constexpr __int128 lim = INT64_MAX;
    if (num > lim || num < -lim || den > lim) {
        throw std::overflow_error("rational overflow");
    }
    return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) {
        throw DomainError("rational with zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

std::string Rational::to_string() const {
    if (den_ == 1) {
        return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [&](std::string_view s) {
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
            throw ParseError("bad rational '" + std::string(text) + "'", static_cast<std::size_t>(ptr - text.data()));
        }
        return v;
    };
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
    }
    if (const auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        const bool negative = !whole.empty() && whole.front() == '-';
        if (negative) {
            whole.remove_prefix(1);
        }
        if (frac.size() > 15) {
            throw ParseError("too many decimals in '" + std::string(text) + "'", dot);
        }
        std::int64_t den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) {
            den *= 10;
        }
        const std::int64_t w = whole.empty() ? 0 : parse_int(whole);
        const std::int64_t f = frac.empty() ? 0 : parse_int(frac);
        const std::int64_t num = w * den + f;
        return Rational(negative ? -num : num, den);
    }
    return Rational(parse_int(text));
}

Rational operator+(const Rational& a, const Rational& b) {
    return make_checked(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                        static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    return make_checked(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    return make_checked(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
}

Rational abs(const Rational& r) { return r.num() < 0 ? -r : r; }

std::strong_ordering compare_with_root(const Rational& value, const Rational& r, int root, const Rational& scale) {
    Rational lhs(1);
    Rational rhs = r;
    for (int i = 0; i < root; ++i) {
        lhs = lhs * value;
        rhs = rhs * scale;
    }
    return lhs <=> rhs;
}

} // namespace kord
