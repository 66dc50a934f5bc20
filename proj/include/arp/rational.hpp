#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace arp {

/// Exact fraction with unbounded numerator and denominator.
///
/// Always canonical: the denominator is positive and gcd(|num|, den) = 1.
/// Backed by GMP; every arithmetic result is re-canonicalized by GMP itself,
/// the only places that need an explicit canonicalize() are the constructors.
class Rational {
public:
    Rational() = default;
    Rational(long long value) : value_(static_cast<long>(value)) {}
    Rational(long long num, long long den);
    explicit Rational(mpq_class value);

    /// Parses `p/q`, an integer, or a decimal literal (`-2.5`, `1.25e-3`).
    /// Decimals are converted digit by digit, never through binary floating point.
    /// Throws std::invalid_argument on malformed text or a zero denominator.
    [[nodiscard]] static Rational parse(std::string_view text);

    [[nodiscard]] const mpq_class &raw() const noexcept { return value_; }
    [[nodiscard]] std::string numerator() const { return value_.get_num().get_str(); }
    [[nodiscard]] std::string denominator() const { return value_.get_den().get_str(); }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }

    [[nodiscard]] int sign() const noexcept { return sgn(value_); }

    /// `p/q` or `p` when the denominator is one.
    [[nodiscard]] std::string str() const { return value_.get_str(); }
    /// Always `p/q`, even for integers (`4/1`).
    [[nodiscard]] std::string fraction_str() const;
    /// Decimal rendering rounded half away from zero to `digits` fractional digits,
    /// computed exactly.
    [[nodiscard]] std::string decimal_str(unsigned digits = 12) const;
    [[nodiscard]] double to_double() const { return value_.get_d(); }

    Rational &operator+=(const Rational &o) { value_ += o.value_; return *this; }
    Rational &operator-=(const Rational &o) { value_ -= o.value_; return *this; }
    Rational &operator*=(const Rational &o) { value_ *= o.value_; return *this; }
    /// Throws std::domain_error on division by zero.
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
    friend Rational operator-(const Rational &a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational &a, const Rational &b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

private:
    mpq_class value_;
};

} // namespace arp

template <> struct std::hash<arp::Rational> {
    std::size_t operator()(const arp::Rational &r) const noexcept {
        return std::hash<std::string>{}(r.str());
    }
};
