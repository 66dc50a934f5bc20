#include "arp/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace arp {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

mpz_class parse_integer(std::string_view s) {
    std::string_view body = s;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) body.remove_prefix(1);
    if (!all_digits(body)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    std::string text(s);
    if (text.front() == '+') text.erase(0, 1);
    return mpz_class(text, 10);
}

mpz_class pow10(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

Rational parse_decimal(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }

    long exponent = 0;
    if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        const auto exp_text = s.substr(e + 1);
        const mpz_class parsed = parse_integer(exp_text);
        if (!parsed.fits_slong_p() || abs(parsed) > 100000) {
            throw std::invalid_argument("exponent out of range: '" + std::string(text) + "'");
        }
        exponent = parsed.get_si();
        s = s.substr(0, e);
    }

    std::string_view int_part = s;
    std::string_view frac_part;
    if (const auto dot = s.find('.'); dot != std::string_view::npos) {
        int_part = s.substr(0, dot);
        frac_part = s.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) {
        throw std::invalid_argument("malformed number: '" + std::string(text) + "'");
    }
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part))) {
        throw std::invalid_argument("malformed number: '" + std::string(text) + "'");
    }

    std::string digits(int_part);
    digits.append(frac_part);
    mpz_class num(digits.empty() ? std::string("0") : digits, 10);
    exponent -= static_cast<long>(frac_part.size());

    mpq_class q;
    if (exponent >= 0) {
        q = mpq_class(num * pow10(static_cast<unsigned long>(exponent)));
    } else {
        q = mpq_class(num, pow10(static_cast<unsigned long>(-exponent)));
        q.canonicalize();
    }
    if (negative) q = -q;
    return Rational(q);
}

} // namespace

Rational::Rational(long long num, long long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("empty number");

    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const mpz_class num = parse_integer(text.substr(0, slash));
        const std::string_view den_text = text.substr(slash + 1);
        if (!all_digits(den_text)) {
            throw std::invalid_argument("denominator must be a positive integer: '" + std::string(text) + "'");
        }
        const mpz_class den(std::string(den_text), 10);
        if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
        return Rational(mpq_class(num, den));
    }
    return parse_decimal(text);
}

std::string Rational::fraction_str() const { return numerator() + "/" + denominator(); }

std::string Rational::decimal_str(unsigned digits) const {
    const mpz_class scale = pow10(digits);
    const mpz_class scaled_num = abs(value_.get_num()) * scale;
    const mpz_class &den = value_.get_den();
    mpz_class q = scaled_num / den;
    const mpz_class r = scaled_num % den;
    if (2 * r >= den) q += 1;

    std::string body = q.get_str();
    if (digits > 0) {
        if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
        body.insert(body.size() - digits, ".");
    }
    const bool negative = sgn(value_) < 0 && q != 0;
    return negative ? "-" + body : body;
}

Rational &Rational::operator/=(const Rational &o) {
    if (sgn(o.value_) == 0) throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
}

} // namespace arp
