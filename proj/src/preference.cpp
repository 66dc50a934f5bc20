#include "arp/preference.hpp"

namespace arp {

int preference_sign(const Airplane &x, const Airplane &y, const Rational &behind) {
    const mpq_class lhs = y.v.raw() * x.c.raw() * (x.c.raw() + behind.raw());
    const mpq_class rhs = x.v.raw() * y.c.raw() * (y.c.raw() + behind.raw());
    return cmp(lhs, rhs);
}

namespace {

__extension__ typedef unsigned __int128 Wide;

ScaledPreference::Int to_int128(const mpz_class &z) {
    // z is known to be non-negative and below 2^125
    const mpz_class high = z >> 64;
    const mpz_class low = z - (high << 64);
    const auto hi = static_cast<Wide>(mpz_get_ui(high.get_mpz_t()));
    const auto lo = static_cast<Wide>(mpz_get_ui(low.get_mpz_t()));
    return static_cast<ScaledPreference::Int>((hi << 64) | lo);
}

} // namespace

std::optional<ScaledPreference> ScaledPreference::build(const Instance &inst) {
    static_assert(sizeof(unsigned long) == 8, "mpz_get_ui must return 64 bits");
    mpz_class v_scale = 1;
    mpz_class c_scale = 1;
    for (const auto &a : inst.items()) {
        mpz_lcm(v_scale.get_mpz_t(), v_scale.get_mpz_t(), a.v.raw().get_den_mpz_t());
        mpz_lcm(c_scale.get_mpz_t(), c_scale.get_mpz_t(), a.c.raw().get_den_mpz_t());
    }

    const std::size_t n = inst.size();
    std::vector<mpz_class> v(n + 1);
    std::vector<mpz_class> c(n + 1);
    mpz_class max_v = 0;
    mpz_class max_c = 0;
    mpz_class sum_c = 0;
    for (const auto &a : inst.items()) {
        v[a.id] = a.v.raw().get_num() * (v_scale / a.v.raw().get_den());
        c[a.id] = a.c.raw().get_num() * (c_scale / a.c.raw().get_den());
        if (v[a.id] > max_v) max_v = v[a.id];
        if (c[a.id] > max_c) max_c = c[a.id];
        sum_c += c[a.id];
    }
    // Largest product formed: V * C * (C + R) with R <= sum of the other rates.
    const mpz_class worst = max_v * max_c * (sum_c + max_c);
    if (mpz_sizeinbase(worst.get_mpz_t(), 2) > 124) return std::nullopt;

    ScaledPreference out;
    out.stride_ = n + 1;
    out.rates_.assign(n + 1, 0);
    out.cross_.assign((n + 1) * (n + 1), 0);
    for (std::size_t x = 1; x <= n; ++x) {
        out.rates_[x] = to_int128(c[x]);
        for (std::size_t y = 1; y <= n; ++y) out.cross_[x * out.stride_ + y] = to_int128(v[y] * c[x]);
    }
    return out;
}

} // namespace arp
