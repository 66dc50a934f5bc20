#include "arp/experiments.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <map>
#include <ostream>
#include <random>
#include <set>

namespace arp {

std::string_view to_string(Family family) noexcept {
    return family == Family::RandomGeneral ? "random" : "canonical";
}

Family parse_family(std::string_view text) {
    std::string lower(text);
    std::ranges::transform(lower, lower.begin(), [](unsigned char ch) { return std::tolower(ch); });
    if (lower == "random" || lower == "random_general") return Family::RandomGeneral;
    if (lower == "canonical" || lower == "theorem2_canonical") return Family::Theorem2Canonical;
    throw Error(ErrorCode::InvalidParam, "unknown family '" + std::string(text) + "'");
}

void validate(const GeneratorSpec &spec) {
    if (spec.n < 1) throw Error(ErrorCode::InvalidParam, "n must be >= 1");
    if (spec.M.sign() <= 0) throw Error(ErrorCode::InvalidParam, "M must be > 0");
    if (spec.value_range.first < 1 || spec.value_range.second < 1) {
        throw Error(ErrorCode::InvalidParam, "value_range bounds must be positive");
    }
}

Instance gen_random(const GeneratorSpec &spec) {
    validate(spec);
    std::mt19937_64 rng(spec.seed);
    std::uniform_int_distribution<std::uint64_t> num(1, spec.value_range.first);
    std::uniform_int_distribution<std::uint64_t> den(1, spec.value_range.second);
    auto draw = [&] {
        const auto p = static_cast<long long>(num(rng));
        const auto q = static_cast<long long>(den(rng));
        return Rational(p, q);
    };

    const std::size_t budget = 1000 + 100 * spec.n;
    std::size_t attempts = 0;
    std::vector<FuelRate> values;
    std::set<Rational> ratios;
    std::set<Rational> ratios_sq;
    while (values.size() < spec.n) {
        if (++attempts > budget) {
            throw Error(ErrorCode::GenerationFailed, "could not draw " + std::to_string(spec.n) +
                                                         " distinct airplanes from the value range");
        }
        Rational v = draw();
        Rational c = draw();
        Rational ratio = v / c;
        Rational ratio_sq = ratio / c;
        if (ratios.contains(ratio) || ratios_sq.contains(ratio_sq)) continue;
        ratios.insert(std::move(ratio));
        ratios_sq.insert(std::move(ratio_sq));
        values.emplace_back(std::move(v), std::move(c));
    }
    return make_instance(Kind::ARP, std::move(values),
                         "random n=" + std::to_string(spec.n) + " seed=" + std::to_string(spec.seed));
}

Instance gen_theorem2_family(std::size_t n, const Rational &M) {
    if (n < 1) throw Error(ErrorCode::InvalidParam, "n must be >= 1");
    if (M.sign() <= 0) throw Error(ErrorCode::InvalidParam, "M must be > 0");
    std::vector<FuelRate> values;
    values.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        const auto k = static_cast<long long>(i);
        values.emplace_back(M * Rational(k * k, k + 1), Rational(k));
    }
    return make_instance(Kind::ARP, std::move(values), "canonical n=" + std::to_string(n) + " M=" + M.str());
}

Instance generate(const GeneratorSpec &spec) {
    return spec.family == Family::RandomGeneral ? gen_random(spec) : gen_theorem2_family(spec.n, spec.M);
}

std::string_view to_string(PreconditionViolation reason) noexcept {
    switch (reason) {
    case PreconditionViolation::None: return "ok";
    case PreconditionViolation::RatioNotIncreasing: return "v/c not strictly increasing";
    case PreconditionViolation::RatioOverSquareNotDecreasing: return "v/c^2 not strictly decreasing";
    case PreconditionViolation::LastRatioAboveCap: return "v_n/c_n exceeds M";
    }
    return "unknown";
}

PreconditionCheck validate_theorem2_preconditions(const Instance &inst, const Rational &M) {
    const auto &items = inst.items();
    for (std::size_t i = 1; i < items.size(); ++i) {
        const Rational prev = items[i - 1].v / (items[i - 1].c * items[i - 1].c);
        const Rational cur = items[i].v / (items[i].c * items[i].c);
        if (!(cur < prev)) return {PreconditionViolation::RatioOverSquareNotDecreasing, i + 1};
    }
    for (std::size_t i = 1; i < items.size(); ++i) {
        if (!(items[i].v / items[i].c > items[i - 1].v / items[i - 1].c)) {
            return {PreconditionViolation::RatioNotIncreasing, i + 1};
        }
    }
    if (!items.empty() && items.back().v / items.back().c > M) {
        return {PreconditionViolation::LastRatioAboveCap, items.size()};
    }
    return {};
}

std::uint64_t worst_case_bound(std::size_t n) {
    if (n < 2) return 1;
    if (n - 2 >= 64) throw Error(ErrorCode::InvalidParam, "2^(n-2) does not fit in 64 bits");
    return std::uint64_t{1} << (n - 2);
}

bool SweepRow::same_result(const SweepRow &o) const {
    return family == o.family && n == o.n && seed == o.seed && q_n == o.q_n && bound_2exp == o.bound_2exp &&
           optimum == o.optimum && nodes == o.nodes && ties_detected == o.ties_detected && timed_out == o.timed_out;
}

std::uint64_t row_seed(std::uint64_t base, std::size_t n, std::size_t rep) {
    // splitmix64 finalizer over a mix of the three inputs
    std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(n) * 1000003ULL + rep + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::vector<SweepRow> qn_sweep(const GeneratorSpec &spec_template, std::size_t n_from, std::size_t n_to,
                               std::size_t reps, const SweepOptions &options) {
    if (n_from < 1 || n_from > n_to) throw Error(ErrorCode::InvalidParam, "need 1 <= n_from <= n_to");
    if (reps < 1) throw Error(ErrorCode::InvalidParam, "reps must be >= 1");
    static_cast<void>(worst_case_bound(n_to)); // range check

    std::vector<GeneratorSpec> specs;
    for (std::size_t n = n_from; n <= n_to; ++n) {
        for (std::size_t rep = 0; rep < reps; ++rep) {
            GeneratorSpec spec = spec_template;
            spec.n = n;
            spec.seed = row_seed(spec_template.seed, n, rep);
            validate(spec);
            specs.push_back(spec);
        }
    }

    std::atomic<bool> cancel{false};
    return detail::run_indexed<SweepRow>(specs.size(), options.workers, cancel, [&](std::size_t i) {
        const GeneratorSpec &spec = specs[i];
        const Instance inst = generate(spec);
        SweepRow row;
        row.family = std::string(to_string(spec.family));
        row.n = spec.n;
        row.seed = spec.seed;
        row.bound_2exp = worst_case_bound(spec.n);

        const auto started = Clock::now();
        SearchOptions search;
        search.deadline = started + options.row_timeout;
        try {
            const SolveReport report = solve(inst, search);
            const CountReport count = count_stable(inst, search);
            if (count.q_n != report.q_n) {
                throw std::logic_error("count-only traversal disagrees with solve on n=" + std::to_string(spec.n));
            }
            row.q_n = report.q_n;
            row.optimum = report.optimum;
            row.nodes = report.nodes_expanded;
            row.ties_detected = report.ties_detected;
        } catch (const Error &e) {
            if (e.code() != ErrorCode::Timeout) throw;
            row.timed_out = true;
        }
        row.elapsed_micros =
            std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - started).count();
        return row;
    });
}

void write_sweep_csv(std::ostream &os, const std::vector<SweepRow> &rows) {
    os << kSweepCsvHeader << '\n';
    for (const auto &r : rows) {
        os << r.family << ',' << r.n << ',' << r.seed << ',';
        if (!r.timed_out) os << r.q_n;
        os << ',' << r.bound_2exp << ',';
        if (!r.timed_out) os << r.optimum.fraction_str();
        os << ',' << r.nodes << ',' << (r.ties_detected ? "true" : "false") << ',' << r.elapsed_micros << '\n';
    }
}

RegimeSummary regime_report(const std::vector<SweepRow> &rows) {
    RegimeSummary summary;
    std::map<std::size_t, RegimeEntry> by_n;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const SweepRow &r = rows[i];
        if (r.timed_out) {
            summary.timed_out_rows.push_back(i);
            continue;
        }
        if (r.ties_detected) summary.tied_rows.push_back(i);
        if (r.n >= 2 && r.q_n > r.bound_2exp) summary.bound_violations.push_back(i);
        RegimeEntry &e = by_n[r.n];
        e.n = r.n;
        e.rows += 1;
        e.max_q_n = std::max(e.max_q_n, r.q_n);
        e.bound_2exp = r.bound_2exp;
    }
    if (by_n.size() < 2) {
        throw Error(ErrorCode::InsufficientData, "growth statistics need completed rows for at least two sizes");
    }

    const RegimeEntry *prev = nullptr;
    for (auto &[n, e] : by_n) {
        e.bound_margin = static_cast<std::int64_t>(e.bound_2exp) - static_cast<std::int64_t>(e.max_q_n);
        e.log2_q_n = std::log2(static_cast<double>(e.max_q_n));
        if (prev && prev->n + 1 == n && prev->max_q_n > 0) {
            e.growth_ratio = Rational(static_cast<long long>(e.max_q_n), static_cast<long long>(prev->max_q_n));
            e.log2_slope = e.log2_q_n - prev->log2_q_n;
        }
        summary.entries.push_back(e);
        prev = &e;
    }

    // Walk back from the largest n while the ratio into each entry stays < 2.
    const Rational two(2);
    std::optional<std::size_t> candidate;
    for (std::size_t k = summary.entries.size(); k-- > 1;) {
        const RegimeEntry &e = summary.entries[k];
        if (!e.growth_ratio || *e.growth_ratio >= two) break;
        candidate = summary.entries[k - 1].n;
    }
    summary.inflection_candidate = candidate;
    return summary;
}

} // namespace arp
