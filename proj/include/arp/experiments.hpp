#pragma once

// Instance generators, Q_n sweeps and growth summaries.

#include "arp/enumeration.hpp"
#include "arp/model.hpp"

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace arp {

enum class Family { RandomGeneral, Theorem2Canonical };

/// "random" / "canonical"
[[nodiscard]] std::string_view to_string(Family family) noexcept;
/// Accepts "random", "random_general", "canonical", "theorem2_canonical" (any case).
[[nodiscard]] Family parse_family(std::string_view text);

struct GeneratorSpec {
    Family family = Family::RandomGeneral;
    std::size_t n = 1;
    std::uint64_t seed = 0;
    Rational M{10};
    /// Numerators are drawn from [1, first], denominators from [1, second].
    std::pair<std::uint64_t, std::uint64_t> value_range{100, 10};
};

/// Throws Error(InvalidParam).
void validate(const GeneratorSpec &spec);

/// v and c are each p/q with p, q uniform in value_range; items are redrawn
/// until every v/c and every v/c^2 is distinct. Deterministic in the seed.
/// Throws Error(InvalidParam), Error(GenerationFailed).
[[nodiscard]] Instance gen_random(const GeneratorSpec &spec);

/// c_i = i, v_i = M i^2 / (i + 1): v/c = M i/(i+1) rises, v/c^2 = M/(i+1)
/// falls and v_n/c_n < M. Throws Error(InvalidParam).
[[nodiscard]] Instance gen_theorem2_family(std::size_t n, const Rational &M);

/// Dispatches on spec.family.
[[nodiscard]] Instance generate(const GeneratorSpec &spec);

enum class PreconditionViolation { None, RatioNotIncreasing, RatioOverSquareNotDecreasing, LastRatioAboveCap };

[[nodiscard]] std::string_view to_string(PreconditionViolation reason) noexcept;

struct PreconditionCheck {
    PreconditionViolation reason = PreconditionViolation::None;
    std::size_t index = 0; // 1-based id where the first violated condition fails

    [[nodiscard]] bool ok() const noexcept { return reason == PreconditionViolation::None; }
    explicit operator bool() const noexcept { return ok(); }
};

/// In listed order: v/c^2 strictly decreasing, v/c strictly increasing,
/// v_n/c_n <= M. Reports the first violated condition.
[[nodiscard]] PreconditionCheck validate_theorem2_preconditions(const Instance &inst, const Rational &M);

/// 2^(n-2) for n >= 2, else 1.
[[nodiscard]] std::uint64_t worst_case_bound(std::size_t n);

struct SweepRow {
    std::string family;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::uint64_t q_n = 0;
    std::uint64_t bound_2exp = 1;
    Rational optimum;
    std::uint64_t nodes = 0;
    bool ties_detected = false;
    bool timed_out = false;
    std::int64_t elapsed_micros = 0;

    /// Equality on everything except timing.
    [[nodiscard]] bool same_result(const SweepRow &other) const;
};

struct SweepOptions {
    unsigned workers = 1; // rows run concurrently
    std::chrono::seconds row_timeout{60};
};

/// Seed of repetition `rep` at size `n`, derived from the template seed.
[[nodiscard]] std::uint64_t row_seed(std::uint64_t base, std::size_t n, std::size_t rep);

/// One row per (n, rep), ordered by (n, rep). Each row generates an instance,
/// solves it and counts Q_n separately; the two counts must agree.
/// Throws Error(InvalidParam) and generator errors; a row over budget is
/// returned with timed_out set.
[[nodiscard]] std::vector<SweepRow> qn_sweep(const GeneratorSpec &spec_template, std::size_t n_from, std::size_t n_to,
                                             std::size_t reps, const SweepOptions &options = {});

inline constexpr std::string_view kSweepCsvHeader = "family,n,seed,qn,bound_2exp,optimum,nodes,ties,elapsed_micros";

/// Header plus one line per row; timed-out rows leave qn and optimum empty.
void write_sweep_csv(std::ostream &os, const std::vector<SweepRow> &rows);

struct RegimeEntry {
    std::size_t n = 0;
    std::size_t rows = 0;
    std::uint64_t max_q_n = 0;
    std::uint64_t bound_2exp = 1;
    std::int64_t bound_margin = 0;       // bound_2exp - max_q_n
    double log2_q_n = 0.0;
    std::optional<Rational> growth_ratio; // max q_n / max q_(n-1), when n-1 was tested
    std::optional<double> log2_slope;     // log2 q_n - log2 q_(n-1)
};

struct RegimeSummary {
    std::vector<RegimeEntry> entries; // ascending n
    /// Smallest tested n from which every following ratio q_(k+1)/q_k stays
    /// below 2. Observational only.
    std::optional<std::size_t> inflection_candidate;
    std::vector<std::size_t> bound_violations; // row indices with q_n > 2^(n-2)
    std::vector<std::size_t> tied_rows;
    std::vector<std::size_t> timed_out_rows;
};

/// Throws Error(InsufficientData) unless completed rows cover at least two
/// distinct n values.
[[nodiscard]] RegimeSummary regime_report(const std::vector<SweepRow> &rows);

} // namespace arp
