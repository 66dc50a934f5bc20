#pragma once

// Sequential feasible solutions, operationalized as swap-stable drop-out
// orders: no exchange of two adjacent airplanes strictly lengthens the flight.
// Every optimal order is swap-stable, so the maximum over the stable set is
// the global optimum.

#include "arp/model.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace arp {

/// S(i then j) - S(j then i) for two adjacent airplanes followed by airplanes
/// whose consumption rates sum to `suffix`. Positive means i-before-j is
/// strictly better.
///
/// Throws Error(NonPositiveRate) if ci or cj <= 0, Error(NegativeSuffix) if suffix < 0.
[[nodiscard]] Rational adjacent_swap_delta(const Rational &vi, const Rational &ci, const Rational &vj,
                                           const Rational &cj, const Rational &suffix);

/// An adjacent exchange at positions (position, position + 1) that strictly
/// lengthens the flight.
struct SwapWitness {
    std::size_t position = 0; // 1-based
    Rational original_value;
    Rational swapped_value;

    friend bool operator==(const SwapWitness &, const SwapWitness &) = default;
};

struct StabilityCheck {
    std::optional<SwapWitness> witness; // first improving swap, if any

    [[nodiscard]] bool stable() const noexcept { return !witness.has_value(); }
    explicit operator bool() const noexcept { return stable(); }
};

/// Checks every adjacent exchange by re-evaluating the two affected legs.
/// Throws Error(InvalidPermutation).
[[nodiscard]] StabilityCheck is_sequential_feasible(const Instance &inst, const Permutation &perm);

using Clock = std::chrono::steady_clock;

struct SearchOptions {
    unsigned workers = 1;
    /// Searches past this point abort with Error(Timeout).
    std::optional<Clock::time_point> deadline;
    /// Upper-bound pruning for solve(). Makes q_n a lower bound only.
    bool prune = false;
    /// Compare in scaled 128-bit integers when the instance's magnitudes fit;
    /// false forces the rational route everywhere.
    bool integer_kernel = true;
};

struct SolveReport {
    Rational optimum;
    std::vector<Permutation> optimal_perms; // in enumeration order
    std::uint64_t q_n = 0;
    std::uint64_t nodes_expanded = 0;
    bool ties_detected = false; // some adjacent comparison was an exact tie
    bool q_n_exact = true;      // false when pruning skipped leaves
    std::chrono::microseconds elapsed{0};
};

struct CountReport {
    std::uint64_t q_n = 0;
    std::uint64_t nodes_expanded = 0;
    bool ties_detected = false;
};

using VisitFn = std::function<void(const Permutation &, const Rational &)>;

/// Calls `visit` once per swap-stable order with its flight length and returns
/// their number.
///
/// Orders are built back to front: the last airplane is chosen first, in
/// ascending id, then each new front candidate x is admitted in front of the
/// current front y only if x-before-y is at least as good as y-before-x given
/// the consumption behind y. Stability is a property of adjacent pairs and the
/// suffix behind each pair, so this sieve yields exactly the stable set.
///
/// Throws Error(EmptyInstance).
std::uint64_t enumerate_sequential_feasible(const Instance &inst, const VisitFn &visit);

/// Maximum over the swap-stable set. With `workers > 1` the subtrees rooted at
/// each choice of last airplane run concurrently; the report is identical to
/// the single-worker one apart from `elapsed`.
///
/// Throws Error(EmptyInstance), Error(Timeout).
[[nodiscard]] SolveReport solve(const Instance &inst, const SearchOptions &options = {});

/// Count-only traversal; pruning is ignored.
[[nodiscard]] CountReport count_stable(const Instance &inst, const SearchOptions &options = {});

[[nodiscard]] std::uint64_t count_qn(const Instance &inst, const SearchOptions &options = {});

} // namespace arp
