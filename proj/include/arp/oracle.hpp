#pragma once

// Brute-force ground truth: every one of the n! drop-out orders is evaluated.
// Deliberately unpruned; it exists to validate the sequential search.

#include "arp/enumeration.hpp"
#include "arp/model.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace arp {

struct OracleOptions {
    std::size_t cap = 10;   // largest n accepted
    bool incremental = true; // O(1) update per adjacent interchange; false re-evaluates every order
    bool count_stable = true;
    unsigned workers = 1;
    std::optional<Clock::time_point> deadline;
};

struct OracleReport {
    Rational optimum;
    std::vector<Permutation> argmax_perms; // lexicographically sorted
    std::uint64_t permutations_evaluated = 0;
    std::uint64_t stable_count = 0;        // 0 when OracleOptions::count_stable is off
};

/// Successive adjacent interchanges (plain changes) over positions [0, m):
/// each call to next() names the left index of the pair to swap, or nullopt
/// once all m! arrangements have been produced.
class PlainChanges {
public:
    explicit PlainChanges(std::size_t m);
    [[nodiscard]] std::optional<std::size_t> next();

private:
    std::size_t m_;
    std::vector<long> c_;
    std::vector<long> o_;
    bool done_ = false;
};

/// Throws Error(EmptyInstance), Error(SizeCapExceeded), Error(Timeout).
[[nodiscard]] OracleReport brute_force_solve(const Instance &inst, const OracleOptions &options = {});

/// Number of orders passing is_sequential_feasible, by exhaustive filtering.
/// Throws Error(EmptyInstance), Error(SizeCapExceeded), Error(Timeout).
[[nodiscard]] std::uint64_t brute_force_count_stable(const Instance &inst, const OracleOptions &options = {});

} // namespace arp
