#include "arp/oracle.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <atomic>

namespace arp {

// Knuth, TAOCP 7.2.1.2 Algorithm P, with 1-based c_j / o_j arrays.
PlainChanges::PlainChanges(std::size_t m) : m_(m), c_(m + 1, 0), o_(m + 1, 1) {}

std::optional<std::size_t> PlainChanges::next() {
    if (done_ || m_ < 2) return std::nullopt;
    long j = static_cast<long>(m_);
    long s = 0;
    for (;;) {
        const long q = c_[j] + o_[j];
        if (q >= 0 && q != j) {
            const long a = j - c_[j] + s;
            const long b = j - q + s;
            c_[j] = q;
            return static_cast<std::size_t>(std::min(a, b) - 1);
        }
        if (q == j) {
            if (j == 1) break;
            ++s;
        }
        o_[j] = -o_[j];
        --j;
        if (j == 0) break;
    }
    done_ = true;
    return std::nullopt;
}

namespace {

struct BlockResult {
    std::uint64_t evaluated = 0;
    std::uint64_t stable = 0;
    bool has_best = false;
    Rational best;
    std::vector<Permutation> argmax;
};

void check_size(const Instance &inst, std::size_t cap) {
    if (inst.size() == 0) throw Error(ErrorCode::EmptyInstance, "empty instance");
    if (inst.size() > cap) {
        throw Error(ErrorCode::SizeCapExceeded, "n=" + std::to_string(inst.size()) + " exceeds the oracle cap of " +
                                                    std::to_string(cap));
    }
}

/// All orders whose last airplane is `last`; plain changes permute the rest.
template <class OnOrder>
void for_each_in_block(const Instance &inst, std::size_t last, const OracleOptions &options,
                       const std::atomic<bool> &cancel, OnOrder &&on_order) {
    const std::size_t n = inst.size();
    std::vector<std::size_t> order;
    order.reserve(n);
    for (std::size_t id = 1; id <= n; ++id) {
        if (id != last) order.push_back(id);
    }
    order.push_back(last);

    Permutation perm(order);
    Evaluation eval = evaluate(inst, perm);
    PlainChanges changes(n - 1);
    std::uint64_t steps = 0;
    for (;;) {
        on_order(perm, eval);
        const auto k = changes.next();
        if (!k) break;
        if ((++steps & 0x3FF) == 0) {
            if (cancel.load(std::memory_order_relaxed)) throw Error(ErrorCode::Timeout, "oracle cancelled");
            if (options.deadline && Clock::now() > *options.deadline) {
                throw Error(ErrorCode::Timeout, "oracle exceeded its time budget");
            }
        }
        std::swap(order[*k], order[*k + 1]);
        perm = Permutation(order);
        if (!options.incremental) {
            eval = evaluate(inst, perm);
            continue;
        }
        // Only the inner burn of the exchanged pair changes; the outer burn
        // covers both airplanes either way.
        const Airplane &front = inst.at(order[*k]);
        const Airplane &back = inst.at(order[*k + 1]);
        eval.total -= eval.legs[*k] + eval.legs[*k + 1];
        eval.suffix_sums[*k + 1] = eval.suffix_sums[*k + 2] + back.c;
        eval.legs[*k] = front.v / eval.suffix_sums[*k];
        eval.legs[*k + 1] = back.v / eval.suffix_sums[*k + 1];
        eval.total += eval.legs[*k] + eval.legs[*k + 1];
    }
}

} // namespace

OracleReport brute_force_solve(const Instance &inst, const OracleOptions &options) {
    check_size(inst, options.cap);
    std::atomic<bool> cancel{false};
    auto blocks = detail::run_indexed<BlockResult>(inst.size(), options.workers, cancel, [&](std::size_t i) {
        BlockResult r;
        for_each_in_block(inst, i + 1, options, cancel, [&](const Permutation &perm, const Evaluation &eval) {
            ++r.evaluated;
            if (options.count_stable && is_sequential_feasible(inst, perm).stable()) ++r.stable;
            if (!r.has_best || eval.total > r.best) {
                r.best = eval.total;
                r.has_best = true;
                r.argmax.clear();
            }
            if (eval.total == r.best) r.argmax.push_back(perm);
        });
        return r;
    });

    OracleReport report;
    bool has_best = false;
    for (auto &b : blocks) {
        report.permutations_evaluated += b.evaluated;
        report.stable_count += b.stable;
        if (!b.has_best) continue;
        if (!has_best || b.best > report.optimum) {
            report.optimum = b.best;
            report.argmax_perms.clear();
            has_best = true;
        }
        if (b.best == report.optimum) {
            for (auto &p : b.argmax) report.argmax_perms.push_back(std::move(p));
        }
    }
    std::ranges::sort(report.argmax_perms);
    return report;
}

std::uint64_t brute_force_count_stable(const Instance &inst, const OracleOptions &options) {
    check_size(inst, options.cap);
    std::atomic<bool> cancel{false};
    auto counts = detail::run_indexed<std::uint64_t>(inst.size(), options.workers, cancel, [&](std::size_t i) {
        std::uint64_t stable = 0;
        for_each_in_block(inst, i + 1, options, cancel, [&](const Permutation &perm, const Evaluation &) {
            if (is_sequential_feasible(inst, perm).stable()) ++stable;
        });
        return stable;
    });
    std::uint64_t total = 0;
    for (auto c : counts) total += c;
    return total;
}

} // namespace arp
