#include "arp/enumeration.hpp"

#include "arp/preference.hpp"
#include "parallel.hpp"

#include <atomic>

namespace arp {

Rational adjacent_swap_delta(const Rational &vi, const Rational &ci, const Rational &vj, const Rational &cj,
                             const Rational &suffix) {
    if (ci.sign() <= 0 || cj.sign() <= 0) throw Error(ErrorCode::NonPositiveRate, "consumption rates must be > 0");
    if (suffix.sign() < 0) throw Error(ErrorCode::NegativeSuffix, "suffix consumption must be >= 0");
    const Rational pair_burn = ci + cj + suffix;
    return vj * ci / ((cj + suffix) * pair_burn) - vi * cj / ((ci + suffix) * pair_burn);
}

StabilityCheck is_sequential_feasible(const Instance &inst, const Permutation &perm) {
    const Evaluation eval = evaluate(inst, perm);
    const auto &order = perm.order();
    const std::size_t n = order.size();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const Airplane &a = inst.at(order[k]);
        const Airplane &b = inst.at(order[k + 1]);
        const Rational behind = k + 2 < n ? eval.suffix_sums[k + 2] : Rational{};
        // Positions k and k+1 share the burn suffix_sums[k]; only the inner
        // leg's burn changes when the two are exchanged.
        const Rational before = eval.legs[k] + eval.legs[k + 1];
        const Rational after = b.v / eval.suffix_sums[k] + a.v / (a.c + behind);
        if (after > before) {
            return StabilityCheck{SwapWitness{k + 1, eval.total, eval.total - before + after}};
        }
    }
    return StabilityCheck{};
}

namespace {

struct SubtreeResult {
    std::uint64_t leaves = 0;
    std::uint64_t nodes = 0;
    bool ties = false;
    bool has_best = false;
    Rational best;
    std::vector<Permutation> argmax;
};

/// Depth-first backward construction of swap-stable orders below one choice
/// of last airplane. One instance per worker; nothing in it is shared.
class BackwardSearch {
public:
    using Int = ScaledPreference::Int;

    BackwardSearch(const Instance &inst, const SearchOptions &options, const std::atomic<bool> &cancel)
        : inst_(inst), options_(options), cancel_(cancel), n_(inst.size()), order_(n_), used_(n_ + 1, false),
          scaled_(options.integer_kernel ? ScaledPreference::build(inst) : std::nullopt) {}

    /// `on_leaf(order, total)` for every stable order ending in `last`.
    /// `keep(total_so_far, placed_burn, open_positions)` returning false prunes.
    template <bool TrackTotal, class OnLeaf, class Keep>
    SubtreeResult run(std::size_t last, OnLeaf &&on_leaf, Keep &&keep) {
        result_ = SubtreeResult{};
        std::fill(used_.begin(), used_.end(), false);
        used_[last] = true;
        order_[n_ - 1] = last;
        const Airplane &a = inst_.at(last);
        ++result_.nodes;
        Frame top;
        top.front = last;
        top.placed = a.c;
        if (scaled_) top.placed_int = scaled_->rate(last);
        if constexpr (TrackTotal) top.total = a.v / a.c;
        extend<TrackTotal>(n_ - 1, top, on_leaf, keep);
        return std::move(result_);
    }

    [[nodiscard]] const std::vector<bool> &used() const noexcept { return used_; }

private:
    // The partial order from `front` to the end. Rational fields are left at
    // zero when neither totals nor the rational sign route need them.
    struct Frame {
        std::size_t front = 0;
        Rational behind;   // burn after front
        Rational placed;   // burn of front and everything after it
        Int behind_int = 0;
        Int placed_int = 0;
        Rational total;
    };

    void tick() {
        if ((++result_.nodes & 0xFFF) != 0) return;
        if (cancel_.load(std::memory_order_relaxed)) throw Error(ErrorCode::Timeout, "search cancelled");
        if (options_.deadline && Clock::now() > *options_.deadline) {
            throw Error(ErrorCode::Timeout, "search exceeded its time budget");
        }
    }

    template <bool TrackTotal, class OnLeaf, class Keep>
    void extend(std::size_t open, const Frame &f, OnLeaf &on_leaf, Keep &keep) {
        if (open == 0) {
            ++result_.leaves;
            on_leaf(order_, f.total);
            return;
        }
        const bool need_rational = TrackTotal || !scaled_;
        for (std::size_t x = 1; x <= n_; ++x) {
            if (used_[x]) continue;
            const int s = scaled_ ? scaled_->sign(x, f.front, f.behind_int)
                                  : preference_sign(inst_.at(x), inst_.at(f.front), f.behind);
            if (s == 0) result_.ties = true;
            if (s < 0) continue;
            tick();
            const Airplane &a = inst_.at(x);
            Frame next;
            next.front = x;
            if (scaled_) {
                next.behind_int = f.placed_int;
                next.placed_int = f.placed_int + scaled_->rate(x);
            }
            if (need_rational) {
                next.behind = f.placed;
                next.placed = f.placed + a.c;
            }
            if constexpr (TrackTotal) next.total = f.total + a.v / next.placed;
            used_[x] = true;
            order_[open - 1] = x;
            if (keep(next.total, next.placed, open - 1)) extend<TrackTotal>(open - 1, next, on_leaf, keep);
            used_[x] = false;
        }
    }

    const Instance &inst_;
    const SearchOptions &options_;
    const std::atomic<bool> &cancel_;
    std::size_t n_;
    std::vector<std::size_t> order_;
    std::vector<bool> used_;
    std::optional<ScaledPreference> scaled_;
    SubtreeResult result_;
};

void require_nonempty(const Instance &inst) {
    if (inst.size() == 0) throw Error(ErrorCode::EmptyInstance, "empty instance");
}

constexpr auto keep_all = [](const Rational &, const Rational &, std::size_t) { return true; };

} // namespace

std::uint64_t enumerate_sequential_feasible(const Instance &inst, const VisitFn &visit) {
    require_nonempty(inst);
    const SearchOptions options;
    const std::atomic<bool> cancel{false};
    BackwardSearch search(inst, options, cancel);
    std::uint64_t count = 0;
    for (std::size_t last = 1; last <= inst.size(); ++last) {
        count += search
                     .run<true>(
                         last,
                         [&](const std::vector<std::size_t> &order, const Rational &total) {
                             visit(Permutation(order), total);
                         },
                         keep_all)
                     .leaves;
    }
    return count;
}

SolveReport solve(const Instance &inst, const SearchOptions &options) {
    require_nonempty(inst);
    const auto started = Clock::now();
    const std::size_t n = inst.size();
    std::atomic<bool> cancel{false};

    auto results = detail::run_indexed<SubtreeResult>(n, options.workers, cancel, [&](std::size_t i) {
        BackwardSearch search(inst, options, cancel);
        // The incumbent is local to the subtree so pruning decisions do not
        // depend on which worker ran which subtree.
        Rational best;
        bool has_best = false;
        std::vector<Permutation> argmax;
        auto on_leaf = [&](const std::vector<std::size_t> &order, const Rational &total) {
            if (!has_best || total > best) {
                best = total;
                has_best = true;
                argmax.clear();
            }
            if (total == best) argmax.emplace_back(order);
        };
        auto keep = [&](const Rational &total, const Rational &placed, std::size_t open) {
            if (!options.prune || !has_best || open == 0) return true;
            // Every remaining airplane burns with at least `placed` + its own
            // rate behind it, so its leg is at most v / (placed + min c).
            Rational fuel;
            const Rational *min_rate = nullptr;
            const auto &used = search.used();
            for (std::size_t id = 1; id <= n; ++id) {
                if (used[id]) continue;
                fuel += inst.at(id).v;
                if (!min_rate || inst.at(id).c < *min_rate) min_rate = &inst.at(id).c;
            }
            return total + fuel / (placed + *min_rate) >= best;
        };
        SubtreeResult r = search.run<true>(i + 1, on_leaf, keep);
        r.has_best = has_best;
        r.best = std::move(best);
        r.argmax = std::move(argmax);
        return r;
    });

    SolveReport report;
    bool has_best = false;
    for (auto &r : results) {
        report.q_n += r.leaves;
        report.nodes_expanded += r.nodes;
        report.ties_detected = report.ties_detected || r.ties;
        if (!r.has_best) continue;
        if (!has_best || r.best > report.optimum) {
            report.optimum = r.best;
            report.optimal_perms.clear();
            has_best = true;
        }
        if (r.best == report.optimum) {
            for (auto &p : r.argmax) report.optimal_perms.push_back(std::move(p));
        }
    }
    report.q_n_exact = !options.prune;
    report.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - started);
    return report;
}

CountReport count_stable(const Instance &inst, const SearchOptions &options) {
    require_nonempty(inst);
    std::atomic<bool> cancel{false};
    auto results = detail::run_indexed<SubtreeResult>(inst.size(), options.workers, cancel, [&](std::size_t i) {
        BackwardSearch search(inst, options, cancel);
        return search.run<false>(i + 1, [](const std::vector<std::size_t> &, const Rational &) {}, keep_all);
    });
    CountReport report;
    for (const auto &r : results) {
        report.q_n += r.leaves;
        report.nodes_expanded += r.nodes;
        report.ties_detected = report.ties_detected || r.ties;
    }
    return report;
}

std::uint64_t count_qn(const Instance &inst, const SearchOptions &options) { return count_stable(inst, options).q_n; }

} // namespace arp
