#pragma once

// Fleet model for the airplane refueling problem and the n-vehicle
// exploration problem, and exact evaluation of drop-out orders.
//
// Objective for a drop-out order pi (pi(1) leaves first, pi(n) flies farthest):
//
//     S = sum_i v[pi(i)] / (c[pi(i)] + ... + c[pi(n)])
//
// Each term is the leg flown during phase i, while the airplanes pi(i)..pi(n)
// burn fuel jointly and pi(i) hands over what remains.

#include "arp/error.hpp"
#include "arp/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace arp {

enum class Kind { ARP, NVEP };

[[nodiscard]] std::string_view to_string(Kind kind) noexcept;
/// Accepts "arp" / "nvep" (case-insensitive). Throws Error(ParseError).
[[nodiscard]] Kind parse_kind(std::string_view text);

/// One airplane (ARP) or vehicle (NVEP: v reads as a_i, c as b_i).
struct Airplane {
    std::size_t id = 0; // 1-based, equals the position in the instance
    Rational v;         // fuel carried
    Rational c;         // fuel burned per unit distance
};

/// A (v, c) pair as supplied to make_instance.
using FuelRate = std::pair<Rational, Rational>;

class Instance {
public:
    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] const std::string &label() const noexcept { return label_; }
    [[nodiscard]] std::size_t size() const noexcept { return items_.size(); }
    [[nodiscard]] const std::vector<Airplane> &items() const noexcept { return items_; }

    /// Airplane by 1-based id. Precondition: 1 <= id <= size().
    [[nodiscard]] const Airplane &at(std::size_t id) const { return items_[id - 1]; }

    friend bool operator==(const Instance &a, const Instance &b);

private:
    friend Instance make_instance(Kind, std::vector<FuelRate>, std::string);

    Instance(Kind kind, std::vector<Airplane> items, std::string label)
        : kind_(kind), items_(std::move(items)), label_(std::move(label)) {}

    Kind kind_;
    std::vector<Airplane> items_;
    std::string label_;
};

/// Builds a validated instance; ids are assigned 1..n in input order.
/// Throws Error(EmptyInstance) or Error(NonPositiveValue).
[[nodiscard]] Instance make_instance(Kind kind, std::vector<FuelRate> values, std::string label = {});

/// A drop-out order of 1-based ids; order()[0] drops out first.
///
/// Construction does not validate: a verifier must be able to hold a bad
/// certificate. Use is_valid_for() or validate() before evaluating.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<std::size_t> order) : order_(std::move(order)) {}
    Permutation(std::initializer_list<std::size_t> order) : order_(order) {}

    [[nodiscard]] static Permutation identity(std::size_t n);
    /// Parses "2,1,3". Throws Error(ParseError).
    [[nodiscard]] static Permutation parse(std::string_view text);

    [[nodiscard]] std::size_t size() const noexcept { return order_.size(); }
    [[nodiscard]] const std::vector<std::size_t> &order() const noexcept { return order_; }
    /// 1-based position, matching pi(k).
    [[nodiscard]] std::size_t operator()(std::size_t k) const { return order_[k - 1]; }

    /// True iff this is a bijection on {1..n}.
    [[nodiscard]] bool is_valid_for(std::size_t n) const;
    /// Throws Error(InvalidPermutation) unless is_valid_for(inst.size()).
    void validate(const Instance &inst) const;

    /// "2,1,3"
    [[nodiscard]] std::string str() const;

    friend bool operator==(const Permutation &, const Permutation &) = default;
    friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
    std::vector<std::size_t> order_;
};

struct Evaluation {
    Rational total;                    // S_pi
    std::vector<Rational> legs;        // legs[i] = v / suffix_sums[i], by position
    std::vector<Rational> suffix_sums; // c[pi(i)] + ... + c[pi(n)], by position
};

/// Throws Error(InvalidPermutation).
[[nodiscard]] Evaluation evaluate(const Instance &inst, const Permutation &perm);

/// Suffix consumption sums by position, strictly decreasing.
/// Throws Error(InvalidPermutation).
[[nodiscard]] std::vector<Rational> cumulative_consumption(const Instance &inst, const Permutation &perm);

/// Distance reached by the last vehicle of an NVEP instance.
/// Throws Error(WrongKind) or Error(InvalidPermutation).
[[nodiscard]] Rational nvep_distance(const Instance &inst, const Permutation &perm);

/// NVEP -> ARP with v_i = a_i and c_i = b_i; ids, order and label are kept.
/// Throws Error(WrongKind).
[[nodiscard]] Instance reduce_nvep_to_arp(const Instance &inst);

/// NP certificate check: true iff `perm` lists every airplane exactly once and
/// its flight reaches at least `threshold`. Never throws on a bad certificate.
[[nodiscard]] bool verify_certificate(const Instance &inst, const Permutation &perm, const Rational &threshold);

} // namespace arp
