#include "arp/model.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace arp {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::EmptyInstance: return "EmptyInstance";
    case ErrorCode::NonPositiveValue: return "NonPositiveValue";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::WrongKind: return "WrongKind";
    case ErrorCode::NonPositiveRate: return "NonPositiveRate";
    case ErrorCode::NegativeSuffix: return "NegativeSuffix";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
    case ErrorCode::InvalidParam: return "InvalidParam";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Timeout: return "Timeout";
    }
    return "Unknown";
}

std::string_view to_string(Kind kind) noexcept { return kind == Kind::ARP ? "arp" : "nvep"; }

Kind parse_kind(std::string_view text) {
    std::string lower(text);
    std::ranges::transform(lower, lower.begin(), [](unsigned char ch) { return std::tolower(ch); });
    if (lower == "arp") return Kind::ARP;
    if (lower == "nvep") return Kind::NVEP;
    throw Error(ErrorCode::ParseError, "unknown instance kind '" + std::string(text) + "'");
}

bool operator==(const Instance &a, const Instance &b) {
    if (a.kind_ != b.kind_ || a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.items_[i].v != b.items_[i].v || a.items_[i].c != b.items_[i].c) return false;
    }
    return true;
}

Instance make_instance(Kind kind, std::vector<FuelRate> values, std::string label) {
    if (values.empty()) throw Error(ErrorCode::EmptyInstance, "an instance needs at least one airplane");
    std::vector<Airplane> items;
    items.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        auto &[v, c] = values[i];
        if (v.sign() <= 0 || c.sign() <= 0) {
            throw Error(ErrorCode::NonPositiveValue, "item " + std::to_string(i + 1) + " has v=" + v.str() +
                                                         ", c=" + c.str() + "; both must be > 0");
        }
        items.push_back(Airplane{i + 1, std::move(v), std::move(c)});
    }
    return Instance(kind, std::move(items), std::move(label));
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i + 1;
    return Permutation(std::move(order));
}

Permutation Permutation::parse(std::string_view text) {
    std::vector<std::size_t> order;
    while (!text.empty()) {
        const auto comma = text.find(',');
        std::string_view token = text.substr(0, comma);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        std::size_t id = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), id);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
            throw Error(ErrorCode::ParseError, "bad permutation entry '" + std::string(token) + "'");
        }
        order.push_back(id);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    if (order.empty()) throw Error(ErrorCode::ParseError, "empty permutation");
    return Permutation(std::move(order));
}

bool Permutation::is_valid_for(std::size_t n) const {
    if (order_.size() != n) return false;
    std::vector<bool> seen(n + 1, false);
    for (std::size_t id : order_) {
        if (id < 1 || id > n || seen[id]) return false;
        seen[id] = true;
    }
    return true;
}

void Permutation::validate(const Instance &inst) const {
    if (!is_valid_for(inst.size())) {
        throw Error(ErrorCode::InvalidPermutation,
                    "(" + str() + ") is not a permutation of 1.." + std::to_string(inst.size()));
    }
}

std::string Permutation::str() const {
    std::string out;
    for (std::size_t i = 0; i < order_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(order_[i]);
    }
    return out;
}

std::vector<Rational> cumulative_consumption(const Instance &inst, const Permutation &perm) {
    perm.validate(inst);
    const std::size_t n = perm.size();
    std::vector<Rational> sums(n);
    Rational running;
    for (std::size_t k = n; k-- > 0;) {
        running += inst.at(perm.order()[k]).c;
        sums[k] = running;
    }
    return sums;
}

Evaluation evaluate(const Instance &inst, const Permutation &perm) {
    Evaluation out;
    out.suffix_sums = cumulative_consumption(inst, perm);
    out.legs.reserve(perm.size());
    for (std::size_t k = 0; k < perm.size(); ++k) {
        out.legs.push_back(inst.at(perm.order()[k]).v / out.suffix_sums[k]);
        out.total += out.legs.back();
    }
    return out;
}

Rational nvep_distance(const Instance &inst, const Permutation &perm) {
    if (inst.kind() != Kind::NVEP) throw Error(ErrorCode::WrongKind, "nvep_distance needs an NVEP instance");
    perm.validate(inst);
    // D = sum_j a[pi(j)] / sum_{k >= j} b[pi(k)], accumulated front to back.
    const auto &order = perm.order();
    Rational distance;
    for (std::size_t j = 0; j < order.size(); ++j) {
        Rational burn;
        for (std::size_t k = j; k < order.size(); ++k) burn += inst.at(order[k]).c;
        distance += inst.at(order[j]).v / burn;
    }
    return distance;
}

Instance reduce_nvep_to_arp(const Instance &inst) {
    if (inst.kind() != Kind::NVEP) throw Error(ErrorCode::WrongKind, "reduction input must be an NVEP instance");
    std::vector<FuelRate> values;
    values.reserve(inst.size());
    for (const auto &vehicle : inst.items()) values.emplace_back(vehicle.v, vehicle.c);
    return make_instance(Kind::ARP, std::move(values), inst.label());
}

bool verify_certificate(const Instance &inst, const Permutation &perm, const Rational &threshold) {
    if (!perm.is_valid_for(inst.size())) return false;
    return evaluate(inst, perm).total >= threshold;
}

} // namespace arp
