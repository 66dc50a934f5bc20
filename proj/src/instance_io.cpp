#include "arp/instance_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace arp {

using nlohmann::json;

namespace {

std::size_t line_of(std::string_view bytes, std::size_t offset) {
    offset = std::min(offset, bytes.size());
    return 1 + static_cast<std::size_t>(std::count(bytes.begin(), bytes.begin() + static_cast<long>(offset), '\n'));
}

Rational read_number(const json &node, const std::string &where) {
    if (node.is_string()) {
        try {
            return Rational::parse(node.get<std::string>());
        } catch (const std::exception &e) {
            throw Error(ErrorCode::ParseError, where + ": " + e.what());
        }
    }
    if (node.is_number_integer()) {
        return node.is_number_unsigned() ? Rational::parse(std::to_string(node.get<std::uint64_t>()))
                                         : Rational(node.get<long long>());
    }
    throw Error(ErrorCode::ParseError, where + ": expected a string such as \"5/2\" or \"2.5\"");
}

} // namespace

Instance parse_instance_file(std::string_view bytes) {
    json doc;
    try {
        doc = json::parse(bytes.begin(), bytes.end());
    } catch (const json::parse_error &e) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_of(bytes, e.byte == 0 ? 0 : e.byte - 1)) +
                                               ": malformed JSON (" + e.what() + ")");
    }
    if (!doc.is_object()) throw Error(ErrorCode::ParseError, "top level must be an object");

    if (!doc.contains("kind") || !doc["kind"].is_string()) {
        throw Error(ErrorCode::ParseError, "kind: missing or not a string");
    }
    const Kind kind = parse_kind(doc["kind"].get<std::string>());

    std::string label;
    if (doc.contains("label")) {
        if (!doc["label"].is_string()) throw Error(ErrorCode::ParseError, "label: must be a string");
        label = doc["label"].get<std::string>();
    }

    if (!doc.contains("items") || !doc["items"].is_array()) {
        throw Error(ErrorCode::ParseError, "items: missing or not an array");
    }
    std::vector<FuelRate> values;
    const json &items = doc["items"];
    for (std::size_t i = 0; i < items.size(); ++i) {
        const std::string where = "items[" + std::to_string(i) + "]";
        const json &item = items[i];
        if (!item.is_object() || !item.contains("v") || !item.contains("c")) {
            throw Error(ErrorCode::ParseError, where + ": expected an object with fields v and c");
        }
        values.emplace_back(read_number(item["v"], where + ".v"), read_number(item["c"], where + ".c"));
    }
    return make_instance(kind, std::move(values), std::move(label));
}

std::string write_instance_file(const Instance &inst) {
    json items = json::array();
    for (const auto &a : inst.items()) items.push_back({{"v", a.v.str()}, {"c", a.c.str()}});
    const json doc = {{"kind", std::string(to_string(inst.kind()))}, {"label", inst.label()}, {"items", items}};
    return doc.dump(2) + "\n";
}

Instance load_instance(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, path + ": cannot open");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_instance_file(buffer.str());
    } catch (const Error &e) {
        throw Error(e.code(), path + ": " + e.detail());
    }
}

void save_instance(const Instance &inst, const std::string &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::ParseError, path + ": cannot open for writing");
    out << write_instance_file(inst);
}

} // namespace arp
