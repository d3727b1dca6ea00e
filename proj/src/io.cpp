#include "mbmod/io.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "mbmod/error.hpp"

namespace mbmod {

using nlohmann::json; // std::map-backed: object keys serialize sorted

std::string serialize_instance(const ActionTable& t) {
    json j;
    j["format_version"] = instance_format_version;
    if (t.field().kind == FieldSpec::Kind::prime)
        j["field"] = json{{"gf", t.field().modulus}};
    else
        j["field"] = "rational";
    j["v_size"] = t.v_size();
    j["w_size"] = t.w_size();
    if (t.v_labels()) j["v_labels"] = *t.v_labels();
    if (t.w_labels()) j["w_labels"] = *t.w_labels();
    json entries = json::array();
    for (const Entry& e : t.entries())
        entries.push_back(json{{"c", e.c.str()}, {"i", e.i}, {"j", e.j}, {"k", e.k}});
    j["entries"] = std::move(entries);
    return j.dump(2) + "\n";
}

namespace {

std::uint64_t require_count(const json& j, const char* key, std::uint64_t max) {
    if (!j.is_number_unsigned())
        fail(errc::parse_error, std::string(key) + " must be a non-negative integer");
    std::uint64_t v = j.get<std::uint64_t>();
    if (v > max)
        fail(errc::index_out_of_range, std::string(key) + " exceeds the 32-bit limit");
    return v;
}

std::optional<std::vector<std::string>> optional_labels(const json& root, const char* key) {
    if (!root.contains(key)) return std::nullopt;
    const json& j = root.at(key);
    if (!j.is_array()) fail(errc::parse_error, std::string(key) + " must be an array of strings");
    std::vector<std::string> out;
    out.reserve(j.size());
    for (const json& s : j) {
        if (!s.is_string()) fail(errc::parse_error, std::string(key) + " must hold only strings");
        out.push_back(s.get<std::string>());
    }
    return out;
}

} // namespace

ActionTable parse_instance(std::string_view text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& ex) {
        fail(errc::parse_error, ex.what()); // message carries line/column
    }
    if (!root.is_object()) fail(errc::parse_error, "instance file must be a JSON object");
    for (const auto& item : root.items()) {
        const std::string& k = item.key();
        if (k != "entries" && k != "field" && k != "format_version" && k != "v_labels" &&
            k != "v_size" && k != "w_labels" && k != "w_size")
            fail(errc::parse_error, "unknown key \"" + k + "\"");
    }
    for (const char* k : {"format_version", "field", "v_size", "w_size", "entries"})
        if (!root.contains(k)) fail(errc::parse_error, std::string("missing key \"") + k + "\"");

    if (!root["format_version"].is_number_unsigned() ||
        root["format_version"].get<std::uint64_t>() != instance_format_version)
        fail(errc::parse_error, "unsupported format_version");

    FieldSpec fs;
    const json& f = root["field"];
    if (f.is_string() && f.get<std::string>() == "rational") {
        fs = FieldSpec::rationals();
    } else if (f.is_object() && f.size() == 1 && f.contains("gf") &&
               f["gf"].is_number_unsigned()) {
        fs = FieldSpec::gf(f["gf"].get<std::uint64_t>()); // NonPrimeModulus on bad p
    } else {
        fail(errc::parse_error, "field must be \"rational\" or {\"gf\": prime}");
    }

    constexpr std::uint64_t idx_max = std::numeric_limits<Index>::max();
    std::uint64_t v_size = require_count(root["v_size"], "v_size", idx_max);
    std::uint64_t w_size = require_count(root["w_size"], "w_size", idx_max);

    if (!root["entries"].is_array()) fail(errc::parse_error, "entries must be an array");
    std::vector<Entry> entries;
    entries.reserve(root["entries"].size());
    for (const json& e : root["entries"]) {
        if (!e.is_object()) fail(errc::parse_error, "each entry must be an object");
        for (const auto& item : e.items())
            if (item.key() != "c" && item.key() != "i" && item.key() != "j" && item.key() != "k")
                fail(errc::parse_error, "unknown entry key \"" + item.key() + "\"");
        for (const char* k : {"c", "i", "j", "k"})
            if (!e.contains(k))
                fail(errc::parse_error, std::string("entry missing key \"") + k + "\"");
        if (!e["c"].is_string()) fail(errc::parse_error, "entry key c must be a string");
        Entry out;
        out.i = static_cast<Index>(require_count(e["i"], "i", idx_max));
        out.j = static_cast<Index>(require_count(e["j"], "j", idx_max));
        out.k = static_cast<Index>(require_count(e["k"], "k", idx_max));
        out.c = Scalar::parse(e["c"].get<std::string>(), fs);
        entries.push_back(std::move(out));
    }

    return build_table(std::move(entries), v_size, w_size, fs, optional_labels(root, "v_labels"),
                       optional_labels(root, "w_labels"));
}

ActionTable load_instance(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::io_error, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) fail(errc::io_error, "cannot read " + path);
    return parse_instance(buf.str());
}

void save_instance(const std::string& path, const ActionTable& t) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(errc::io_error, "cannot open " + path + " for writing");
    out << serialize_instance(t);
    out.flush();
    if (!out) fail(errc::io_error, "cannot write " + path);
}

namespace {

Index resolve_index(std::optional<Index> by_label, std::string_view token, std::size_t size,
                    const char* side) {
    if (by_label) return *by_label;
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec == std::errc() && p == token.data() + token.size() && v < size)
        return static_cast<Index>(v);
    fail(errc::index_out_of_range,
         std::string("no ") + side + "-basis label or in-range id \"" + std::string(token) + "\"");
}

} // namespace

Index resolve_v_index(const ActionTable& t, std::string_view token) {
    return resolve_index(t.v_id_of_label(token), token, t.v_size(), "V");
}

Index resolve_w_index(const ActionTable& t, std::string_view token) {
    return resolve_index(t.w_id_of_label(token), token, t.w_size(), "W");
}

} // namespace mbmod
