// include/bperm/record.hpp - "key=value;key=value" text records.

#pragma once

#include <bperm/error.hpp>

#include <map>
#include <string>
#include <string_view>

namespace bperm {

using Record = std::map<std::string, std::string, std::less<>>;

/// Splits on ';' then on the first '='. Whitespace around keys is ignored.
/// Throws Error{parse_error} on a field without '=' or a repeated key.
inline Record parse_record(std::string_view text) {
    Record out;
    const auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
            s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
            s.remove_suffix(1);
        return s;
    };
    std::size_t pos = 0;
    while (true) {
        const std::size_t semi = text.find(';', pos);
        const std::string_view field = trim(text.substr(pos, semi == text.npos ? text.npos : semi - pos));
        if (!field.empty()) {
            const std::size_t eq = field.find('=');
            if (eq == field.npos)
                throw Error(Errc::parse_error, "field '" + std::string(field) + "' lacks '='");
            std::string key(trim(field.substr(0, eq)));
            if (!out.emplace(key, std::string(field.substr(eq + 1))).second)
                throw Error(Errc::parse_error, "field '" + key + "' given twice");
        }
        if (semi == text.npos)
            break;
        pos = semi + 1;
    }
    return out;
}

/// Value of `key`, or Error{parse_error} naming the missing field.
inline const std::string &record_field(const Record &r, std::string_view key) {
    const auto it = r.find(key);
    if (it == r.end())
        throw Error(Errc::parse_error, "missing field '" + std::string(key) + "'");
    return it->second;
}

} // namespace bperm
