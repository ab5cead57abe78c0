#include "circind/format.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace circind {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view token) {
    token = trim(token);
    if (token.empty()) throw ValidationError("empty value in connection set");
    int value = 0;
    for (char ch : token) {
        if (ch < '0' || ch > '9')
            throw ValidationError("invalid connection-set token '" + std::string(token) + "'");
        value = value * 10 + (ch - '0');
        if (value > 1'000'000)
            throw ValidationError("connection-set value out of range: " + std::string(token));
    }
    return value;
}

// "a" or "a-b" into the inclusive list a..b.
void expand_segment(std::string_view segment, std::vector<int>& out) {
    segment = trim(segment);
    auto dash = segment.find('-');
    if (dash == std::string_view::npos) {
        out.push_back(parse_int(segment));
        return;
    }
    int lo = parse_int(segment.substr(0, dash));
    int hi = parse_int(segment.substr(dash + 1));
    if (lo > hi)
        throw ValidationError("descending range '" + std::string(segment) +
                              "' in connection set");
    for (int v = lo; v <= hi; ++v) out.push_back(v);
}

std::vector<int> expand_list(std::string_view text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        expand_segment(text.substr(pos, comma - pos), out);
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    return out;
}

}  // namespace

std::vector<int> parse_connection_set(std::string_view text) {
    text = trim(text);
    if (text.empty()) return {};
    auto caret = text.find('^');
    if (caret != std::string_view::npos && text.find('^', caret + 1) != std::string_view::npos)
        throw ValidationError("connection set may contain at most one '^' exclusion suffix");

    std::vector<int> values = expand_list(text.substr(0, caret));
    if (caret != std::string_view::npos) {
        std::vector<int> excluded = expand_list(text.substr(caret + 1));
        std::erase_if(values, [&](int v) {
            return std::find(excluded.begin(), excluded.end(), v) != excluded.end();
        });
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

std::string render_set(const std::vector<int>& set) {
    std::ostringstream out;
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (i) out << ',';
        out << set[i];
    }
    return out.str();
}

std::string render_set_braced(const std::vector<int>& set) {
    return "{" + render_set(set) + "}";
}

std::string render_bracketed(const std::vector<std::int64_t>& values) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out << ", ";
        out << values[i];
    }
    out << ']';
    return out.str();
}

std::vector<std::vector<int>> load_reference_sets(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open reference list file: " + path);
    std::vector<std::vector<int>> sets;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::string_view body = trim(line);
        if (body.empty()) continue;
        sets.push_back(parse_connection_set(body));
    }
    return sets;
}

}  // namespace circind
