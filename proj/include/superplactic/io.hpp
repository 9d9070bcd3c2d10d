#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "alphabet.hpp"
#include "error.hpp"
#include "rsk.hpp"
#include "shape.hpp"
#include "tableau.hpp"

namespace superplactic::io {

using json = nlohmann::json;

inline json parse_json(std::string_view text, std::string_view origin)
{
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        fail(Errc::malformed_input, std::string(origin) + ": " + e.what());
    }
}

inline json load_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        fail(Errc::malformed_input, "cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str(), path);
}

template <typename F>
auto guarded(std::string_view what, F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const json::exception& e) {
        fail(Errc::malformed_input, std::string(what) + ": " + e.what());
    }
}

/// {"letters": ["1","2","3"], "parity": [0,0,1]}
inline Alphabet alphabet_from_json(const json& j)
{
    return guarded("alphabet", [&] {
        return Alphabet::make(j.at("letters").get<std::vector<std::string>>(), j.at("parity").get<std::vector<int>>());
    });
}

inline json to_json(const Alphabet& a)
{
    std::vector<int> parity;
    for (Parity p : a.parities())
        parity.push_back(static_cast<int>(p));
    return {{"letters", a.symbols()}, {"parity", parity}};
}

inline Partition partition_from_json(const json& j)
{
    return guarded("partition", [&] { return Partition(j.get<std::vector<std::size_t>>()); });
}

inline json to_json(const Partition& p) { return json(p.parts()); }

inline json rows_to_json(const Alphabet& a, const Rows& rows)
{
    json out = json::array();
    for (const auto& row : rows) {
        json r = json::array();
        for (Letter x : row)
            r.push_back(a.symbol(x));
        out.push_back(std::move(r));
    }
    return out;
}

/// {"shape": [...], "rows": [[...], ...]}
inline json to_json(const Tableau& t)
{
    return {{"shape", to_json(t.shape())}, {"rows", rows_to_json(t.alphabet(), t.rows())}};
}

inline json to_json(const SkewTableau& t)
{
    return {{"outer", to_json(t.diagram().outer())},
            {"inner", to_json(t.diagram().inner())},
            {"rows", rows_to_json(t.alphabet(), t.rows())}};
}

inline Tableau tableau_from_json(const json& j, const Alphabet& a)
{
    auto rows = guarded("tableau", [&] { return j.at("rows").get<std::vector<std::vector<std::string>>>(); });
    Tableau t = validate(rows, a);
    if (j.contains("shape") && !(partition_from_json(j.at("shape")) == t.shape()))
        fail(Errc::shape_mismatch, "tableau: 'shape' does not match the row lengths");
    return t;
}

/// {"top": [...], "bottom": [...]}
inline json to_json(const TwoRowedArray& s)
{
    json top = json::array();
    json bottom = json::array();
    for (auto c : s.columns()) {
        top.push_back(s.top_alphabet().symbol(c.top));
        bottom.push_back(s.bottom_alphabet().symbol(c.bottom));
    }
    return {{"top", top}, {"bottom", bottom}};
}

inline TwoRowedArray array_from_json(const json& j, const Alphabet& l, const Alphabet& p)
{
    auto [top, bottom] = guarded("array", [&] {
        return std::pair{j.at("top").get<std::vector<std::string>>(), j.at("bottom").get<std::vector<std::string>>()};
    });
    return validate_array(top, bottom, l, p);
}

inline std::vector<std::string> split_list(std::string_view text)
{
    std::vector<std::string> out;
    auto trim = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ')
            s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ')
            s.remove_suffix(1);
        return std::string(s);
    };
    if (trim(text).empty())
        return out;
    std::size_t start = 0;
    while (true) {
        auto pos = text.find(',', start);
        out.push_back(trim(text.substr(start, pos - start)));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return out;
}

/// "3,2,2,1" -> word; the empty string is the empty word.
inline Word parse_word(std::string_view text, const Alphabet& a)
{
    return Word::from_symbols(a, split_list(text));
}

inline std::string format_word(const Word& w)
{
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0)
            out += ',';
        out += w.alphabet().symbol(w[i]);
    }
    return out;
}

inline Partition parse_partition(std::string_view text)
{
    std::vector<std::size_t> parts;
    for (const auto& s : split_list(text)) {
        try {
            std::size_t used = 0;
            long v = std::stol(s, &used);
            if (used != s.size() || v < 0)
                throw std::invalid_argument(s);
            parts.push_back(static_cast<std::size_t>(v));
        } catch (const std::logic_error&) {
            fail(Errc::invalid_partition, "partition: '" + s + "' is not a non-negative integer");
        }
    }
    return Partition(std::move(parts));
}

inline std::string format_partition(const Partition& p)
{
    std::string out = "(";
    for (std::size_t i = 0; i < p.height(); ++i) {
        if (i > 0)
            out += ',';
        out += std::to_string(p.parts()[i]);
    }
    return out + ")";
}

inline std::string to_text(const TwoRowedArray& s)
{
    std::size_t width = 1;
    for (auto c : s.columns())
        width = std::max({width, s.top_alphabet().symbol(c.top).size(), s.bottom_alphabet().symbol(c.bottom).size()});
    std::string top;
    std::string bottom;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const auto& a = s.top_alphabet().symbol(s.columns()[i].top);
        const auto& b = s.bottom_alphabet().symbol(s.columns()[i].bottom);
        if (i > 0) {
            top += ' ';
            bottom += ' ';
        }
        top += std::string(width - a.size(), ' ') + a;
        bottom += std::string(width - b.size(), ' ') + b;
    }
    return top + '\n' + bottom + '\n';
}

} // namespace superplactic::io
