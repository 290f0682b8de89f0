// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include "acctab/header_analysis.hpp"
#include "acctab/html_reader.hpp"
#include "acctab/table_model.hpp"

// Independent reference implementations used to check the real ones. They
// deliberately share no code with the library: the context oracle walks the
// raw grids directly, the slug oracle is a byte-sequence lookup table.

namespace acctab::test {

inline std::string_view oracle_trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

// Header context of body cell (row, column) by direct grid scan: walk header
// rows top to bottom, keep the label of the cell whose span covers the
// column; then the row's first cell unless the queried column is inside it.
inline std::vector<std::string> brute_force_context(const TableDocument& doc, int row,
                                                    int column) {
    std::vector<std::string> labels;
    for (const Row& header : doc.header_rows) {
        for (const CellGroup& cell : header.cells) {
            if (column >= cell.origin_col && column < cell.origin_col + cell.colspan) {
                if (!oracle_trim(cell.content).empty()) {
                    labels.push_back(cell.content);
                }
                break;
            }
        }
    }
    if (doc.row_header_mode) {
        const Row& body = doc.body_rows[static_cast<std::size_t>(row)];
        const CellGroup& first = body.cells.front();
        if (column >= first.origin_col + first.colspan) {
            labels.push_back(first.content);
        }
    }
    return labels;
}

inline std::vector<std::string> labels_of(const std::vector<HeaderRef>& refs) {
    std::vector<std::string> labels;
    for (const HeaderRef& ref : refs) {
        labels.push_back(ref.label);
    }
    return labels;
}

// Slug oracle: byte-sequence lookup, no codepoint arithmetic. Covers ASCII
// plus the accented characters the test corpus uses.
inline std::string reference_slug(const std::string& label) {
    static const std::map<std::string, std::string> kFold = {
        {"à", "a"}, {"â", "a"}, {"ä", "a"}, {"À", "a"},
        {"Â", "a"}, {"Ä", "a"}, {"ç", "c"}, {"Ç", "c"},
        {"é", "e"}, {"è", "e"}, {"ê", "e"}, {"ë", "e"},
        {"É", "e"}, {"È", "e"}, {"Ê", "e"}, {"Ë", "e"},
        {"î", "i"}, {"ï", "i"}, {"Î", "i"}, {"Ï", "i"},
        {"ô", "o"}, {"ö", "o"}, {"Ô", "o"}, {"Ö", "o"},
        {"ù", "u"}, {"û", "u"}, {"ü", "u"}, {"Ù", "u"},
        {"Û", "u"}, {"Ü", "u"}, {"ÿ", "y"}, {"œ", "oe"},
        {"Œ", "oe"}, {"æ", "ae"}, {"Æ", "ae"}, {"ß", "ss"},
        {"ñ", "n"}, {"Ñ", "n"}, {"č", "c"}, {"š", "s"},
        {"ž", "z"}, {"ę", "e"}, {"ł", "l"}, {"å", "a"},
        {"ø", "o"},
    };
    std::string out;
    bool gap = false;
    std::size_t i = 0;
    while (i < label.size()) {
        bool matched = false;
        for (std::size_t len = 4; len >= 2 && !matched; --len) {
            if (i + len <= label.size()) {
                auto it = kFold.find(label.substr(i, len));
                if (it != kFold.end()) {
                    if (gap && !out.empty()) out += '-';
                    gap = false;
                    out += it->second;
                    i += len;
                    matched = true;
                }
            }
        }
        if (matched) {
            continue;
        }
        const unsigned char c = static_cast<unsigned char>(label[i]);
        if (c < 0x80) {
            if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')) {
                if (gap && !out.empty()) out += '-';
                gap = false;
                out += static_cast<char>(c);
            } else if (c >= 'A' && c <= 'Z') {
                if (gap && !out.empty()) out += '-';
                gap = false;
                out += static_cast<char>(c - 'A' + 'a');
            } else {
                gap = true;
            }
            ++i;
        } else {
            // Unknown multi-byte sequence: skip it whole, it breaks the run.
            gap = true;
            ++i;
            while (i < label.size() &&
                   (static_cast<unsigned char>(label[i]) & 0xC0) == 0x80) {
                ++i;
            }
        }
    }
    return out;
}

// (content, context labels) pairs for every td carrying cell data in the
// generated HTML, in document order. Contexts are recovered through the
// headers attribute; ids map to th text within the same table.
struct RecoveredCell {
    std::string content;
    std::vector<std::string> labels;

    bool operator==(const RecoveredCell&) const = default;
};

inline void collect_th_text(const HtmlNode& node,
                            std::map<std::string, std::string>& out) {
    if (node.is_element("th")) {
        if (const std::string* id = node.attribute("id")) {
            out[*id] = node.all_text();
        }
    }
    for (const HtmlNode& child : node.children) {
        if (!child.is_text()) {
            collect_th_text(child, out);
        }
    }
}

inline void collect_tds(const HtmlNode& node, const std::map<std::string, std::string>& ids,
                        std::vector<RecoveredCell>& out) {
    if (node.is_element("td")) {
        RecoveredCell cell;
        cell.content = node.all_text();
        if (const std::string* headers = node.attribute("headers")) {
            std::size_t i = 0;
            while (i < headers->size()) {
                while (i < headers->size() && (*headers)[i] == ' ') ++i;
                std::size_t start = i;
                while (i < headers->size() && (*headers)[i] != ' ') ++i;
                if (i > start) {
                    cell.labels.push_back(ids.at(headers->substr(start, i - start)));
                }
            }
        }
        out.push_back(std::move(cell));
    }
    for (const HtmlNode& child : node.children) {
        if (!child.is_text()) {
            collect_tds(child, ids, out);
        }
    }
}

inline std::vector<RecoveredCell> recover_cells(const std::string& html) {
    const HtmlDocument doc = read_html(html);
    std::vector<RecoveredCell> out;
    for (const HtmlNode& node : doc.nodes) {
        if (node.is_text()) {
            continue;
        }
        std::map<std::string, std::string> ids;
        collect_th_text(node, ids);
        collect_tds(node, ids, out);
    }
    return out;
}

}  // namespace acctab::test
