// SPDX-License-Identifier: Apache-2.0
#include "acctab/lint.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace acctab {

namespace {

constexpr std::string_view kSourceA0 = "table structure well-formedness";
constexpr std::string_view kSourceA1 = "Opquast 223; Accessiweb 5.4, 5.5";
constexpr std::string_view kSourceA2 = "Opquast 222; Accessiweb 5.7; WCAG 2.0 H63, H43";
constexpr std::string_view kSourceA3 = "HTML5 obsolete attributes";
constexpr std::string_view kSourceA4 = "nested-table guidance";
constexpr std::string_view kSourceA5 = "id/headers integrity; WCAG 2.0 H43";
constexpr std::string_view kSourceA6 =
    "layout-table tolerance; WCAG 2.0, RGAA, Accessiweb 5.3, 5.8";
constexpr std::string_view kSourceA7 = "abbr guidance for long headers";
constexpr std::string_view kSourceA8 = "scope value set (col, row, colgroup, rowgroup)";
constexpr std::string_view kSourceA9 = "empty header announcement";

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

std::string to_lower(std::string_view s) {
    std::string out{s};
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
        return static_cast<char>(std::tolower(c));
    });
    return out;
}

std::size_t codepoint_length(std::string_view s) {
    std::size_t n = 0;
    for (unsigned char c : s) {
        if ((c & 0xC0) != 0x80) {
            ++n;
        }
    }
    return n;
}

int span_attribute(const HtmlNode& node, std::string_view name) {
    const std::string* value = node.attribute(name);
    if (!value) {
        return 1;
    }
    char* end = nullptr;
    long v = std::strtol(value->c_str(), &end, 10);
    if (end == value->c_str() || v < 1) {
        return 1;
    }
    return static_cast<int>(std::min(v, 512L));
}

std::vector<std::string> split_ids(std::string_view value) {
    std::vector<std::string> ids;
    std::size_t i = 0;
    while (i < value.size()) {
        while (i < value.size() && std::isspace(static_cast<unsigned char>(value[i]))) {
            ++i;
        }
        std::size_t start = i;
        while (i < value.size() && !std::isspace(static_cast<unsigned char>(value[i]))) {
            ++i;
        }
        if (i > start) {
            ids.emplace_back(value.substr(start, i - start));
        }
    }
    return ids;
}

// One cell of the reconstructed grid.
struct GridCell {
    const HtmlNode* node = nullptr;
    std::string path;
    int serial = 0;
    int row = 0;  // first covered grid row / column
    int col = 0;
    int colspan = 1;
    int rowspan = 1;
    bool is_th = false;
};

struct TableInfo {
    const HtmlNode* node = nullptr;
    std::string path;
    int serial = 0;
    int ordinal = 0;
    bool nested = false;
    std::vector<GridCell> cells;       // document order
    std::vector<const HtmlNode*> all;  // every element in scope, document order
    std::map<const HtmlNode*, std::string> paths;
    std::map<const HtmlNode*, int> serials;
};

struct Walker {
    std::vector<TableInfo> tables;
    int next_serial = 0;
    int next_table_ordinal = 0;

    void walk(const std::vector<HtmlNode>& nodes, const std::string& parent_path,
              int table_index /* index into tables of enclosing table, -1 outside */) {
        // Sibling indices per tag, to build stable paths.
        std::map<std::string, int> tag_counts;
        for (const HtmlNode& node : nodes) {
            if (node.is_text()) {
                continue;
            }
            tag_counts[node.tag] += 1;
        }
        std::map<std::string, int> tag_seen;
        for (const HtmlNode& node : nodes) {
            if (node.is_text()) {
                continue;
            }
            const int serial = next_serial++;
            int index = tag_seen[node.tag]++;
            std::string path;
            if (node.tag == "table") {
                path = "table[" + std::to_string(next_table_ordinal) + "]";
            } else {
                path = parent_path.empty() ? node.tag : parent_path + "/" + node.tag;
                if (tag_counts[node.tag] > 1) {
                    path += "[" + std::to_string(index) + "]";
                }
            }
            int enclosing = table_index;
            if (node.tag == "table") {
                TableInfo info;
                info.node = &node;
                info.path = path;
                info.serial = serial;
                info.ordinal = next_table_ordinal++;
                info.nested = table_index >= 0;
                tables.push_back(std::move(info));
                enclosing = static_cast<int>(tables.size()) - 1;
            }
            if (enclosing >= 0 && (node.tag != "table" || enclosing != table_index)) {
                // Record in the nearest table's scope, but not in outer tables.
                TableInfo& t = tables[static_cast<std::size_t>(enclosing)];
                t.all.push_back(&node);
                t.paths[&node] = path;
                t.serials[&node] = serial;
            }
            walk(node.children, path, enclosing);
        }
    }
};

// Expands tr/td/th of one table node (nested tables excluded) into grid cells.
void build_grid(TableInfo& table) {
    std::vector<const HtmlNode*> rows;
    for (const HtmlNode& child : table.node->children) {
        if (child.is_element("tr")) {
            rows.push_back(&child);
        } else if (child.is_element("thead") || child.is_element("tbody") ||
                   child.is_element("tfoot")) {
            for (const HtmlNode& row : child.children) {
                if (row.is_element("tr")) {
                    rows.push_back(&row);
                }
            }
        }
    }
    // occupied[r] marks columns taken by rowspans hanging over row r.
    std::vector<std::map<int, bool>> occupied(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        int col = 0;
        for (const HtmlNode& cell : rows[r]->children) {
            if (!cell.is_element("td") && !cell.is_element("th")) {
                continue;
            }
            while (occupied[r].count(col)) {
                ++col;
            }
            GridCell g;
            g.node = &cell;
            g.path = table.paths.count(&cell) ? table.paths[&cell] : table.path;
            g.serial = table.serials.count(&cell) ? table.serials[&cell] : table.serial;
            g.row = static_cast<int>(r);
            g.col = col;
            g.colspan = span_attribute(cell, "colspan");
            g.rowspan = span_attribute(cell, "rowspan");
            g.is_th = cell.is_element("th");
            for (int rr = static_cast<int>(r);
                 rr < static_cast<int>(r) + g.rowspan &&
                 rr < static_cast<int>(rows.size());
                 ++rr) {
                for (int cc = col; cc < col + g.colspan; ++cc) {
                    occupied[static_cast<std::size_t>(rr)][cc] = true;
                }
            }
            col += g.colspan;
            table.cells.push_back(std::move(g));
        }
    }
}

class Rules {
public:
    Rules(const TableInfo& table, const LintOptions& options,
          std::vector<std::pair<int, LintFinding>>& out)
        : table_(table), options_(options), out_(out) {}

    void apply() {
        caption_rules();
        summary_rule();
        nesting_rule();
        layout_rule();
        for (const GridCell& cell : table_.cells) {
            if (cell.is_th) {
                th_rules(cell);
            } else {
                coverage_rule(cell);
            }
            headers_integrity_rule(cell);
        }
        scope_placement_rule();
    }

private:
    bool has_th() const {
        return std::any_of(table_.cells.begin(), table_.cells.end(),
                           [](const GridCell& c) { return c.is_th; });
    }

    const HtmlNode* caption() const {
        for (const HtmlNode& child : table_.node->children) {
            if (child.is_element("caption")) {
                return &child;
            }
        }
        return nullptr;
    }

    void add(const std::string& rule, Severity severity, int serial,
             const std::string& location, const std::string& message,
             std::string_view source) {
        out_.emplace_back(serial, LintFinding{rule, severity, location, message,
                                              std::string{source}});
    }

    void caption_rules() {
        const HtmlNode* cap = caption();
        if (!cap) {
            add("A1", Severity::Error, table_.serial, table_.path,
                "table has no caption", kSourceA1);
        } else if (trim(cap->all_text()).empty()) {
            add("A1", Severity::Error, table_.serial, table_.path,
                "table caption is empty", kSourceA1);
        }
    }

    void summary_rule() {
        if (table_.node->attribute("summary")) {
            add("A3", Severity::Warning, table_.serial, table_.path,
                "summary attribute is obsolete in HTML5; use caption or "
                "figure/figcaption",
                kSourceA3);
        }
    }

    void nesting_rule() {
        if (table_.nested) {
            add("A4", Severity::Warning, table_.serial, table_.path,
                "table nested inside a table degrades screen-reader reading",
                kSourceA4);
        }
    }

    void layout_rule() {
        if (has_th()) {
            return;
        }
        bool machinery = caption() != nullptr || table_.node->attribute("summary");
        for (const HtmlNode& child : table_.node->children) {
            if (child.is_element("thead") || child.is_element("tfoot")) {
                machinery = true;
            }
        }
        for (const HtmlNode* node : table_.all) {
            if (node->attribute("headers") || node->attribute("scope")) {
                machinery = true;
            }
        }
        if (machinery) {
            add("A6", Severity::Warning, table_.serial, table_.path,
                "table has no th yet uses data-table markup; real data tables "
                "need headers, layout tables need none of this",
                kSourceA6);
        }
    }

    void coverage_rule(const GridCell& cell) {
        if (!has_th()) {
            return;  // nothing to bind to; A6 covers the suspicious cases
        }
        if (cell.node->attribute("headers")) {
            return;
        }
        for (const GridCell& other : table_.cells) {
            if (!other.is_th || !other.node->attribute("scope")) {
                continue;
            }
            const std::string scope = to_lower(*other.node->attribute("scope"));
            const bool columns_meet = other.col < cell.col + cell.colspan &&
                                      cell.col < other.col + other.colspan;
            const bool rows_meet = other.row < cell.row + cell.rowspan &&
                                   cell.row < other.row + other.rowspan;
            if ((scope == "col" || scope == "colgroup") && columns_meet &&
                other.row < cell.row) {
                return;
            }
            if (scope == "row" && rows_meet && other.col < cell.col) {
                return;
            }
        }
        add("A2", Severity::Error, cell.serial, cell.path,
            "data cell has no headers attribute and no th scope applies to it",
            kSourceA2);
    }

    void headers_integrity_rule(const GridCell& cell) {
        const std::string* headers = cell.node->attribute("headers");
        if (!headers) {
            return;
        }
        std::set<std::string> th_ids;
        for (const GridCell& other : table_.cells) {
            if (other.is_th) {
                if (const std::string* id = other.node->attribute("id")) {
                    th_ids.insert(*id);
                }
            }
        }
        for (const std::string& id : split_ids(*headers)) {
            if (!th_ids.count(id)) {
                add("A5", Severity::Error, cell.serial, cell.path,
                    "headers references id \"" + id + "\" but no th in this table "
                    "has it",
                    kSourceA5);
            }
        }
    }

    void th_rules(const GridCell& cell) {
        const std::string text = std::string{trim(cell.node->all_text())};
        const std::string* abbr = cell.node->attribute("abbr");
        const bool has_abbr = abbr && !trim(*abbr).empty();
        if (codepoint_length(text) > static_cast<std::size_t>(options_.long_header_threshold) &&
            !has_abbr) {
            add("A7", Severity::Info, cell.serial, cell.path,
                "header text longer than " +
                    std::to_string(options_.long_header_threshold) +
                    " characters; an abbr attribute would shorten each cell "
                    "announcement",
                kSourceA7);
        }
        if (text.empty() && !has_abbr) {
            add("A9", Severity::Info, cell.serial, cell.path,
                "th has no announceable label", kSourceA9);
        }
    }

    void scope_placement_rule() {
        for (const HtmlNode* node : table_.all) {
            const std::string* scope = node->attribute("scope");
            if (!scope) {
                continue;
            }
            const int serial = table_.serials.at(node);
            const std::string& path = table_.paths.at(node);
            if (node->tag != "th") {
                add("A8", Severity::Warning, serial, path,
                    "scope attribute on <" + node->tag + ">; it belongs on th",
                    kSourceA8);
                continue;
            }
            const std::string value = to_lower(trim(*scope));
            if (value != "col" && value != "row" && value != "colgroup" &&
                value != "rowgroup") {
                add("A8", Severity::Warning, serial, path,
                    "scope value \"" + *scope +
                        "\" is not one of col, row, colgroup, rowgroup",
                    kSourceA8);
            }
        }
    }

    const TableInfo& table_;
    const LintOptions& options_;
    std::vector<std::pair<int, LintFinding>>& out_;
};

}  // namespace

std::string_view severity_name(Severity severity) {
    switch (severity) {
        case Severity::Error: return "error";
        case Severity::Warning: return "warning";
        case Severity::Info: return "info";
    }
    return "error";
}

bool LintReport::has_errors() const {
    return std::any_of(findings.begin(), findings.end(), [](const LintFinding& f) {
        return f.severity == Severity::Error;
    });
}

std::size_t LintReport::count(std::string_view rule) const {
    return static_cast<std::size_t>(
        std::count_if(findings.begin(), findings.end(),
                      [&](const LintFinding& f) { return f.rule == rule; }));
}

LintReport lint(const HtmlDocument& document, const LintOptions& options) {
    Walker walker;
    walker.walk(document.nodes, "", -1);

    std::vector<std::pair<int, LintFinding>> keyed;
    for (TableInfo& table : walker.tables) {
        build_grid(table);
        for (const StructureIssue& issue : document.issues) {
            if (issue.table_ordinal == table.ordinal) {
                keyed.emplace_back(
                    table.serial,
                    LintFinding{"A0", Severity::Error, table.path,
                                "malformed table structure: " + issue.message,
                                std::string{kSourceA0}});
            }
        }
        Rules rules(table, options, keyed);
        rules.apply();
    }
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) {
                         if (a.first != b.first) return a.first < b.first;
                         return a.second.rule < b.second.rule;
                     });
    LintReport report;
    report.findings.reserve(keyed.size());
    for (auto& [serial, finding] : keyed) {
        report.findings.push_back(std::move(finding));
    }
    return report;
}

std::string to_text(const LintReport& report) {
    std::string out;
    for (const LintFinding& f : report.findings) {
        out += severity_name(f.severity);
        out += ' ';
        out += f.rule;
        out += ' ';
        out += f.location;
        out += ' ';
        out += f.message;
        out += '\n';
    }
    return out;
}

std::string to_json(const LintReport& report) {
    nlohmann::json array = nlohmann::json::array();
    for (const LintFinding& f : report.findings) {
        array.push_back({{"severity", std::string{severity_name(f.severity)}},
                         {"rule", f.rule},
                         {"location", f.location},
                         {"message", f.message},
                         {"source_criterion", f.source_criterion}});
    }
    return array.dump(2) + "\n";
}

}  // namespace acctab
