// SPDX-License-Identifier: Apache-2.0
#include "acctab/markup_parser.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace acctab {

namespace {

constexpr std::array<Separator, 3> kPrecedence = {Separator::Tab, Separator::Pipe,
                                                  Separator::Semicolon};

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

bool is_blank(std::string_view line) { return trim(line).empty(); }

bool is_directive(std::string_view line) {
    std::string_view t = trim(line);
    return !t.empty() && t.front() == '@';
}

bool is_boundary(std::string_view line) {
    std::string_view t = trim(line);
    if (t.size() < 3) {
        return false;
    }
    return t.find_first_not_of('-') == std::string_view::npos;
}

int field_count(std::string_view line, char sep) {
    return 1 + static_cast<int>(std::count(line.begin(), line.end(), sep));
}

std::vector<std::string_view> split_fields(std::string_view line, char sep) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return fields;
}

struct Directives {
    std::optional<std::string> caption;
    std::optional<std::string> details;
    std::optional<Separator> separator;
    std::optional<bool> rowheaders;
};

Directives read_directives(const std::vector<std::string>& lines) {
    Directives out;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (!is_directive(lines[i])) {
            continue;
        }
        const int line_no = static_cast<int>(i) + 1;
        std::string_view t = trim(lines[i]);
        t.remove_prefix(1);  // '@'
        std::size_t colon = t.find(':');
        if (colon == std::string_view::npos) {
            throw ParseError(ParseErrorCode::BadDirective, line_no,
                             "directive is missing ':'");
        }
        std::string key{trim(t.substr(0, colon))};
        std::string value{trim(t.substr(colon + 1))};
        if (key == "caption") {
            if (out.caption) {
                throw ParseError(ParseErrorCode::DuplicateDirective, line_no,
                                 "duplicate @caption directive");
            }
            out.caption = value;
        } else if (key == "details") {
            if (out.details) {
                throw ParseError(ParseErrorCode::DuplicateDirective, line_no,
                                 "duplicate @details directive");
            }
            out.details = value;
        } else if (key == "separator") {
            if (out.separator) {
                throw ParseError(ParseErrorCode::DuplicateDirective, line_no,
                                 "duplicate @separator directive");
            }
            auto sep = separator_from_name(value);
            if (!sep) {
                throw ParseError(ParseErrorCode::BadDirective, line_no,
                                 "unknown separator \"" + value +
                                     "\" (expected pipe, semicolon or tab)");
            }
            out.separator = *sep;
        } else if (key == "rowheaders") {
            if (out.rowheaders) {
                throw ParseError(ParseErrorCode::DuplicateDirective, line_no,
                                 "duplicate @rowheaders directive");
            }
            if (value == "on" || value == "true") {
                out.rowheaders = true;
            } else if (value == "off" || value == "false") {
                out.rowheaders = false;
            } else {
                throw ParseError(ParseErrorCode::BadDirective, line_no,
                                 "bad @rowheaders value \"" + value +
                                     "\" (expected on or off)");
            }
        } else {
            throw ParseError(ParseErrorCode::BadDirective, line_no,
                             "unknown directive @" + key);
        }
    }
    return out;
}

struct DataLine {
    std::string_view text;
    int line_no;     // 1-based physical line
    bool in_header;  // above the dash boundary
};

std::vector<DataLine> collect_data_lines(const std::vector<std::string>& lines,
                                         bool* saw_boundary) {
    std::vector<DataLine> data;
    bool boundary_seen = false;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string& line = lines[i];
        if (is_directive(line) || is_blank(line)) {
            continue;
        }
        if (!boundary_seen && is_boundary(line)) {
            // Everything already collected sits above the boundary.
            boundary_seen = true;
            for (DataLine& d : data) {
                d.in_header = true;
            }
            continue;
        }
        data.push_back({line, static_cast<int>(i) + 1, false});
    }
    *saw_boundary = boundary_seen;
    return data;
}

Separator detect_from_lines(const std::vector<DataLine>& data,
                            std::optional<Separator> declared) {
    if (declared) {
        return *declared;
    }
    if (data.empty()) {
        throw ParseError(ParseErrorCode::NoConsistentSeparator, 0,
                         "no data lines to detect a separator from");
    }
    std::vector<Separator> pool;
    for (Separator s : kPrecedence) {
        if (data.front().text.find(separator_char(s)) != std::string_view::npos) {
            pool.push_back(s);
        }
    }
    if (pool.empty()) {
        // No separator character on the defining line: single-column table,
        // any candidate splits every line into one field apiece.
        pool.assign(kPrecedence.begin(), kPrecedence.end());
    }
    for (Separator s : pool) {
        const char c = separator_char(s);
        const int first = field_count(data.front().text, c);
        bool uniform = true;
        for (const DataLine& d : data) {
            if (field_count(d.text, c) != first) {
                uniform = false;
                break;
            }
        }
        if (uniform) {
            return s;
        }
    }
    throw ParseError(ParseErrorCode::NoConsistentSeparator, 0,
                     "no separator yields a uniform field count across all lines");
}

Row parse_row(const DataLine& line, char sep) {
    Row row;
    row.kind = line.in_header ? RowKind::Header : RowKind::Body;
    for (std::string_view raw : split_fields(line.text, sep)) {
        std::string_view field = trim(raw);
        if (field == ">") {
            if (row.cells.empty()) {
                throw ParseError(ParseErrorCode::DanglingMerge, line.line_no,
                                 "\">\" has no field on its left to merge into");
            }
            row.cells.back().colspan += 1;
        } else {
            CellGroup cell;
            cell.content = std::string{field};
            row.cells.push_back(std::move(cell));
        }
    }
    return row;
}

int span_sum(const Row& row) {
    int sum = 0;
    for (const CellGroup& cell : row.cells) {
        sum += cell.colspan;
    }
    return sum;
}

}  // namespace

char separator_char(Separator separator) {
    switch (separator) {
        case Separator::Pipe: return '|';
        case Separator::Semicolon: return ';';
        case Separator::Tab: return '\t';
    }
    return '|';
}

std::string_view separator_name(Separator separator) {
    switch (separator) {
        case Separator::Pipe: return "pipe";
        case Separator::Semicolon: return "semicolon";
        case Separator::Tab: return "tab";
    }
    return "pipe";
}

std::optional<Separator> separator_from_name(std::string_view name) {
    if (name == "pipe") return Separator::Pipe;
    if (name == "semicolon") return Separator::Semicolon;
    if (name == "tab") return Separator::Tab;
    return std::nullopt;
}

MarkupSource MarkupSource::from_text(std::string_view text,
                                     std::optional<Separator> declared) {
    MarkupSource source;
    source.declared_separator = declared;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t pos = text.find('\n', start);
        std::string_view line = (pos == std::string_view::npos)
                                    ? text.substr(start)
                                    : text.substr(start, pos - start);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (pos == std::string_view::npos) {
            if (!line.empty()) {
                source.lines.emplace_back(line);
            }
            break;
        }
        source.lines.emplace_back(line);
        start = pos + 1;
    }
    return source;
}

std::string to_text(const MarkupSource& source) {
    std::string out;
    for (const std::string& line : source.lines) {
        out += line;
        out += '\n';
    }
    return out;
}

Separator detect_separator(const MarkupSource& source) {
    bool saw_boundary = false;
    std::vector<DataLine> data = collect_data_lines(source.lines, &saw_boundary);
    std::optional<Separator> declared = source.declared_separator;
    if (!declared) {
        declared = read_directives(source.lines).separator;
    }
    return detect_from_lines(data, declared);
}

TableDocument parse(const MarkupSource& source) {
    Directives directives = read_directives(source.lines);
    bool saw_boundary = false;
    std::vector<DataLine> data = collect_data_lines(source.lines, &saw_boundary);
    if (data.empty() || std::all_of(data.begin(), data.end(),
                                    [](const DataLine& d) { return d.in_header; })) {
        throw ParseError(ParseErrorCode::EmptyBody, 0, "empty body");
    }

    std::optional<Separator> declared = source.declared_separator;
    if (!declared) {
        declared = directives.separator;
    }
    const char sep = separator_char(detect_from_lines(data, declared));

    TableDocument doc;
    doc.caption = directives.caption.value_or("");
    doc.details = directives.details.value_or("");
    doc.row_header_mode = directives.rowheaders.value_or(true);

    std::vector<int> header_lines;
    std::vector<int> body_lines;
    for (const DataLine& line : data) {
        Row row = parse_row(line, sep);
        if (line.in_header) {
            doc.header_rows.push_back(std::move(row));
            header_lines.push_back(line.line_no);
        } else {
            doc.body_rows.push_back(std::move(row));
            body_lines.push_back(line.line_no);
        }
    }

    // The first parsed row fixes the column count; every later row must match.
    const Row& first =
        doc.header_rows.empty() ? doc.body_rows.front() : doc.header_rows.front();
    doc.column_count = span_sum(first);
    stamp_origins(doc);

    auto check_width = [&](const std::vector<Row>& rows, const std::vector<int>& line_nos,
                           const char* what) {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            int sum = span_sum(rows[i]);
            if (sum != doc.column_count) {
                std::ostringstream msg;
                msg << what << " row " << i << ": span sum " << sum << " ≠ "
                    << doc.column_count;
                throw ParseError(ParseErrorCode::RaggedRow, line_nos[i], msg.str());
            }
        }
    };
    check_width(doc.header_rows, header_lines, "header");
    check_width(doc.body_rows, body_lines, "body");
    return doc;
}

bool is_expressible(const TableDocument& document, Separator separator) {
    const char sep = separator_char(separator);
    auto cell_ok = [&](const CellGroup& cell, bool first_in_row) {
        if (cell.rowspan != 1) return false;
        const std::string& c = cell.content;
        if (c.find(sep) != std::string::npos) return false;
        if (c.find('\n') != std::string::npos || c.find('\r') != std::string::npos)
            return false;
        if (c == ">") return false;
        if (std::string_view{c} != trim(c)) return false;
        if (first_in_row && !c.empty() && c.front() == '@') return false;
        return true;
    };
    auto row_ok = [&](const Row& row) {
        for (std::size_t i = 0; i < row.cells.size(); ++i) {
            if (!cell_ok(row.cells[i], i == 0)) return false;
        }
        // A row printed as a single field must not be blank (it would vanish)
        // or look like a dash boundary.
        if (row.cells.size() == 1 && row.cells.front().colspan == 1) {
            std::string_view c = row.cells.front().content;
            if (c.empty()) return false;
            if (is_boundary(c)) return false;
        }
        return true;
    };
    for (const Row& row : document.header_rows) {
        if (!row_ok(row)) return false;
    }
    for (const Row& row : document.body_rows) {
        if (!row_ok(row)) return false;
    }
    return true;
}

MarkupSource serialize(const TableDocument& document, Separator separator) {
    if (!validate(document).ok()) {
        throw std::invalid_argument("serialize: document fails validation");
    }
    if (!is_expressible(document, separator)) {
        throw std::invalid_argument(
            "serialize: document is not expressible in the markup dialect");
    }
    const char sep = separator_char(separator);
    MarkupSource out;
    if (!document.caption.empty()) {
        out.lines.push_back("@caption: " + document.caption);
    }
    if (!document.details.empty()) {
        out.lines.push_back("@details: " + document.details);
    }
    if (!document.row_header_mode) {
        out.lines.push_back("@rowheaders: off");
    }
    auto emit_row = [&](const Row& row) {
        std::string line;
        bool first = true;
        for (const CellGroup& cell : row.cells) {
            if (!first) line += sep;
            line += cell.content;
            for (int i = 1; i < cell.colspan; ++i) {
                line += sep;
                line += '>';
            }
            first = false;
        }
        out.lines.push_back(std::move(line));
    };
    for (const Row& row : document.header_rows) {
        emit_row(row);
    }
    if (!document.header_rows.empty()) {
        out.lines.push_back("---");
    }
    for (const Row& row : document.body_rows) {
        emit_row(row);
    }
    return out;
}

}  // namespace acctab
