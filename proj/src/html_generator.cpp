// SPDX-License-Identifier: Apache-2.0
#include "acctab/html_generator.hpp"

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace acctab {

namespace {

// Latin-1 Supplement letters C0..FF folded to ASCII. '*' entries are handled
// as multi-character specials before the table is consulted; ' ' entries are
// symbols, not letters.
constexpr std::string_view kLatin1Fold =
    "aaaaaa*ceeeeiiiidnooooo ouuuuy**"
    "aaaaaa*ceeeeiiiidnooooo ouuuuy*y";

// Latin Extended-A 0100..017F base letters; '*' as above.
constexpr std::string_view kLatinExtAFold =
    "aaaaaaccccccccddddeeeeeeeeeegggggggghhhhiiiiiiiiii**jjkkkllllllllll"
    "nnnnnnnnnoooooo**rrrrrrssssssssttttttuuuuuuuuuuuuwwyyyzzzzzzs";

static_assert(kLatin1Fold.size() == 64);
static_assert(kLatinExtAFold.size() == 128);

// Multi-character folds.
std::string_view special_fold(char32_t cp) {
    switch (cp) {
        case 0x00C6: case 0x00E6: return "ae";  // Æ æ
        case 0x00DE: case 0x00FE: return "th";  // Þ þ
        case 0x00DF: return "ss";               // ß
        case 0x0132: case 0x0133: return "ij";  // Ĳ ĳ
        case 0x0152: case 0x0153: return "oe";  // Œ œ
        default: return {};
    }
}

// Minimal UTF-8 decoding; malformed bytes decode as U+FFFD one byte at a time.
char32_t next_codepoint(std::string_view s, std::size_t& i) {
    const auto byte = [&](std::size_t k) { return static_cast<unsigned char>(s[k]); };
    const unsigned char b0 = byte(i);
    if (b0 < 0x80) {
        i += 1;
        return b0;
    }
    auto cont = [&](std::size_t k) {
        return k < s.size() && (byte(k) & 0xC0) == 0x80;
    };
    if ((b0 & 0xE0) == 0xC0 && cont(i + 1)) {
        char32_t cp = ((b0 & 0x1Fu) << 6) | (byte(i + 1) & 0x3Fu);
        i += 2;
        return cp;
    }
    if ((b0 & 0xF0) == 0xE0 && cont(i + 1) && cont(i + 2)) {
        char32_t cp = ((b0 & 0x0Fu) << 12) | ((byte(i + 1) & 0x3Fu) << 6) |
                      (byte(i + 2) & 0x3Fu);
        i += 3;
        return cp;
    }
    if ((b0 & 0xF8) == 0xF0 && cont(i + 1) && cont(i + 2) && cont(i + 3)) {
        char32_t cp = ((b0 & 0x07u) << 18) | ((byte(i + 1) & 0x3Fu) << 12) |
                      ((byte(i + 2) & 0x3Fu) << 6) | (byte(i + 3) & 0x3Fu);
        i += 4;
        return cp;
    }
    i += 1;
    return 0xFFFD;
}

bool valid_id_prefix(std::string_view prefix) {
    if (prefix.empty()) {
        return false;
    }
    if (!((prefix[0] >= 'a' && prefix[0] <= 'z') || (prefix[0] >= 'A' && prefix[0] <= 'Z'))) {
        return false;
    }
    for (char ch : prefix) {
        const bool ok = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') ||
                        (ch >= '0' && ch <= '9') || ch == '-' || ch == '_';
        if (!ok) {
            return false;
        }
    }
    return true;
}

std::string escape_html(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char ch : text) {
        switch (ch) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

std::string fallback_slug(int row, int col) {
    std::ostringstream out;
    out << "r" << row << "c" << col;
    return out.str();
}

class HtmlWriter {
public:
    explicit HtmlWriter(std::string& out) : out_(out) {}

    void open(const std::string& line) {
        indent();
        out_ += line;
        out_ += '\n';
        ++depth_;
    }
    void close(std::string_view tag) {
        --depth_;
        indent();
        out_ += "</";
        out_ += tag;
        out_ += ">\n";
    }
    void line(const std::string& text) {
        indent();
        out_ += text;
        out_ += '\n';
    }

private:
    void indent() { out_.append(static_cast<std::size_t>(depth_) * 2, ' '); }

    std::string& out_;
    int depth_ = 0;
};

struct Attr {
    std::string_view name;
    std::string value;
};

std::string element(std::string_view tag, const std::vector<Attr>& attrs,
                    std::string_view text) {
    std::string out = "<";
    out += tag;
    for (const Attr& a : attrs) {
        out += ' ';
        out += a.name;
        out += "=\"";
        out += escape_html(a.value);
        out += '"';
    }
    out += '>';
    out += escape_html(text);
    out += "</";
    out += tag;
    out += '>';
    return out;
}

}  // namespace

std::string slugify(std::string_view label) {
    std::string out;
    bool pending_dash = false;
    std::size_t i = 0;
    while (i < label.size()) {
        const char32_t cp = next_codepoint(label, i);
        std::string piece;
        if (cp < 0x80) {
            const char ch = static_cast<char>(cp);
            if (ch >= 'A' && ch <= 'Z') {
                piece = static_cast<char>(ch - 'A' + 'a');
            } else if ((ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9')) {
                piece = ch;
            }
        } else if (!special_fold(cp).empty()) {
            piece = special_fold(cp);
        } else if (cp >= 0x00C0 && cp <= 0x00FF) {
            const char ch = kLatin1Fold[cp - 0x00C0];
            if (ch != ' ' && ch != '*') {
                piece = ch;
            }
        } else if (cp >= 0x0100 && cp <= 0x017F) {
            const char ch = kLatinExtAFold[cp - 0x0100];
            if (ch != '*') {
                piece = ch;
            }
        } else if (cp >= 0x0300 && cp <= 0x036F) {
            // Combining marks vanish without breaking the run.
            continue;
        }
        if (piece.empty()) {
            if (!out.empty()) {
                pending_dash = true;
            }
        } else {
            if (pending_dash) {
                out += '-';
                pending_dash = false;
            }
            out += piece;
        }
    }
    return out;
}

void IdRegistry::assign(RowKind grid, int row, int col, const std::string& label,
                        const std::string& id_prefix) {
    std::string slug = slugify(label);
    if (slug.empty()) {
        slug = fallback_slug(row, col);
    }
    std::string base = id_prefix + "-" + slug;
    int& count = used_[base];
    ++count;
    std::string id = base;
    if (count > 1) {
        id += "-" + std::to_string(count);
    }
    ids_[{grid == RowKind::Header ? 0 : 1, row, col}] = std::move(id);
}

const std::string& IdRegistry::id_for(RowKind grid, int row, int col) const {
    auto it = ids_.find({grid == RowKind::Header ? 0 : 1, row, col});
    if (it == ids_.end()) {
        throw std::out_of_range("IdRegistry: no id assigned to that cell");
    }
    return it->second;
}

bool IdRegistry::contains(RowKind grid, int row, int col) const {
    return ids_.count({grid == RowKind::Header ? 0 : 1, row, col}) > 0;
}

IdRegistry assign_ids(const TableDocument& document, const GeneratorOptions& options) {
    if (!valid_id_prefix(options.id_prefix)) {
        throw std::invalid_argument("id_prefix must be a non-empty ASCII identifier");
    }
    IdRegistry registry;
    const HeaderAnalysis analysis = build_segments(document);
    for (const auto& row : analysis.annotated_header_rows) {
        for (const CellGroup& cell : row) {
            registry.assign(RowKind::Header, cell.origin_row, cell.origin_col,
                            cell.content, options.id_prefix);
        }
    }
    if (options.row_headers.value_or(document.row_header_mode)) {
        for (std::size_t r = 0; r < document.body_rows.size(); ++r) {
            const Row& row = document.body_rows[r];
            if (!row.cells.empty()) {
                registry.assign(RowKind::Body, static_cast<int>(r), 0,
                                row.cells.front().content, options.id_prefix);
            }
        }
    }
    return registry;
}

std::string generate(const TableDocument& document, const HeaderIndex& index,
                     const GeneratorOptions& options) {
    const bool row_headers = options.row_headers.value_or(document.row_header_mode);
    const HeaderAnalysis analysis = build_segments(document);
    const IdRegistry ids = assign_ids(document, options);

    std::string html;
    HtmlWriter w(html);

    const bool wrap = !document.details.empty();
    if (wrap) {
        w.open("<figure>");
        w.line(element("figcaption", {}, document.details));
    }
    w.open("<table>");

    std::string caption_text = document.caption;
    if (options.dimensions_in_caption) {
        std::ostringstream dims;
        dims << "(" << document.column_count << " colonnes, "
             << document.total_row_count() << " lignes)";
        caption_text += caption_text.empty() ? dims.str() : " " + dims.str();
    }
    if (!caption_text.empty()) {
        w.line(element("caption", {}, caption_text));
    }

    const std::string tr_open = options.emit_aria ? "<tr role=\"row\">" : "<tr>";

    if (!analysis.annotated_header_rows.empty()) {
        w.open("<thead>");
        for (const auto& row : analysis.annotated_header_rows) {
            w.open(tr_open);
            for (const CellGroup& cell : row) {
                std::vector<Attr> attrs;
                attrs.push_back({"id", ids.id_for(RowKind::Header, cell.origin_row,
                                                  cell.origin_col)});
                if (cell.colspan > 1) {
                    attrs.push_back({"colspan", std::to_string(cell.colspan)});
                }
                if (cell.rowspan > 1) {
                    attrs.push_back({"rowspan", std::to_string(cell.rowspan)});
                }
                attrs.push_back({"scope", cell.colspan > 1 ? "colgroup" : "col"});
                w.line(element("th", attrs, cell.content));
            }
            w.close("tr");
        }
        w.close("thead");
    }

    w.open("<tbody>");
    for (std::size_t r = 0; r < document.body_rows.size(); ++r) {
        const Row& row = document.body_rows[r];
        w.open(tr_open);
        for (std::size_t i = 0; i < row.cells.size(); ++i) {
            const CellGroup& cell = row.cells[i];
            std::vector<Attr> attrs;
            const bool is_row_header = row_headers && i == 0;
            if (is_row_header) {
                attrs.push_back(
                    {"id", ids.id_for(RowKind::Body, static_cast<int>(r), 0)});
            }
            if (cell.colspan > 1) {
                attrs.push_back({"colspan", std::to_string(cell.colspan)});
            }
            if (cell.rowspan > 1) {
                attrs.push_back({"rowspan", std::to_string(cell.rowspan)});
            }
            if (is_row_header) {
                attrs.push_back({"scope", "row"});
                w.line(element("th", attrs, cell.content));
                continue;
            }
            std::string headers;
            for (const HeaderRef& ref : resolve_cell_group(document, index,
                                                           static_cast<int>(r),
                                                           static_cast<int>(i))) {
                if (ref.kind == HeaderRef::Kind::Row && !row_headers) {
                    continue;  // suppressed row headers leave nothing to cite
                }
                const std::string& id =
                    ref.kind == HeaderRef::Kind::Column
                        ? ids.id_for(RowKind::Header, ref.origin_row, ref.origin_col)
                        : ids.id_for(RowKind::Body, ref.origin_row, ref.origin_col);
                if (!headers.empty()) {
                    headers += ' ';
                }
                headers += id;
            }
            if (!headers.empty()) {
                attrs.push_back({"headers", headers});
            }
            w.line(element("td", attrs, cell.content));
        }
        w.close("tr");
    }
    w.close("tbody");

    w.close("table");
    if (wrap) {
        w.close("figure");
    }
    return html;
}

}  // namespace acctab
