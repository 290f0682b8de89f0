// SPDX-License-Identifier: Apache-2.0
#include "acctab/linearizer.hpp"

#include <map>
#include <optional>

namespace acctab {

namespace {

std::string substitute(std::string templ, std::string_view key, int value) {
    const std::string needle = "{" + std::string{key} + "}";
    std::size_t pos = templ.find(needle);
    while (pos != std::string::npos) {
        templ.replace(pos, needle.size(), std::to_string(value));
        pos = templ.find(needle, pos);
    }
    return templ;
}

// Slot state of the previously spoken cell: column refs keyed by header
// depth, the row header in its own slot.
struct ContextSlots {
    std::map<int, std::string> by_depth;
    std::optional<std::string> row_header;
};

}  // namespace

std::vector<Utterance> linearize(const TableDocument& document,
                                 const HeaderIndex& index,
                                 const AnnouncementStyle& style) {
    std::vector<Utterance> out;
    const HeaderAnalysis analysis = build_segments(document);

    std::string dims = substitute(style.table_dimensions, "cols", document.column_count);
    dims = substitute(dims, "rows", document.total_row_count());
    Utterance intro;
    intro.kind = UtteranceKind::TableIntro;
    intro.content =
        document.caption.empty() ? dims : document.caption + style.caption_joiner + dims;
    out.push_back(std::move(intro));

    ContextSlots previous;
    int reading_row = 0;

    auto speak_cell = [&](const CellGroup& cell, std::vector<HeaderRef> refs) {
        ContextSlots current;
        for (const HeaderRef& ref : refs) {
            if (ref.kind == HeaderRef::Kind::Column) {
                current.by_depth[ref.depth] = ref.label;
            } else {
                current.row_header = ref.label;
            }
        }
        Utterance u;
        u.kind = UtteranceKind::Cell;
        u.row = reading_row;
        u.column = cell.origin_col;
        u.content = cell.content.empty() ? style.empty_cell : cell.content;
        for (const HeaderRef& ref : refs) {
            if (style.suppress_repeated_headers) {
                if (ref.kind == HeaderRef::Kind::Column) {
                    auto it = previous.by_depth.find(ref.depth);
                    if (it != previous.by_depth.end() && it->second == ref.label) {
                        continue;
                    }
                } else if (previous.row_header == ref.label) {
                    continue;
                }
            }
            u.context_labels.push_back(ref.label);
        }
        out.push_back(std::move(u));
        previous = std::move(current);
    };

    auto start_row = [&]() {
        Utterance u;
        u.kind = UtteranceKind::RowIntro;
        u.content = substitute(style.row_intro, "row", reading_row + 1);
        out.push_back(std::move(u));
    };

    for (const auto& row : analysis.annotated_header_rows) {
        start_row();
        for (const CellGroup& cell : row) {
            speak_cell(cell, {});
        }
        ++reading_row;
    }
    for (std::size_t r = 0; r < document.body_rows.size(); ++r) {
        start_row();
        const Row& row = document.body_rows[r];
        for (std::size_t i = 0; i < row.cells.size(); ++i) {
            std::vector<HeaderRef> refs = resolve_cell_group(
                document, index, static_cast<int>(r), static_cast<int>(i));
            // The row-header cell is not its own context.
            if (document.row_header_mode && i == 0) {
                std::erase_if(refs, [](const HeaderRef& ref) {
                    return ref.kind == HeaderRef::Kind::Row;
                });
            }
            speak_cell(row.cells[i], std::move(refs));
        }
        ++reading_row;
    }
    return out;
}

std::string render_transcript(const std::vector<Utterance>& utterances) {
    std::string out;
    for (const Utterance& u : utterances) {
        switch (u.kind) {
            case UtteranceKind::TableIntro: out += "table_intro"; break;
            case UtteranceKind::RowIntro: out += "row_intro"; break;
            case UtteranceKind::Cell: out += "cell"; break;
        }
        out += " |";
        std::string context;
        for (const std::string& label : u.context_labels) {
            if (!context.empty()) {
                context += " > ";
            }
            context += label;
        }
        if (!context.empty()) {
            out += ' ';
            out += context;
        }
        out += " |";
        if (!u.content.empty()) {
            out += ' ';
            out += u.content;
        }
        out += '\n';
    }
    return out;
}

}  // namespace acctab
