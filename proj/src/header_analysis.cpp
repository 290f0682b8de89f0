// SPDX-License-Identifier: Apache-2.0
#include "acctab/header_analysis.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace acctab {

namespace {

std::string_view trimmed(const std::string& s) {
    std::string_view v{s};
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
    return v;
}

bool is_empty_label(const CellGroup& cell) { return trimmed(cell.content).empty(); }

// (depth, cell index) address into the header grid.
struct CellAddr {
    int depth;
    int index;
    bool operator==(const CellAddr&) const = default;
};

}  // namespace

HeaderAnalysis build_segments(const TableDocument& document) {
    HeaderAnalysis out;
    const auto& rows = document.header_rows;
    const int depth_count = static_cast<int>(rows.size());
    if (depth_count == 0) {
        return out;
    }
    const int columns = document.column_count;

    // coverage[d][c] = address of the cell covering column c at depth d.
    std::vector<std::vector<CellAddr>> coverage(
        static_cast<std::size_t>(depth_count),
        std::vector<CellAddr>(static_cast<std::size_t>(columns), {-1, -1}));
    for (int d = 0; d < depth_count; ++d) {
        for (std::size_t i = 0; i < rows[d].cells.size(); ++i) {
            const CellGroup& cell = rows[d].cells[i];
            for (int c = cell.origin_col;
                 c < cell.origin_col + cell.colspan && c < columns; ++c) {
                coverage[d][c] = {d, static_cast<int>(i)};
            }
        }
    }
    auto cell_at = [&](CellAddr a) -> const CellGroup& {
        return rows[a.depth].cells[a.index];
    };

    // A non-empty cell is a downspan candidate when everything beneath its
    // columns is empty. Candidates extend to the bottom of the header grid and
    // absorb those empties — but only while every column of each absorbed
    // empty cell stays covered by some extending candidate. Dropping an
    // extension can strand an empty cell and in turn drop further extensions,
    // so iterate to a fixpoint. Grids are tiny.
    std::vector<std::vector<bool>> extends(static_cast<std::size_t>(depth_count));
    for (int d = 0; d < depth_count; ++d) {
        extends[d].assign(rows[d].cells.size(), false);
    }
    for (int d = 0; d < depth_count; ++d) {
        for (std::size_t i = 0; i < rows[d].cells.size(); ++i) {
            const CellGroup& cell = rows[d].cells[i];
            if (is_empty_label(cell) || d == depth_count - 1) {
                continue;
            }
            bool all_empty_below = true;
            for (int dd = d + 1; dd < depth_count && all_empty_below; ++dd) {
                for (int c = cell.origin_col; c < cell.origin_col + cell.colspan; ++c) {
                    CellAddr a = coverage[dd][c];
                    if (a.index >= 0 && !is_empty_label(cell_at(a))) {
                        all_empty_below = false;
                        break;
                    }
                }
            }
            extends[d][i] = all_empty_below;
        }
    }

    std::vector<std::vector<bool>> absorbed(static_cast<std::size_t>(depth_count));
    for (int d = 0; d < depth_count; ++d) {
        absorbed[d].assign(rows[d].cells.size(), false);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        // An empty cell is absorbed iff every column it covers belongs to an
        // extending candidate above it.
        for (int d = 1; d < depth_count; ++d) {
            for (std::size_t i = 0; i < rows[d].cells.size(); ++i) {
                const CellGroup& cell = rows[d].cells[i];
                if (!is_empty_label(cell)) {
                    continue;
                }
                bool covered = true;
                for (int c = cell.origin_col; c < cell.origin_col + cell.colspan; ++c) {
                    bool column_ok = false;
                    for (int dd = 0; dd < d; ++dd) {
                        CellAddr a = coverage[dd][c];
                        if (a.index >= 0 && extends[a.depth][a.index]) {
                            column_ok = true;
                            break;
                        }
                    }
                    if (!column_ok) {
                        covered = false;
                        break;
                    }
                }
                absorbed[d][i] = covered;
            }
        }
        // A candidate keeps its extension only while every empty cell under
        // its columns is absorbed.
        for (int d = 0; d < depth_count; ++d) {
            for (std::size_t i = 0; i < rows[d].cells.size(); ++i) {
                if (!extends[d][i]) {
                    continue;
                }
                const CellGroup& cell = rows[d].cells[i];
                for (int dd = d + 1; dd < depth_count; ++dd) {
                    for (int c = cell.origin_col; c < cell.origin_col + cell.colspan;
                         ++c) {
                        CellAddr a = coverage[dd][c];
                        if (a.index >= 0 && !absorbed[a.depth][a.index]) {
                            extends[d][i] = false;
                            changed = true;
                            break;
                        }
                    }
                    if (!extends[d][i]) {
                        break;
                    }
                }
            }
        }
    }

    // Emit the annotated grid and the segments.
    out.annotated_header_rows.resize(static_cast<std::size_t>(depth_count));
    for (int d = 0; d < depth_count; ++d) {
        for (std::size_t i = 0; i < rows[d].cells.size(); ++i) {
            if (absorbed[d][i]) {
                continue;
            }
            CellGroup cell = rows[d].cells[i];
            if (extends[d][i]) {
                cell.rowspan = depth_count - d;
            }
            out.annotated_header_rows[d].push_back(cell);
            if (!is_empty_label(cell)) {
                HeaderSegment segment;
                segment.depth = d;
                segment.start_col = cell.origin_col;
                segment.end_col = std::min(cell.origin_col + cell.colspan, columns);
                segment.label = cell.content;
                segment.origin_row = cell.origin_row;
                segment.origin_col = cell.origin_col;
                out.segments.push_back(std::move(segment));
            } else {
                // Surviving empty cell. Flanked by labels on both sides at the
                // same depth it is a deliberate gap; otherwise report it.
                bool label_left = false;
                bool label_right = false;
                for (std::size_t j = 0; j < rows[d].cells.size(); ++j) {
                    if (absorbed[d][j] || is_empty_label(rows[d].cells[j])) {
                        continue;
                    }
                    if (j < i) label_left = true;
                    if (j > i) label_right = true;
                }
                if (!(label_left && label_right)) {
                    std::ostringstream msg;
                    msg << "header row " << d << ": empty header cell over columns ["
                        << cell.origin_col << ", " << cell.origin_col + cell.colspan
                        << ") has no label and nothing above to absorb it";
                    out.warnings.push_back(msg.str());
                }
            }
        }
    }
    return out;
}

HeaderIndex build_index(const TableDocument& document, const HeaderAnalysis& analysis) {
    HeaderIndex index;
    index.segments = analysis.segments;
    index.column_context.resize(static_cast<std::size_t>(document.column_count));
    for (int c = 0; c < document.column_count; ++c) {
        for (std::size_t s = 0; s < index.segments.size(); ++s) {
            if (index.segments[s].covers(c)) {
                index.column_context[c].push_back(static_cast<int>(s));
            }
        }
        std::stable_sort(index.column_context[c].begin(), index.column_context[c].end(),
                         [&](int a, int b) {
                             return index.segments[a].depth < index.segments[b].depth;
                         });
    }
    index.row_context.resize(document.body_rows.size());
    if (document.row_header_mode) {
        for (std::size_t r = 0; r < document.body_rows.size(); ++r) {
            const Row& row = document.body_rows[r];
            if (!row.cells.empty()) {
                index.row_context[r] = HeaderIndex::RowHeaderRef{
                    static_cast<int>(r), row.cells.front().content};
            }
        }
    }
    return index;
}

std::vector<HeaderRef> resolve_cell(const TableDocument& document,
                                    const HeaderIndex& index, int row, int column) {
    if (row < 0 || row >= static_cast<int>(document.body_rows.size()) || column < 0 ||
        column >= document.column_count) {
        throw std::out_of_range("resolve_cell: coordinates outside the body grid");
    }
    std::vector<HeaderRef> refs;
    for (int s : index.column_context[static_cast<std::size_t>(column)]) {
        const HeaderSegment& segment = index.segments[static_cast<std::size_t>(s)];
        refs.push_back({HeaderRef::Kind::Column, segment.label, segment.origin_row,
                        segment.origin_col, segment.depth});
    }
    if (index.row_context[static_cast<std::size_t>(row)]) {
        const Row& body_row = document.body_rows[static_cast<std::size_t>(row)];
        const CellGroup& head = body_row.cells.front();
        // The row header is context for every cell of the row except itself.
        if (column >= head.origin_col + head.colspan) {
            refs.push_back({HeaderRef::Kind::Row,
                            index.row_context[static_cast<std::size_t>(row)]->label, row,
                            head.origin_col, -1});
        }
    }
    return refs;
}

std::vector<HeaderRef> resolve_cell_group(const TableDocument& document,
                                          const HeaderIndex& index, int row,
                                          int cell_index) {
    if (row < 0 || row >= static_cast<int>(document.body_rows.size())) {
        throw std::out_of_range("resolve_cell_group: row outside the body grid");
    }
    const Row& body_row = document.body_rows[static_cast<std::size_t>(row)];
    if (cell_index < 0 || cell_index >= static_cast<int>(body_row.cells.size())) {
        throw std::out_of_range("resolve_cell_group: no such cell in the row");
    }
    const CellGroup& cell = body_row.cells[static_cast<std::size_t>(cell_index)];

    std::vector<HeaderRef> refs;
    std::optional<HeaderRef> row_ref;
    for (int c = cell.origin_col; c < cell.origin_col + cell.colspan; ++c) {
        for (HeaderRef& ref : resolve_cell(document, index, row, c)) {
            if (ref.kind == HeaderRef::Kind::Row) {
                row_ref = std::move(ref);
            } else if (std::find(refs.begin(), refs.end(), ref) == refs.end()) {
                refs.push_back(std::move(ref));
            }
        }
    }
    std::stable_sort(refs.begin(), refs.end(), [](const HeaderRef& a, const HeaderRef& b) {
        if (a.depth != b.depth) return a.depth < b.depth;
        return a.origin_col < b.origin_col;
    });
    if (row_ref) {
        refs.push_back(std::move(*row_ref));
    }
    return refs;
}

}  // namespace acctab
