// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "acctab/table_model.hpp"

namespace acctab {

/// A contiguous run of columns governed by one non-empty header cell at a
/// given header depth. Column range is half-open: [start_col, end_col).
struct HeaderSegment {
    int depth = 0;  // header row index, 0 = most general
    int start_col = 0;
    int end_col = 0;
    std::string label;
    int origin_row = 0;  // owning header cell coordinates
    int origin_col = 0;

    bool operator==(const HeaderSegment&) const = default;
    bool covers(int column) const { return column >= start_col && column < end_col; }
};

/// Output of build_segments: the segment set, the header grid with inferred
/// rowspans applied and absorbed placeholder cells removed, and warnings for
/// empty header cells that are neither absorbable nor flanked by labels.
struct HeaderAnalysis {
    std::vector<HeaderSegment> segments;
    std::vector<std::vector<CellGroup>> annotated_header_rows;
    std::vector<std::string> warnings;
};

/// Per-column and per-row header context. column_context[c] lists indices
/// into segments, ordered by increasing depth (most general first). A merged
/// segment appears in the context of every column it covers. row_context[r]
/// is set when the document reads its first body column as row headers.
struct HeaderIndex {
    struct RowHeaderRef {
        int body_row = 0;  // column is always 0
        std::string label;
    };

    std::vector<HeaderSegment> segments;
    std::vector<std::vector<int>> column_context;
    std::vector<std::optional<RowHeaderRef>> row_context;
};

/// One resolved header reference for a body cell, most general first;
/// the row header, when present, comes last.
struct HeaderRef {
    enum class Kind { Column, Row };

    Kind kind = Kind::Column;
    std::string label;
    int origin_row = 0;  // header grid for Column refs, body grid for Row refs
    int origin_col = 0;
    int depth = -1;  // header depth for Column refs, -1 for Row refs

    bool operator==(const HeaderRef&) const = default;
};

/// Determines header structure. A non-empty header cell whose covered columns
/// hold nothing but empty cells at every deeper depth spans down to the last
/// header row; the empty cells it shadows are absorbed and disappear from the
/// annotated grid. Empty labels never produce segments.
HeaderAnalysis build_segments(const TableDocument& document);

HeaderIndex build_index(const TableDocument& document, const HeaderAnalysis& analysis);

/// Header context for the body cell at (row, column): column context from the
/// most general depth down, then the row header if the document has row
/// headers and the addressed cell is not itself the row header.
/// Throws std::out_of_range for coordinates outside the body grid.
std::vector<HeaderRef> resolve_cell(const TableDocument& document,
                                    const HeaderIndex& index, int row, int column);

/// Context for a whole cell group (which may span several columns): the
/// deduplicated union of resolve_cell over its covered columns, ordered by
/// depth then start column, row header last. cell_index addresses
/// document.body_rows[row].cells.
std::vector<HeaderRef> resolve_cell_group(const TableDocument& document,
                                          const HeaderIndex& index, int row,
                                          int cell_index);

}  // namespace acctab
