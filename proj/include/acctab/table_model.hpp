// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

namespace acctab {

enum class RowKind { Header, Body };

/// One logical cell: content plus the rectangular footprint it occupies.
/// A cell in a simple table always has colspan = rowspan = 1. Empty content
/// is a legal value and is distinct from a span (a merged-away position has
/// no cell at all).
struct CellGroup {
    std::string content;
    int colspan = 1;
    int rowspan = 1;
    int origin_row = 0;  // 0-based index within the owning grid (header or body)
    int origin_col = 0;  // 0-based column of the leftmost covered column

    bool operator==(const CellGroup&) const = default;
};

struct Row {
    std::vector<CellGroup> cells;
    RowKind kind = RowKind::Body;

    bool operator==(const Row&) const = default;
};

/// The parsed logical table. Header and body grids are kept separate;
/// column_count is the single width authority for both.
struct TableDocument {
    std::string caption;
    std::string details;
    std::vector<Row> header_rows;
    std::vector<Row> body_rows;
    int column_count = 1;
    bool row_header_mode = true;  // first body column read as row headers

    bool operator==(const TableDocument&) const = default;

    int total_row_count() const {
        return static_cast<int>(header_rows.size() + body_rows.size());
    }
};

enum class TableClass { Simple, Complex };

struct Violation {
    std::string message;  // names the row and the constraint broken

    bool operator==(const Violation&) const = default;
};

struct ValidationResult {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
};

/// Checks every structural invariant; never throws. Violations are the
/// return value, not failures.
ValidationResult validate(const TableDocument& document);

/// Complex iff any cell group spans more than one row or column, or the
/// table has more than one header row.
TableClass classify(const TableDocument& document);

/// Recomputes every cell's origin coordinates from its grid position.
/// Useful when building documents by hand; the parser stamps origins itself.
void stamp_origins(TableDocument& document);

}  // namespace acctab
