// SPDX-License-Identifier: Apache-2.0
#include "acctab/table_model.hpp"

#include <sstream>

namespace acctab {

namespace {

std::string row_label(RowKind kind, int index) {
    std::ostringstream out;
    if (kind == RowKind::Header) {
        out << "header row " << index;
    } else {
        out << "row " << index;
    }
    return out.str();
}

void check_grid(const std::vector<Row>& rows, RowKind kind, int column_count,
                std::vector<Violation>& out) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Row& row = rows[i];
        const std::string label = row_label(kind, static_cast<int>(i));
        if (row.cells.empty()) {
            out.push_back({label + ": empty row"});
            continue;
        }
        int span_sum = 0;
        int expected_col = 0;
        for (const CellGroup& cell : row.cells) {
            if (cell.colspan < 1) {
                std::ostringstream msg;
                msg << label << ": cell at column " << cell.origin_col
                    << ": colspan " << cell.colspan << " < 1";
                out.push_back({msg.str()});
                continue;  // span sum is meaningless for this cell
            }
            if (cell.rowspan < 1) {
                std::ostringstream msg;
                msg << label << ": cell at column " << cell.origin_col
                    << ": rowspan " << cell.rowspan << " < 1";
                out.push_back({msg.str()});
            }
            if (cell.origin_row != static_cast<int>(i) || cell.origin_col != expected_col) {
                std::ostringstream msg;
                msg << label << ": cell origin (" << cell.origin_row << ", "
                    << cell.origin_col << ") does not match grid position ("
                    << i << ", " << expected_col << ")";
                out.push_back({msg.str()});
            }
            if (cell.origin_col + cell.colspan > column_count) {
                std::ostringstream msg;
                msg << label << ": cell at column " << cell.origin_col
                    << " extends past column_count " << column_count;
                out.push_back({msg.str()});
            }
            span_sum += cell.colspan;
            expected_col += cell.colspan;
        }
        if (span_sum != column_count) {
            std::ostringstream msg;
            msg << label << ": span sum " << span_sum << " ≠ " << column_count;
            out.push_back({msg.str()});
        }
    }
}

}  // namespace

ValidationResult validate(const TableDocument& document) {
    ValidationResult result;
    if (document.column_count < 1) {
        std::ostringstream msg;
        msg << "column_count " << document.column_count << " < 1";
        result.violations.push_back({msg.str()});
    }
    if (document.body_rows.empty()) {
        result.violations.push_back({"no body rows"});
    }
    check_grid(document.header_rows, RowKind::Header, document.column_count,
               result.violations);
    check_grid(document.body_rows, RowKind::Body, document.column_count,
               result.violations);
    return result;
}

TableClass classify(const TableDocument& document) {
    if (document.header_rows.size() > 1) {
        return TableClass::Complex;
    }
    auto any_span = [](const std::vector<Row>& rows) {
        for (const Row& row : rows) {
            for (const CellGroup& cell : row.cells) {
                if (cell.colspan > 1 || cell.rowspan > 1) {
                    return true;
                }
            }
        }
        return false;
    };
    if (any_span(document.header_rows) || any_span(document.body_rows)) {
        return TableClass::Complex;
    }
    return TableClass::Simple;
}

void stamp_origins(TableDocument& document) {
    auto stamp = [](std::vector<Row>& rows, RowKind kind) {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            rows[r].kind = kind;
            int col = 0;
            for (CellGroup& cell : rows[r].cells) {
                cell.origin_row = static_cast<int>(r);
                cell.origin_col = col;
                col += cell.colspan;
            }
        }
    };
    stamp(document.header_rows, RowKind::Header);
    stamp(document.body_rows, RowKind::Body);
}

}  // namespace acctab
