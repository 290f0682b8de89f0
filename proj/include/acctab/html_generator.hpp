// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>

#include "acctab/header_analysis.hpp"
#include "acctab/table_model.hpp"

namespace acctab {

struct GeneratorOptions {
    bool emit_aria = true;
    std::optional<bool> row_headers;  // unset mirrors the document
    bool dimensions_in_caption = false;
    std::string id_prefix = "h";
};

/// Identifier slug for a header label: lowercased, Latin diacritics folded to
/// ASCII, every run of non-alphanumeric characters collapsed to one '-',
/// trimmed of leading and trailing '-'. Non-Latin characters fold to nothing
/// and can leave the slug empty.
std::string slugify(std::string_view label);

/// Document-wide unique identifiers for header cells and row-header cells.
/// Assignment is row-major (header grid first, then body row headers) so
/// collision suffixes -2, -3, ... are deterministic.
class IdRegistry {
public:
    void assign(RowKind grid, int row, int col, const std::string& label,
                const std::string& id_prefix);
    const std::string& id_for(RowKind grid, int row, int col) const;
    bool contains(RowKind grid, int row, int col) const;
    std::size_t size() const { return ids_.size(); }

private:
    using Key = std::tuple<int, int, int>;  // grid, row, col
    std::map<Key, std::string> ids_;
    std::map<std::string, int> used_;
};

/// Ids for every non-absorbed header cell, plus one per body row header when
/// row headers are enabled. Empty labels fall back to "r{row}c{col}" slugs.
IdRegistry assign_ids(const TableDocument& document, const GeneratorOptions& options);

/// Emits the accessible HTML fragment for a document: figure/figcaption when
/// a long description is present, caption, thead/tbody split, th scope and
/// generated ids, headers attributes binding every data cell to its header
/// context, and role="row" on table rows unless ARIA output is disabled.
/// Deterministic byte-for-byte; text and attribute values are escaped.
std::string generate(const TableDocument& document, const HeaderIndex& index,
                     const GeneratorOptions& options = {});

}  // namespace acctab
