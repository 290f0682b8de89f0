// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "acctab/header_analysis.hpp"
#include "acctab/table_model.hpp"

namespace acctab {

enum class UtteranceKind { TableIntro, RowIntro, Cell };

/// One spoken step of the table walk-through. Cell utterances carry their
/// grid position (reading-order row, leftmost column); intros do not.
struct Utterance {
    UtteranceKind kind = UtteranceKind::Cell;
    std::vector<std::string> context_labels;  // headers announced before content
    std::string content;
    int row = -1;     // 0-based reading-order row (header rows first)
    int column = -1;  // 0-based leftmost covered column

    bool operator==(const Utterance&) const = default;
};

/// Announcement phrasing. The defaults are French; {cols}, {rows} and {row}
/// are substituted. With suppress_repeated_headers on, a header label is
/// spoken only when its slot (header depth, or the row-header slot) changed
/// since the previous cell — the way screen readers avoid re-reading
/// unchanged headers. Turn it off to get every cell's full context.
struct AnnouncementStyle {
    std::string table_dimensions = "tableau de {cols} colonnes et {rows} lignes";
    std::string caption_joiner = ", ";
    std::string row_intro = "ligne {row}";
    std::string empty_cell = "vide";
    bool suppress_repeated_headers = true;
};

/// Reading-order utterances: a table intro announcing caption and dimensions,
/// then every row (headers first) opened by a row intro, then each of its
/// cells with header context before content. Absorbed header placeholders are
/// not spoken; empty cells read as the empty-cell token.
std::vector<Utterance> linearize(const TableDocument& document,
                                 const HeaderIndex& index,
                                 const AnnouncementStyle& style = {});

/// One line per utterance: kind, context labels joined by " > ", content.
std::string render_transcript(const std::vector<Utterance>& utterances);

}  // namespace acctab
