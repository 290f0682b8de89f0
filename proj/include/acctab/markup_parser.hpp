// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "acctab/table_model.hpp"

namespace acctab {

enum class Separator { Pipe, Semicolon, Tab };

char separator_char(Separator separator);
std::string_view separator_name(Separator separator);
std::optional<Separator> separator_from_name(std::string_view name);

/// Raw markup input: one entry per physical line, plus an optional separator
/// declared out of band (a CLI flag, typically). A declaration always wins
/// over auto-detection and over an @separator directive.
struct MarkupSource {
    std::vector<std::string> lines;
    std::optional<Separator> declared_separator;

    /// Splits text on LF, dropping one trailing CR per line (CRLF input).
    static MarkupSource from_text(std::string_view text,
                                  std::optional<Separator> declared = std::nullopt);
};

/// Joins lines with LF and terminates the last line.
std::string to_text(const MarkupSource& source);

enum class ParseErrorCode {
    NoConsistentSeparator,
    EmptyBody,
    DanglingMerge,
    RaggedRow,
    DuplicateDirective,
    BadDirective,
};

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorCode code, int line, const std::string& message)
        : std::runtime_error(message), code_(code), line_(line) {}

    ParseErrorCode code() const { return code_; }

    /// 1-based physical line of the offending input; 0 when the error is not
    /// tied to a single line.
    int line() const { return line_; }

private:
    ParseErrorCode code_;
    int line_;
};

/// Picks the field separator for a document. Declared separators win
/// unconditionally. Otherwise candidates are tried in tab > pipe > semicolon
/// precedence among those present on the first data line; a candidate must
/// yield the same field count on every data line. When no candidate character
/// occurs on the first data line the table is single-column and the
/// precedence order alone decides.
Separator detect_separator(const MarkupSource& source);

/// Parses the linear markup dialect:
///   - "@key: value" directive lines (caption, details, separator, rowheaders)
///   - a line of three or more dashes separating header rows from body rows
///   - data lines split on the separator; a field that is exactly ">" merges
///     into the nearest real field on its left, widening its colspan
///   - whitespace-only lines are ignored; cell content is trimmed
/// The returned document always passes validate().
TableDocument parse(const MarkupSource& source);

/// Canonical printer for the markup dialect. Inverse of parse for any
/// document expressible in it (see is_expressible). Throws
/// std::invalid_argument on inexpressible documents.
MarkupSource serialize(const TableDocument& document, Separator separator);

/// True when serialize(document, separator) round-trips: no rowspans, no cell
/// content that collides with the separator, the ">" merge marker, directive
/// or boundary syntax, and no row that would print as a blank line.
bool is_expressible(const TableDocument& document, Separator separator);

}  // namespace acctab
