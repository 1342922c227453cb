#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "olsembed/core.hpp"
#include "olsembed/pipeline.hpp"

namespace olsembed {

/// Malformed text or JSON. `line` and `column` are 1-based; 0 when unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line = 0, std::size_t column = 0);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Well-formed input that is not a partial latin square.
class NotPartialLatin : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

// ---------------------------------------------------------------------------
// Text grids: one row per line, whitespace-separated tokens, "." for an empty
// cell. The order is the number of rows; every row must have that many tokens.
// Blank lines are ignored.
// ---------------------------------------------------------------------------

struct RawGrid {
    Index order = 0;
    std::vector<Triple> triples;
};

/// Tokenizes without latin checks; throws ParseError.
RawGrid parse_grid_raw(std::string_view text);
/// Throws ParseError, or NotPartialLatin with line/column of the offending cell.
PartialLatinSquare parse_grid(std::string_view text);
LatinSquare parse_latin_grid(std::string_view text);

/// Canonical form: single spaces, "." for empty cells, "\n" after every row.
std::string emit_grid(const PartialLatinSquare& p);
std::string emit_grid(const LatinSquare& square);
void write_grid_row(std::ostream& out, std::span<const Symbol> row);

/// Parses one grid line into symbols; throws ParseError on "." or junk.
std::vector<Symbol> parse_grid_row(std::string_view line, std::size_t line_number);

// ---------------------------------------------------------------------------
// Pair documents: {"order": n, "P": [[r,c,e],...], "Q": [[r,c,e],...]}
// ---------------------------------------------------------------------------

struct PairDocument {
    Index order = 0;
    std::vector<Triple> p;
    std::vector<Triple> q;
};

PairDocument parse_pair_document(std::string_view json_text);
std::string emit_pair_document(const PartialLatinSquare& p, const PartialLatinSquare& q);

// ---------------------------------------------------------------------------
// Manifests: everything needed to regenerate any cell of an embedding.
// ---------------------------------------------------------------------------

std::string emit_manifest(const Embedding& embedding);
Embedding load_manifest(std::string_view json_text);

/// The report as a JSON object; timings only when asked for.
std::string emit_report_json(const EmbeddingReport& report, bool with_timings);

/// Trade audit: one record per trade, eight (row, col, before, after) cells
/// each, in final-square coordinates.
std::string emit_trade_audit(const Embedding& embedding);

} // namespace olsembed
