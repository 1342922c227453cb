#include "olsembed/io.hpp"

#include <charconv>
#include <limits>
#include <optional>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace olsembed {

using nlohmann::json;

namespace {

constexpr std::string_view kManifestFormat = "olsembed-manifest";
constexpr int kManifestVersion = 1;

struct Token {
    std::string_view text;
    std::size_t column; // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            ++i;
        }
        if (i > start) {
            tokens.push_back({line.substr(start, i - start), start + 1});
        }
    }
    return tokens;
}

std::optional<Symbol> parse_symbol(std::string_view text) {
    Symbol value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) {
        return std::nullopt;
    }
    return value;
}

std::vector<std::pair<std::size_t, std::string_view>> split_lines(std::string_view text) {
    std::vector<std::pair<std::size_t, std::string_view>> lines;
    std::size_t number = 1;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        const auto line = text.substr(0, nl);
        if (!tokenize(line).empty()) {
            lines.emplace_back(number, line);
        }
        if (nl == std::string_view::npos) {
            break;
        }
        text.remove_prefix(nl + 1);
        ++number;
    }
    return lines;
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

const json& field(const json& object, const char* key) {
    if (!object.is_object() || !object.contains(key)) {
        throw ParseError(std::string("missing field \"") + key + "\"");
    }
    return object.at(key);
}

Index as_index(const json& value, const char* what) {
    if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<std::int64_t>() >= 0)) {
        throw ParseError(std::string(what) + " must be a non-negative integer");
    }
    const auto v = value.get<std::uint64_t>();
    if (v > std::numeric_limits<Index>::max()) {
        throw ParseError(std::string(what) + " is too large");
    }
    return static_cast<Index>(v);
}

std::vector<Triple> parse_triples(const json& list, const char* name) {
    if (!list.is_array()) {
        throw ParseError(std::string(name) + " must be an array of [row, col, symbol] triples");
    }
    std::vector<Triple> out;
    for (const auto& item : list) {
        if (!item.is_array() || item.size() != 3) {
            throw ParseError(std::string(name) + " entries must be [row, col, symbol]");
        }
        out.push_back({as_index(item[0], name), as_index(item[1], name), as_index(item[2], name)});
    }
    return out;
}

std::vector<Symbol> parse_square_rows(const json& rows, Index side, const char* name) {
    if (!rows.is_array() || rows.size() != side) {
        throw ParseError(std::string(name) + " must have " + std::to_string(side) + " rows");
    }
    std::vector<Symbol> grid;
    grid.reserve(static_cast<std::size_t>(side) * side);
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != side) {
            throw ParseError(std::string(name) + " rows must have " + std::to_string(side) + " entries");
        }
        for (const auto& v : row) {
            grid.push_back(as_index(v, name));
        }
    }
    return grid;
}

json rows_to_json(std::span<const Symbol> data, Index side) {
    json rows = json::array();
    for (Index r = 0; r < side; ++r) {
        auto row = data.subspan(static_cast<std::size_t>(r) * side, side);
        rows.push_back(std::vector<Symbol>(row.begin(), row.end()));
    }
    return rows;
}

json triples_to_json(std::span<const Triple> triples) {
    json out = json::array();
    for (const auto& t : triples) {
        out.push_back({t.row, t.col, t.symbol});
    }
    return out;
}

} // namespace

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : Error(line == 0 ? message
                      : "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

RawGrid parse_grid_raw(std::string_view text) {
    const auto lines = split_lines(text);
    if (lines.empty()) {
        throw ParseError("empty grid");
    }
    RawGrid grid;
    grid.order = static_cast<Index>(lines.size());
    for (Index r = 0; r < grid.order; ++r) {
        const auto [number, line] = lines[r];
        const auto tokens = tokenize(line);
        if (tokens.size() != grid.order) {
            throw ParseError("row has " + std::to_string(tokens.size()) + " tokens, expected " +
                                 std::to_string(grid.order),
                             number, 1);
        }
        for (Index c = 0; c < grid.order; ++c) {
            if (tokens[c].text == ".") {
                continue;
            }
            auto symbol = parse_symbol(tokens[c].text);
            if (!symbol) {
                throw ParseError("bad token \"" + std::string(tokens[c].text) + "\"", number, tokens[c].column);
            }
            grid.triples.push_back({r, c, *symbol});
        }
    }
    return grid;
}

PartialLatinSquare parse_grid(std::string_view text) {
    auto raw = parse_grid_raw(text);
    const auto lines = split_lines(text);
    std::map<std::pair<Index, Symbol>, Index> row_seen;
    std::map<std::pair<Index, Symbol>, Index> col_seen;
    for (const auto& t : raw.triples) {
        const auto line = lines[t.row].first;
        const auto column = tokenize(lines[t.row].second)[t.col].column;
        if (t.symbol >= raw.order) {
            throw NotPartialLatin("line " + std::to_string(line) + ", column " + std::to_string(column) +
                                  ": symbol " + std::to_string(t.symbol) + " outside [" +
                                  std::to_string(raw.order) + "]");
        }
        if (!row_seen.emplace(std::pair{t.row, t.symbol}, t.col).second) {
            throw NotPartialLatin("line " + std::to_string(line) + ", column " + std::to_string(column) +
                                  ": symbol " + std::to_string(t.symbol) + " repeats in its row");
        }
        if (!col_seen.emplace(std::pair{t.col, t.symbol}, t.row).second) {
            throw NotPartialLatin("line " + std::to_string(line) + ", column " + std::to_string(column) +
                                  ": symbol " + std::to_string(t.symbol) + " repeats in its column");
        }
    }
    return PartialLatinSquare(raw.order, std::move(raw.triples));
}

LatinSquare parse_latin_grid(std::string_view text) {
    auto raw = parse_grid_raw(text);
    if (raw.triples.size() != static_cast<std::size_t>(raw.order) * raw.order) {
        throw ParseError("latin square grid has empty cells");
    }
    std::vector<Symbol> grid;
    grid.reserve(raw.triples.size());
    for (const auto& t : raw.triples) {
        grid.push_back(t.symbol);
    }
    return LatinSquare(raw.order, std::move(grid));
}

void write_grid_row(std::ostream& out, std::span<const Symbol> row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) {
            out << ' ';
        }
        out << row[c];
    }
    out << '\n';
}

std::string emit_grid(const PartialLatinSquare& p) {
    std::ostringstream os;
    for (Index r = 0; r < p.order(); ++r) {
        for (Index c = 0; c < p.order(); ++c) {
            if (c) {
                os << ' ';
            }
            if (auto s = p.at(r, c)) {
                os << *s;
            } else {
                os << '.';
            }
        }
        os << '\n';
    }
    return os.str();
}

std::string emit_grid(const LatinSquare& square) {
    std::ostringstream os;
    for (Index r = 0; r < square.order(); ++r) {
        write_grid_row(os, square.row(r));
    }
    return os.str();
}

std::vector<Symbol> parse_grid_row(std::string_view line, std::size_t line_number) {
    const auto tokens = tokenize(line);
    std::vector<Symbol> row;
    row.reserve(tokens.size());
    for (const auto& token : tokens) {
        auto symbol = parse_symbol(token.text);
        if (!symbol) {
            throw ParseError("bad token \"" + std::string(token.text) + "\"", line_number, token.column);
        }
        row.push_back(*symbol);
    }
    return row;
}

PairDocument parse_pair_document(std::string_view json_text) {
    const auto doc = parse_json(json_text);
    PairDocument out;
    out.order = as_index(field(doc, "order"), "order");
    if (out.order == 0) {
        throw ParseError("order must be positive");
    }
    out.p = parse_triples(field(doc, "P"), "P");
    out.q = parse_triples(field(doc, "Q"), "Q");
    return out;
}

std::string emit_pair_document(const PartialLatinSquare& p, const PartialLatinSquare& q) {
    if (p.order() != q.order()) {
        throw OrderMismatch("pair documents need equal orders");
    }
    json doc;
    doc["order"] = p.order();
    doc["P"] = triples_to_json(p.triples());
    doc["Q"] = triples_to_json(q.triples());
    return doc.dump() + "\n";
}

std::string emit_manifest(const Embedding& embedding) {
    const auto& product = embedding.product();
    const auto& report = embedding.report();
    json doc;
    doc["format"] = kManifestFormat;
    doc["version"] = kManifestVersion;
    doc["mode"] = to_string(embedding.mode());
    doc["n"] = embedding.n();
    doc["m"] = embedding.m();
    doc["exponent"] = product.exponent();
    doc["order"] = product.order();
    doc["volume"] = report.volume;
    doc["distinct_symbols"] = report.distinct_symbols;
    doc["fresh_symbols"] = report.fresh_symbols;
    doc["A"] = rows_to_json(product.symbol_array().data(), product.side());
    doc["B"] = rows_to_json(product.quasigroup().data(), product.side());
    json trades = json::array();
    for (const auto& record : embedding.trades().records()) {
        const auto& s = record.spec;
        trades.push_back({s.r1, s.c1, s.r2, s.c2, s.a, s.b});
    }
    doc["trades"] = std::move(trades);
    return doc.dump() + "\n";
}

Embedding load_manifest(std::string_view json_text) {
    const auto doc = parse_json(json_text);
    if (!field(doc, "format").is_string() || field(doc, "format").get<std::string>() != kManifestFormat) {
        throw ParseError("not an embedding manifest");
    }
    if (as_index(field(doc, "version"), "version") != kManifestVersion) {
        throw ParseError("unsupported manifest version");
    }
    const auto& mode_field = field(doc, "mode");
    if (!mode_field.is_string()) {
        throw ParseError("mode must be a string");
    }
    const auto mode_name = mode_field.get<std::string>();
    if (mode_name != "general" && mode_name != "basic") {
        throw ParseError("unknown mode \"" + mode_name + "\"");
    }
    const auto mode = mode_name == "general" ? EmbeddingMode::General : EmbeddingMode::Basic;
    const Index n = as_index(field(doc, "n"), "n");
    const unsigned m = as_index(field(doc, "m"), "m");
    const unsigned exponent = as_index(field(doc, "exponent"), "exponent");
    if (exponent == 0 || exponent > 15) {
        throw ParseError("exponent out of range");
    }
    const Index side = Index{1} << exponent;

    const auto& trade_list = field(doc, "trades");
    if (!trade_list.is_array()) {
        throw ParseError("trades must be an array");
    }
    std::vector<TradeSpec> specs;
    for (const auto& item : trade_list) {
        if (!item.is_array() || item.size() != 6) {
            throw ParseError("trades entries must be [r1, c1, r2, c2, a, b]");
        }
        specs.push_back({as_index(item[0], "trade"), as_index(item[1], "trade"), as_index(item[2], "trade"),
                         as_index(item[3], "trade"), as_index(item[4], "trade"), as_index(item[5], "trade")});
    }

    EmbeddingReport report;
    report.mode = mode;
    report.n = n;
    report.volume = as_index(field(doc, "volume"), "volume");
    report.m = m;
    report.exponent = exponent;
    report.order = std::uint64_t{side} * side;
    report.bound = 16ull * n * n * n * n;
    report.distinct_symbols = as_index(field(doc, "distinct_symbols"), "distinct_symbols");
    report.fresh_symbols = as_index(field(doc, "fresh_symbols"), "fresh_symbols");
    if (as_index(field(doc, "order"), "order") != report.order) {
        throw ParseError("order does not match exponent");
    }
    SymbolArray a(exponent, parse_square_rows(field(doc, "A"), side, "A"));
    LatinSquare b(side, parse_square_rows(field(doc, "B"), side, "B"));
    return assemble_embedding(mode, n, m, std::move(a), std::move(b), specs, std::move(report));
}

std::string emit_report_json(const EmbeddingReport& report, bool with_timings) {
    json doc;
    doc["mode"] = to_string(report.mode);
    doc["n"] = report.n;
    doc["volume"] = report.volume;
    doc["m"] = report.m;
    doc["M"] = report.exponent;
    doc["order"] = report.order;
    doc["bound"] = report.bound;
    doc["bound_holds"] = report.bound_holds();
    doc["distinct_symbols"] = report.distinct_symbols;
    doc["fresh_symbols"] = report.fresh_symbols;
    doc["trades"] = report.trade_count;
    if (with_timings) {
        json timings = json::object();
        for (const auto& t : report.timings) {
            timings[t.stage] = t.seconds;
        }
        doc["timings"] = std::move(timings);
    }
    return doc.dump(2) + "\n";
}

std::string emit_trade_audit(const Embedding& embedding) {
    json out = json::array();
    for (const auto& record : embedding.audit_records()) {
        const auto& s = record.spec;
        json cells = json::array();
        for (const auto& c : record.cells) {
            cells.push_back({c.row, c.col, c.before, c.after});
        }
        out.push_back({{"trade", {s.r1, s.c1, s.r2, s.c2, s.a, s.b}}, {"cells", std::move(cells)}});
    }
    return out.dump(2) + "\n";
}

} // namespace olsembed
