#include "olsembed/core.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace olsembed {

namespace {

std::string fmt_triple(const Triple& t) {
    std::ostringstream os;
    os << '(' << t.row << ',' << t.col << ',' << t.symbol << ')';
    return os.str();
}

std::string fmt_cell(Index r, Index c) {
    std::ostringstream os;
    os << '(' << r << ',' << c << ')';
    return os.str();
}

// Dense bit set sized for order^2 keys; used by every exhaustive check.
class BitSet {
public:
    explicit BitSet(std::size_t bits) : words_((bits + 63) / 64, 0) {}
    // Returns the previous value.
    bool test_and_set(std::size_t i) {
        auto& w = words_[i / 64];
        const std::uint64_t mask = std::uint64_t{1} << (i % 64);
        const bool was = (w & mask) != 0;
        w |= mask;
        return was;
    }

private:
    std::vector<std::uint64_t> words_;
};

} // namespace

Index power_of_two(unsigned exponent) {
    if (exponent >= 32) {
        throw InvalidInput("exponent " + std::to_string(exponent) + " too large");
    }
    return Index{1} << exponent;
}

Index encode_pair(PairIndex pair, unsigned exponent) {
    if (2 * exponent >= 32) {
        throw InvalidInput("pair exponent " + std::to_string(exponent) + " too large");
    }
    const Index side = power_of_two(exponent);
    if (pair.hi >= side || pair.lo >= side) {
        std::ostringstream os;
        os << "pair (" << pair.hi << ',' << pair.lo << ") out of range for 2^" << exponent;
        throw InvalidInput(os.str());
    }
    return pair.hi * side + pair.lo;
}

PairIndex decode_pair(Index value, unsigned exponent) {
    if (2 * exponent >= 32) {
        throw InvalidInput("pair exponent " + std::to_string(exponent) + " too large");
    }
    const Index side = power_of_two(exponent);
    if (value / side >= side) {
        throw InvalidInput("encoded pair " + std::to_string(value) + " out of range");
    }
    return {value / side, value % side};
}

const char* to_string(ViolationKind kind) {
    switch (kind) {
    case ViolationKind::OutOfRange: return "out-of-range";
    case ViolationKind::CellConflict: return "cell-conflict";
    case ViolationKind::RowRepeat: return "row-repeat";
    case ViolationKind::ColumnRepeat: return "column-repeat";
    case ViolationKind::CellSetMismatch: return "cell-set mismatch";
    case ViolationKind::PairRepeat: return "pair-repeat";
    case ViolationKind::WrongSize: return "wrong-size";
    case ViolationKind::Missing: return "missing";
    case ViolationKind::Condition: return "condition";
    }
    return "unknown";
}

void Verdict::add(ViolationKind kind, std::string detail) {
    if (recorded_.size() < kMaxRecorded) {
        recorded_.push_back({kind, std::move(detail)});
    }
    ++total_;
}

void Verdict::merge(const Verdict& other) {
    for (const auto& v : other.recorded_) {
        if (recorded_.size() < kMaxRecorded) {
            recorded_.push_back(v);
        }
    }
    total_ += other.total_;
}

std::string Verdict::summary() const {
    if (ok()) {
        return "ok";
    }
    std::ostringstream os;
    os << total_ << " violation(s)";
    for (const auto& v : recorded_) {
        os << "\n  " << to_string(v.kind) << ": " << v.detail;
    }
    if (total_ > recorded_.size()) {
        os << "\n  ...";
    }
    return os.str();
}

Verdict check_partial_latin(Index order, std::span<const Triple> triples, Symbol symbol_bound) {
    Verdict verdict;
    std::map<std::pair<Index, Index>, const Triple*> by_cell;
    std::map<std::pair<Index, Symbol>, const Triple*> by_row;
    std::map<std::pair<Index, Symbol>, const Triple*> by_col;
    for (const auto& t : triples) {
        if (t.row >= order || t.col >= order || t.symbol >= symbol_bound) {
            verdict.add(ViolationKind::OutOfRange, fmt_triple(t));
            continue;
        }
        if (auto [it, fresh] = by_cell.try_emplace({t.row, t.col}, &t); !fresh) {
            verdict.add(ViolationKind::CellConflict, fmt_triple(*it->second) + " vs " + fmt_triple(t));
        }
        if (auto [it, fresh] = by_row.try_emplace({t.row, t.symbol}, &t); !fresh) {
            verdict.add(ViolationKind::RowRepeat, fmt_triple(*it->second) + " vs " + fmt_triple(t));
        }
        if (auto [it, fresh] = by_col.try_emplace({t.col, t.symbol}, &t); !fresh) {
            verdict.add(ViolationKind::ColumnRepeat, fmt_triple(*it->second) + " vs " + fmt_triple(t));
        }
    }
    return verdict;
}

bool is_partial_latin(Index order, std::span<const Triple> triples, Symbol symbol_bound) {
    return check_partial_latin(order, triples, symbol_bound).ok();
}

PartialLatinSquare::PartialLatinSquare(Index order, std::vector<Triple> triples)
    : PartialLatinSquare(order, std::move(triples), order) {}

PartialLatinSquare::PartialLatinSquare(Index order, std::vector<Triple> triples, Symbol symbol_bound)
    : order_(order), symbol_bound_(symbol_bound), triples_(std::move(triples)) {
    if (triples_.empty()) {
        throw EmptySquare("a partial latin square must be non-empty");
    }
    if (auto verdict = check_partial_latin(order_, triples_, symbol_bound_); !verdict) {
        throw InvalidInput("not a partial latin square: " + verdict.summary());
    }
    std::sort(triples_.begin(), triples_.end());
}

std::optional<Symbol> PartialLatinSquare::at(Index row, Index col) const {
    auto it = std::lower_bound(triples_.begin(), triples_.end(), Triple{row, col, 0});
    if (it != triples_.end() && it->row == row && it->col == col) {
        return it->symbol;
    }
    return std::nullopt;
}

std::size_t PartialLatinSquare::distinct_symbols() const {
    std::set<Symbol> seen;
    for (const auto& t : triples_) {
        seen.insert(t.symbol);
    }
    return seen.size();
}

Verdict check_latin(Index order, std::span<const Symbol> grid) {
    Verdict verdict;
    const std::size_t t = order;
    if (grid.size() != t * t) {
        verdict.add(ViolationKind::WrongSize, "expected " + std::to_string(t * t) + " cells, got " +
                                                  std::to_string(grid.size()));
        return verdict;
    }
    std::vector<std::uint32_t> row_seen(t, 0);
    std::vector<bool> col_seen(t * t, false); // col_seen[c * t + s]
    for (std::size_t r = 0; r < t; ++r) {
        const auto stamp = static_cast<std::uint32_t>(r + 1);
        for (std::size_t c = 0; c < t; ++c) {
            const Symbol s = grid[r * t + c];
            if (s >= order) {
                verdict.add(ViolationKind::OutOfRange, "symbol " + std::to_string(s) + " at " +
                                                           fmt_cell(static_cast<Index>(r), static_cast<Index>(c)));
                continue;
            }
            if (row_seen[s] == stamp) {
                verdict.add(ViolationKind::RowRepeat, "symbol " + std::to_string(s) + " repeats in row " +
                                                          std::to_string(r) + " at column " + std::to_string(c));
            }
            row_seen[s] = stamp;
            if (col_seen[c * t + s]) {
                verdict.add(ViolationKind::ColumnRepeat, "symbol " + std::to_string(s) + " repeats in column " +
                                                             std::to_string(c) + " at row " + std::to_string(r));
            }
            col_seen[c * t + s] = true;
        }
    }
    return verdict;
}

LatinSquare::LatinSquare(Index order, std::vector<Symbol> grid) : order_(order), grid_(std::move(grid)) {
    if (order_ == 0) {
        throw InvalidInput("latin square order must be positive");
    }
    if (auto verdict = check_latin(order_, grid_); !verdict) {
        throw InvalidInput("not a latin square: " + verdict.summary());
    }
}

LatinSquare LatinSquare::from_rows(const std::vector<std::vector<Symbol>>& rows) {
    std::vector<Symbol> grid;
    grid.reserve(rows.size() * rows.size());
    for (const auto& row : rows) {
        if (row.size() != rows.size()) {
            throw InvalidInput("ragged latin square rows");
        }
        grid.insert(grid.end(), row.begin(), row.end());
    }
    return LatinSquare(static_cast<Index>(rows.size()), std::move(grid));
}

LatinSquare LatinSquare::xor_square(unsigned exponent) {
    const Index side = power_of_two(exponent);
    std::vector<Symbol> grid(static_cast<std::size_t>(side) * side);
    for (Index r = 0; r < side; ++r) {
        for (Index c = 0; c < side; ++c) {
            grid[static_cast<std::size_t>(r) * side + c] = xor_mul(r, c);
        }
    }
    return LatinSquare(side, std::move(grid));
}

std::vector<Triple> LatinSquare::triples() const {
    std::vector<Triple> out;
    out.reserve(grid_.size());
    for (Index r = 0; r < order_; ++r) {
        for (Index c = 0; c < order_; ++c) {
            out.push_back({r, c, (*this)(r, c)});
        }
    }
    return out;
}

namespace {

Verdict check_pairs(Index order, std::span<const Triple> p, std::span<const Triple> q) {
    Verdict verdict;
    std::map<std::pair<Index, Index>, Symbol> q_cells;
    for (const auto& t : q) {
        q_cells.emplace(std::pair{t.row, t.col}, t.symbol);
    }
    std::set<std::pair<Index, Index>> p_cells;
    std::map<std::pair<Symbol, Symbol>, std::pair<Index, Index>> pairs;
    for (const auto& t : p) {
        if (t.row >= order || t.col >= order) {
            verdict.add(ViolationKind::OutOfRange, "P" + fmt_triple(t));
            continue;
        }
        p_cells.emplace(t.row, t.col);
        auto it = q_cells.find({t.row, t.col});
        if (it == q_cells.end()) {
            verdict.add(ViolationKind::CellSetMismatch, "cell " + fmt_cell(t.row, t.col) + " filled in P only");
            continue;
        }
        const std::pair<Symbol, Symbol> key{t.symbol, it->second};
        if (auto [prev, fresh] = pairs.try_emplace(key, std::pair{t.row, t.col}); !fresh) {
            verdict.add(ViolationKind::PairRepeat,
                        "pair (" + std::to_string(key.first) + ',' + std::to_string(key.second) + ") at " +
                            fmt_cell(prev->second.first, prev->second.second) + " and " +
                            fmt_cell(t.row, t.col));
        }
    }
    for (const auto& [cell, symbol] : q_cells) {
        if (!p_cells.contains(cell)) {
            verdict.add(ViolationKind::CellSetMismatch,
                        "cell " + fmt_cell(cell.first, cell.second) + " filled in Q only");
        }
    }
    return verdict;
}

} // namespace

Verdict check_orthogonal_partial(Index order, std::span<const Triple> p, std::span<const Triple> q) {
    Verdict verdict = check_partial_latin(order, p, order);
    verdict.merge(check_partial_latin(order, q, order));
    verdict.merge(check_pairs(order, p, q));
    return verdict;
}

Verdict check_orthogonal_partial(const PartialLatinSquare& p, const PartialLatinSquare& q) {
    if (p.order() != q.order()) {
        throw OrderMismatch("orders " + std::to_string(p.order()) + " and " + std::to_string(q.order()));
    }
    // Both are latin by construction; P* may carry symbols beyond the order.
    return check_pairs(p.order(), p.triples(), q.triples());
}

bool are_orthogonal_partial(const PartialLatinSquare& p, const PartialLatinSquare& q) {
    return check_orthogonal_partial(p, q).ok();
}

Verdict check_orthogonal_latin(const LatinSquare& a, const LatinSquare& b) {
    if (a.order() != b.order()) {
        throw OrderMismatch("orders " + std::to_string(a.order()) + " and " + std::to_string(b.order()));
    }
    Verdict verdict;
    const std::size_t t = a.order();
    BitSet seen(t * t);
    for (Index r = 0; r < a.order(); ++r) {
        for (Index c = 0; c < a.order(); ++c) {
            const Symbol x = a(r, c);
            const Symbol y = b(r, c);
            if (seen.test_and_set(static_cast<std::size_t>(x) * t + y)) {
                verdict.add(ViolationKind::PairRepeat, "pair (" + std::to_string(x) + ',' + std::to_string(y) +
                                                           ") repeats at " + fmt_cell(r, c));
            }
        }
    }
    return verdict;
}

bool are_orthogonal_latin(const LatinSquare& a, const LatinSquare& b) {
    return check_orthogonal_latin(a, b).ok();
}

Verdict check_transversal(const LatinSquare& square, std::span<const Triple> cells) {
    for (const auto& t : cells) {
        if (t.row >= square.order() || t.col >= square.order() || square(t.row, t.col) != t.symbol) {
            throw InvalidInput("triple " + fmt_triple(t) + " is not an entry of the square");
        }
    }
    Verdict verdict;
    if (cells.size() != square.order()) {
        verdict.add(ViolationKind::WrongSize, std::to_string(cells.size()) + " cells for order " +
                                                  std::to_string(square.order()));
    }
    std::set<Index> rows;
    std::set<Index> cols;
    std::set<Symbol> symbols;
    for (const auto& t : cells) {
        if (!rows.insert(t.row).second) {
            verdict.add(ViolationKind::RowRepeat, "row " + std::to_string(t.row));
        }
        if (!cols.insert(t.col).second) {
            verdict.add(ViolationKind::ColumnRepeat, "column " + std::to_string(t.col));
        }
        if (!symbols.insert(t.symbol).second) {
            verdict.add(ViolationKind::PairRepeat, "symbol " + std::to_string(t.symbol) + " repeats");
        }
    }
    return verdict;
}

bool is_transversal(const LatinSquare& square, std::span<const Triple> cells) {
    return check_transversal(square, cells).ok();
}

bool is_permutation(std::span<const Index> perm) {
    std::vector<bool> seen(perm.size(), false);
    for (Index v : perm) {
        if (v >= perm.size() || seen[v]) {
            return false;
        }
        seen[v] = true;
    }
    return true;
}

Permutation identity_permutation(Index size) {
    Permutation perm(size);
    std::iota(perm.begin(), perm.end(), Index{0});
    return perm;
}

Permutation inverse_permutation(std::span<const Index> perm) {
    if (!is_permutation(perm)) {
        throw InvalidInput("not a permutation");
    }
    Permutation inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        inv[perm[i]] = static_cast<Index>(i);
    }
    return inv;
}

namespace {

// Validates an optional injection [domain] -> [codomain].
void require_injection(std::span<const Index> map, Index domain, Index codomain, const char* what) {
    if (map.empty()) {
        return;
    }
    if (map.size() < domain) {
        throw InvalidInput(std::string(what) + " map covers " + std::to_string(map.size()) + " of " +
                           std::to_string(domain) + " values");
    }
    std::set<Index> image;
    for (std::size_t i = 0; i < domain; ++i) {
        if (map[i] >= codomain) {
            throw InvalidInput(std::string(what) + " map sends " + std::to_string(i) + " out of range");
        }
        if (!image.insert(map[i]).second) {
            throw InvalidInput(std::string(what) + " map is not injective at " + std::to_string(map[i]));
        }
    }
}

Index apply_map(std::span<const Index> map, Index v) { return map.empty() ? v : map[v]; }

} // namespace

bool contains(const PartialLatinSquare& p, const LatinSquare& square, const EmbeddingMaps& maps) {
    require_injection(maps.rows, p.order(), square.order(), "row");
    require_injection(maps.cols, p.order(), square.order(), "column");
    require_injection(maps.symbols, p.symbol_bound(), square.order(), "symbol");
    for (const auto& t : p.triples()) {
        const Index r = apply_map(maps.rows, t.row);
        const Index c = apply_map(maps.cols, t.col);
        const Symbol s = apply_map(maps.symbols, t.symbol);
        if (r >= square.order() || c >= square.order() || square(r, c) != s) {
            return false;
        }
    }
    return true;
}

LatinSquare apply_isotopy(const LatinSquare& square, std::span<const Index> row_perm,
                          std::span<const Index> col_perm, std::span<const Index> sym_perm) {
    const Index t = square.order();
    if (row_perm.size() != t || col_perm.size() != t || sym_perm.size() != t || !is_permutation(row_perm) ||
        !is_permutation(col_perm) || !is_permutation(sym_perm)) {
        throw InvalidInput("isotopy requires three permutations of [" + std::to_string(t) + "]");
    }
    std::vector<Symbol> grid(static_cast<std::size_t>(t) * t);
    for (Index r = 0; r < t; ++r) {
        for (Index c = 0; c < t; ++c) {
            grid[static_cast<std::size_t>(row_perm[r]) * t + col_perm[c]] = sym_perm[square(r, c)];
        }
    }
    return LatinSquare(t, std::move(grid));
}

} // namespace olsembed
