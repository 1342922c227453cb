#include "olsembed/trades.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>

namespace olsembed {

namespace {

std::string describe(const TradeSpec& s) {
    std::ostringstream os;
    os << "trade(r1=" << s.r1 << " c1=" << s.c1 << " r2=" << s.r2 << " c2=" << s.c2 << " a=" << s.a
       << " b=" << s.b << ')';
    return os.str();
}

void require_same_symbol(std::span<const Triple> triples) {
    if (triples.size() != 2 && triples.size() != 3) {
        throw InvalidInput("conditions apply to 2 or 3 triples, got " + std::to_string(triples.size()));
    }
    for (const auto& t : triples) {
        if (t.symbol != triples.front().symbol) {
            throw InvalidInput("conditions apply to triples sharing one symbol");
        }
    }
}

// Block coordinates (row.hi, col.hi) of the eight cells.
bool blocks_distinct(const std::array<Cell, 8>& cells, unsigned exponent) {
    std::set<std::pair<Index, Index>> blocks;
    for (const auto& c : cells) {
        blocks.emplace(c.row >> exponent, c.col >> exponent);
    }
    return blocks.size() == cells.size();
}

} // namespace

TradeSpec TradeSpec::from_quasigroup(GroupElement r1, GroupElement c1, GroupElement r2, GroupElement c2,
                                     const LatinSquare& b) {
    const Index t = b.order();
    if (r1 >= t || c1 >= t || r2 >= t || c2 >= t) {
        throw InvalidInput("trade coordinates outside the quasigroup");
    }
    return {r1, c1, r2, c2, b(r1, c1), b(r2, c2)};
}

Verdict check_coset_condition(std::span<const Triple> triples) {
    require_same_symbol(triples);
    Verdict verdict;
    const std::size_t k = triples.size();
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            for (std::size_t l = 0; l < k; ++l) {
                if (j == i || l == i) {
                    continue;
                }
                const auto rows = triples[i].row ^ triples[j].row;
                const auto cols = triples[i].col ^ triples[l].col;
                if (rows == cols) {
                    std::ostringstream os;
                    os << "C4: r" << i + 1 << "^r" << j + 1 << " = c" << i + 1 << "^c" << l + 1 << " = " << rows;
                    verdict.add(ViolationKind::Condition, os.str());
                }
            }
        }
    }
    return verdict;
}

Verdict check_conditions(std::span<const Triple> triples, const LatinSquare& b) {
    require_same_symbol(triples);
    for (const auto& t : triples) {
        if (t.row >= b.order() || t.col >= b.order()) {
            throw InvalidInput("triple outside the quasigroup of order " + std::to_string(b.order()));
        }
    }
    Verdict verdict;
    const std::size_t k = triples.size();
    for (std::size_t i = 0; i + 1 < k; ++i) {
        if (triples[i].row >= triples[i + 1].row) {
            verdict.add(ViolationKind::Condition, "C1: rows not strictly increasing at position " +
                                                      std::to_string(i + 1));
        }
    }
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            if (triples[i].col == triples[j].col) {
                verdict.add(ViolationKind::Condition, "C2: c" + std::to_string(i + 1) + " = c" + std::to_string(j + 1));
            }
            if (b(triples[i].row, triples[i].col) == b(triples[j].row, triples[j].col)) {
                verdict.add(ViolationKind::Condition,
                            "C3: B values of triples " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                " agree");
            }
        }
    }
    verdict.merge(check_coset_condition(triples));
    return verdict;
}

bool satisfies_conditions(std::span<const Triple> triples, const LatinSquare& b) {
    return check_conditions(triples, b).ok();
}

std::array<Cell, 8> intercalate_positions(const TradeSpec& spec, unsigned exponent) {
    const Index side = power_of_two(exponent);
    if (spec.r1 >= side || spec.c1 >= side || spec.r2 >= side || spec.c2 >= side || spec.a >= side ||
        spec.b >= side) {
        throw InvalidInput(describe(spec) + " out of range for 2^" + std::to_string(exponent));
    }
    if (spec.r1 == spec.r2 || spec.c1 == spec.c2 || spec.a == spec.b) {
        throw InvalidInput(describe(spec) + " needs distinct rows, columns and B values");
    }
    const GroupElement x = spec.c1 ^ spec.c2;
    const GroupElement y = spec.r1 ^ spec.r2;
    const GroupElement e = spec.delta();
    auto at = [exponent](GroupElement hi, GroupElement lo) { return (hi << exponent) | lo; };
    const Index rows[4] = {at(0, spec.r2), at(x, spec.r1), at(x ^ e, spec.r2 ^ e), at(e, spec.r1 ^ e)};
    const Index cols[4] = {at(0, spec.c2), at(y, spec.c1), at(y ^ e, spec.c2 ^ e), at(e, spec.c1 ^ e)};
    const std::array<Cell, 8> cells{{{rows[0], cols[0]},
                                     {rows[0], cols[1]},
                                     {rows[1], cols[0]},
                                     {rows[1], cols[1]},
                                     {rows[2], cols[2]},
                                     {rows[2], cols[3]},
                                     {rows[3], cols[2]},
                                     {rows[3], cols[3]}}};
    if (!blocks_distinct(cells, exponent)) {
        throw InvalidInput(describe(spec) + " puts two cells in one block (r1^r2 = c1^c2 = a^b)");
    }
    return cells;
}

std::array<Triple, 8> intercalate_cells(const TradeSpec& spec, const SymbolArray& a) {
    const auto cells = intercalate_positions(spec, a.exponent());
    const Symbol first = a(spec.r1, spec.c1);
    const Symbol second = a(spec.r2, spec.c2);
    const Symbol symbols[8] = {second, first, first, second, first, second, second, first};
    std::array<Triple, 8> out;
    for (std::size_t i = 0; i < 8; ++i) {
        out[i] = {cells[i].row, cells[i].col, symbols[i]};
    }
    return out;
}

std::array<Triple, 8> b_entries(const TradeSpec& spec, unsigned exponent) {
    const auto cells = intercalate_positions(spec, exponent);
    const GroupElement x = spec.c1 ^ spec.c2;
    const GroupElement y = spec.r1 ^ spec.r2;
    const PairIndex symbols[8] = {
        {0, spec.b}, {y, spec.a}, {x, x ^ spec.a}, {x ^ y, x ^ spec.b},
        {x ^ y, x ^ spec.b}, {x, x ^ spec.a}, {y, spec.a}, {0, spec.b},
    };
    std::array<Triple, 8> out;
    for (std::size_t i = 0; i < 8; ++i) {
        out[i] = {cells[i].row, cells[i].col, encode_pair(symbols[i], exponent)};
    }
    return out;
}

std::array<Triple, 8> disjoint_mate(std::span<const Triple, 8> cells) {
    std::array<Triple, 8> out;
    for (std::size_t g = 0; g < 8; g += 4) {
        const Symbol z1 = cells[g].symbol;
        const Symbol z2 = cells[g + 1].symbol;
        const bool shaped = cells[g].row == cells[g + 1].row && cells[g + 2].row == cells[g + 3].row &&
                            cells[g].col == cells[g + 2].col && cells[g + 1].col == cells[g + 3].col &&
                            cells[g + 2].symbol == z2 && cells[g + 3].symbol == z1 && z1 != z2;
        if (!shaped) {
            throw InvalidInput("cells do not form two intercalates");
        }
        for (std::size_t i = g; i < g + 4; ++i) {
            out[i] = cells[i];
            out[i].symbol = cells[i].symbol == z1 ? z2 : z1;
        }
    }
    return out;
}

bool specs_disjoint(const TradeSpec& s1, const TradeSpec& s2, unsigned exponent) {
    const auto a = intercalate_positions(s1, exponent);
    const auto b = intercalate_positions(s2, exponent);
    for (const auto& c : a) {
        if (std::find(b.begin(), b.end(), c) != b.end()) {
            return false;
        }
    }
    return true;
}

void TradeOverlay::apply(const TradeSpec& spec, const SymbolArray& a) {
    const auto before = intercalate_cells(spec, a);
    for (const auto& t : before) {
        if (cells_.contains(t.cell())) {
            throw TradeCollision(describe(spec) + " reuses traded cell (" + std::to_string(t.row) + ',' +
                                 std::to_string(t.col) + ")");
        }
    }
    const auto after = disjoint_mate(before);
    TradeRecord record{spec, {}};
    for (std::size_t i = 0; i < 8; ++i) {
        cells_.insert(after[i].cell(), after[i].symbol);
        record.cells[i] = {before[i].row, before[i].col, before[i].symbol, after[i].symbol};
    }
    std::sort(record.cells.begin(), record.cells.end());
    records_.push_back(record);
}

TradeOverlay apply_trade(TradeOverlay overlay, const TradeSpec& spec, const SymbolArray& a) {
    overlay.apply(spec, a);
    return overlay;
}

} // namespace olsembed
