#pragma once

#include <array>
#include <span>
#include <vector>

#include "olsembed/core.hpp"
#include "olsembed/product.hpp"

namespace olsembed {

/// Two cells (r1, c1), (r2, c2) of the symbol array that should end up
/// holding the same symbol in the top-left block of the traded square,
/// together with their B entries a = B(r1, c1) and b = B(r2, c2), captured
/// when the spec is made.
struct TradeSpec {
    GroupElement r1 = 0;
    GroupElement c1 = 0;
    GroupElement r2 = 0;
    GroupElement c2 = 0;
    Symbol a = 0;
    Symbol b = 0;

    static TradeSpec from_quasigroup(GroupElement r1, GroupElement c1, GroupElement r2, GroupElement c2,
                                     const LatinSquare& b);
    GroupElement delta() const { return a ^ b; }

    friend auto operator<=>(const TradeSpec&, const TradeSpec&) = default;
};

/// Conditions C1-C4 on two or three same-symbol triples, against the
/// quasigroup B:
///   C1 rows strictly increasing in the given order,
///   C2 columns pairwise distinct,
///   C3 B(r_i, c_i) pairwise distinct,
///   C4 r_i ^ r_j != c_i ^ c_k whenever i != j and i != k.
/// Throws InvalidInput if the triples do not share a symbol, there are not 2
/// or 3 of them, or a coordinate falls outside B.
Verdict check_conditions(std::span<const Triple> triples, const LatinSquare& b);
bool satisfies_conditions(std::span<const Triple> triples, const LatinSquare& b);

/// C4 alone; needs no quasigroup.
Verdict check_coset_condition(std::span<const Triple> triples);

/// Positions of the two intercalates, in the order
///   (R1,C1) (R1,C2) (R2,C1) (R2,C2) | (R3,C3) (R3,C4) (R4,C3) (R4,C4)
/// with x = c1^c2, y = r1^r2, e = a^b and
///   R1 = (0, r2)     R2 = (x, r1)     R3 = (x^e, r2^e)   R4 = (e, r1^e)
///   C1 = (0, c2)     C2 = (y, c1)     C3 = (y^e, c2^e)   C4 = (e, c1^e)
/// Throws InvalidInput if r1 == r2, c1 == c2, a == b, a component is out of
/// range, or the eight cells do not sit in eight distinct 2^M blocks.
std::array<Cell, 8> intercalate_positions(const TradeSpec& spec, unsigned exponent);

/// The eight square_a entries at intercalate_positions, read from the table:
/// A(r2,c2) on (R1,C1) (R2,C2) (R3,C4) (R4,C3), A(r1,c1) on the rest.
std::array<Triple, 8> intercalate_cells(const TradeSpec& spec, const SymbolArray& a);

/// The eight square_b entries at intercalate_positions, from the closed-form
/// table rather than from square_b itself.
std::array<Triple, 8> b_entries(const TradeSpec& spec, unsigned exponent);

/// Swaps the two symbols inside each of the two 2x2 intercalates.
std::array<Triple, 8> disjoint_mate(std::span<const Triple, 8> cells);

/// True iff the two eight-cell configurations share no cell.
bool specs_disjoint(const TradeSpec& s1, const TradeSpec& s2, unsigned exponent);

struct TradeCellRecord {
    Index row = 0;
    Index col = 0;
    Symbol before = 0;
    Symbol after = 0;

    friend auto operator<=>(const TradeCellRecord&, const TradeCellRecord&) = default;
};

struct TradeRecord {
    TradeSpec spec;
    std::array<TradeCellRecord, 8> cells; // sorted by (row, col)
};

/// Ordered list of applied trades and the resulting cell replacements.
class TradeOverlay {
public:
    /// Replaces both intercalates of `spec` by their disjoint mates. Throws
    /// TradeCollision if any of the eight cells was already traded.
    void apply(const TradeSpec& spec, const SymbolArray& a);

    const CellOverlay& cells() const { return cells_; }
    std::span<const TradeRecord> records() const { return records_; }
    std::size_t trade_count() const { return records_.size(); }
    bool empty() const { return records_.empty(); }

private:
    CellOverlay cells_;
    std::vector<TradeRecord> records_;
};

TradeOverlay apply_trade(TradeOverlay overlay, const TradeSpec& spec, const SymbolArray& a);

} // namespace olsembed
