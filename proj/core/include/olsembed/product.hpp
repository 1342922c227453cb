#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "olsembed/completion.hpp"
#include "olsembed/core.hpp"

namespace olsembed {

/// Largest product order that `materialize` will build densely.
inline constexpr Index kDenseOrderLimit = 4096;

/// 2^M x 2^M array holding every symbol of [2^{2M}] exactly once.
class SymbolArray {
public:
    /// Throws InvalidInput unless `grid` is a permutation of [2^{2M}].
    SymbolArray(unsigned exponent, std::vector<Symbol> grid);

    unsigned exponent() const { return exponent_; }
    Index side() const { return side_; }
    Symbol operator()(Index row, Index col) const { return grid_[static_cast<std::size_t>(row) * side_ + col]; }
    Cell locate(Symbol symbol) const { return where_[symbol]; }
    std::span<const Symbol> data() const { return grid_; }

    friend bool operator==(const SymbolArray& a, const SymbolArray& b) {
        return a.exponent_ == b.exponent_ && a.grid_ == b.grid_;
    }

private:
    unsigned exponent_;
    Index side_;
    std::vector<Symbol> grid_;
    std::vector<Cell> where_;
};

/// Places the distinct-symbol square `pstar` (order <= 2^M, symbols < 2^{2M})
/// and fills the remaining cells row-major with the unused symbols ascending.
SymbolArray build_symbol_array(const PartialLatinSquare& pstar, unsigned exponent);

/// Sparse cell -> symbol replacements over the flattened product index space.
class CellOverlay {
public:
    /// Returns false (and changes nothing) if the cell is already present.
    bool insert(Cell cell, Symbol symbol) { return cells_.emplace(cell, symbol).second; }
    std::optional<Symbol> lookup(Index row, Index col) const {
        auto it = cells_.find(Cell{row, col});
        return it == cells_.end() ? std::nullopt : std::optional<Symbol>(it->second);
    }
    bool contains(Cell cell) const { return cells_.contains(cell); }
    bool empty() const { return cells_.empty(); }
    std::size_t size() const { return cells_.size(); }
    const std::map<Cell, Symbol>& entries() const { return cells_; }

private:
    std::map<Cell, Symbol> cells_;
};

/// The order-2^{2M} squares built from the symbol array A and the latin square
/// B of order 2^M. With rows (p, r) and columns (q, c) flattened by
/// encode_pair,
///
///   square_a((p,r),(q,c)) = A[q^r][p^c]
///   square_b((p,r),(q,c)) = encode_pair(p^q, p ^ B[q^r][p^c])
///
/// where ^ is XOR. An optional overlay replaces entries of square_a only.
class ProductSquarePair {
public:
    ProductSquarePair(SymbolArray a, LatinSquare b, CellOverlay overlay = {});

    unsigned exponent() const { return a_.exponent(); }
    Index side() const { return a_.side(); }
    Index order() const { return order_; }
    const SymbolArray& symbol_array() const { return a_; }
    const LatinSquare& quasigroup() const { return b_; }
    const CellOverlay& overlay() const { return overlay_; }
    ProductSquarePair with_overlay(CellOverlay overlay) const;

    /// Untraded value of square_a.
    Symbol base_cell_a(PairIndex row, PairIndex col) const { return a_(col.hi ^ row.lo, row.hi ^ col.lo); }
    Symbol cell_a(PairIndex row, PairIndex col) const;
    Symbol cell_b(PairIndex row, PairIndex col) const;
    Symbol cell_a(Index row, Index col) const { return cell_a(split(row), split(col)); }
    Symbol cell_b(Index row, Index col) const { return cell_b(split(row), split(col)); }

    void row_a(Index row, std::span<Symbol> out) const;
    void row_b(Index row, std::span<Symbol> out) const;

    /// The 2^{2M} cells of square_a whose square_b symbol is (z, d), each
    /// found by left division in B. Requires an empty overlay.
    std::vector<Triple> transversal_cells(GroupElement z, GroupElement d) const;

    /// Dense copies of both squares; throws InvalidInput above kDenseOrderLimit.
    std::pair<LatinSquare, LatinSquare> materialize() const;

    PairIndex split(Index flat) const { return {flat >> exponent(), flat & (side() - 1)}; }
    Index join(PairIndex pair) const { return (pair.hi << exponent()) | pair.lo; }

private:
    SymbolArray a_;
    LatinSquare b_;
    LeftDivisionTable divide_;
    CellOverlay overlay_;
    Index order_;
};

} // namespace olsembed
