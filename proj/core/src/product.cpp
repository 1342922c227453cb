#include "olsembed/product.hpp"

#include <algorithm>
#include <string>

namespace olsembed {

namespace {

constexpr unsigned kMaxExponent = 15;

void require_exponent(unsigned exponent) {
    if (exponent == 0 || exponent > kMaxExponent) {
        throw InvalidInput("product exponent must be in [1, " + std::to_string(kMaxExponent) + "], got " +
                           std::to_string(exponent));
    }
}

} // namespace

SymbolArray::SymbolArray(unsigned exponent, std::vector<Symbol> grid)
    : exponent_(exponent), side_(0), grid_(std::move(grid)) {
    require_exponent(exponent);
    side_ = power_of_two(exponent);
    const std::size_t count = static_cast<std::size_t>(side_) * side_;
    if (grid_.size() != count) {
        throw InvalidInput("symbol array needs " + std::to_string(count) + " cells");
    }
    where_.assign(count, Cell{side_, side_});
    for (Index r = 0; r < side_; ++r) {
        for (Index c = 0; c < side_; ++c) {
            const Symbol s = (*this)(r, c);
            if (s >= count || where_[s].row != side_) {
                throw InvalidInput("symbol array repeats or overflows at (" + std::to_string(r) + ',' +
                                   std::to_string(c) + ")");
            }
            where_[s] = {r, c};
        }
    }
}

SymbolArray build_symbol_array(const PartialLatinSquare& pstar, unsigned exponent) {
    require_exponent(exponent);
    const Index side = power_of_two(exponent);
    const std::size_t count = static_cast<std::size_t>(side) * side;
    constexpr Symbol kUnset = std::numeric_limits<Symbol>::max();
    std::vector<Symbol> grid(count, kUnset);
    std::vector<bool> used(count, false);
    for (const auto& t : pstar.triples()) {
        if (t.row >= side || t.col >= side || t.symbol >= count) {
            throw InvalidInput("P* entry (" + std::to_string(t.row) + ',' + std::to_string(t.col) + ',' +
                               std::to_string(t.symbol) + ") does not fit a 2^" + std::to_string(exponent) +
                               " array");
        }
        if (used[t.symbol]) {
            throw InvalidInput("P* repeats symbol " + std::to_string(t.symbol));
        }
        used[t.symbol] = true;
        grid[static_cast<std::size_t>(t.row) * side + t.col] = t.symbol;
    }
    Symbol next = 0;
    for (auto& cell : grid) {
        if (cell != kUnset) {
            continue;
        }
        while (used[next]) {
            ++next;
        }
        cell = next;
        used[next] = true;
    }
    return SymbolArray(exponent, std::move(grid));
}

ProductSquarePair::ProductSquarePair(SymbolArray a, LatinSquare b, CellOverlay overlay)
    : a_(std::move(a)), b_(std::move(b)), divide_(b_), overlay_(std::move(overlay)), order_(0) {
    if (b_.order() != a_.side()) {
        throw OrderMismatch("B has order " + std::to_string(b_.order()) + ", A has side " +
                            std::to_string(a_.side()));
    }
    order_ = a_.side() * a_.side();
    for (const auto& [cell, symbol] : overlay_.entries()) {
        if (cell.row >= order_ || cell.col >= order_ || symbol >= order_) {
            throw InvalidInput("overlay entry outside the product square");
        }
    }
}

ProductSquarePair ProductSquarePair::with_overlay(CellOverlay overlay) const {
    return ProductSquarePair(a_, b_, std::move(overlay));
}

Symbol ProductSquarePair::cell_a(PairIndex row, PairIndex col) const {
    if (!overlay_.empty()) {
        if (auto s = overlay_.lookup(join(row), join(col))) {
            return *s;
        }
    }
    return base_cell_a(row, col);
}

Symbol ProductSquarePair::cell_b(PairIndex row, PairIndex col) const {
    const GroupElement p = row.hi;
    const Symbol inner = b_(col.hi ^ row.lo, p ^ col.lo);
    return join({p ^ col.hi, p ^ inner});
}

void ProductSquarePair::row_a(Index row, std::span<Symbol> out) const {
    const auto [p, r] = split(row);
    const Index side = a_.side();
    for (Index q = 0; q < side; ++q) {
        for (Index c = 0; c < side; ++c) {
            out[static_cast<std::size_t>(q) * side + c] = a_(q ^ r, p ^ c);
        }
    }
    auto it = overlay_.entries().lower_bound(Cell{row, 0});
    for (; it != overlay_.entries().end() && it->first.row == row; ++it) {
        out[it->first.col] = it->second;
    }
}

void ProductSquarePair::row_b(Index row, std::span<Symbol> out) const {
    const auto [p, r] = split(row);
    const Index side = a_.side();
    for (Index q = 0; q < side; ++q) {
        for (Index c = 0; c < side; ++c) {
            out[static_cast<std::size_t>(q) * side + c] = join({p ^ q, p ^ b_(q ^ r, p ^ c)});
        }
    }
}

std::vector<Triple> ProductSquarePair::transversal_cells(GroupElement z, GroupElement d) const {
    if (!overlay_.empty()) {
        throw InvalidInput("transversals are defined on the untraded square");
    }
    const Index side = a_.side();
    if (z >= side || d >= side) {
        throw InvalidInput("transversal label out of range");
    }
    std::vector<Triple> cells;
    cells.reserve(order_);
    for (GroupElement p = 0; p < side; ++p) {
        const GroupElement q = p ^ z;
        for (GroupElement r = 0; r < side; ++r) {
            // p ^ B[q^r][p^c] = d  <=>  p^c = B[q^r] \ (p^d)
            const GroupElement c = p ^ divide_(q ^ r, p ^ d);
            const PairIndex row{p, r};
            const PairIndex col{q, c};
            cells.push_back({join(row), join(col), base_cell_a(row, col)});
        }
    }
    return cells;
}

std::pair<LatinSquare, LatinSquare> ProductSquarePair::materialize() const {
    if (order_ > kDenseOrderLimit) {
        throw InvalidInput("order " + std::to_string(order_) + " exceeds the dense limit " +
                           std::to_string(kDenseOrderLimit) + "; use lazy cell access");
    }
    const std::size_t t = order_;
    std::vector<Symbol> a(t * t);
    std::vector<Symbol> b(t * t);
    for (Index row = 0; row < order_; ++row) {
        row_a(row, std::span<Symbol>(a).subspan(row * t, t));
        row_b(row, std::span<Symbol>(b).subspan(row * t, t));
    }
    return {LatinSquare(order_, std::move(a)), LatinSquare(order_, std::move(b))};
}

} // namespace olsembed
