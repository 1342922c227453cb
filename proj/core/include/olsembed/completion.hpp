#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "olsembed/core.hpp"

namespace olsembed {

/// Dense rows x cols array of symbols, row-major.
class SymbolGrid {
public:
    SymbolGrid() = default;
    SymbolGrid(Index rows, Index cols, Symbol fill = 0)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}
    static SymbolGrid from_rows(const std::vector<std::vector<Symbol>>& rows);

    Index rows() const { return rows_; }
    Index cols() const { return cols_; }
    Symbol& operator()(Index r, Index c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    Symbol operator()(Index r, Index c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    std::span<const Symbol> row(Index r) const {
        return std::span<const Symbol>(data_).subspan(static_cast<std::size_t>(r) * cols_, cols_);
    }
    std::span<const Symbol> data() const { return data_; }

    friend bool operator==(const SymbolGrid&, const SymbolGrid&) = default;

private:
    Index rows_ = 0;
    Index cols_ = 0;
    std::vector<Symbol> data_;
};

/// k x t array over [t] whose rows are permutations of [t] and whose columns
/// are repeat-free.
class LatinRectangle {
public:
    /// Throws InvalidInput if `grid` is not a latin rectangle of width `order`.
    LatinRectangle(Index order, SymbolGrid grid);

    Index order() const { return order_; }
    Index rows() const { return grid_.rows(); }
    const SymbolGrid& grid() const { return grid_; }

private:
    Index order_;
    SymbolGrid grid_;
};

// ---------------------------------------------------------------------------
// Bipartite matching
// ---------------------------------------------------------------------------

class BipartiteInstance {
public:
    /// Throws InvalidInput on out-of-range or duplicate edges. Adjacency lists
    /// are kept sorted ascending.
    BipartiteInstance(Index left_count, Index right_count, std::vector<std::vector<Index>> adjacency);

    Index left_count() const { return left_count_; }
    Index right_count() const { return right_count_; }
    std::span<const Index> neighbours(Index left) const { return adjacency_[left]; }

private:
    Index left_count_;
    Index right_count_;
    std::vector<std::vector<Index>> adjacency_;
};

struct Matching {
    static constexpr Index kUnmatched = std::numeric_limits<Index>::max();

    std::vector<Index> left_to_right;
    std::size_t size = 0;
};

/// Maximum matching by Hopcroft-Karp over a greedy seed. Vertices and
/// neighbours are always scanned in ascending index, so the result is a pure
/// function of the instance.
Matching max_matching(const BipartiteInstance& graph);

// ---------------------------------------------------------------------------
// Latin square completion
// ---------------------------------------------------------------------------

/// Fills every empty cell of `p` from [t] so that no row or column repeats a
/// symbol. Rows are processed top to bottom, each by one bipartite matching
/// from empty cells to admissible symbols. Requires t >= 2 * order(p).
SymbolGrid fill_block(const PartialLatinSquare& p, Index t);

/// Extends an n x n row/column-repeat-free block over [t] to an n x t latin
/// rectangle. The missing symbols of each row form a bipartite multigraph
/// (rows vs symbols) of maximum degree t - n; padding it with t - n dummy rows
/// makes it regular, and each of its t - n perfect matchings becomes one new
/// column.
LatinRectangle extend_to_rectangle(const SymbolGrid& block, Index t);

/// Completes a latin rectangle to a latin square by adding rows one at a time;
/// each new row is a perfect matching between columns and the symbols they
/// still miss.
LatinSquare ryser_complete(const LatinRectangle& rect);

/// Embeds `p` in the top-left corner of a latin square of order t >= 2n.
LatinSquare embed_pls(const PartialLatinSquare& p, Index t);

/// The unique b with square(a, b) == target, by row scan.
Symbol left_divide(const LatinSquare& square, Index a, Symbol target);

/// Precomputed left division for O(1) repeated queries.
class LeftDivisionTable {
public:
    explicit LeftDivisionTable(const LatinSquare& square);
    Index operator()(Index a, Symbol target) const {
        return table_[static_cast<std::size_t>(a) * order_ + target];
    }

private:
    Index order_;
    std::vector<Index> table_;
};

} // namespace olsembed
