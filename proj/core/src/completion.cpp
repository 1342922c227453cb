#include <algorithm>
#include <sstream>
#include <string>

#include "olsembed/completion.hpp"

namespace olsembed {

namespace {

constexpr Symbol kEmpty = std::numeric_limits<Symbol>::max();

std::string describe_row(std::span<const Symbol> row) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < row.size(); ++i) {
        os << (i ? " " : "");
        if (row[i] == kEmpty) {
            os << '.';
        } else {
            os << row[i];
        }
    }
    os << ']';
    return os.str();
}

} // namespace

SymbolGrid SymbolGrid::from_rows(const std::vector<std::vector<Symbol>>& rows) {
    const Index cols = rows.empty() ? 0 : static_cast<Index>(rows.front().size());
    SymbolGrid grid(static_cast<Index>(rows.size()), cols);
    for (Index r = 0; r < grid.rows(); ++r) {
        if (rows[r].size() != cols) {
            throw InvalidInput("ragged grid at row " + std::to_string(r));
        }
        std::copy(rows[r].begin(), rows[r].end(), &grid(r, 0));
    }
    return grid;
}

LatinRectangle::LatinRectangle(Index order, SymbolGrid grid) : order_(order), grid_(std::move(grid)) {
    if (grid_.cols() != order_ || grid_.rows() > order_) {
        throw InvalidInput("latin rectangle must be k x t with k <= t");
    }
    std::vector<bool> col_seen(static_cast<std::size_t>(order_) * order_, false);
    for (Index r = 0; r < grid_.rows(); ++r) {
        std::vector<bool> row_seen(order_, false);
        for (Index c = 0; c < order_; ++c) {
            const Symbol s = grid_(r, c);
            if (s >= order_ || row_seen[s] || col_seen[static_cast<std::size_t>(c) * order_ + s]) {
                throw InvalidInput("not a latin rectangle: row " + std::to_string(r) + " " +
                                   describe_row(grid_.row(r)));
            }
            row_seen[s] = true;
            col_seen[static_cast<std::size_t>(c) * order_ + s] = true;
        }
    }
}

SymbolGrid fill_block(const PartialLatinSquare& p, Index t) {
    const Index n = p.order();
    if (t < 2 * n) {
        throw InvalidInput("completion order " + std::to_string(t) + " < 2n = " + std::to_string(2 * n));
    }
    SymbolGrid block(n, n, kEmpty);
    std::vector<bool> col_used(static_cast<std::size_t>(n) * t, false); // col_used[c * t + s]
    for (const auto& e : p.triples()) {
        if (e.symbol >= t) {
            throw InvalidInput("symbol " + std::to_string(e.symbol) + " does not fit order " + std::to_string(t));
        }
        block(e.row, e.col) = e.symbol;
        col_used[static_cast<std::size_t>(e.col) * t + e.symbol] = true;
    }
    for (Index r = 0; r < n; ++r) {
        std::vector<bool> row_used(t, false);
        std::vector<Index> empty_cols;
        for (Index c = 0; c < n; ++c) {
            if (block(r, c) == kEmpty) {
                empty_cols.push_back(c);
            } else {
                row_used[block(r, c)] = true;
            }
        }
        if (empty_cols.empty()) {
            continue;
        }
        std::vector<std::vector<Index>> adjacency(empty_cols.size());
        for (std::size_t i = 0; i < empty_cols.size(); ++i) {
            for (Symbol s = 0; s < t; ++s) {
                if (!row_used[s] && !col_used[static_cast<std::size_t>(empty_cols[i]) * t + s]) {
                    adjacency[i].push_back(s);
                }
            }
        }
        const auto matching =
            max_matching(BipartiteInstance(static_cast<Index>(empty_cols.size()), t, std::move(adjacency)));
        if (matching.size != empty_cols.size()) {
            throw InternalInvariant("fill_block: row " + std::to_string(r) + " " + describe_row(block.row(r)) +
                                    " matched " + std::to_string(matching.size) + " of " +
                                    std::to_string(empty_cols.size()) + " empty cells at t=" + std::to_string(t));
        }
        for (std::size_t i = 0; i < empty_cols.size(); ++i) {
            const Symbol s = matching.left_to_right[i];
            block(r, empty_cols[i]) = s;
            col_used[static_cast<std::size_t>(empty_cols[i]) * t + s] = true;
        }
    }
    return block;
}

LatinRectangle extend_to_rectangle(const SymbolGrid& block, Index t) {
    const Index n = block.rows();
    if (block.cols() != n) {
        throw InvalidInput("block must be square");
    }
    if (t < 2 * n) {
        throw InvalidInput("rectangle width " + std::to_string(t) + " < 2n = " + std::to_string(2 * n));
    }
    const Index degree = t - n;
    // multiplicity[u * t + s]: remaining copies of edge (u, s). Rows u < n are
    // real; rows n..t-1 pad symbol degrees up to `degree`.
    std::vector<Index> multiplicity(static_cast<std::size_t>(t) * t, 0);
    std::vector<Index> missing_from_rows(t, 0);
    std::vector<bool> col_seen(static_cast<std::size_t>(n) * t, false);
    for (Index r = 0; r < n; ++r) {
        std::vector<bool> present(t, false);
        for (Index c = 0; c < n; ++c) {
            const Symbol s = block(r, c);
            if (s >= t || present[s] || col_seen[static_cast<std::size_t>(c) * t + s]) {
                throw InvalidInput("block is not row/column repeat-free over [" + std::to_string(t) + "]");
            }
            present[s] = true;
            col_seen[static_cast<std::size_t>(c) * t + s] = true;
        }
        for (Symbol s = 0; s < t; ++s) {
            if (!present[s]) {
                multiplicity[static_cast<std::size_t>(r) * t + s] = 1;
                ++missing_from_rows[s];
            }
        }
    }
    Symbol next = 0;
    for (Index u = n; u < t; ++u) {
        Index capacity = degree;
        while (capacity > 0) {
            while (missing_from_rows[next] == degree) {
                ++next;
            }
            const Index take = std::min(capacity, degree - missing_from_rows[next]);
            multiplicity[static_cast<std::size_t>(u) * t + next] += take;
            missing_from_rows[next] += take;
            capacity -= take;
        }
    }

    SymbolGrid rect(n, t);
    for (Index r = 0; r < n; ++r) {
        std::copy(block.row(r).begin(), block.row(r).end(), &rect(r, 0));
    }
    for (Index step = 0; step < degree; ++step) {
        std::vector<std::vector<Index>> adjacency(t);
        for (Index u = 0; u < t; ++u) {
            for (Symbol s = 0; s < t; ++s) {
                if (multiplicity[static_cast<std::size_t>(u) * t + s] > 0) {
                    adjacency[u].push_back(s);
                }
            }
        }
        const auto matching = max_matching(BipartiteInstance(t, t, std::move(adjacency)));
        if (matching.size != t) {
            throw InternalInvariant("extend_to_rectangle: column " + std::to_string(n + step) + " matched " +
                                    std::to_string(matching.size) + " of " + std::to_string(t) +
                                    " vertices of a regular multigraph");
        }
        for (Index u = 0; u < t; ++u) {
            const Symbol s = matching.left_to_right[u];
            --multiplicity[static_cast<std::size_t>(u) * t + s];
            if (u < n) {
                rect(u, n + step) = s;
            }
        }
    }
    return LatinRectangle(t, std::move(rect));
}

LatinSquare ryser_complete(const LatinRectangle& rect) {
    const Index t = rect.order();
    std::vector<Symbol> grid(rect.grid().data().begin(), rect.grid().data().end());
    grid.reserve(static_cast<std::size_t>(t) * t);
    std::vector<bool> col_has(static_cast<std::size_t>(t) * t, false); // col_has[c * t + s]
    for (Index r = 0; r < rect.rows(); ++r) {
        for (Index c = 0; c < t; ++c) {
            col_has[static_cast<std::size_t>(c) * t + rect.grid()(r, c)] = true;
        }
    }
    for (Index r = rect.rows(); r < t; ++r) {
        std::vector<std::vector<Index>> adjacency(t);
        for (Index c = 0; c < t; ++c) {
            for (Symbol s = 0; s < t; ++s) {
                if (!col_has[static_cast<std::size_t>(c) * t + s]) {
                    adjacency[c].push_back(s);
                }
            }
        }
        const auto matching = max_matching(BipartiteInstance(t, t, std::move(adjacency)));
        if (matching.size != t) {
            throw InternalInvariant("ryser_complete: row " + std::to_string(r) + " matched " +
                                    std::to_string(matching.size) + " of " + std::to_string(t) + " columns");
        }
        for (Index c = 0; c < t; ++c) {
            const Symbol s = matching.left_to_right[c];
            grid.push_back(s);
            col_has[static_cast<std::size_t>(c) * t + s] = true;
        }
    }
    return LatinSquare(t, std::move(grid));
}

LatinSquare embed_pls(const PartialLatinSquare& p, Index t) {
    return ryser_complete(extend_to_rectangle(fill_block(p, t), t));
}

Symbol left_divide(const LatinSquare& square, Index a, Symbol target) {
    if (a >= square.order() || target >= square.order()) {
        throw InvalidInput("left_divide arguments out of range");
    }
    const auto row = square.row(a);
    return static_cast<Symbol>(std::find(row.begin(), row.end(), target) - row.begin());
}

LeftDivisionTable::LeftDivisionTable(const LatinSquare& square)
    : order_(square.order()), table_(static_cast<std::size_t>(order_) * order_) {
    for (Index a = 0; a < order_; ++a) {
        for (Index b = 0; b < order_; ++b) {
            table_[static_cast<std::size_t>(a) * order_ + square(a, b)] = b;
        }
    }
}

} // namespace olsembed
