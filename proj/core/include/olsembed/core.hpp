#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "olsembed/error.hpp"

namespace olsembed {

using Index = std::uint32_t;
using Symbol = std::uint32_t;

// Elements of the elementary abelian 2-group on [2^M]; the group law is XOR.
using GroupElement = Index;

struct Cell {
    Index row = 0;
    Index col = 0;

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct Triple {
    Index row = 0;
    Index col = 0;
    Symbol symbol = 0;

    Cell cell() const { return {row, col}; }
    friend auto operator<=>(const Triple&, const Triple&) = default;
};

/// Row/column index of the product squares, split into its coset part
/// (`hi`) and its position inside the coset (`lo`).
struct PairIndex {
    GroupElement hi = 0;
    GroupElement lo = 0;

    friend auto operator<=>(const PairIndex&, const PairIndex&) = default;
};

constexpr GroupElement xor_mul(GroupElement x, GroupElement y) noexcept { return x ^ y; }

/// 2^exponent, rejecting exponents whose power does not fit an Index.
Index power_of_two(unsigned exponent);

/// p * 2^M + r. Throws InvalidInput if either component is >= 2^M.
Index encode_pair(PairIndex pair, unsigned exponent);
PairIndex decode_pair(Index value, unsigned exponent);

// ---------------------------------------------------------------------------
// Violation reports
// ---------------------------------------------------------------------------

enum class ViolationKind {
    OutOfRange,
    CellConflict,
    RowRepeat,
    ColumnRepeat,
    CellSetMismatch,
    PairRepeat,
    WrongSize,
    Missing,
    Condition,
};

const char* to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    std::string detail;
};

/// Outcome of a verification predicate: a pass/fail flag plus the first
/// kMaxRecorded violations found.
class Verdict {
public:
    static constexpr std::size_t kMaxRecorded = 10;

    void add(ViolationKind kind, std::string detail);
    void merge(const Verdict& other);

    bool ok() const { return total_ == 0; }
    explicit operator bool() const { return ok(); }
    std::size_t total() const { return total_; }
    std::span<const Violation> violations() const { return recorded_; }
    std::string summary() const;

private:
    std::vector<Violation> recorded_;
    std::size_t total_ = 0;
};

// ---------------------------------------------------------------------------
// Partial latin squares
// ---------------------------------------------------------------------------

/// Checks the three pairwise-uniqueness conditions on an arbitrary triple
/// list: a cell holds one symbol, a symbol appears once per row and once per
/// column. Coordinates must be < order and symbols < symbol_bound.
Verdict check_partial_latin(Index order, std::span<const Triple> triples, Symbol symbol_bound);
inline Verdict check_partial_latin(Index order, std::span<const Triple> triples) {
    return check_partial_latin(order, triples, order);
}
bool is_partial_latin(Index order, std::span<const Triple> triples, Symbol symbol_bound);
inline bool is_partial_latin(Index order, std::span<const Triple> triples) {
    return is_partial_latin(order, triples, order);
}

/// A non-empty partial latin square. Triples are kept sorted by (row, col).
/// The symbol bound defaults to the order; P* style squares carry a wider one.
class PartialLatinSquare {
public:
    /// Throws InvalidInput on an empty list or any latin violation.
    PartialLatinSquare(Index order, std::vector<Triple> triples);
    PartialLatinSquare(Index order, std::vector<Triple> triples, Symbol symbol_bound);

    Index order() const { return order_; }
    Symbol symbol_bound() const { return symbol_bound_; }
    std::size_t volume() const { return triples_.size(); }
    std::span<const Triple> triples() const { return triples_; }

    std::optional<Symbol> at(Index row, Index col) const;
    std::size_t distinct_symbols() const;

    friend bool operator==(const PartialLatinSquare&, const PartialLatinSquare&) = default;

private:
    Index order_;
    Symbol symbol_bound_;
    std::vector<Triple> triples_;
};

// ---------------------------------------------------------------------------
// Latin squares
// ---------------------------------------------------------------------------

/// Row/column-repeat checks on a dense order x order grid over [order].
Verdict check_latin(Index order, std::span<const Symbol> grid);

class LatinSquare {
public:
    /// Row-major grid; throws InvalidInput unless it is a latin square.
    LatinSquare(Index order, std::vector<Symbol> grid);
    static LatinSquare from_rows(const std::vector<std::vector<Symbol>>& rows);
    /// The Cayley table of XOR on [2^exponent].
    static LatinSquare xor_square(unsigned exponent);

    Index order() const { return order_; }
    Symbol operator()(Index row, Index col) const {
        return grid_[static_cast<std::size_t>(row) * order_ + col];
    }
    std::span<const Symbol> row(Index r) const {
        return std::span<const Symbol>(grid_).subspan(static_cast<std::size_t>(r) * order_, order_);
    }
    std::span<const Symbol> data() const { return grid_; }
    std::vector<Triple> triples() const;

    friend bool operator==(const LatinSquare&, const LatinSquare&) = default;

private:
    Index order_;
    std::vector<Symbol> grid_;
};

Verdict check_orthogonal_partial(const PartialLatinSquare& p, const PartialLatinSquare& q);
bool are_orthogonal_partial(const PartialLatinSquare& p, const PartialLatinSquare& q);

/// Raw-triple form used by verification tools that must report on inputs
/// which are not themselves valid partial latin squares.
Verdict check_orthogonal_partial(Index order, std::span<const Triple> p, std::span<const Triple> q);

Verdict check_orthogonal_latin(const LatinSquare& a, const LatinSquare& b);
bool are_orthogonal_latin(const LatinSquare& a, const LatinSquare& b);

/// Throws InvalidInput if a triple of `cells` is not an entry of `square`.
Verdict check_transversal(const LatinSquare& square, std::span<const Triple> cells);
bool is_transversal(const LatinSquare& square, std::span<const Triple> cells);

// ---------------------------------------------------------------------------
// Permutations, embeddings, isotopy
// ---------------------------------------------------------------------------

using Permutation = std::vector<Index>;

bool is_permutation(std::span<const Index> perm);
Permutation identity_permutation(Index size);
Permutation inverse_permutation(std::span<const Index> perm);

/// Maps used by `contains`. An empty map means the identity.
struct EmbeddingMaps {
    std::span<const Index> rows;
    std::span<const Index> cols;
    std::span<const Index> symbols;
};

/// True iff (row_map[r], col_map[c], sym_map[e]) is an entry of `square` for
/// every (r, c, e) in `p`. Throws InvalidInput on a non-injective map or a
/// map too short to cover `p`.
bool contains(const PartialLatinSquare& p, const LatinSquare& square, const EmbeddingMaps& maps = {});

/// result(row_perm[r], col_perm[c]) = sym_perm[square(r, c)].
LatinSquare apply_isotopy(const LatinSquare& square, std::span<const Index> row_perm,
                          std::span<const Index> col_perm, std::span<const Index> sym_perm);

} // namespace olsembed
