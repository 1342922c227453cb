#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "olsembed/completion.hpp"
#include "olsembed/core.hpp"
#include "olsembed/product.hpp"
#include "olsembed/trades.hpp"

namespace olsembed {

/// Largest input order the pipeline accepts. n = 16 gives B of order 256 and a
/// final order of 65536; beyond that the row-by-row completion of B dominates.
inline constexpr Index kMaxPairOrder = 16;

/// Smallest m >= 1 with n <= 2^m.
unsigned choose_m(Index n);

/// (r, c, e) -> (r, c * (2^m + 1), e). The result has order 2^{2m} and keeps
/// the symbol bound of `p`.
PartialLatinSquare dilate_columns(const PartialLatinSquare& p, unsigned m);

/// symbol -> cell of its occurrence in the lowest row.
using FirstOccurrenceMap = std::map<Symbol, Cell>;
FirstOccurrenceMap first_occurrences(const PartialLatinSquare& p);

struct PStar {
    PartialLatinSquare square;
    std::map<Symbol, Symbol> original; // replacement symbol -> symbol of P
};

/// Keeps every first occurrence and gives each other triple, in (row, col)
/// order, the next unused symbol from [symbol_bound(p), bound).
PStar make_pstar(const PartialLatinSquare& p, Symbol bound);

/// One spec per non-first occurrence, ordered by (symbol, row, col). Every
/// pair (first, other) and triple (first, other, other') of a symbol is
/// checked against C1-C4 in `b`; a failure throws InternalInvariant.
std::vector<TradeSpec> build_trade_set(const PartialLatinSquare& p0, const FirstOccurrenceMap& fmap,
                                       const LatinSquare& b);

/// Permutation of [size] sending source i to targets[i] for i < targets.size()
/// and the remaining sources, ascending, to the remaining targets, ascending.
Permutation placement_permutation(Index size, std::span<const Index> targets);

/// Column permutation of the final squares (source -> target): encoded column
/// c * (2^m + 1) goes to c for c < n, everything else keeps its relative order.
Permutation final_column_permutation(Index n, unsigned m, unsigned exponent);

enum class EmbeddingMode { General, Basic };

const char* to_string(EmbeddingMode mode);

struct StageTiming {
    std::string stage;
    double seconds = 0.0;
};

struct EmbeddingReport {
    EmbeddingMode mode = EmbeddingMode::General;
    Index n = 0;
    std::size_t volume = 0;
    unsigned m = 0;
    unsigned exponent = 0; // M
    std::uint64_t order = 0;
    std::uint64_t bound = 0; // 16 n^4
    std::size_t distinct_symbols = 0;
    std::size_t fresh_symbols = 0;
    std::size_t trade_count = 0;
    std::vector<StageTiming> timings;

    bool bound_holds() const { return order <= bound; }
    /// Flat "key=value" lines; timings are appended only when asked for.
    std::string to_text(bool with_timings) const;
};

/// A finished embedding: the product pair with its trades, plus the final
/// column reordering. Cells are evaluated lazily; `materialize` builds dense
/// squares up to kDenseOrderLimit.
class Embedding {
public:
    Embedding(EmbeddingMode mode, Index n, unsigned m, ProductSquarePair product, TradeOverlay trades,
              Permutation column_perm, EmbeddingReport report);

    EmbeddingMode mode() const { return mode_; }
    Index n() const { return n_; }
    unsigned m() const { return m_; }
    Index order() const { return product_.order(); }
    const ProductSquarePair& product() const { return product_; }
    const TradeOverlay& trades() const { return trades_; }
    const EmbeddingReport& report() const { return report_; }
    /// source column of the product -> column of the final squares
    const Permutation& column_permutation() const { return column_perm_; }

    Symbol cell_a(Index row, Index col) const { return product_.cell_a(row, column_source_[col]); }
    Symbol cell_b(Index row, Index col) const { return product_.cell_b(row, column_source_[col]); }
    void row_a(Index row, std::span<Symbol> out) const;
    void row_b(Index row, std::span<Symbol> out) const;
    std::pair<LatinSquare, LatinSquare> materialize() const;

    /// Trade records with columns mapped into final coordinates.
    std::vector<TradeRecord> audit_records() const;

    void set_timings(std::vector<StageTiming> timings) { report_.timings = std::move(timings); }

private:
    EmbeddingMode mode_;
    Index n_;
    unsigned m_;
    ProductSquarePair product_;
    TradeOverlay trades_;
    Permutation column_perm_;
    Permutation column_source_;
    EmbeddingReport report_;
};

/// Rebuilds an embedding from its defining data (A, B, trade list). Used by
/// the pipeline and by manifest loading; validates that every trade's a, b
/// agree with B.
Embedding assemble_embedding(EmbeddingMode mode, Index n, unsigned m, SymbolArray a, LatinSquare b,
                             std::span<const TradeSpec> specs, EmbeddingReport report);

/// Embeds an orthogonal pair (P, Q) of order n in an orthogonal pair of order
/// 2^{4m}, P and Q occupying the top-left n x n corner with identity maps.
Embedding embed_pair(const PartialLatinSquare& p, const PartialLatinSquare& q);

/// The construction without dilation or trades; requires P to have no repeated
/// symbol. `exponent` defaults to the smallest M with 2^M >= 2n.
Embedding embed_pair_basic(const PartialLatinSquare& p, const PartialLatinSquare& q,
                           std::optional<unsigned> exponent = std::nullopt);

} // namespace olsembed
