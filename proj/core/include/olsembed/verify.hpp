#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "olsembed/core.hpp"
#include "olsembed/pipeline.hpp"

namespace olsembed {

enum class EmbeddingFailure { None, Latin, Orthogonality, Containment };

struct EmbeddingVerification {
    Verdict latin;
    Verdict orthogonality;
    Verdict containment;

    /// First failed property in the order latin, orthogonality, containment.
    EmbeddingFailure first_failure() const;
    bool ok() const { return first_failure() == EmbeddingFailure::None; }
};

/// Checks a candidate pair (L1, L2) one row at a time: both latin, mutually
/// orthogonal, and containing P (in L1) and Q (in L2) at identity maps.
/// Memory is O(order) per row plus three order^2-bit accumulators (column
/// occupancy of each square and the symbol-pair set).
class StreamingVerifier {
public:
    StreamingVerifier(Index order, std::span<const Triple> p, std::span<const Triple> q);

    Index order() const { return order_; }
    /// Rows must arrive in order 0, 1, ...; a row of the wrong width is a latin violation.
    void feed(std::span<const Symbol> row_a, std::span<const Symbol> row_b);
    EmbeddingVerification finish();

private:
    void check_row(std::span<const Symbol> row, std::vector<std::uint64_t>& columns, const char* name);

    Index order_;
    Index next_row_ = 0;
    std::vector<Triple> p_;
    std::vector<Triple> q_;
    std::vector<std::uint64_t> cols_a_;
    std::vector<std::uint64_t> cols_b_;
    std::vector<std::uint64_t> pairs_;
    std::vector<Index> row_stamp_;
    EmbeddingVerification result_;
};

/// Streams every row of an embedding through a StreamingVerifier.
EmbeddingVerification verify_embedding(const Embedding& embedding, std::span<const Triple> p,
                                       std::span<const Triple> q);

} // namespace olsembed
