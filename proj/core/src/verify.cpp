#include "olsembed/verify.hpp"

#include <algorithm>
#include <string>

namespace olsembed {

namespace {

bool test_and_set(std::vector<std::uint64_t>& bits, std::size_t i) {
    auto& w = bits[i / 64];
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    const bool was = (w & mask) != 0;
    w |= mask;
    return was;
}

std::string at(Index r, Index c) { return "(" + std::to_string(r) + "," + std::to_string(c) + ")"; }

} // namespace

EmbeddingFailure EmbeddingVerification::first_failure() const {
    if (!latin.ok()) {
        return EmbeddingFailure::Latin;
    }
    if (!orthogonality.ok()) {
        return EmbeddingFailure::Orthogonality;
    }
    if (!containment.ok()) {
        return EmbeddingFailure::Containment;
    }
    return EmbeddingFailure::None;
}

StreamingVerifier::StreamingVerifier(Index order, std::span<const Triple> p, std::span<const Triple> q)
    : order_(order), p_(p.begin(), p.end()), q_(q.begin(), q.end()), row_stamp_(order, 0) {
    if (order_ == 0) {
        throw InvalidInput("verifier order must be positive");
    }
    const std::size_t words = (static_cast<std::size_t>(order_) * order_ + 63) / 64;
    cols_a_.assign(words, 0);
    cols_b_.assign(words, 0);
    pairs_.assign(words, 0);
    std::sort(p_.begin(), p_.end());
    std::sort(q_.begin(), q_.end());
    for (const auto* list : {&p_, &q_}) {
        for (const auto& t : *list) {
            if (t.row >= order_ || t.col >= order_) {
                result_.containment.add(ViolationKind::Missing, "entry " + at(t.row, t.col) + " lies outside order " +
                                                                    std::to_string(order_));
            }
        }
    }
}

void StreamingVerifier::check_row(std::span<const Symbol> row, std::vector<std::uint64_t>& columns,
                                  const char* name) {
    const Index r = next_row_;
    if (row.size() != order_) {
        result_.latin.add(ViolationKind::WrongSize, std::string(name) + " row " + std::to_string(r) + " has " +
                                                        std::to_string(row.size()) + " entries");
        return;
    }
    const Index stamp = r + 1;
    for (Index c = 0; c < order_; ++c) {
        const Symbol s = row[c];
        if (s >= order_) {
            result_.latin.add(ViolationKind::OutOfRange,
                              std::string(name) + " latin violation at " + at(r, c) + ": symbol " + std::to_string(s));
            continue;
        }
        if (row_stamp_[s] == stamp) {
            result_.latin.add(ViolationKind::RowRepeat,
                              std::string(name) + " latin violation at " + at(r, c) + ": row repeats " +
                                  std::to_string(s));
        }
        row_stamp_[s] = stamp;
        if (test_and_set(columns, static_cast<std::size_t>(c) * order_ + s)) {
            result_.latin.add(ViolationKind::ColumnRepeat,
                              std::string(name) + " latin violation at " + at(r, c) + ": column repeats " +
                                  std::to_string(s));
        }
    }
}

void StreamingVerifier::feed(std::span<const Symbol> row_a, std::span<const Symbol> row_b) {
    if (next_row_ >= order_) {
        result_.latin.add(ViolationKind::WrongSize, "more than " + std::to_string(order_) + " rows");
        return;
    }
    const Index r = next_row_;
    // Row stamps are shared; reset between the two squares of one row.
    check_row(row_a, cols_a_, "A");
    std::fill(row_stamp_.begin(), row_stamp_.end(), 0);
    check_row(row_b, cols_b_, "B");
    std::fill(row_stamp_.begin(), row_stamp_.end(), 0);

    if (row_a.size() == order_ && row_b.size() == order_) {
        for (Index c = 0; c < order_; ++c) {
            if (row_a[c] >= order_ || row_b[c] >= order_) {
                continue;
            }
            if (test_and_set(pairs_, static_cast<std::size_t>(row_a[c]) * order_ + row_b[c])) {
                result_.orthogonality.add(ViolationKind::PairRepeat,
                                          "pair (" + std::to_string(row_a[c]) + "," + std::to_string(row_b[c]) +
                                              ") repeats at " + at(r, c));
            }
        }
    }

    auto contain = [&](const std::vector<Triple>& list, std::span<const Symbol> row, const char* name) {
        auto it = std::lower_bound(list.begin(), list.end(), Triple{r, 0, 0});
        for (; it != list.end() && it->row == r; ++it) {
            if (it->col < row.size() && row[it->col] != it->symbol) {
                result_.containment.add(ViolationKind::Missing, std::string(name) + " entry " + at(r, it->col) +
                                                                    " expected " + std::to_string(it->symbol) +
                                                                    ", found " + std::to_string(row[it->col]));
            }
        }
    };
    contain(p_, row_a, "P");
    contain(q_, row_b, "Q");
    ++next_row_;
}

EmbeddingVerification StreamingVerifier::finish() {
    if (next_row_ != order_) {
        result_.latin.add(ViolationKind::WrongSize,
                          "received " + std::to_string(next_row_) + " of " + std::to_string(order_) + " rows");
    }
    return result_;
}

EmbeddingVerification verify_embedding(const Embedding& embedding, std::span<const Triple> p,
                                       std::span<const Triple> q) {
    StreamingVerifier verifier(embedding.order(), p, q);
    std::vector<Symbol> a(embedding.order());
    std::vector<Symbol> b(embedding.order());
    for (Index r = 0; r < embedding.order(); ++r) {
        embedding.row_a(r, a);
        embedding.row_b(r, b);
        verifier.feed(a, b);
    }
    return verifier.finish();
}

} // namespace olsembed
