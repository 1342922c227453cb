#include "olsembed/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace olsembed {

namespace {

class StageClock {
public:
    explicit StageClock(std::vector<StageTiming>& sink) : sink_(sink), start_(Clock::now()) {}
    void lap(std::string stage) {
        const auto now = Clock::now();
        sink_.push_back({std::move(stage), std::chrono::duration<double>(now - start_).count()});
        start_ = now;
    }

private:
    using Clock = std::chrono::steady_clock;
    std::vector<StageTiming>& sink_;
    Clock::time_point start_;
};

void require_pair(const PartialLatinSquare& p, const PartialLatinSquare& q) {
    if (p.order() > kMaxPairOrder) {
        throw InvalidInput("order " + std::to_string(p.order()) + " exceeds the supported maximum " +
                           std::to_string(kMaxPairOrder));
    }
    if (p.symbol_bound() != p.order() || q.symbol_bound() != q.order()) {
        throw InvalidInput("input squares must use symbols from [n]");
    }
    if (auto verdict = check_orthogonal_partial(p, q); !verdict) {
        throw InvalidInput("input pair is not orthogonal: " + verdict.summary());
    }
}

// Stage-level sanity check of the finished embedding's top-left corner.
void require_corner(const Embedding& e, const PartialLatinSquare& p, const PartialLatinSquare& q) {
    for (const auto& t : p.triples()) {
        if (e.cell_a(t.row, t.col) != t.symbol) {
            throw InternalInvariant("embedding lost P entry (" + std::to_string(t.row) + ',' +
                                    std::to_string(t.col) + ')');
        }
    }
    for (const auto& t : q.triples()) {
        if (e.cell_b(t.row, t.col) != t.symbol) {
            throw InternalInvariant("embedding lost Q entry (" + std::to_string(t.row) + ',' +
                                    std::to_string(t.col) + ')');
        }
    }
}

} // namespace

unsigned choose_m(Index n) {
    if (n == 0) {
        throw InvalidInput("order must be positive");
    }
    unsigned m = 1;
    while ((Index{1} << m) < n) {
        ++m;
    }
    return m;
}

PartialLatinSquare dilate_columns(const PartialLatinSquare& p, unsigned m) {
    const Index side = power_of_two(m);
    if (p.order() > side) {
        throw InvalidInput("order " + std::to_string(p.order()) + " exceeds 2^" + std::to_string(m));
    }
    std::vector<Triple> triples(p.triples().begin(), p.triples().end());
    for (auto& t : triples) {
        t.col *= side + 1;
    }
    return PartialLatinSquare(side * side, std::move(triples), p.symbol_bound());
}

FirstOccurrenceMap first_occurrences(const PartialLatinSquare& p) {
    FirstOccurrenceMap fmap;
    for (const auto& t : p.triples()) { // sorted by row first
        fmap.try_emplace(t.symbol, t.cell());
    }
    return fmap;
}

PStar make_pstar(const PartialLatinSquare& p, Symbol bound) {
    const auto fmap = first_occurrences(p);
    std::vector<Triple> triples;
    triples.reserve(p.volume());
    std::map<Symbol, Symbol> original;
    Symbol next = p.symbol_bound();
    for (const auto& t : p.triples()) {
        if (fmap.at(t.symbol) == t.cell()) {
            triples.push_back(t);
            continue;
        }
        if (next >= bound) {
            throw InvalidInput("fresh symbol pool [" + std::to_string(p.symbol_bound()) + ", " +
                               std::to_string(bound) + ") exhausted");
        }
        original.emplace(next, t.symbol);
        triples.push_back({t.row, t.col, next++});
    }
    return {PartialLatinSquare(p.order(), std::move(triples), bound), std::move(original)};
}

std::vector<TradeSpec> build_trade_set(const PartialLatinSquare& p0, const FirstOccurrenceMap& fmap,
                                       const LatinSquare& b) {
    std::map<Symbol, std::vector<Triple>> others;
    for (const auto& t : p0.triples()) {
        if (fmap.at(t.symbol) != t.cell()) {
            others[t.symbol].push_back(t);
        }
    }
    std::vector<TradeSpec> specs;
    for (const auto& [symbol, list] : others) {
        const Cell first = fmap.at(symbol);
        const Triple head{first.row, first.col, symbol};
        for (std::size_t i = 0; i < list.size(); ++i) {
            const std::array<Triple, 2> pair{head, list[i]};
            if (auto v = check_conditions(pair, b); !v) {
                throw InternalInvariant("symbol " + std::to_string(symbol) + ": conditions fail for (" +
                                        std::to_string(head.row) + ',' + std::to_string(head.col) + ") and (" +
                                        std::to_string(list[i].row) + ',' + std::to_string(list[i].col) +
                                        "): " + v.summary());
            }
            for (std::size_t j = i + 1; j < list.size(); ++j) {
                const std::array<Triple, 3> triple{head, list[i], list[j]};
                if (auto v = check_conditions(triple, b); !v) {
                    throw InternalInvariant("symbol " + std::to_string(symbol) + ": conditions fail for rows " +
                                            std::to_string(head.row) + ',' + std::to_string(list[i].row) + ',' +
                                            std::to_string(list[j].row) + ": " + v.summary());
                }
            }
            specs.push_back(TradeSpec::from_quasigroup(head.row, head.col, list[i].row, list[i].col, b));
        }
    }
    return specs;
}

Permutation placement_permutation(Index size, std::span<const Index> targets) {
    if (targets.size() > size) {
        throw InvalidInput("more placement targets than positions");
    }
    Permutation perm(size);
    std::vector<bool> taken(size, false);
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (targets[i] >= size || taken[targets[i]]) {
            throw InvalidInput("placement targets must be distinct and in range");
        }
        perm[i] = targets[i];
        taken[targets[i]] = true;
    }
    Index next = 0;
    for (std::size_t i = targets.size(); i < size; ++i) {
        while (taken[next]) {
            ++next;
        }
        perm[i] = next++;
    }
    return perm;
}

namespace {

std::vector<Index> dilated_columns(Index n, unsigned m) {
    const Index stride = power_of_two(m) + 1;
    std::vector<Index> cols(n);
    for (Index c = 0; c < n; ++c) {
        cols[c] = c * stride;
    }
    return cols;
}

} // namespace

Permutation final_column_permutation(Index n, unsigned m, unsigned exponent) {
    if (exponent != 2 * m || n > power_of_two(m)) {
        throw InvalidInput("final column permutation needs n <= 2^m and M = 2m");
    }
    const Index order = power_of_two(2 * exponent);
    return inverse_permutation(placement_permutation(order, dilated_columns(n, m)));
}

const char* to_string(EmbeddingMode mode) { return mode == EmbeddingMode::General ? "general" : "basic"; }

std::string EmbeddingReport::to_text(bool with_timings) const {
    std::ostringstream os;
    os << "mode=" << to_string(mode) << '\n'
       << "n=" << n << '\n'
       << "volume=" << volume << '\n'
       << "m=" << m << '\n'
       << "M=" << exponent << '\n'
       << "order=" << order << '\n'
       << "bound=" << bound << '\n'
       << "bound_holds=" << (bound_holds() ? "true" : "false") << '\n'
       << "distinct_symbols=" << distinct_symbols << '\n'
       << "fresh_symbols=" << fresh_symbols << '\n'
       << "trades=" << trade_count << '\n';
    if (with_timings) {
        for (const auto& t : timings) {
            os << "time." << t.stage << '=' << t.seconds << '\n';
        }
    }
    return os.str();
}

Embedding::Embedding(EmbeddingMode mode, Index n, unsigned m, ProductSquarePair product, TradeOverlay trades,
                     Permutation column_perm, EmbeddingReport report)
    : mode_(mode),
      n_(n),
      m_(m),
      product_(std::move(product)),
      trades_(std::move(trades)),
      column_perm_(std::move(column_perm)),
      report_(std::move(report)) {
    if (column_perm_.size() != product_.order()) {
        throw InvalidInput("column permutation size does not match the product order");
    }
    column_source_ = inverse_permutation(column_perm_);
}

void Embedding::row_a(Index row, std::span<Symbol> out) const {
    std::vector<Symbol> raw(order());
    product_.row_a(row, raw);
    for (Index j = 0; j < order(); ++j) {
        out[j] = raw[column_source_[j]];
    }
}

void Embedding::row_b(Index row, std::span<Symbol> out) const {
    std::vector<Symbol> raw(order());
    product_.row_b(row, raw);
    for (Index j = 0; j < order(); ++j) {
        out[j] = raw[column_source_[j]];
    }
}

std::pair<LatinSquare, LatinSquare> Embedding::materialize() const {
    if (order() > kDenseOrderLimit) {
        throw InvalidInput("order " + std::to_string(order()) + " exceeds the dense limit " +
                           std::to_string(kDenseOrderLimit) + "; use lazy cell access");
    }
    const std::size_t t = order();
    std::vector<Symbol> a(t * t);
    std::vector<Symbol> b(t * t);
    for (Index row = 0; row < order(); ++row) {
        row_a(row, std::span<Symbol>(a).subspan(row * t, t));
        row_b(row, std::span<Symbol>(b).subspan(row * t, t));
    }
    return {LatinSquare(order(), std::move(a)), LatinSquare(order(), std::move(b))};
}

std::vector<TradeRecord> Embedding::audit_records() const {
    std::vector<TradeRecord> out(trades_.records().begin(), trades_.records().end());
    for (auto& record : out) {
        for (auto& cell : record.cells) {
            cell.col = column_perm_[cell.col];
        }
        std::sort(record.cells.begin(), record.cells.end());
    }
    return out;
}

Embedding assemble_embedding(EmbeddingMode mode, Index n, unsigned m, SymbolArray a, LatinSquare b,
                             std::span<const TradeSpec> specs, EmbeddingReport report) {
    const unsigned exponent = a.exponent();
    if (mode == EmbeddingMode::Basic && !specs.empty()) {
        throw InvalidInput("the basic construction carries no trades");
    }
    TradeOverlay overlay;
    for (const auto& spec : specs) {
        if (spec.r1 >= b.order() || spec.c1 >= b.order() || spec.r2 >= b.order() || spec.c2 >= b.order() ||
            b(spec.r1, spec.c1) != spec.a || b(spec.r2, spec.c2) != spec.b) {
            throw InvalidInput("trade spec does not match the quasigroup B");
        }
        overlay.apply(spec, a);
    }
    ProductSquarePair product(std::move(a), std::move(b), overlay.cells());
    Permutation perm = mode == EmbeddingMode::General ? final_column_permutation(n, m, exponent)
                                                      : identity_permutation(product.order());
    report.trade_count = overlay.trade_count();
    return Embedding(mode, n, m, std::move(product), std::move(overlay), std::move(perm), std::move(report));
}

Embedding embed_pair(const PartialLatinSquare& p, const PartialLatinSquare& q) {
    require_pair(p, q);
    EmbeddingReport report;
    StageClock clock(report.timings);
    const Index n = p.order();
    const unsigned m = choose_m(n);
    const unsigned exponent = 2 * m;
    const Index side = power_of_two(exponent);

    const auto p0 = dilate_columns(p, m);
    const auto q0 = dilate_columns(q, m);
    clock.lap("dilate");

    const auto fmap = first_occurrences(p0);
    const auto pstar = make_pstar(p0, side * side);
    const auto a = build_symbol_array(pstar.square, exponent);
    clock.lap("symbol_array");

    const auto b_corner = embed_pls(q, side);
    const auto col_perm = placement_permutation(side, dilated_columns(n, m));
    const auto identity = identity_permutation(side);
    auto b = apply_isotopy(b_corner, identity, col_perm, identity);
    if (!contains(q0, b)) {
        throw InternalInvariant("completed B does not contain the dilated Q");
    }
    clock.lap("complete_b");

    const auto specs = build_trade_set(p0, fmap, b);
    clock.lap("trade_set");

    report.mode = EmbeddingMode::General;
    report.n = n;
    report.volume = p.volume();
    report.m = m;
    report.exponent = exponent;
    report.order = std::uint64_t{side} * side;
    report.bound = 16ull * n * n * n * n;
    report.distinct_symbols = p.distinct_symbols();
    report.fresh_symbols = pstar.original.size();
    auto embedding = assemble_embedding(EmbeddingMode::General, n, m, a, std::move(b), specs, report);
    if (embedding.report().trade_count != p.volume() - p.distinct_symbols()) {
        throw InternalInvariant("trade count differs from volume minus distinct symbols");
    }
    require_corner(embedding, p, q);
    clock.lap("product_and_trades");
    embedding.set_timings(std::move(report.timings));
    return embedding;
}

Embedding embed_pair_basic(const PartialLatinSquare& p, const PartialLatinSquare& q,
                           std::optional<unsigned> exponent) {
    require_pair(p, q);
    if (p.distinct_symbols() != p.volume()) {
        throw InvalidInput("the basic construction needs P without repeated symbols");
    }
    EmbeddingReport report;
    StageClock clock(report.timings);
    const Index n = p.order();
    const unsigned big_m = exponent.value_or(choose_m(2 * n));
    const Index side = power_of_two(big_m);
    if (side < 2 * n) {
        throw InvalidInput("2^M = " + std::to_string(side) + " < 2n");
    }
    auto a = build_symbol_array(p, big_m);
    auto b = embed_pls(q, side);
    clock.lap("complete");

    report.mode = EmbeddingMode::Basic;
    report.n = n;
    report.volume = p.volume();
    report.exponent = big_m;
    report.order = std::uint64_t{side} * side;
    report.bound = 16ull * n * n * n * n;
    report.distinct_symbols = p.distinct_symbols();
    auto embedding = assemble_embedding(EmbeddingMode::Basic, n, 0, std::move(a), std::move(b), {}, report);
    require_corner(embedding, p, q);
    clock.lap("product");
    embedding.set_timings(std::move(report.timings));
    return embedding;
}

} // namespace olsembed
