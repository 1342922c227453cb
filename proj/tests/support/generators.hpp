#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <span>
#include <vector>

#include "olsembed/core.hpp"
#include "oracles.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline std::uint32_t below(Rng& rng, std::uint32_t n) {
    return std::uniform_int_distribution<std::uint32_t>(0, n - 1)(rng);
}

inline std::vector<std::uint32_t> permutation(Rng& rng, std::uint32_t n) {
    std::vector<std::uint32_t> p(n);
    std::iota(p.begin(), p.end(), 0u);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

/// Random latin square by randomized backtracking, cell by cell.
inline oracle::Grid random_latin(Rng& rng, std::uint32_t n) {
    oracle::Grid g(n, std::vector<std::uint32_t>(n, n));
    if (n > 6) {
        // Backtracking stalls at these orders; take a random isotope of Z_n.
        const auto rows = permutation(rng, n);
        const auto cols = permutation(rng, n);
        const auto syms = permutation(rng, n);
        for (std::uint32_t r = 0; r < n; ++r) {
            for (std::uint32_t c = 0; c < n; ++c) {
                g[rows[r]][cols[c]] = syms[(r + c) % n];
            }
        }
        return g;
    }
    auto fill = [&](auto&& self, std::uint32_t k, std::uint64_t& budget) -> bool {
        if (k == n * n) {
            return true;
        }
        if (budget-- == 0) {
            return false;
        }
        const std::uint32_t r = k / n, c = k % n;
        auto symbols = permutation(rng, n);
        for (auto s : symbols) {
            bool ok = true;
            for (std::uint32_t i = 0; i < c && ok; ++i) {
                ok = g[r][i] != s;
            }
            for (std::uint32_t i = 0; i < r && ok; ++i) {
                ok = g[i][c] != s;
            }
            if (ok) {
                g[r][c] = s;
                if (self(self, k + 1, budget)) {
                    return true;
                }
                g[r][c] = n;
            }
        }
        return false;
    };
    while (true) {
        std::uint64_t budget = 200000;
        if (fill(fill, 0, budget)) {
            return g;
        }
        for (auto& row : g) {
            std::fill(row.begin(), row.end(), n);
        }
    }
}

/// Visits cells in random order, filling each with probability `density`
/// using a random admissible symbol. Never returns an empty list.
inline std::vector<oracle::Entry> random_partial(Rng& rng, std::uint32_t n, double density) {
    std::vector<oracle::Entry> out;
    std::set<std::pair<std::uint32_t, std::uint32_t>> row_used, col_used;
    std::bernoulli_distribution take(density);
    for (auto k : permutation(rng, n * n)) {
        const std::uint32_t r = k / n, c = k % n;
        if (!take(rng)) {
            continue;
        }
        for (auto s : permutation(rng, n)) {
            if (!row_used.count({r, s}) && !col_used.count({c, s})) {
                row_used.insert({r, s});
                col_used.insert({c, s});
                out.emplace_back(r, c, s);
                break;
            }
        }
    }
    if (out.empty()) {
        out.emplace_back(below(rng, n), below(rng, n), below(rng, n));
    }
    return out;
}

struct EntryPair {
    std::vector<oracle::Entry> p;
    std::vector<oracle::Entry> q;
};

/// Random orthogonal partial pair: cells in random order, each filled with
/// probability `density` by a random admissible symbol pair.
inline EntryPair random_orthogonal_pair(Rng& rng, std::uint32_t n, double density) {
    EntryPair out;
    std::set<std::pair<std::uint32_t, std::uint32_t>> prow, pcol, qrow, qcol, pairs;
    std::bernoulli_distribution take(density);
    for (auto k : permutation(rng, n * n)) {
        const std::uint32_t r = k / n, c = k % n;
        if (!take(rng)) {
            continue;
        }
        for (auto v : permutation(rng, n * n)) {
            const std::uint32_t x = v / n, y = v % n;
            if (prow.count({r, x}) || pcol.count({c, x}) || qrow.count({r, y}) || qcol.count({c, y}) ||
                pairs.count({x, y})) {
                continue;
            }
            prow.insert({r, x});
            pcol.insert({c, x});
            qrow.insert({r, y});
            qcol.insert({c, y});
            pairs.insert({x, y});
            out.p.emplace_back(r, c, x);
            out.q.emplace_back(r, c, y);
            break;
        }
    }
    if (out.p.empty()) {
        const auto r = below(rng, n), c = below(rng, n);
        out.p.emplace_back(r, c, below(rng, n));
        out.q.emplace_back(r, c, below(rng, n));
    }
    return out;
}

inline std::vector<olsembed::Triple> triples(const std::vector<oracle::Entry>& entries) {
    std::vector<olsembed::Triple> out;
    for (const auto& [r, c, s] : entries) {
        out.push_back({r, c, s});
    }
    return out;
}

inline std::vector<oracle::Entry> entries(std::span<const olsembed::Triple> triples) {
    std::vector<oracle::Entry> out;
    for (const auto& t : triples) {
        out.emplace_back(t.row, t.col, t.symbol);
    }
    return out;
}

inline olsembed::PartialLatinSquare square(std::uint32_t n, const std::vector<oracle::Entry>& entries) {
    return olsembed::PartialLatinSquare(n, triples(entries));
}

inline oracle::Grid grid(const olsembed::LatinSquare& square) {
    oracle::Grid g(square.order());
    for (olsembed::Index r = 0; r < square.order(); ++r) {
        auto row = square.row(r);
        g[r].assign(row.begin(), row.end());
    }
    return g;
}

inline std::vector<olsembed::Symbol> flat(const oracle::Grid& g) {
    std::vector<olsembed::Symbol> out;
    for (const auto& row : g) {
        out.insert(out.end(), row.begin(), row.end());
    }
    return out;
}

} // namespace gen
