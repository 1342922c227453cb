#include <algorithm>
#include <deque>
#include <string>

#include "olsembed/completion.hpp"

namespace olsembed {

BipartiteInstance::BipartiteInstance(Index left_count, Index right_count,
                                     std::vector<std::vector<Index>> adjacency)
    : left_count_(left_count), right_count_(right_count), adjacency_(std::move(adjacency)) {
    if (adjacency_.size() != left_count_) {
        throw InvalidInput("adjacency has " + std::to_string(adjacency_.size()) + " lists for " +
                           std::to_string(left_count_) + " left vertices");
    }
    for (std::size_t u = 0; u < adjacency_.size(); ++u) {
        auto& list = adjacency_[u];
        std::sort(list.begin(), list.end());
        if (!list.empty() && list.back() >= right_count_) {
            throw InvalidInput("edge " + std::to_string(u) + "->" + std::to_string(list.back()) +
                               " out of range");
        }
        if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
            throw InvalidInput("duplicate edge at left vertex " + std::to_string(u));
        }
    }
}

namespace {

class HopcroftKarp {
public:
    explicit HopcroftKarp(const BipartiteInstance& g)
        : g_(g),
          left_mate_(g.left_count(), Matching::kUnmatched),
          right_mate_(g.right_count(), Matching::kUnmatched),
          dist_(g.left_count()) {}

    Matching run() {
        std::size_t size = seed();
        while (layer()) {
            std::vector<std::size_t> cursor(g_.left_count(), 0);
            for (Index u = 0; u < g_.left_count(); ++u) {
                if (left_mate_[u] == Matching::kUnmatched && augment(u, cursor)) {
                    ++size;
                }
            }
        }
        return {std::move(left_mate_), size};
    }

private:
    static constexpr Index kInf = Matching::kUnmatched;

    // Lowest free neighbour for each left vertex, in order.
    std::size_t seed() {
        std::size_t size = 0;
        for (Index u = 0; u < g_.left_count(); ++u) {
            for (Index v : g_.neighbours(u)) {
                if (right_mate_[v] == Matching::kUnmatched) {
                    left_mate_[u] = v;
                    right_mate_[v] = u;
                    ++size;
                    break;
                }
            }
        }
        return size;
    }

    // BFS layering from free left vertices; true if some free right vertex is reachable.
    bool layer() {
        std::deque<Index> queue;
        for (Index u = 0; u < g_.left_count(); ++u) {
            if (left_mate_[u] == Matching::kUnmatched) {
                dist_[u] = 0;
                queue.push_back(u);
            } else {
                dist_[u] = kInf;
            }
        }
        bool found = false;
        while (!queue.empty()) {
            const Index u = queue.front();
            queue.pop_front();
            for (Index v : g_.neighbours(u)) {
                const Index w = right_mate_[v];
                if (w == Matching::kUnmatched) {
                    found = true;
                } else if (dist_[w] == kInf) {
                    dist_[w] = dist_[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        return found;
    }

    bool augment(Index u, std::vector<std::size_t>& cursor) {
        const auto adj = g_.neighbours(u);
        for (auto& i = cursor[u]; i < adj.size(); ++i) {
            const Index v = adj[i];
            const Index w = right_mate_[v];
            if (w == Matching::kUnmatched || (dist_[w] == dist_[u] + 1 && augment(w, cursor))) {
                left_mate_[u] = v;
                right_mate_[v] = u;
                ++i;
                return true;
            }
        }
        dist_[u] = kInf;
        return false;
    }

    const BipartiteInstance& g_;
    std::vector<Index> left_mate_;
    std::vector<Index> right_mate_;
    std::vector<Index> dist_;
};

} // namespace

Matching max_matching(const BipartiteInstance& graph) { return HopcroftKarp(graph).run(); }

} // namespace olsembed
