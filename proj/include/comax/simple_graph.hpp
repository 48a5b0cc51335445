#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace comax {

/// Small explicit undirected simple graph with a dense adjacency matrix.
/// Used by the brute-force oracles; vertices are 0..n-1.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(std::size_t vertex_count);

    static SimpleGraph complete(std::size_t k);
    static SimpleGraph null_graph(std::size_t k);
    static SimpleGraph star(std::size_t leaves);
    static SimpleGraph from_edges(std::size_t vertex_count,
                                  const std::vector<std::pair<std::size_t, std::size_t>>& edges);

    void add_edge(std::size_t u, std::size_t v);
    void remove_edge(std::size_t u, std::size_t v);

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_; }
    bool has_edge(std::size_t u, std::size_t v) const { return adj_[u * n_ + v] != 0; }
    std::vector<std::size_t> neighbors(std::size_t u) const;
    std::size_t degree(std::size_t u) const;
    bool is_complete() const noexcept { return 2 * edges_ == n_ * (n_ - (n_ > 0 ? 1 : 0)); }

    SimpleGraph complement() const;
    SimpleGraph induced(const std::vector<std::size_t>& vertices) const;

private:
    std::size_t n_ = 0;
    std::size_t edges_ = 0;
    std::vector<std::uint8_t> adj_;
};

}  // namespace comax
