#include "comax/simple_graph.hpp"

#include <stdexcept>

namespace comax {

SimpleGraph::SimpleGraph(std::size_t vertex_count)
    : n_(vertex_count), adj_(vertex_count * vertex_count, 0)
{
}

SimpleGraph SimpleGraph::complete(std::size_t k)
{
    SimpleGraph g(k);
    for (std::size_t u = 0; u < k; ++u)
        for (std::size_t v = u + 1; v < k; ++v)
            g.add_edge(u, v);
    return g;
}

SimpleGraph SimpleGraph::null_graph(std::size_t k)
{
    return SimpleGraph(k);
}

SimpleGraph SimpleGraph::star(std::size_t leaves)
{
    SimpleGraph g(leaves + 1);
    for (std::size_t v = 1; v <= leaves; ++v)
        g.add_edge(0, v);
    return g;
}

SimpleGraph SimpleGraph::from_edges(std::size_t vertex_count,
                                    const std::vector<std::pair<std::size_t, std::size_t>>& edges)
{
    SimpleGraph g(vertex_count);
    for (const auto& [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

void SimpleGraph::add_edge(std::size_t u, std::size_t v)
{
    if (u >= n_ || v >= n_ || u == v)
        throw std::invalid_argument("SimpleGraph::add_edge: bad endpoints");
    if (adj_[u * n_ + v])
        return;
    adj_[u * n_ + v] = adj_[v * n_ + u] = 1;
    ++edges_;
}

void SimpleGraph::remove_edge(std::size_t u, std::size_t v)
{
    if (u >= n_ || v >= n_ || !adj_[u * n_ + v])
        return;
    adj_[u * n_ + v] = adj_[v * n_ + u] = 0;
    --edges_;
}

std::vector<std::size_t> SimpleGraph::neighbors(std::size_t u) const
{
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < n_; ++v)
        if (adj_[u * n_ + v])
            out.push_back(v);
    return out;
}

std::size_t SimpleGraph::degree(std::size_t u) const
{
    std::size_t d = 0;
    for (std::size_t v = 0; v < n_; ++v)
        d += adj_[u * n_ + v];
    return d;
}

SimpleGraph SimpleGraph::complement() const
{
    SimpleGraph g(n_);
    for (std::size_t u = 0; u < n_; ++u)
        for (std::size_t v = u + 1; v < n_; ++v)
            if (!has_edge(u, v))
                g.add_edge(u, v);
    return g;
}

SimpleGraph SimpleGraph::induced(const std::vector<std::size_t>& vertices) const
{
    SimpleGraph g(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (has_edge(vertices[i], vertices[j]))
                g.add_edge(i, j);
    return g;
}

}  // namespace comax
