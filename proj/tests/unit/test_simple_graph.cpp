#include <doctest.h>

#include <stdexcept>

#include "comax/simple_graph.hpp"

using namespace comax;

TEST_CASE("simple graph basics")
{
    SimpleGraph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK(g.degree(1) == 2);
    CHECK(g.edge_count() == 2);
    CHECK(g.neighbors(1) == std::vector<std::size_t>{0, 2});
    g.remove_edge(0, 1);
    CHECK_FALSE(g.has_edge(0, 1));
    CHECK_THROWS(g.add_edge(0, 0));
    CHECK_THROWS(g.add_edge(0, 4));
}

TEST_CASE("factories and complement")
{
    const SimpleGraph k5 = SimpleGraph::complete(5);
    CHECK(k5.is_complete());
    CHECK(k5.edge_count() == 10);
    CHECK(k5.complement().edge_count() == 0);
    CHECK(SimpleGraph::null_graph(3).edge_count() == 0);

    const SimpleGraph star = SimpleGraph::star(4);
    CHECK(star.vertex_count() == 5);
    CHECK(star.degree(0) == 4);
    CHECK(star.complement().edge_count() == 6);

    const SimpleGraph path = SimpleGraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    const SimpleGraph sub = path.induced({1, 2, 3});
    CHECK(sub.vertex_count() == 3);
    CHECK(sub.edge_count() == 2);
    CHECK(sub.has_edge(0, 1));
}
