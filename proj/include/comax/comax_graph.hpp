#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "comax/ring_divisors.hpp"
#include "comax/simple_graph.hpp"
#include "comax/types.hpp"

namespace comax {

enum class ClassKind { unit, proper, zero };

/// All labels x of Z_n with gcd(x, n) = divisor; there are phi(n / divisor) of them.
struct DivisorClass {
    std::int64_t divisor;
    std::int64_t size;
    ClassKind kind;

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

/**
 * Implicit comaximal graph of Z_n. Vertices are the labels 0..n-1; x ~ y iff
 * x != y and gcd(gcd(x,n), gcd(y,n)) = 1. Only the class data is stored.
 */
class ComaximalGraph {
public:
    explicit ComaximalGraph(Modulus m);

    const Modulus& modulus() const noexcept { return m_; }
    /// Unit class first, then proper classes by ascending divisor, zero class last.
    const std::vector<DivisorClass>& classes() const noexcept { return classes_; }
    std::int64_t vertex_count() const noexcept { return m_.n(); }

private:
    Modulus m_;
    std::vector<DivisorClass> classes_;
};

bool adjacent(const Modulus& m, std::int64_t x, std::int64_t y);
DivisorClass class_of(const Modulus& m, std::int64_t x);
std::int64_t degree(const Modulus& m, std::int64_t x);

/// L = D - A of the whole graph. Throws std::length_error when n exceeds `limit`.
IntMatrix dense_laplacian(const Modulus& m, std::size_t limit = dense_limit());

/// Laplacian of an explicit graph.
IntMatrix laplacian_of(const SimpleGraph& g);

/// Whole graph as an explicit graph; vertex i is the label i.
SimpleGraph explicit_graph(const Modulus& m, std::size_t limit = dense_limit());

/// Induced subgraph on the nonzero non-units. `labels[i]` is the ring element of vertex i.
/// The limit applies to the n - phi(n) - 1 vertices of G2.
struct LabelledGraph {
    SimpleGraph graph;
    std::vector<std::int64_t> labels;
};
LabelledGraph g2_graph(const Modulus& m, std::size_t limit = dense_limit());

/// One "u v" line per undirected edge, u < v, in lexicographic order.
std::string edge_list(const SimpleGraph& g, const std::vector<std::int64_t>& labels = {});

/// [{"divisor", "size", "neighbors": [...]}] for every divisor class.
nlohmann::json class_summary(const Modulus& m);

}  // namespace comax
