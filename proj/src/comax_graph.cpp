#include "comax/comax_graph.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace comax {

std::size_t dense_limit()
{
    if (const char* env = std::getenv("COMAX_DENSE_LIMIT")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<std::size_t>(v);
    }
    return kDefaultDenseLimit;
}

namespace {

void check_label(const Modulus& m, std::int64_t x)
{
    if (x < 0 || x >= m.n())
        throw std::out_of_range("vertex label " + std::to_string(x) + " outside 0.."
                                + std::to_string(m.n() - 1));
}

ClassKind kind_of(const Modulus& m, std::int64_t d)
{
    if (d == 1)
        return ClassKind::unit;
    if (d == m.n())
        return ClassKind::zero;
    return ClassKind::proper;
}

std::vector<std::int64_t> class_divisors(const Modulus& m)
{
    std::vector<std::int64_t> d(static_cast<std::size_t>(m.n()));
    for (std::int64_t x = 0; x < m.n(); ++x)
        d[static_cast<std::size_t>(x)] = label_gcd(x, m.n());
    return d;
}

void check_limit(const Modulus& m, std::size_t limit)
{
    if (static_cast<std::size_t>(m.n()) > limit)
        throw std::length_error("n = " + std::to_string(m.n()) + " exceeds the dense limit "
                                + std::to_string(limit));
}

}  // namespace

ComaximalGraph::ComaximalGraph(Modulus m)
    : m_(std::move(m))
{
    classes_.push_back({1, m_.phi(), ClassKind::unit});
    for (std::int64_t d : m_.proper_divisors())
        classes_.push_back({d, euler_phi(m_.n() / d), ClassKind::proper});
    classes_.push_back({m_.n(), 1, ClassKind::zero});
}

bool adjacent(const Modulus& m, std::int64_t x, std::int64_t y)
{
    check_label(m, x);
    check_label(m, y);
    if (x == y)
        return false;
    return std::gcd(label_gcd(x, m.n()), label_gcd(y, m.n())) == 1;
}

DivisorClass class_of(const Modulus& m, std::int64_t x)
{
    check_label(m, x);
    const std::int64_t d = label_gcd(x, m.n());
    return {d, euler_phi(m.n() / d), kind_of(m, d)};
}

std::int64_t degree(const Modulus& m, std::int64_t x)
{
    const DivisorClass c = class_of(m, x);
    switch (c.kind) {
    case ClassKind::unit:
        return m.n() - 1;
    case ClassKind::zero:
        return m.phi();
    case ClassKind::proper:
        break;
    }
    std::int64_t deg = m.phi();
    for (std::int64_t d : m.proper_divisors())
        if (std::gcd(d, c.divisor) == 1)
            deg += euler_phi(m.n() / d);
    return deg;
}

IntMatrix laplacian_of(const SimpleGraph& g)
{
    const auto n = static_cast<Eigen::Index>(g.vertex_count());
    IntMatrix L = IntMatrix::Zero(n, n);
    for (Eigen::Index u = 0; u < n; ++u)
        for (Eigen::Index v = 0; v < n; ++v)
            if (g.has_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v))) {
                L(u, v) = -1;
                L(u, u) += 1;
            }
    return L;
}

IntMatrix dense_laplacian(const Modulus& m, std::size_t limit)
{
    check_limit(m, limit);
    const auto d = class_divisors(m);
    const auto n = static_cast<Eigen::Index>(m.n());
    IntMatrix L = IntMatrix::Zero(n, n);
    for (Eigen::Index u = 0; u < n; ++u)
        for (Eigen::Index v = u + 1; v < n; ++v)
            if (std::gcd(d[static_cast<std::size_t>(u)], d[static_cast<std::size_t>(v)]) == 1) {
                L(u, v) = L(v, u) = -1;
                ++L(u, u);
                ++L(v, v);
            }
    return L;
}

SimpleGraph explicit_graph(const Modulus& m, std::size_t limit)
{
    check_limit(m, limit);
    const auto d = class_divisors(m);
    SimpleGraph g(static_cast<std::size_t>(m.n()));
    for (std::size_t u = 0; u < d.size(); ++u)
        for (std::size_t v = u + 1; v < d.size(); ++v)
            if (std::gcd(d[u], d[v]) == 1)
                g.add_edge(u, v);
    return g;
}

LabelledGraph g2_graph(const Modulus& m, std::size_t limit)
{
    const auto vertices = static_cast<std::size_t>(m.n() - m.phi() - 1);
    if (vertices > limit)
        throw std::length_error("G2 for n = " + std::to_string(m.n()) + " has " + std::to_string(vertices) +
                                " vertices, above the dense limit " + std::to_string(limit));
    LabelledGraph out;
    std::vector<std::int64_t> d;
    for (std::int64_t x = 1; x < m.n(); ++x) {
        const std::int64_t g = std::gcd(x, m.n());
        if (g != 1) {
            out.labels.push_back(x);
            d.push_back(g);
        }
    }
    out.graph = SimpleGraph(out.labels.size());
    for (std::size_t u = 0; u < d.size(); ++u)
        for (std::size_t v = u + 1; v < d.size(); ++v)
            if (std::gcd(d[u], d[v]) == 1)
                out.graph.add_edge(u, v);
    return out;
}

std::string edge_list(const SimpleGraph& g, const std::vector<std::int64_t>& labels)
{
    auto label = [&](std::size_t v) {
        return labels.empty() ? static_cast<std::int64_t>(v) : labels[v];
    };
    std::ostringstream os;
    for (std::size_t u = 0; u < g.vertex_count(); ++u)
        for (std::size_t v = u + 1; v < g.vertex_count(); ++v)
            if (g.has_edge(u, v))
                os << label(u) << ' ' << label(v) << '\n';
    return os.str();
}

nlohmann::json class_summary(const Modulus& m)
{
    const ComaximalGraph graph(m);
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : graph.classes()) {
        nlohmann::json neighbors = nlohmann::json::array();
        for (const auto& other : graph.classes()) {
            if (std::gcd(c.divisor, other.divisor) != 1)
                continue;
            // only the unit class has edges inside itself
            if (other.divisor == c.divisor && c.size < 2)
                continue;
            neighbors.push_back(other.divisor);
        }
        out.push_back({{"divisor", c.divisor}, {"size", c.size}, {"neighbors", neighbors}});
    }
    return out;
}

}  // namespace comax
