#include "comax/oracle.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "comax/comax_graph.hpp"
#include "comax/exact_linalg.hpp"

namespace comax {

DenseSpectrum numeric_spectrum(const IntMatrix& laplacian, std::size_t limit)
{
    if (laplacian.rows() != laplacian.cols())
        throw std::invalid_argument("numeric_spectrum: matrix is not square");
    if (static_cast<std::size_t>(laplacian.rows()) > limit)
        throw std::length_error("numeric_spectrum: matrix exceeds the dense limit");
    if (laplacian != laplacian.transpose())
        throw std::invalid_argument("numeric_spectrum: matrix is not symmetric");

    const auto n = laplacian.rows();
    if (n == 0)
        return {{}, 0.0};
    const Eigen::MatrixXd a = laplacian.cast<double>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("numeric_spectrum: eigensolver did not converge");
    const Eigen::VectorXd& ev = solver.eigenvalues();
    DenseSpectrum out;
    out.eigenvalues.assign(ev.data(), ev.data() + ev.size());
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
    out.backward_error_bound = static_cast<double>(n) * std::numeric_limits<double>::epsilon() * a.norm();
    return out;
}

IntegerPolynomial exact_char_poly_full(const Modulus& m)
{
    if (m.n() > kExactCharPolyLimit)
        throw std::length_error("exact_char_poly_full: n exceeds the exact limit of 64");
    return char_poly_interpolated(dense_laplacian(m));
}

namespace {

class FlowNetwork {
public:
    explicit FlowNetwork(std::size_t nodes) : adj_(nodes) {}

    void add_arc(std::size_t u, std::size_t v, int cap)
    {
        adj_[u].push_back(arcs_.size());
        arcs_.push_back({v, cap});
        adj_[v].push_back(arcs_.size());
        arcs_.push_back({u, 0});
    }

    void save_capacities()
    {
        base_.clear();
        for (const Arc& a : arcs_)
            base_.push_back(a.cap);
    }

    void restore_capacities()
    {
        for (std::size_t i = 0; i < arcs_.size(); ++i)
            arcs_[i].cap = base_[i];
    }

    // Dinic: BFS levels, then blocking flow by DFS with per-node arc pointers.
    int max_flow(std::size_t source, std::size_t sink, int cap)
    {
        int flow = 0;
        while (flow < cap && build_levels(source, sink)) {
            next_.assign(adj_.size(), 0);
            while (flow < cap) {
                const int pushed = augment(source, sink, cap - flow);
                if (pushed == 0)
                    break;
                flow += pushed;
            }
        }
        return flow;
    }

private:
    struct Arc {
        std::size_t to;
        int cap;
    };
    bool build_levels(std::size_t source, std::size_t sink)
    {
        level_.assign(adj_.size(), -1);
        std::queue<std::size_t> q;
        level_[source] = 0;
        q.push(source);
        while (!q.empty()) {
            const std::size_t u = q.front();
            q.pop();
            for (std::size_t a : adj_[u])
                if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
                    level_[arcs_[a].to] = level_[u] + 1;
                    q.push(arcs_[a].to);
                }
        }
        return level_[sink] >= 0;
    }

    int augment(std::size_t u, std::size_t sink, int limit)
    {
        if (u == sink)
            return limit;
        for (std::size_t& i = next_[u]; i < adj_[u].size(); ++i) {
            Arc& arc = arcs_[adj_[u][i]];
            if (arc.cap <= 0 || level_[arc.to] != level_[u] + 1)
                continue;
            const int pushed = augment(arc.to, sink, std::min(limit, arc.cap));
            if (pushed > 0) {
                arc.cap -= pushed;
                arcs_[adj_[u][i] ^ 1U].cap += pushed;
                return pushed;
            }
        }
        return 0;
    }

    std::vector<std::vector<std::size_t>> adj_;
    std::vector<Arc> arcs_;
    std::vector<int> level_;
    std::vector<std::size_t> next_;
    std::vector<int> base_;
};

// Vertex v splits into in = 2v and out = 2v + 1 joined by a unit arc; edges
// become uncapacitated arcs out -> in both ways. Paths run from s_out to t_in,
// so the split arcs of s and t never carry flow and need no special case.
class SplitNetwork {
public:
    explicit SplitNetwork(const SimpleGraph& g) : net_(2 * g.vertex_count())
    {
        constexpr int big = std::numeric_limits<int>::max() / 4;
        const std::size_t n = g.vertex_count();
        for (std::size_t v = 0; v < n; ++v)
            net_.add_arc(2 * v, 2 * v + 1, 1);
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                if (g.has_edge(u, v)) {
                    net_.add_arc(2 * u + 1, 2 * v, big);
                    net_.add_arc(2 * v + 1, 2 * u, big);
                }
        net_.save_capacities();
    }

    int disjoint_paths(std::size_t s, std::size_t t, int cap)
    {
        net_.restore_capacities();
        return net_.max_flow(2 * s + 1, 2 * t, cap);
    }

private:
    FlowNetwork net_;
};

}  // namespace

int local_vertex_connectivity(const SimpleGraph& g, std::size_t s, std::size_t t, int cap)
{
    const std::size_t n = g.vertex_count();
    if (s >= n || t >= n || s == t)
        throw std::invalid_argument("local_vertex_connectivity: bad endpoints");
    if (g.has_edge(s, t))
        throw std::invalid_argument("local_vertex_connectivity: endpoints are adjacent");
    return SplitNetwork(g).disjoint_paths(s, t, cap);
}

int connected_components(const SimpleGraph& g)
{
    const std::size_t n = g.vertex_count();
    std::vector<bool> seen(n, false);
    int count = 0;
    std::vector<std::size_t> stack;
    for (std::size_t start = 0; start < n; ++start) {
        if (seen[start])
            continue;
        ++count;
        seen[start] = true;
        stack.push_back(start);
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t v = 0; v < n; ++v)
                if (!seen[v] && g.has_edge(u, v)) {
                    seen[v] = true;
                    stack.push_back(v);
                }
        }
    }
    return count;
}

int min_vertex_cut(const SimpleGraph& g)
{
    const std::size_t n = g.vertex_count();
    if (n > kVertexCutLimit)
        throw std::length_error("min_vertex_cut: graph exceeds 256 vertices");
    if (g.is_complete())
        return n == 0 ? 0 : static_cast<int>(n - 1);
    if (connected_components(g) > 1)
        return 0;

    int best = std::numeric_limits<int>::max();
    for (std::size_t v = 0; v < n; ++v)
        best = std::min(best, static_cast<int>(g.degree(v)));
    SplitNetwork net(g);
    for (std::size_t i = 0; i < n && static_cast<int>(i) <= best; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!g.has_edge(i, j))
                best = std::min(best, net.disjoint_paths(i, j, best));
    return best;
}

}  // namespace comax
