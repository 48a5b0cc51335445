#pragma once

#include <cstdint>
#include <vector>

#include "comax/polynomial.hpp"
#include "comax/ring_divisors.hpp"
#include "comax/simple_graph.hpp"
#include "comax/types.hpp"

namespace comax {

// Brute-force ground truth. Nothing here looks at divisor classes or
// quotient matrices; everything works on explicit matrices and graphs.

struct DenseSpectrum {
    std::vector<double> eigenvalues;  // ascending
    double backward_error_bound;
};

/// Dense symmetric eigensolve. Throws for non-symmetric input or size over `limit`.
DenseSpectrum numeric_spectrum(const IntMatrix& laplacian, std::size_t limit = dense_limit());

inline constexpr std::int64_t kExactCharPolyLimit = 64;

/// det(xI - L(Gamma(Z_n))) by evaluation/interpolation. n <= 64.
IntegerPolynomial exact_char_poly_full(const Modulus& m);

inline constexpr std::size_t kVertexCutLimit = 256;

/**
 * Vertex connectivity by vertex-split unit-capacity max flow. Complete graphs
 * report n - 1 without a search; disconnected graphs report 0. Uses Even's
 * pair restriction: only sources among the first kappa + 1 vertices are tried,
 * which gives the same minimum as trying every non-adjacent pair.
 */
int min_vertex_cut(const SimpleGraph& g);

/// Maximum number of internally vertex-disjoint s-t paths, stopping early at `cap`.
int local_vertex_connectivity(const SimpleGraph& g, std::size_t s, std::size_t t, int cap);

int connected_components(const SimpleGraph& g);

}  // namespace comax
