#pragma once

#include <Eigen/Core>
#include <cstdint>

namespace comax {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Largest vertex count for which dense matrices are built. Defaults to 4096;
/// the COMAX_DENSE_LIMIT environment variable overrides it.
std::size_t dense_limit();

inline constexpr std::size_t kDefaultDenseLimit = 4096;

}  // namespace comax
