#pragma once

#include <array>
#include <string>
#include <vector>

#include "catkit/billiards/billiard.hpp"

namespace catkit::cli {

/// Planar table with walls clipped to the picture and trajectory polylines.
std::string billiard_svg(const billiards::BilliardTable& table, const std::vector<billiards::Trajectory>& runs);

/// Classical MDS of the normalized six-distance vectors (equivalently PCA on
/// the centered vectors), colored by class name.
std::string mds_scatter_svg(const std::vector<std::array<double, 6>>& rows, const std::vector<std::string>& classes);

}  // namespace catkit::cli
