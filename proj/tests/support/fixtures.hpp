#pragma once

#include <string>
#include <vector>

#include "bredon/gcw.hpp"
#include "bredon/orbit_category.hpp"

namespace fixtures {

/// Path to a file under data/.
std::string data_path(const std::string& relative);

/// One 0-cell with stabilizer G.
bredon::EquivariantCWData point_model(const bredon::GroupPtr& g);
/// C2 flipping [-1, 1]: fixed midpoint, one free orbit of endpoints and one of edges.
bredon::EquivariantCWData c2_interval(const bredon::GroupPtr& c2);
/// S3 star: centre fixed by S3, three leaves and three edges permuted with stabilizer <(1 2)>.
bredon::EquivariantCWData s3_star(const bredon::GroupPtr& s3);
/// C2 rotating a circle freely (one vertex orbit, one edge orbit).
bredon::EquivariantCWData c2_free_circle(const bredon::GroupPtr& c2);
/// Trivial group acting on a circle with one vertex and one edge.
bredon::EquivariantCWData trivial_circle(const bredon::GroupPtr& trivial);

struct CWFixture {
    std::string name;
    bredon::EquivariantCWData cw;
    bredon::CategoryPtr category;
    bool is_model = false; // all fixed sets contractible (up to the truncation)
};

/// Hand-built fixtures, truncated standard models and the equivariant CW files in data/cw.
std::vector<CWFixture> all_cw_fixtures();

} // namespace fixtures
