#pragma once

#include <string>
#include <vector>

#include "bredon/group.hpp"

namespace catalogue {

struct NamedGroup {
    std::string name;
    bredon::GroupPtr group;
};

bredon::GroupPtr cyclic(int n);
bredon::GroupPtr symmetric3();
bredon::GroupPtr klein_four();
bredon::GroupPtr dihedral(int n); // order 2n
bredon::GroupPtr quaternion8();
bredon::GroupPtr dicyclic12();
bredon::GroupPtr alternating4();
bredon::GroupPtr trivial_group();

/// One group from each isomorphism class of order at most 12 (24 groups).
const std::vector<NamedGroup>& groups_up_to_order_12();

} // namespace catalogue
