#include <doctest.h>

#include "bredon/homology.hpp"
#include "support/catalogue.hpp"
#include "support/oracles.hpp"
#include "support/testing.hpp"

using namespace bredon;
using testing_util::ab;
using testing_util::abs;
using testing_util::all_cat;
using testing_util::sub;
using testing_util::trivial_cat;

TEST_CASE("free C2 homology")
{
    auto cat = trivial_cat(catalogue::cyclic(2));
    auto h = bredon_homology(BredonModule::trivial(cat, Variance::Left), 3);
    CHECK(h.groups == abs({"Z", "Z/2", "0", "Z/2"}));
    CHECK(h.truncation == 4);
    auto c = bredon_cohomology(BredonModule::trivial(cat), 3);
    CHECK(c.groups == abs({"Z", "0", "Z/2", "0"}));
}

TEST_CASE("trivial family reproduces group homology")
{
    for (auto g : {catalogue::cyclic(3), catalogue::klein_four(), catalogue::symmetric3(), catalogue::cyclic(6)}) {
        CAPTURE(g->name());
        auto cat = trivial_cat(g);
        auto expect = oracle::bar_group_homology(*g, 3);
        CHECK(bredon_homology(BredonModule::trivial(cat, Variance::Left), 3).groups == expect.homology);
        CHECK(bredon_cohomology(BredonModule::trivial(cat), 3).groups == expect.cohomology);
    }
}

TEST_CASE("bar oracle knows classical values")
{
    auto c4 = oracle::bar_group_homology(*catalogue::cyclic(4), 4);
    CHECK(c4.homology == abs({"Z", "Z/4", "0", "Z/4", "0"}));
    CHECK(c4.cohomology == abs({"Z", "0", "Z/4", "0", "Z/4"}));
    auto v4 = oracle::bar_group_homology(*catalogue::klein_four(), 3);
    CHECK(v4.homology == abs({"Z", "Z/2 + Z/2", "Z/2", "Z/2 + Z/2 + Z/2"}));
    auto s3 = oracle::bar_group_homology(*catalogue::symmetric3(), 4);
    CHECK(s3.homology == abs({"Z", "Z/2", "0", "Z/6", "0"}));
    CHECK(s3.cohomology == abs({"Z", "0", "Z/2", "0", "Z/6"}));
}

TEST_CASE("families containing G have no higher homology")
{
    for (const auto& [name, g] : catalogue::groups_up_to_order_12()) {
        if (g->order() > 8)
            continue;
        CAPTURE(name);
        auto cat = all_cat(g);
        auto h = bredon_homology(BredonModule::trivial(cat, Variance::Left), 2);
        CHECK(h.groups == abs({"Z", "0", "0"}));
        auto c = bredon_cohomology(BredonModule::trivial(cat), 2);
        CHECK(c.groups == abs({"Z", "0", "0"}));
    }
}

TEST_CASE("results do not depend on the resolution base or thread count")
{
    auto g = catalogue::symmetric3();
    auto cat = OrbitCategory::build(Family::cyclic(g));
    auto coeff = BredonModule::free_left(cat, cat->object_of(sub(g, {"(1 2)"})));
    std::vector<AbGroupInvariants> first;
    for (auto base : {ResolutionBase::AllMembers, ResolutionBase::ClassRepresentatives,
                      ResolutionBase::MaximalClasses})
        for (std::size_t threads : {1, 3}) {
            HomologyOptions opts;
            opts.base = base;
            opts.threads = threads;
            auto h = bredon_homology(BredonModule::trivial(cat, Variance::Left), 2, opts).groups;
            auto c = bredon_cohomology(BredonModule::trivial(cat), 2, opts).groups;
            h.insert(h.end(), c.begin(), c.end());
            auto t = bredon_homology(coeff, 2, opts).groups;
            h.insert(h.end(), t.begin(), t.end());
            if (first.empty())
                first = h;
            CHECK(h == first);
        }
}

TEST_CASE("cyclic family of S3")
{
    auto g = catalogue::symmetric3();
    auto cat = OrbitCategory::build(Family::cyclic(g));
    auto h = bredon_homology(BredonModule::trivial(cat, Variance::Left), 3);
    CHECK(h.groups == abs({"Z", "0", "0", "0"}));
}

TEST_CASE("projectivity of the trivial module")
{
    auto s3 = catalogue::symmetric3();
    CHECK(is_cd_zero(Family::all(s3)).cd_zero);
    auto c3 = is_cd_zero(Family::closure_of(s3, {sub(s3, {"(1 2 3)"})}));
    CHECK_FALSE(c3.cd_zero);
    REQUIRE(c3.components.size() == 1);
    CHECK(c3.components[0].unique_maximal);
    CHECK_FALSE(c3.components[0].self_normalizing);
    CHECK(c3.cross_check_agrees);
    CHECK_FALSE(c3.explanation.empty());

    // three conjugate transpositions: three components, each its own normaliser
    auto c2 = is_cd_zero(Family::closure_of(s3, {sub(s3, {"(1 2)"})}));
    CHECK_FALSE(c2.semi_full);
    CHECK(c2.components.size() == 3);
    CHECK(c2.cd_zero);

    for (const auto& [name, g] : catalogue::groups_up_to_order_12()) {
        CAPTURE(name);
        CHECK(is_cd_zero(Family::all(g)).cd_zero);
        auto triv = is_cd_zero(Family::trivial(g));
        CHECK(triv.cd_zero == (g->order() == 1));
        CHECK(triv.cross_check_agrees);
    }
}

TEST_CASE("dimension bounds")
{
    auto s3 = catalogue::symmetric3();
    auto b = dimension_bounds(all_cat(s3), 3);
    CHECK(b.cd_lower == 0);
    CHECK(b.hd_lower == 0);
    CHECK(b.cd_zero);

    auto c2 = dimension_bounds(trivial_cat(catalogue::cyclic(2)), 4);
    CHECK(c2.cd_lower >= 3);
    CHECK(c2.hd_lower == 3);
    CHECK_FALSE(c2.cd_zero);
    CHECK_FALSE(c2.battery.empty());

    auto one = dimension_bounds(trivial_cat(catalogue::trivial_group()), 3);
    CHECK(one.cd_lower == 0);
    CHECK(one.hd_lower == 0);
}

TEST_CASE("homology formatting")
{
    CHECK(format_homology(abs({"Z", "Z/2", "0"})) == "H_0 = Z\nH_1 = Z/2\nH_2 = 0\n");
    CHECK(format_homology(abs({"Z"}), "H^") == "H^0 = Z\n");
}
