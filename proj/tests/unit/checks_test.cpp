#include <random>

#include <doctest.h>

#include "bredon/checks.hpp"
#include "bredon/random_modules.hpp"
#include "support/catalogue.hpp"
#include "support/oracles.hpp"
#include "support/testing.hpp"

using namespace bredon;
using testing_util::abs;
using testing_util::all_cat;
using testing_util::sub;
using testing_util::trivial_cat;

TEST_CASE("Yoneda collapse on random coefficients")
{
    std::mt19937_64 rng(31);
    for (auto g : {catalogue::cyclic(2), catalogue::symmetric3(), catalogue::klein_four()}) {
        auto cat = all_cat(g);
        for (auto v : {Variance::Right, Variance::Left}) {
            auto m = random_module(cat, v, rng);
            for (std::size_t k = 0; k < cat->object_count(); ++k) {
                auto y = yoneda_check(m, k);
                CHECK(y.mor_collapses);
                CHECK(y.tensor_collapses);
                CHECK(y.mor_invariants == AbGroupInvariants::from_cyclic(m.rank(k), {}));
            }
        }
    }
}

TEST_CASE("Yoneda check notices a wrong module")
{
    // the table is functorial but the check must see its real ranks, so use zero at one object
    auto cat = all_cat(catalogue::cyclic(2));
    auto y = yoneda_check(BredonModule::zero(cat, Variance::Right), 0);
    CHECK(y.rank == 0);
    CHECK(y.mor_collapses);
    CHECK(y.mor_invariants.is_zero());
}

TEST_CASE("Shapiro isomorphism")
{
    auto s3 = catalogue::symmetric3();
    auto rep = shapiro_check(all_cat(s3), sub(s3, {"(1 2 3)"}), 3);
    CHECK(rep.agrees());
    CHECK(rep.homology_sub == abs({"Z", "0", "0", "0"}));

    auto whole = shapiro_check(all_cat(s3), Subgroup::whole(s3), 2);
    CHECK(whole.homology_sub == whole.homology_induced);
    CHECK(whole.agrees());

    auto c4 = catalogue::cyclic(4);
    CHECK(shapiro_check(all_cat(c4), sub(c4, {"(1 3)(2 4)"}), 3).agrees());

    // the free family restricted to C2 inside S3 gives classical Shapiro
    auto free = shapiro_check(trivial_cat(s3), sub(s3, {"(1 2)"}), 3);
    CHECK(free.agrees());
    CHECK(free.homology_sub == abs({"Z", "Z/2", "0", "Z/2"}));
}

TEST_CASE("Kunneth for C2 x C2 with free actions")
{
    auto c2 = catalogue::cyclic(2);
    auto cat = trivial_cat(c2);
    auto z = BredonModule::trivial(cat, Variance::Left);
    auto rep = kunneth_check(z, z, 3);
    CHECK(rep.consistent());
    auto bar = oracle::bar_group_homology(*catalogue::klein_four(), 3);
    REQUIRE(rep.degrees.size() == 4);
    for (std::size_t n = 0; n <= 3; ++n) {
        CAPTURE(n);
        CHECK(rep.degrees[n].middle == bar.homology[n]);
        CHECK(rep.degrees[n].chain_level == bar.homology[n]);
        CHECK(rep.degrees[n].orders_consistent);
    }
    CHECK(rep.degrees[0].left_end == testing_util::ab("Z"));
    CHECK(rep.degrees[0].right_end.is_zero());
}

TEST_CASE("Kunneth with a trivial factor")
{
    auto one = trivial_cat(catalogue::trivial_group());
    auto c3 = trivial_cat(catalogue::cyclic(3));
    auto rep = kunneth_check(BredonModule::trivial(c3, Variance::Left), BredonModule::trivial(one, Variance::Left), 3);
    CHECK(rep.consistent());
    for (std::size_t n = 0; n <= 3; ++n)
        CHECK(rep.degrees[n].middle == rep.first[n]);
}
