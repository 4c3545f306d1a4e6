#include <doctest.h>

#include "bredon/error.hpp"
#include "bredon/gcw.hpp"
#include "support/catalogue.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/testing.hpp"

using namespace bredon;
using testing_util::ab;
using testing_util::abs;
using testing_util::all_cat;
using testing_util::trivial_cat;

namespace {

IntMatrix scalar(std::size_t n, long long k)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = k;
    return m;
}

} // namespace

TEST_CASE("quotients of small models")
{
    auto c2 = catalogue::cyclic(2);
    auto pt = direct_quotient(fixtures::point_model(c2));
    CHECK(pt.ranks() == std::vector<std::size_t>{1});
    CHECK(pt.homology_all() == abs({"Z"}));

    auto cat = all_cat(c2);
    auto model = standard_model(cat, 4);
    auto h = direct_quotient(model).homology_all();
    CHECK(std::vector<AbGroupInvariants>(h.begin(), h.begin() + 4) == abs({"Z", "0", "0", "0"}));

    auto interval = direct_quotient(fixtures::c2_interval(c2));
    CHECK(interval.homology_all() == abs({"Z", "0"}));
    auto circle = direct_quotient(fixtures::c2_free_circle(c2));
    CHECK(circle.homology_all() == abs({"Z", "Z"}));
}

TEST_CASE("direct quotient agrees with the tensor pipeline on every fixture")
{
    for (const auto& f : fixtures::all_cw_fixtures()) {
        CAPTURE(f.name);
        auto cmp = quotient_complex(f.cw, f.category);
        CHECK(cmp.bases_unimodular);
        CHECK(cmp.matrices_agree);
        auto acyc = fixed_point_acyclicity(cellular_chains(f.cw, f.category));
        CHECK(acyc.contractible_fixed_sets() == f.is_model);
    }
}

TEST_CASE("cell data is validated")
{
    auto s3 = catalogue::symmetric3();
    auto x = fixtures::s3_star(s3);
    x.cells[1][0].boundary.push_back({1, testing_util::element(s3, "(1 3)"), 1});
    x.cells[1][0].boundary.push_back({-1, 0, 0});
    CHECK_THROWS_AS(x.validate(), Error); // (1 3) leaf is not fixed by (1 2)

    auto c2 = catalogue::cyclic(2);
    auto outside = fixtures::c2_interval(c2);
    CHECK_THROWS_AS(cellular_chains(outside, trivial_cat(c2)), Error);
    try {
        cellular_chains(outside, trivial_cat(c2));
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::StabilizerOutsideFamily);
    }

    EquivariantCWData bad;
    bad.group = catalogue::trivial_group();
    bad.cells.resize(3);
    bad.cells[0].push_back({"v", Subgroup::whole(bad.group), {}});
    bad.cells[1].push_back({"e", Subgroup::whole(bad.group), {}});
    bad.cells[2].push_back({"f", Subgroup::whole(bad.group), {{1, 0, 0}}});
    CHECK_NOTHROW(bad.validate());
    bad.cells[1][0].boundary = {{1, 0, 0}};
    CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("geometric lower bounds")
{
    auto c2 = catalogue::cyclic(2);
    auto r = geometric_lower_bound_report(fixtures::point_model(c2), all_cat(c2), 3);
    CHECK(r.valid_degree == 3);
    CHECK(r.hd_lower == 0);
    CHECK(r.cd_lower == 0);
    CHECK(r.cross_checked);
    CHECK(r.agrees);

    auto s3 = catalogue::symmetric3();
    auto rs = geometric_lower_bound_report(fixtures::point_model(s3), all_cat(s3), 3);
    CHECK(rs.agrees);
    CHECK(rs.cd_lower == 0);
    auto star = geometric_lower_bound_report(fixtures::s3_star(s3), all_cat(s3), 3);
    CHECK(star.agrees);
    CHECK(star.quotient_homology == abs({"Z", "0", "0", "0"}));

    auto cat = trivial_cat(c2);
    auto eg = geometric_lower_bound_report(standard_model(cat, 5), cat, 4);
    CHECK(eg.valid_degree == 4);
    auto bar = oracle::bar_group_homology(*c2, 4);
    CHECK(eg.quotient_homology == bar.homology);
    CHECK(eg.quotient_cohomology == bar.cohomology);
    CHECK(eg.agrees);
    CHECK(eg.hd_lower >= 3);
    CHECK(eg.cd_lower >= 3);
}

TEST_CASE("mapping telescopes")
{
    auto pt = point_quotient();
    auto t = telescope(pt, {IntMatrix::identity(1)}, 2);
    CHECK(t.top() == pt.top() + 1);
    CHECK(t.homology_all() == abs({"Z", "0"}));

    auto circle = loop_quotient();
    for (long long m : {2, 3, -2}) {
        auto tc = telescope(circle, {IntMatrix::identity(1), scalar(1, m)}, 3);
        CHECK(tc.top() == 2);
        CHECK(tc.squares_to_zero());
        auto h = tc.homology_all();
        CHECK(h[0] == ab("Z"));
        CHECK(h[1] == ab("Z"));
        CHECK(h[2].is_zero());
    }
    QuotientCWData interval({2, 1});
    interval.set_boundary(1, SparseMatrix::from_dense(IntMatrix{{-1}, {1}}));
    CHECK_THROWS_AS(telescope(interval, {IntMatrix::identity(2), scalar(1, 2)}, 1), Error);
    CHECK_THROWS_AS(telescope(interval, {IntMatrix::identity(2)}, 1), Error);

    auto c2 = catalogue::cyclic(2);
    auto x = fixtures::c2_interval(c2);
    EquivariantChainMap id(2);
    for (std::size_t n = 0; n < 2; ++n)
        for (std::size_t s = 0; s < x.cell_count(n); ++s)
            id[n].push_back({{1, 0, s}});
    auto ex = telescope(x, id, 2);
    CHECK(ex.dimension() == 2);
    auto q = direct_quotient(ex).homology_all();
    CHECK(q == abs({"Z", "0", "0"}));
    CHECK(quotient_complex(ex, all_cat(c2)).matrices_agree);
    CHECK(fixed_point_acyclicity(cellular_chains(ex, all_cat(c2))).contractible_fixed_sets());
}

TEST_CASE("attaching 2-cells to a loop")
{
    auto loop = loop_quotient();
    CHECK(jpl_attach(loop, {}).ranks() == loop.ranks());
    for (std::size_t k = 1; k <= 6; ++k) {
        std::vector<long long> degrees;
        for (std::size_t i = 0; i < k; ++i)
            degrees.push_back(static_cast<long long>(i % 3) + 1);
        auto q = bs1m_quotient(k, degrees);
        auto h = q.homology_all();
        CHECK(h[2].free_rank == k - 1);
        CHECK(h[1].is_zero()); // the degrees have gcd 1
    }
    auto even = bs1m_quotient(2, {2, 4}).homology_all();
    CHECK(even[1] == ab("Z/2"));
    CHECK(even[2] == ab("Z"));

    QuotientCWData interval({2, 1});
    SparseMatrix d(2, 1);
    d.add(0, 0, -1);
    d.add(1, 0, 1);
    interval.set_boundary(1, d);
    AttachmentSpec spec;
    spec.orientable = 1;
    CHECK_THROWS_AS(jpl_attach(interval, spec), Error);
    spec.non_orientable = 3;
    spec.orientable = 0;
    CHECK(jpl_attach(interval, spec).ranks() == interval.ranks());
}

TEST_CASE("join model of the plane")
{
    auto one = z2_join_quotient(1).homology_all();
    CHECK(one == abs({"Z", "0", "0", "Z"}));
    for (std::size_t m = 1; m <= 6; ++m) {
        auto q = z2_join_quotient(m);
        CHECK(q.ranks() == std::vector<std::size_t>{m + 1, 2 * m + 1, 2 * m, m});
        CHECK(q.squares_to_zero());
        auto h = q.homology_all();
        CHECK(h[0] == ab("Z"));
        CHECK(h[1].is_zero());
        // consecutive 3-spheres share a circle; each shared circle contributes a 2-class
        CHECK(h[2] == AbGroupInvariants::from_cyclic(m - 1, {}));
        CHECK(h[3] == AbGroupInvariants::from_cyclic(m, {}));
    }
    CHECK_THROWS_AS(z2_join_quotient(0), Error);
}
