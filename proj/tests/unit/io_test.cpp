#include <random>

#include <doctest.h>

#include "bredon/error.hpp"
#include "bredon/io.hpp"
#include "bredon/random_modules.hpp"
#include "bredon/report.hpp"
#include "support/catalogue.hpp"
#include "support/fixtures.hpp"
#include "support/testing.hpp"

using namespace bredon;
using testing_util::abs;
using testing_util::all_cat;

namespace {

ErrorKind kind_of(const std::function<void()>& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InvalidArgument;
}

} // namespace

TEST_CASE("group files")
{
    for (const auto* name : {"c1", "c2", "c3", "c4", "c6", "c2xc2", "s3", "d8", "a4", "q8"}) {
        CAPTURE(name);
        auto g = load_group(fixtures::data_path(std::string("groups/") + name + ".grp"));
        auto again = parse_group(format_group(*g));
        CHECK(again->elements() == g->elements());
        CHECK(again->name() == g->name());
    }
    CHECK(load_group(fixtures::data_path("groups/q8.grp"))->order() == 8);
    CHECK(load_group(fixtures::data_path("groups/a4.grp"))->order() == 12);
    CHECK(parse_group("degree 3\ngen (1 2 3)\n", "fallback")->name() == "fallback");

    CHECK(kind_of([] { parse_group("degree 3\ngen (1 4)\n"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_group("gen (1 2)\n"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_group("degree 2\nfoo\n"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_group("cayley 2\n0 1\n"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { load_group("/nonexistent/file.grp"); }) == ErrorKind::Parse);
}

TEST_CASE("subgroup notation")
{
    auto s3 = catalogue::symmetric3();
    CHECK(parse_subgroup("{(1 2); (1 2 3)}", s3).order() == 6);
    CHECK(parse_subgroup("{}", s3).order() == 1);
    CHECK(parse_subgroup("{()}", s3).order() == 1);
    auto h = testing_util::sub(s3, {"(1 3)"});
    CHECK(parse_subgroup(h.describe(), s3) == h);
    auto list = parse_subgroup_list(read_text_file(fixtures::data_path("families/s3_c3.fam")), s3);
    REQUIRE(list.size() == 1);
    CHECK(list[0].order() == 3);
    CHECK_THROWS_AS(parse_subgroup("(1 2)", s3), Error);
}

TEST_CASE("module files round-trip")
{
    std::mt19937_64 rng(29);
    for (auto g : {catalogue::cyclic(2), catalogue::symmetric3(), catalogue::cyclic(4)}) {
        auto cat = all_cat(g);
        for (auto v : {Variance::Right, Variance::Left}) {
            auto m = random_module(cat, v, rng);
            auto text = format_module(m);
            auto back = parse_module(text, cat);
            CHECK(back.variance() == v);
            CHECK(back.ranks() == m.ranks());
            for (const auto& f : cat->morphisms())
                CHECK(back.act(f) == m.act(f));
            CHECK(format_module(back) == text);
        }
    }
    auto c2 = all_cat(catalogue::cyclic(2));
    auto sample = parse_module(read_text_file(fixtures::data_path("modules/c2_sign.mod")), c2);
    CHECK(sample.is_functorial());
    // a non-functorial table is rejected
    std::string bad = "variance right\nobject 0 rank 1\nobject 1 rank 1\n";
    for (const auto& f : c2->morphisms())
        if (f.id != c2->identity(f.source).id)
            bad += "action " + std::to_string(f.id) + " matrix [[2]]\n";
    CHECK(kind_of([&] { parse_module(bad, c2); }) == ErrorKind::CompositionMismatch);
    CHECK(kind_of([&] { parse_module("variance sideways\n", c2); }) == ErrorKind::Parse);
}

TEST_CASE("CW files round-trip")
{
    for (const auto& f : fixtures::all_cw_fixtures()) {
        CAPTURE(f.name);
        auto text = format_equivariant_cw(f.cw);
        auto back = parse_equivariant_cw(text, f.cw.group);
        CHECK(format_equivariant_cw(back) == text);
        CHECK(direct_quotient(back).ranks() == direct_quotient(f.cw).ranks());
        auto q = direct_quotient(f.cw);
        auto qback = parse_quotient_cw(format_quotient_cw(q));
        CHECK(qback.ranks() == q.ranks());
        for (std::size_t n = 1; n <= q.top(); ++n)
            CHECK(qback.boundary(n) == q.boundary(n));
    }
    auto rp2 = parse_quotient_cw(read_text_file(fixtures::data_path("cw/rp2.qcw")));
    CHECK(rp2.homology_all() == abs({"Z", "Z/2", "0"}));
    auto z = z2_join_quotient(3);
    CHECK(parse_quotient_cw(format_quotient_cw(z)).homology_all() == z.homology_all());

    CHECK(kind_of([] { parse_quotient_cw("[dim 0] cells 1\n[dim 1] cells 1\nd 0 = 1*3\n"); }) == ErrorKind::Parse);
    CHECK(kind_of([] {
        parse_quotient_cw("[dim 0] cells 1\n[dim 1] cells 1\nd 0 = 1*0\n[dim 2] cells 1\nd 0 = 1*0\n");
    }) == ErrorKind::BoundaryMismatch);
    auto s3 = catalogue::symmetric3();
    CHECK(kind_of([&] { parse_equivariant_cw("[dim 0]\ncell a stab {}\ncell a stab {}\n", s3); }) ==
          ErrorKind::Parse);
    CHECK(kind_of([&] { parse_equivariant_cw("[dim 1]\n", s3); }) == ErrorKind::Parse);
}

TEST_CASE("homology reports round-trip through JSON")
{
    HomologyRun run;
    run.command = "homology";
    run.group = "S3";
    run.family = "all";
    run.coefficients = "trivial";
    run.degree = 2;
    run.groups = abs({"Z", "Z/2 + Z/6", "Z^3"});
    run.truncation = 3;
    run.orbit_counts = {1, 2, 3, 4};
    run.chain_ranks = {1, 2, 3, 4};
    run.seconds = 0.125;
    auto json = to_json(run);
    CHECK(homology_run_from_json(json) == run);
    CHECK(to_json(homology_run_from_json(json)) == json);
    CHECK(to_text(run) == "H_0 = Z\nH_1 = Z/2 + Z/6\nH_2 = Z^3\n");
    CHECK(kind_of([] { homology_run_from_json("{\"command\": 1}"); }) == ErrorKind::Parse);
}
