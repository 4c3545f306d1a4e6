#include <doctest.h>

#include "bredon/error.hpp"
#include "bredon/gset.hpp"
#include "bredon/orbit_category.hpp"
#include "support/catalogue.hpp"
#include "support/testing.hpp"

using namespace bredon;
using testing_util::all_cat;
using testing_util::element;
using testing_util::sub;

TEST_CASE("hom sets are fixed points of coset spaces")
{
    auto c2 = all_cat(catalogue::cyclic(2));
    auto one = c2->object_of(Subgroup::trivial(c2->group()));
    CHECK(c2->hom(one, one).size() == 2);

    auto s3 = all_cat(catalogue::symmetric3());
    const auto& g = s3->group();
    auto whole = s3->object_of(Subgroup::whole(g));
    for (std::size_t h = 0; h < s3->object_count(); ++h)
        CHECK(s3->hom(h, whole).size() == 1);
    auto c2o = s3->object_of(sub(g, {"(1 2)"}));
    auto c3o = s3->object_of(sub(g, {"(1 2 3)"}));
    CHECK(s3->hom(c2o, c3o).empty());

    // |hom(G/H, G/K)| = |(G/K)^H| counted through the G-set
    for (std::size_t h = 0; h < s3->object_count(); ++h)
        for (std::size_t k = 0; k < s3->object_count(); ++k) {
            auto x = GSet::coset_union(g, {s3->subgroup(k)});
            CHECK(s3->hom(h, k).size() == x.fixed_points(s3->subgroup(h)).size());
        }
}

TEST_CASE("composition is unital and associative")
{
    auto s3 = all_cat(catalogue::symmetric3());
    for (const auto& f : s3->morphisms()) {
        CHECK(s3->compose(s3->identity(f.target), f) == f);
        CHECK(s3->compose(f, s3->identity(f.source)) == f);
    }
    std::size_t triples = 0;
    for (const auto& f : s3->morphisms())
        for (const auto& g : s3->morphisms()) {
            if (g.source != f.target)
                continue;
            for (const auto& h : s3->morphisms()) {
                if (h.source != g.target)
                    continue;
                CHECK(s3->compose(h, s3->compose(g, f)) == s3->compose(s3->compose(h, g), f));
                ++triples;
            }
        }
    CHECK(triples > 0);
    CHECK_THROWS_AS(s3->compose(s3->morphism(0), s3->hom(1, 1).front()), Error);
}

TEST_CASE("composition formula in C4")
{
    auto cat = all_cat(catalogue::cyclic(4));
    const auto& g = cat->group();
    auto one = cat->object_of(Subgroup::trivial(g));
    auto c2 = cat->object_of(Subgroup::generate(g, {element(g, "(1 3)(2 4)")}));
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            const auto& f = cat->make(one, one, y);
            const auto& h = cat->make(one, c2, x);
            CHECK(cat->compose(h, f) == cat->make(one, c2, g->mul(y, x)));
        }
}

TEST_CASE("automorphism groups are N(H)/H")
{
    auto s3 = all_cat(catalogue::symmetric3());
    for (std::size_t h = 0; h < s3->object_count(); ++h) {
        std::size_t isos = 0;
        for (const auto& f : s3->hom(h, h)) {
            CHECK(s3->is_isomorphism(f));
            ++isos;
        }
        const auto& sub_h = s3->subgroup(h);
        CHECK(static_cast<int>(isos) == normalizer(sub_h).order() / sub_h.order());
    }
    auto whole = s3->object_of(Subgroup::whole(s3->group()));
    CHECK_FALSE(s3->is_isomorphism(s3->hom(0, whole).front()));
}

TEST_CASE("make rejects maps that do not exist")
{
    auto s3 = all_cat(catalogue::symmetric3());
    const auto& g = s3->group();
    auto c3 = s3->object_of(sub(g, {"(1 2 3)"}));
    auto one = s3->object_of(Subgroup::trivial(g));
    CHECK_THROWS_AS(s3->make(c3, one, 0), Error);
    CHECK_FALSE(s3->find(c3, one, 0));
    auto free_only = testing_util::trivial_cat(g);
    CHECK_THROWS_AS(free_only->object_of(Subgroup::whole(g)), Error);
}

TEST_CASE("G-sets")
{
    auto s3 = catalogue::symmetric3();
    auto x = GSet::coset_union(s3, {Subgroup::trivial(s3), sub(s3, {"(1 2)"})});
    CHECK(x.size() == 9);
    CHECK(x.orbit_count() == 2);
    CHECK(x.fixed_points(sub(s3, {"(1 2)"})).size() == 1);
    CHECK(x.fixed_points(sub(s3, {"(1 2 3)"})).empty());
    for (std::size_t p = 0; p < x.size(); ++p)
        CHECK(x.act(x.transporter(p), x.orbit_rep(x.orbit_of(p))) == p);
    auto xy = product(x, GSet::point(s3));
    CHECK(xy.size() == 9);
    CHECK(disjoint_union(x, x).orbit_count() == 4);
    CHECK(GSet::empty(s3).size() == 0);
}
