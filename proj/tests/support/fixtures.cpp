#include "support/fixtures.hpp"

#include "bredon/io.hpp"
#include "support/catalogue.hpp"

namespace fixtures {

using namespace bredon;

namespace {

int element(const GroupPtr& g, const std::string& cycles)
{
    return *g->index_of(Permutation::parse_cycles(cycles, g->degree()));
}

Subgroup generated(const GroupPtr& g, const std::vector<std::string>& gens)
{
    std::vector<int> idx;
    for (const auto& s : gens)
        idx.push_back(element(g, s));
    return Subgroup::generate(g, idx);
}

CategoryPtr category(const GroupPtr& g, bool all)
{
    return OrbitCategory::build(all ? Family::all(g) : Family::trivial(g));
}

} // namespace

std::string data_path(const std::string& relative)
{
    return std::string(BREDON_DATA_DIR) + "/" + relative;
}

EquivariantCWData point_model(const GroupPtr& g)
{
    EquivariantCWData x;
    x.group = g;
    x.cells = {{OrbitCell{"pt", Subgroup::whole(g), {}}}};
    return x;
}

EquivariantCWData c2_interval(const GroupPtr& c2)
{
    EquivariantCWData x;
    x.group = c2;
    x.cells.resize(2);
    x.cells[0].push_back({"mid", Subgroup::whole(c2), {}});
    x.cells[0].push_back({"end", Subgroup::trivial(c2), {}});
    x.cells[1].push_back({"half", Subgroup::trivial(c2), {{1, 0, 1}, {-1, 0, 0}}});
    return x;
}

EquivariantCWData s3_star(const GroupPtr& s3)
{
    EquivariantCWData x;
    x.group = s3;
    Subgroup c2 = generated(s3, {"(1 2)"});
    x.cells.resize(2);
    x.cells[0].push_back({"centre", Subgroup::whole(s3), {}});
    x.cells[0].push_back({"leaf", c2, {}});
    x.cells[1].push_back({"spoke", c2, {{1, 0, 1}, {-1, 0, 0}}});
    return x;
}

EquivariantCWData c2_free_circle(const GroupPtr& c2)
{
    EquivariantCWData x;
    x.group = c2;
    const int flip = c2->order() > 1 ? 1 : 0;
    x.cells.resize(2);
    x.cells[0].push_back({"v", Subgroup::trivial(c2), {}});
    x.cells[1].push_back({"arc", Subgroup::trivial(c2), {{1, flip, 0}, {-1, 0, 0}}});
    return x;
}

EquivariantCWData trivial_circle(const GroupPtr& trivial)
{
    EquivariantCWData x;
    x.group = trivial;
    x.cells.resize(2);
    x.cells[0].push_back({"v", Subgroup::whole(trivial), {}});
    x.cells[1].push_back({"loop", Subgroup::whole(trivial), {{1, 0, 0}, {-1, 0, 0}}});
    return x;
}

std::vector<CWFixture> all_cw_fixtures()
{
    std::vector<CWFixture> out;
    auto c2 = catalogue::cyclic(2);
    auto c4 = catalogue::cyclic(4);
    auto s3 = catalogue::symmetric3();
    auto one = catalogue::trivial_group();

    out.push_back({"point C2, F = all", point_model(c2), category(c2, true), true});
    out.push_back({"point S3, F = all", point_model(s3), category(s3, true), true});
    out.push_back({"interval C2, F = all", c2_interval(c2), category(c2, true), true});
    out.push_back({"star S3, F = all", s3_star(s3), category(s3, true), true});
    out.push_back({"free circle C2, F = {1}", c2_free_circle(c2), category(c2, false), false});
    out.push_back({"circle, trivial group", trivial_circle(one), category(one, false), false});

    struct Standard {
        std::string name;
        GroupPtr g;
        bool all;
        std::size_t dim;
        ResolutionBase base;
    };
    const std::vector<Standard> standard = {
        {"standard C2, F = all", c2, true, 3, ResolutionBase::AllMembers},
        {"standard C2, F = {1}", c2, false, 4, ResolutionBase::AllMembers},
        {"standard C4, F = all", c4, true, 3, ResolutionBase::MaximalClasses},
        {"standard S3, F = all, class representatives", s3, true, 1, ResolutionBase::ClassRepresentatives},
        {"standard S3, F = all, maximal classes", s3, true, 3, ResolutionBase::MaximalClasses},
        {"standard S3, F = {1}", s3, false, 3, ResolutionBase::AllMembers},
    };
    for (const auto& s : standard) {
        auto cat = category(s.g, s.all);
        out.push_back({s.name, standard_model(cat, s.dim, s.base), cat, false});
    }

    const std::vector<std::pair<std::string, GroupPtr>> files = {
        {"c2_interval.cw", c2}, {"s3_star.cw", s3}, {"s3_point.cw", s3}};
    for (const auto& [file, g] : files) {
        auto text = read_text_file(data_path("cw/" + file));
        out.push_back({file, parse_equivariant_cw(text, g), category(g, true), true});
    }
    return out;
}

} // namespace fixtures
