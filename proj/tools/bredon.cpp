// Command-line front end for the Bredon (co)homology engine.
#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bredon/checks.hpp"
#include "bredon/error.hpp"
#include "bredon/family.hpp"
#include "bredon/gcw.hpp"
#include "bredon/homology.hpp"
#include "bredon/io.hpp"
#include "bredon/random_modules.hpp"
#include "bredon/report.hpp"

using namespace bredon;
using json = nlohmann::ordered_json;

namespace {

struct Options {
    std::string group;
    std::string family = "trivial";
    std::size_t degree = 3;
    std::string coeff = "trivial";
    std::string format = "text";
    std::size_t threads = 1;
    std::uint64_t seed = 20240601;
    std::size_t budget = 2'000'000;
    std::string base = "maximal";
    bool dry_run = false;

    std::string subgroup;
    std::string group2;
    std::string family2 = "trivial";
    std::string cw;
    std::string quotient;
    std::size_t count = 10;
    bool sweep = false;

    std::size_t pieces = 1;
    std::string model_base = "loop";
    std::size_t cells = 1;
    std::size_t non_orientable = 0;
    std::vector<long long> degrees;
    bool random_degrees = false;
    std::size_t window = 3;
    long long map_degree = 2;
    std::string out;
};

struct Context {
    GroupPtr group;
    CategoryPtr cat;
};

ResolutionBase parse_base(const std::string& s)
{
    if (s == "all")
        return ResolutionBase::AllMembers;
    if (s == "classes")
        return ResolutionBase::ClassRepresentatives;
    if (s == "maximal")
        return ResolutionBase::MaximalClasses;
    throw Error(ErrorKind::Parse, "resolution base must be all, classes or maximal");
}

HomologyOptions homology_options(const Options& o)
{
    HomologyOptions h;
    h.base = parse_base(o.base);
    h.max_orbits_per_degree = o.budget;
    h.threads = o.threads;
    return h;
}

Family load_family(const GroupPtr& g, const std::string& text)
{
    FamilySpec spec = FamilySpec::parse(text);
    std::vector<Subgroup> seeds;
    if (spec.kind == FamilySpec::Kind::Custom)
        seeds = parse_subgroup_list(read_text_file(spec.path), g);
    return build_family(g, spec, seeds);
}

Context load_context(const std::string& group_path, const std::string& family)
{
    if (group_path.empty())
        throw Error(ErrorKind::Parse, "--group is required");
    Context c;
    c.group = load_group(group_path);
    c.cat = OrbitCategory::build(load_family(c.group, family));
    return c;
}

BredonModule load_coefficients(const CategoryPtr& cat, const std::string& spec, Variance v)
{
    if (spec == "trivial")
        return BredonModule::trivial(cat, v);
    if (spec.rfind("free:", 0) == 0) {
        std::size_t i = 0;
        try {
            i = std::stoul(spec.substr(5));
        } catch (const std::logic_error&) {
            throw Error(ErrorKind::Parse, "bad coefficient spec " + spec);
        }
        if (i >= cat->object_count())
            throw Error(ErrorKind::Parse, "free:<i> needs an object index below " + std::to_string(cat->object_count()));
        return v == Variance::Right ? BredonModule::free_sum(cat, {i}) : BredonModule::free_left(cat, i);
    }
    if (spec.rfind("custom:", 0) == 0) {
        BredonModule m = parse_module(read_text_file(spec.substr(7)), cat);
        if (m.variance() != v)
            throw Error(ErrorKind::VarianceMismatch, std::string("coefficients must be a ") + std::string(to_string(v)) +
                                                         " module");
        return m;
    }
    throw Error(ErrorKind::Parse, "coefficient spec must be trivial, free:<i> or custom:<file>");
}

std::string group_label(const Context& c)
{
    return c.group->name().empty() ? "order " + std::to_string(c.group->order()) : c.group->name();
}

json invariants_json(const std::vector<AbGroupInvariants>& groups)
{
    json a = json::array();
    for (const auto& g : groups)
        a.push_back(g.to_string());
    return a;
}

void emit(const Options& o, const std::string& text, const json& j)
{
    if (o.format == "json")
        std::cout << j.dump(2) << '\n';
    else
        std::cout << text;
}

int cmd_subgroups(const Options& o)
{
    GroupPtr g = load_group(o.group);
    Family all = Family::all(g);
    std::ostringstream os;
    json classes = json::array();
    auto reps = all.class_representatives();
    os << "group " << (g->name().empty() ? "G" : g->name()) << " order " << g->order() << '\n';
    os << "subgroups " << all.size() << " in " << reps.size() << " conjugacy classes\n";
    for (std::size_t c = 0; c < reps.size(); ++c) {
        const Subgroup& h = all.member(reps[c]);
        std::size_t size = static_cast<std::size_t>(g->order() / normalizer(h).order());
        bool normal = is_normal(h);
        os << "class " << c << " order " << h.order() << " size " << size << ' ' << h.describe()
           << (normal ? " normal" : "") << '\n';
        classes.push_back({{"order", h.order()}, {"size", size}, {"representative", h.describe()}, {"normal", normal}});
    }
    emit(o, os.str(), json{{"group", g->name()}, {"order", g->order()}, {"subgroups", all.size()}, {"classes", classes}});
    return 0;
}

int cmd_orbit_cat(const Options& o)
{
    Context c = load_context(o.group, o.family);
    const OrbitCategory& cat = *c.cat;
    std::ostringstream os;
    json objects = json::array();
    json homs = json::array();
    os << "objects " << cat.object_count() << '\n';
    for (std::size_t i = 0; i < cat.object_count(); ++i) {
        os << "object " << i << ' ' << cat.subgroup(i).describe() << " cosets " << cat.coset_count(i) << '\n';
        objects.push_back({{"subgroup", cat.subgroup(i).describe()}, {"cosets", cat.coset_count(i)}});
    }
    os << "hom sizes\n";
    for (std::size_t i = 0; i < cat.object_count(); ++i) {
        json row = json::array();
        os << i << ':';
        for (std::size_t j = 0; j < cat.object_count(); ++j) {
            os << ' ' << cat.hom(i, j).size();
            row.push_back(cat.hom(i, j).size());
        }
        os << '\n';
        homs.push_back(row);
    }
    os << "morphisms " << cat.morphism_count() << '\n';
    emit(o, os.str(), json{{"objects", objects}, {"hom_sizes", homs}, {"morphisms", cat.morphism_count()}});
    return 0;
}

int dry_run(const Options& o, const Context& c)
{
    auto e = estimate_standard_resolution(*c.cat, o.degree + 1, parse_base(o.base));
    std::ostringstream os;
    json orbits = json::array(), points = json::array();
    for (std::size_t n = 0; n < e.orbits.size(); ++n) {
        os << "degree " << n << " orbits " << e.orbits[n].str() << " tuples " << e.points[n].str() << '\n';
        orbits.push_back(e.orbits[n].str());
        points.push_back(e.points[n].str());
    }
    emit(o, os.str(), json{{"orbits", orbits}, {"tuples", points}});
    return 0;
}

int cmd_homology(const Options& o, bool cohomology)
{
    Context c = load_context(o.group, o.family);
    if (o.dry_run)
        return dry_run(o, c);
    BredonModule m = load_coefficients(c.cat, o.coeff, cohomology ? Variance::Right : Variance::Left);
    auto t0 = std::chrono::steady_clock::now();
    HomologyReport rep = cohomology ? bredon_cohomology(m, o.degree, homology_options(o))
                                    : bredon_homology(m, o.degree, homology_options(o));
    HomologyRun run;
    run.command = cohomology ? "cohomology" : "homology";
    run.group = group_label(c);
    run.family = o.family;
    run.coefficients = o.coeff;
    run.degree = o.degree;
    run.groups = rep.groups;
    run.truncation = rep.truncation;
    run.orbit_counts = rep.orbit_counts;
    run.chain_ranks = rep.chain_ranks;
    run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (o.format == "json" ? to_json(run) : to_text(run));
    return 0;
}

int cmd_quotient_homology(const Options& o)
{
    if (!o.quotient.empty()) {
        QuotientCWData q = parse_quotient_cw(read_text_file(o.quotient));
        auto h = q.homology_all();
        emit(o, format_homology(h), json{{"homology", invariants_json(h)}});
        return 0;
    }
    if (o.cw.empty())
        throw Error(ErrorKind::Parse, "quotient-homology needs --cw <equivariant file> or --quotient <file>");
    Context c = load_context(o.group, o.family);
    EquivariantCWData x = parse_equivariant_cw(read_text_file(o.cw), c.group);
    QuotientComparison cmp = quotient_complex(x, c.cat);
    GeometricBoundReport rep = geometric_lower_bound_report(x, c.cat, o.degree);
    std::ostringstream os;
    os << "cells";
    for (std::size_t n = 0; n <= cmp.direct.top(); ++n)
        os << ' ' << cmp.direct.rank(n);
    os << '\n';
    os << "orbit basis of C(X) (x)_F Z: " << (cmp.bases_unimodular ? "yes" : "no") << '\n';
    os << "quotient boundaries agree with C(X) (x)_F Z: " << (cmp.matrices_agree ? "yes" : "no") << '\n';
    os << "valid through degree " << rep.valid_degree << '\n';
    os << format_homology(rep.quotient_homology);
    os << format_homology(rep.quotient_cohomology, "H^");
    os << "hd lower bound " << rep.hd_lower << '\n';
    os << "cd lower bound " << rep.cd_lower << '\n';
    os << "bredon cross-check: " << (!rep.cross_checked ? "n/a" : rep.agrees ? "agrees" : "DISAGREES") << '\n';
    emit(o, os.str(),
         json{{"cells", cmp.direct.ranks()},
              {"bases_unimodular", cmp.bases_unimodular},
              {"matrices_agree", cmp.matrices_agree},
              {"valid_degree", rep.valid_degree},
              {"homology", invariants_json(rep.quotient_homology)},
              {"cohomology", invariants_json(rep.quotient_cohomology)},
              {"hd_lower", rep.hd_lower},
              {"cd_lower", rep.cd_lower},
              {"cross_checked", rep.cross_checked},
              {"agrees", rep.agrees}});
    bool ok = cmp.bases_unimodular && cmp.matrices_agree && (!rep.cross_checked || rep.agrees);
    return ok ? 0 : 1;
}

int cmd_dims(const Options& o)
{
    Context c = load_context(o.group, o.family);
    DimensionBounds b = dimension_bounds(c.cat, o.degree, homology_options(o));
    CdZeroReport z = is_cd_zero(c.cat->family());
    std::ostringstream os;
    os << "cd_F >= " << b.cd_lower << " (lower bound from degrees <= " << o.degree << ")\n";
    os << "hd_F >= " << b.hd_lower << " (lower bound from degrees <= " << o.degree << ")\n";
    os << "cd_F = 0: " << (b.cd_zero ? "yes" : "no") << " (" << z.explanation << ")\n";
    json battery = json::array();
    for (const auto& r : b.battery) {
        os << (r.variance == Variance::Right ? "Ext " : "Tor ") << r.label << ':';
        for (const auto& g : r.groups)
            os << ' ' << g.to_string() << ';';
        os << '\n';
        battery.push_back({{"module", r.label},
                           {"variance", std::string(to_string(r.variance))},
                           {"groups", invariants_json(r.groups)}});
    }
    emit(o, os.str(),
         json{{"degree", o.degree}, {"cd_lower", b.cd_lower}, {"hd_lower", b.hd_lower}, {"cd_zero", b.cd_zero},
              {"battery", battery}});
    return 0;
}

int cmd_check_yoneda(const Options& o)
{
    Context c = load_context(o.group, o.family);
    std::mt19937_64 rng(o.seed);
    std::vector<BredonModule> modules{BredonModule::trivial(c.cat, Variance::Right),
                                      BredonModule::trivial(c.cat, Variance::Left)};
    for (std::size_t i = 0; i < o.count; ++i)
        modules.push_back(random_module(c.cat, i % 2 == 0 ? Variance::Right : Variance::Left, rng));
    std::size_t checks = 0, failures = 0;
    std::ostringstream os;
    for (std::size_t i = 0; i < modules.size(); ++i)
        for (std::size_t k = 0; k < c.cat->object_count(); ++k) {
            YonedaResult r = yoneda_check(modules[i], k);
            ++checks;
            if (!r.mor_collapses || !r.tensor_collapses) {
                ++failures;
                os << "module " << i << " object " << k << ": mor " << r.mor_invariants.to_string() << " tensor "
                   << r.tensor_invariants.to_string() << " expected rank " << r.rank << '\n';
            }
        }
    os << "yoneda: " << checks << " checks, " << failures << " failures\n";
    emit(o, os.str(), json{{"checks", checks}, {"failures", failures}});
    return failures == 0 ? 0 : 1;
}

int cmd_check_shapiro(const Options& o)
{
    Context c = load_context(o.group, o.family);
    if (o.subgroup.empty())
        throw Error(ErrorKind::Parse, "--subgroup {gens} is required");
    Subgroup k = parse_subgroup(o.subgroup, c.group);
    ShapiroReport r = shapiro_check(c.cat, k, o.degree, homology_options(o));
    std::ostringstream os;
    for (std::size_t n = 0; n <= o.degree; ++n)
        os << "H_" << n << ": K " << r.homology_sub[n].to_string() << " | G induced "
           << r.homology_induced[n].to_string() << '\n';
    for (std::size_t n = 0; n <= o.degree; ++n)
        os << "H^" << n << ": K " << r.cohomology_sub[n].to_string() << " | G coinduced "
           << r.cohomology_coinduced[n].to_string() << '\n';
    os << "shapiro: " << (r.agrees() ? "agree" : "DISAGREE") << '\n';
    emit(o, os.str(),
         json{{"homology_sub", invariants_json(r.homology_sub)},
              {"homology_induced", invariants_json(r.homology_induced)},
              {"cohomology_sub", invariants_json(r.cohomology_sub)},
              {"cohomology_coinduced", invariants_json(r.cohomology_coinduced)},
              {"agrees", r.agrees()}});
    return r.agrees() ? 0 : 1;
}

int cmd_check_kunneth(const Options& o)
{
    Context c1 = load_context(o.group, o.family);
    Context c2 = load_context(o.group2.empty() ? o.group : o.group2, o.family2);
    KunnethReport r = kunneth_check(BredonModule::trivial(c1.cat, Variance::Left),
                                    BredonModule::trivial(c2.cat, Variance::Left), o.degree, homology_options(o));
    std::ostringstream os;
    json degrees = json::array();
    for (std::size_t n = 0; n < r.degrees.size(); ++n) {
        const auto& d = r.degrees[n];
        os << "degree " << n << ": " << d.left_end.to_string() << " -> " << d.middle.to_string() << " -> "
           << d.right_end.to_string() << (d.splits ? "" : "  (does not split)")
           << (d.orders_consistent ? "" : "  (orders inconsistent)")
           << (d.chain_level_matches ? "" : "  (chain level " + d.chain_level.to_string() + ")") << '\n';
        degrees.push_back({{"left", d.left_end.to_string()},
                           {"middle", d.middle.to_string()},
                           {"right", d.right_end.to_string()},
                           {"chain_level", d.chain_level.to_string()},
                           {"orders_consistent", d.orders_consistent},
                           {"splits", d.splits}});
    }
    os << "kunneth: " << (r.consistent() ? "consistent" : "INCONSISTENT") << '\n';
    emit(o, os.str(), json{{"degrees", degrees}, {"consistent", r.consistent()}});
    return r.consistent() ? 0 : 1;
}

int cmd_check_cd_zero(const Options& o)
{
    GroupPtr g = load_group(o.group);
    std::vector<std::pair<std::string, Family>> families;
    if (o.sweep) {
        Family all = Family::all(g);
        for (auto rep : all.class_representatives())
            families.emplace_back("closure " + all.member(rep).describe(),
                                  Family::semi_full_closure_of(g, {all.member(rep)}));
    } else {
        families.emplace_back(o.family, load_family(g, o.family));
    }
    std::size_t discrepancies = 0;
    std::ostringstream os;
    json rows = json::array();
    for (const auto& [label, fam] : families) {
        CdZeroReport r = is_cd_zero(fam);
        if (!r.cross_check_agrees)
            ++discrepancies;
        os << label << ": cd_F = 0 " << (r.cd_zero ? "yes" : "no") << " (" << r.explanation << ")\n";
        rows.push_back({{"family", label},
                        {"cd_zero", r.cd_zero},
                        {"semi_full", r.semi_full},
                        {"contains_group", r.contains_whole_group},
                        {"agrees", r.cross_check_agrees},
                        {"explanation", r.explanation}});
    }
    if (o.sweep)
        os << "discrepancies " << discrepancies << '\n';
    emit(o, os.str(), json{{"families", rows}, {"discrepancies", discrepancies}});
    return discrepancies == 0 ? 0 : 1;
}

std::string homology_table(const QuotientCWData& q, bool report_contractible)
{
    auto h = q.homology_all();
    std::string s = format_homology(h);
    if (report_contractible) {
        bool contractible = h[0] == AbGroupInvariants::from_cyclic(1, {});
        for (std::size_t n = 1; n < h.size(); ++n)
            contractible = contractible && h[n].is_zero();
        s += std::string("contractible: ") + (contractible ? "yes" : "no") + '\n';
    }
    return s;
}

int finish_build(const Options& o, const QuotientCWData& q, bool report_contractible)
{
    std::string file = format_quotient_cw(q);
    if (!o.out.empty()) {
        write_text_file(o.out, file);
        std::cout << "wrote " << o.out << '\n';
    }
    auto h = q.homology_all();
    emit(o, homology_table(q, report_contractible),
         json{{"cells", q.ranks()}, {"homology", invariants_json(h)}, {"complex", file}});
    return 0;
}

QuotientCWData load_base(const std::string& base)
{
    if (base == "loop" || base == "circle")
        return loop_quotient();
    if (base == "point")
        return point_quotient();
    return parse_quotient_cw(read_text_file(base));
}

int cmd_build_jpl(const Options& o)
{
    QuotientCWData base = load_base(o.model_base);
    AttachmentSpec spec;
    spec.orientable = o.cells;
    spec.non_orientable = o.non_orientable;
    std::vector<long long> deg = o.degrees;
    if (o.random_degrees) {
        std::mt19937_64 rng(o.seed);
        std::uniform_int_distribution<long long> d(-5, 5);
        deg.clear();
        for (std::size_t i = 0; i < o.cells; ++i)
            deg.push_back(d(rng));
    }
    if (!deg.empty()) {
        if (deg.size() != o.cells)
            throw Error(ErrorKind::Parse, "--degrees needs one value per cell");
        const std::size_t r1 = base.top() >= 1 ? base.rank(1) : 0;
        if (r1 == 0)
            throw Error(ErrorKind::InvalidArgument, "the base has no 1-cells to attach along");
        for (auto d : deg) {
            std::vector<long long> cycle(r1, 0);
            cycle[0] = d;
            spec.cycles.push_back(cycle);
        }
    }
    return finish_build(o, jpl_attach(base, spec), false);
}

int cmd_build_telescope(const Options& o)
{
    QuotientCWData base = load_base(o.model_base);
    std::vector<IntMatrix> f;
    for (std::size_t n = 0; n <= base.top(); ++n) {
        IntMatrix m = IntMatrix::identity(base.rank(n));
        if (n == 1 && (o.model_base == "loop" || o.model_base == "circle"))
            m(0, 0) = o.map_degree;
        f.push_back(std::move(m));
    }
    return finish_build(o, telescope(base, f, o.window), true);
}

int cmd_build_standard_model(const Options& o)
{
    Context c = load_context(o.group, o.family);
    EquivariantCWData x = standard_model(c.cat, o.degree, parse_base(o.base == "maximal" ? "all" : o.base));
    if (!o.out.empty()) {
        write_text_file(o.out, format_equivariant_cw(x));
        std::cout << "wrote " << o.out << '\n';
    }
    QuotientCWData q = direct_quotient(x);
    auto h = q.homology_all();
    emit(o, format_homology(h), json{{"cells", q.ranks()}, {"homology", invariants_json(h)}});
    return 0;
}

int exit_code(ErrorKind k)
{
    switch (k) {
    case ErrorKind::Parse:
        return 2;
    case ErrorKind::BudgetExceeded:
    case ErrorKind::GroupTooLarge:
        return 3;
    default:
        return 1;
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Bredon homology and cohomology of finite groups over families of subgroups"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub, bool needs_group) {
        auto* g = sub->add_option("--group", o.group, "group file");
        if (needs_group)
            g->required();
        sub->add_option("--family", o.family, "trivial | all | cyclic | p:<prime> | custom:<file>");
        sub->add_option("--degree", o.degree, "top degree");
        sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--threads", o.threads, "worker threads");
        sub->add_option("--seed", o.seed, "seed for randomized checks");
        sub->add_option("--budget-cells", o.budget, "maximum orbits per degree of the standard resolution");
        sub->add_option("--resolution-base", o.base, "all | classes | maximal")
            ->check(CLI::IsMember({"all", "classes", "maximal"}));
    };

    auto* subgroups = app.add_subcommand("subgroups", "list conjugacy classes of subgroups");
    add_common(subgroups, true);
    auto* orbit_cat = app.add_subcommand("orbit-cat", "describe the orbit category");
    add_common(orbit_cat, true);
    auto* homology = app.add_subcommand("homology", "Bredon homology H_n^F(G; N)");
    add_common(homology, true);
    homology->add_option("--coeff", o.coeff, "trivial | free:<object> | custom:<module file>");
    homology->add_flag("--dry-run", o.dry_run, "print resolution sizes only");
    auto* cohomology = app.add_subcommand("cohomology", "Bredon cohomology H^n_F(G; M)");
    add_common(cohomology, true);
    cohomology->add_option("--coeff", o.coeff, "trivial | free:<object> | custom:<module file>");
    cohomology->add_flag("--dry-run", o.dry_run, "print resolution sizes only");
    auto* quotient = app.add_subcommand("quotient-homology", "homology of an orbit space and the bounds it gives");
    add_common(quotient, false);
    quotient->add_option("--cw", o.cw, "equivariant CW file");
    quotient->add_option("--quotient", o.quotient, "quotient CW file");
    auto* dims = app.add_subcommand("dims", "lower bounds for cd_F and hd_F");
    add_common(dims, true);

    auto* check = app.add_subcommand("check", "consistency checks");
    check->require_subcommand(1);
    auto* yoneda = check->add_subcommand("yoneda", "Yoneda and tensor collapse on random modules");
    add_common(yoneda, true);
    yoneda->add_option("--count", o.count, "number of random modules");
    auto* shapiro = check->add_subcommand("shapiro", "Shapiro's lemma for a subgroup");
    add_common(shapiro, true);
    shapiro->add_option("--subgroup", o.subgroup, "subgroup as {gen; gen}")->required();
    auto* kunneth = check->add_subcommand("kunneth", "Kunneth sequence for a product");
    add_common(kunneth, true);
    kunneth->add_option("--group2", o.group2, "second group file (default: same group)");
    kunneth->add_option("--family2", o.family2, "family of the second group");
    auto* cd_zero = check->add_subcommand("cd-zero", "projectivity of the trivial module");
    add_common(cd_zero, true);
    cd_zero->add_flag("--sweep", o.sweep, "all families generated by one conjugacy class");

    auto* build = app.add_subcommand("build", "model builders");
    build->require_subcommand(1);
    auto* z2 = build->add_subcommand("z2-join", "joins of circles glued along shared circles");
    add_common(z2, false);
    z2->add_option("--pieces", o.pieces, "number of join pieces")->check(CLI::PositiveNumber);
    z2->add_option("--out", o.out, "write the quotient CW file");
    auto* jpl = build->add_subcommand("jpl", "attach 2-cells to a base complex");
    add_common(jpl, false);
    jpl->add_option("--base", o.model_base, "loop | point | <quotient file>");
    jpl->add_option("--cells", o.cells, "orientable classes (attached 2-cells)");
    jpl->add_option("--non-orientable", o.non_orientable, "non-orientable classes (no quotient cells)");
    jpl->add_option("--degrees", o.degrees, "attaching degree of each cell")->delimiter(',');
    jpl->add_flag("--random-degrees", o.random_degrees, "draw degrees from --seed");
    jpl->add_option("--out", o.out, "write the quotient CW file");
    auto* tele = build->add_subcommand("telescope", "two-sided mapping telescope");
    add_common(tele, false);
    tele->add_option("--base", o.model_base, "point | circle | <quotient file>");
    tele->add_option("--window", o.window, "stages -W..W");
    tele->add_option("--map-degree", o.map_degree, "degree of the self-map of the circle");
    tele->add_option("--out", o.out, "write the quotient CW file");
    auto* stdmodel = build->add_subcommand("standard-model", "truncated standard model as equivariant cells");
    add_common(stdmodel, true);
    stdmodel->add_option("--out", o.out, "write the equivariant CW file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*subgroups)
            return cmd_subgroups(o);
        if (*orbit_cat)
            return cmd_orbit_cat(o);
        if (*homology)
            return cmd_homology(o, false);
        if (*cohomology)
            return cmd_homology(o, true);
        if (*quotient)
            return cmd_quotient_homology(o);
        if (*dims)
            return cmd_dims(o);
        if (*yoneda)
            return cmd_check_yoneda(o);
        if (*shapiro)
            return cmd_check_shapiro(o);
        if (*kunneth)
            return cmd_check_kunneth(o);
        if (*cd_zero)
            return cmd_check_cd_zero(o);
        if (*z2)
            return finish_build(o, z2_join_quotient(o.pieces), false);
        if (*jpl)
            return cmd_build_jpl(o);
        if (*tele)
            return cmd_build_telescope(o);
        if (*stdmodel)
            return cmd_build_standard_model(o);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
