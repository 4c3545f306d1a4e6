// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bredon/checks.hpp"
#include "bredon/gcw.hpp"
#include "bredon/homology.hpp"
#include "bredon/random_modules.hpp"
#include "bredon/resolution.hpp"
#include "bredon/smith.hpp"
#include "support/catalogue.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/testing.hpp"

using namespace bredon;
using testing_util::all_cat;
using testing_util::sub;
using testing_util::trivial_cat;

namespace {

// Pinned limits.
constexpr double kClassicalSecondsPerGroup = 60.0;
constexpr std::size_t kClassicalDegree = 4;
constexpr std::size_t kResolutionDegree = 4;
constexpr std::size_t kYonedaFixtures = 100;
constexpr std::uint64_t kYonedaSeed = 20240601;
constexpr std::size_t kShapiroDegree = 3;
constexpr std::size_t kQuotientDegree = 3;
constexpr std::size_t kKunnethDegree = 3;
constexpr std::size_t kJoinPieces = 6;
constexpr double kJoinSeconds = 5.0;
constexpr std::size_t kJplMaxCells = 10;
constexpr std::size_t kJplSeedsPerK = 5;
constexpr std::uint64_t kJplSeed = 77;
constexpr std::size_t kSnfMatrices = 20;
constexpr std::size_t kSnfMaxDim = 8;
constexpr long long kSnfMaxEntry = 50;
constexpr std::uint64_t kSnfSeed = 4242;

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string join(const std::vector<AbGroupInvariants>& groups)
{
    std::string out;
    for (std::size_t i = 0; i < groups.size(); ++i)
        out += (i ? ", " : "") + groups[i].to_string();
    return out;
}

Outcome classical_equivalence()
{
    std::ostringstream os;
    bool pass = true;
    for (auto g : {catalogue::cyclic(2), catalogue::cyclic(3), catalogue::cyclic(4), catalogue::symmetric3()}) {
        auto cat = trivial_cat(g);
        auto start = std::chrono::steady_clock::now();
        auto h = bredon_homology(BredonModule::trivial(cat, Variance::Left), kClassicalDegree).groups;
        auto c = bredon_cohomology(BredonModule::trivial(cat), kClassicalDegree).groups;
        double secs = seconds_since(start);
        auto bar = oracle::bar_group_homology(*g, kClassicalDegree);
        bool ok = h == bar.homology && c == bar.cohomology && secs < kClassicalSecondsPerGroup;
        pass = pass && ok;
        os << g->name() << (ok ? " ok" : " MISMATCH") << " (H: " << join(h) << "; H^: " << join(c) << "; "
           << secs << " s) ";
    }
    return {pass, os.str()};
}

Outcome cd_zero_exactness()
{
    std::size_t families = 0, discrepancies = 0, semi_full_failures = 0;
    for (const auto& [name, g] : catalogue::groups_up_to_order_12()) {
        std::vector<Subgroup> classes;
        for (const auto& h : enumerate_subgroups(g))
            if (canonical_conjugate(h) == h)
                classes.push_back(h);
        for (const auto& h : classes) {
            Family f = Family::semi_full_closure_of(g, {h});
            if (!f.semi_full())
                ++semi_full_failures;
            auto rep = is_cd_zero(f);
            ++families;
            if (rep.cd_zero != f.contains_whole_group() || !rep.cross_check_agrees)
                ++discrepancies;
        }
    }
    std::ostringstream os;
    os << families << " families over 24 groups, " << discrepancies << " discrepancies";
    return {discrepancies == 0 && semi_full_failures == 0, os.str()};
}

Outcome resolution_validity()
{
    auto cat = all_cat(catalogue::symmetric3());
    auto start = std::chrono::steady_clock::now();
    auto r = StandardResolution::build(cat, kResolutionDegree);
    bool pass = true;
    std::ostringstream os;
    os << "orbits";
    for (std::size_t n = 0; n <= kResolutionDegree; ++n)
        os << ' ' << r.orbit_count(n);
    std::size_t eliminated = 0;
    for (std::size_t o = 0; o < cat->object_count(); ++o) {
        auto ex = r.certify(o);
        pass = pass && ex.exact() && ex.squares_to_zero && ex.homotopy_identity && ex.matches_orbit_data;
        if (!ex.homology.empty())
            ++eliminated;
    }
    for (std::size_t n = 0; n <= kResolutionDegree; ++n)
        pass = pass && r.verify_stabilizers(n);
    os << "; d d = 0, contracting homotopy and stabilizers checked at all " << cat->object_count()
       << " objects (" << eliminated << " also by elimination); " << seconds_since(start) << " s";
    return {pass, os.str()};
}

Outcome functor_identities()
{
    std::mt19937_64 rng(kYonedaSeed);
    const auto& groups = catalogue::groups_up_to_order_12();
    std::uniform_int_distribution<std::size_t> pick_group(0, groups.size() - 1);
    std::size_t failures = 0, checks = 0;
    for (std::size_t i = 0; i < kYonedaFixtures; ++i) {
        const auto& g = groups[pick_group(rng)].group;
        auto cat = rng() % 2 ? all_cat(g) : OrbitCategory::build(Family::cyclic(g));
        auto v = rng() % 2 ? Variance::Right : Variance::Left;
        auto m = random_module(cat, v, rng);
        std::size_t k = rng() % cat->object_count();
        auto y = yoneda_check(m, k);
        ++checks;
        if (!y.mor_collapses || !y.tensor_collapses || y.mor_invariants != y.tensor_invariants)
            ++failures;
    }
    std::ostringstream os;
    os << checks << " seeded fixtures, " << failures << " failures";
    return {failures == 0, os.str()};
}

Outcome shapiro_suite()
{
    bool pass = true;
    std::ostringstream os;
    auto s3 = catalogue::symmetric3();
    auto c4 = catalogue::cyclic(4);
    const std::vector<std::pair<GroupPtr, std::vector<std::string>>> cases = {
        {s3, {"(1 2 3)"}}, {s3, {"(1 2)"}}, {c4, {"(1 3)(2 4)"}}};
    for (const auto& [g, gens] : cases) {
        auto rep = shapiro_check(all_cat(g), sub(g, gens), kShapiroDegree);
        pass = pass && rep.agrees();
        os << g->name() << "/" << sub(g, gens).describe() << (rep.agrees() ? " agree " : " DIFFER ");
    }
    return {pass, os.str()};
}

Outcome quotient_identity()
{
    bool pass = true;
    std::size_t count = 0, cross = 0;
    std::ostringstream bad;
    for (const auto& f : fixtures::all_cw_fixtures()) {
        ++count;
        auto cmp = quotient_complex(f.cw, f.category);
        if (!cmp.bases_unimodular || !cmp.matrices_agree) {
            pass = false;
            bad << " matrices differ on " << f.name << ";";
        }
        auto rep = geometric_lower_bound_report(f.cw, f.category, kQuotientDegree);
        if (rep.cross_checked) {
            ++cross;
            if (!rep.agrees) {
                pass = false;
                bad << " homology differs on " << f.name << ";";
            }
        }
    }
    std::ostringstream os;
    os << count << " fixtures, boundary matrices compared; H_n(X/G) = H_n^F(G; Z) in valid degrees <= "
       << kQuotientDegree << " on " << cross << bad.str();
    return {pass, os.str()};
}

Outcome kunneth()
{
    auto cat = trivial_cat(catalogue::cyclic(2));
    auto z = BredonModule::trivial(cat, Variance::Left);
    auto rep = kunneth_check(z, z, kKunnethDegree);
    auto bar = oracle::bar_group_homology(*catalogue::klein_four(), kKunnethDegree);
    bool pass = rep.degrees.size() == kKunnethDegree + 1;
    std::vector<AbGroupInvariants> middle;
    for (std::size_t n = 0; n < rep.degrees.size(); ++n) {
        middle.push_back(rep.degrees[n].middle);
        pass = pass && rep.degrees[n].middle == bar.homology[n] && rep.degrees[n].orders_consistent;
    }
    return {pass, "middle terms " + join(middle) + " vs bar oracle " + join(bar.homology)};
}

Outcome join_trend()
{
    auto start = std::chrono::steady_clock::now();
    bool pass = true;
    std::ostringstream os;
    for (std::size_t m = 1; m <= kJoinPieces; ++m) {
        auto h = z2_join_quotient(m).homology_all();
        bool ok = h.size() == 4 && h[0] == AbGroupInvariants::from_cyclic(1, {}) && h[1].is_zero() &&
                  h[2].is_zero() && h[3] == AbGroupInvariants::from_cyclic(m, {});
        pass = pass && ok;
        os << "m=" << m << ": " << join(h) << (ok ? "" : " (expected Z, 0, 0, Z^m)") << "; ";
    }
    double secs = seconds_since(start);
    pass = pass && secs < kJoinSeconds;
    os << secs << " s";
    return {pass, os.str()};
}

Outcome jpl_trend()
{
    std::mt19937_64 rng(kJplSeed);
    std::uniform_int_distribution<long long> deg(-6, 6);
    bool pass = true;
    std::size_t complexes = 0;
    std::ostringstream os;
    for (std::size_t k = 2; k <= kJplMaxCells; ++k)
        for (std::size_t s = 0; s < kJplSeedsPerK; ++s) {
            std::vector<long long> degrees;
            for (std::size_t i = 0; i < k; ++i)
                degrees.push_back(s == 0 ? 1 : deg(rng)); // zero winding allowed
            auto h = bs1m_quotient(k, degrees).homology_all();
            ++complexes;
            if (h[2].free_rank + 1 < k) {
                pass = false;
                os << "k=" << k << " gives H_2 = " << h[2].to_string() << "; ";
            }
        }
    os << complexes << " complexes, k = 2.." << kJplMaxCells << ", H_2 rank >= k - 1 and H_2 != 0";
    return {pass, os.str()};
}

Outcome snf_correctness()
{
    std::mt19937_64 rng(kSnfSeed);
    std::uniform_int_distribution<std::size_t> dim(1, kSnfMaxDim);
    std::uniform_int_distribution<long long> entry(-kSnfMaxEntry, kSnfMaxEntry);
    std::size_t failures = 0;
    for (std::size_t t = 0; t < kSnfMatrices; ++t) {
        const std::size_t r = t < 4 ? kSnfMaxDim : dim(rng), c = t < 4 ? kSnfMaxDim : dim(rng);
        IntMatrix a(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                a(i, j) = entry(rng);
        if (t % 5 == 4 && r > 2)
            for (std::size_t j = 0; j < c; ++j)
                a(r - 1, j) = 3 * a(0, j) - 2 * a(1, j);
        auto s = smith_normal_form(a);
        bool ok = s.U * a * s.V == s.D && is_unimodular(s.U) && is_unimodular(s.V);
        auto diag = s.diagonal();
        for (std::size_t i = 0; i < r && ok; ++i)
            for (std::size_t j = 0; j < c && ok; ++j)
                if (i != j && s.D(i, j) != 0)
                    ok = false;
        for (std::size_t i = 0; i < diag.size() && ok; ++i)
            ok = diag[i] > 0 && (i == 0 || diag[i] % diag[i - 1] == 0);
        auto g = oracle::minor_gcds(a);
        Integer prod = 1;
        for (std::size_t k = 0; k < g.size() && ok; ++k) {
            Integer expect = 0;
            if (k < diag.size()) {
                prod *= diag[k];
                expect = prod;
            }
            ok = g[k] == expect;
        }
        failures += ok ? 0 : 1;
    }
    std::ostringstream os;
    os << kSnfMatrices << " seeded matrices up to " << kSnfMaxDim << "x" << kSnfMaxDim << ", " << failures
       << " failures";
    return {failures == 0, os.str()};
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"classical equivalence (C2, C3, C4, S3; F = {1}; degrees 0..4)", classical_equivalence},
        {"cd-zero exactness (order <= 12, single-class semi-full families)", cd_zero_exactness},
        {"standard resolution validity (S3, F = all, degree 4)", resolution_validity},
        {"Yoneda and tensor collapse (100 random fixtures)", functor_identities},
        {"Shapiro suite", shapiro_suite},
        {"quotient identity on CW fixtures", quotient_identity},
        {"Kunneth for C2 x C2", kunneth},
        {"Z^2 join model trend (m = 1..6)", join_trend},
        {"BS(1,m) attachment trend (k = 2..10)", jpl_trend},
        {"Smith normal form correctness", snf_correctness},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome out;
        auto start = std::chrono::steady_clock::now();
        try {
            out = criteria[i].second();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        failed += out.pass ? 0 : 1;
        std::cout << (out.pass ? "PASS" : "FAIL") << "  criterion " << (i + 1) << ": " << criteria[i].first << " | "
                  << out.detail << " [" << seconds_since(start) << " s]" << std::endl;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
              << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
