#include "support/catalogue.hpp"

namespace catalogue {

using bredon::FiniteGroup;
using bredon::GroupPtr;
using bredon::Permutation;

namespace {

GroupPtr from_cycles(int degree, const std::vector<std::string>& gens, const std::string& name)
{
    std::vector<Permutation> perms;
    for (const auto& g : gens)
        perms.push_back(Permutation::parse_cycles(g, degree));
    return FiniteGroup::from_generators(degree, std::move(perms), name);
}

std::string cycle_string(int first, int length)
{
    std::string s = "(";
    for (int i = 0; i < length; ++i)
        s += (i ? " " : "") + std::to_string(first + i);
    return s + ")";
}

} // namespace

GroupPtr trivial_group()
{
    return FiniteGroup::from_generators(1, {}, "C1");
}

GroupPtr cyclic(int n)
{
    if (n == 1)
        return trivial_group();
    return from_cycles(n, {cycle_string(1, n)}, "C" + std::to_string(n));
}

GroupPtr symmetric3()
{
    return from_cycles(3, {"(1 2)", "(1 2 3)"}, "S3");
}

GroupPtr klein_four()
{
    return from_cycles(4, {"(1 2)", "(3 4)"}, "C2xC2");
}

GroupPtr dihedral(int n)
{
    // rotation and the reflection i -> 2 - i (mod n) on 1..n
    std::string refl;
    for (int i = 2, j = n; i < j; ++i, --j)
        refl += "(" + std::to_string(i) + " " + std::to_string(j) + ")";
    if (refl.empty())
        refl = "()";
    return from_cycles(n, {cycle_string(1, n), refl}, "D" + std::to_string(2 * n));
}

GroupPtr quaternion8()
{
    // elements a^k b^e (k < 4, e < 2), a^4 = 1, b^2 = a^2, b a b^{-1} = a^{-1}
    std::vector<std::vector<int>> table(8, std::vector<int>(8));
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
            int k = x % 4, e = x / 4, l = y % 4, f = y / 4;
            int pow = k + (e ? -l : l);
            if (e && f)
                pow += 2;
            table[x][y] = ((pow % 4 + 4) % 4) + 4 * ((e + f) % 2);
        }
    return FiniteGroup::from_cayley_table(table, "Q8");
}

GroupPtr dicyclic12()
{
    // a^k x^e (k < 6, e < 2), a^6 = 1, x^2 = a^3, x a x^{-1} = a^{-1}
    std::vector<std::vector<int>> table(12, std::vector<int>(12));
    for (int u = 0; u < 12; ++u)
        for (int v = 0; v < 12; ++v) {
            int k = u % 6, e = u / 6, l = v % 6, f = v / 6;
            int pow = k + (e ? -l : l);
            if (e && f)
                pow += 3;
            table[u][v] = ((pow % 6 + 6) % 6) + 6 * ((e + f) % 2);
        }
    return FiniteGroup::from_cayley_table(table, "Dic3");
}

GroupPtr alternating4()
{
    return from_cycles(4, {"(1 2 3)", "(1 2)(3 4)"}, "A4");
}

const std::vector<NamedGroup>& groups_up_to_order_12()
{
    static const std::vector<NamedGroup> all = [] {
        std::vector<NamedGroup> out;
        auto add = [&](GroupPtr g) { out.push_back({g->name(), std::move(g)}); };
        for (int n = 1; n <= 12; ++n)
            add(cyclic(n));
        add(klein_four());
        add(symmetric3());
        add(from_cycles(6, {"(1 2 3 4)", "(5 6)"}, "C4xC2"));
        add(from_cycles(6, {"(1 2)", "(3 4)", "(5 6)"}, "C2xC2xC2"));
        add(dihedral(4));
        add(quaternion8());
        add(from_cycles(6, {"(1 2 3)", "(4 5 6)"}, "C3xC3"));
        add(dihedral(5));
        add(from_cycles(7, {"(1 2 3)", "(4 5)", "(6 7)"}, "C6xC2"));
        add(dihedral(6));
        add(alternating4());
        add(dicyclic12());
        return out;
    }();
    return all;
}

} // namespace catalogue
