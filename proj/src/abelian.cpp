#include "bredon/abelian.hpp"

#include <algorithm>
#include <sstream>

#include "bredon/error.hpp"
#include "bredon/smith.hpp"

namespace bredon {

AbGroupInvariants AbGroupInvariants::from_cyclic(std::size_t free_rank, const std::vector<Integer>& orders)
{
    AbGroupInvariants g;
    g.free_rank = free_rank;
    std::vector<Integer> finite;
    for (const auto& o : orders) {
        Integer a = abs(o);
        if (a == 0)
            ++g.free_rank;
        else if (a != 1)
            finite.push_back(a);
    }
    if (finite.empty())
        return g;
    // invariant factors of a diagonal matrix are exactly the canonical torsion form
    IntMatrix diag(finite.size(), finite.size());
    for (std::size_t i = 0; i < finite.size(); ++i)
        diag(i, i) = finite[i];
    for (auto& d : elementary_divisors(diag))
        if (d != 1)
            g.torsion.push_back(d);
    return g;
}

Integer AbGroupInvariants::torsion_order() const
{
    Integer p = 1;
    for (const auto& d : torsion)
        p *= d;
    return p;
}

std::string AbGroupInvariants::to_string() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank > 0) {
        os << 'Z';
        if (free_rank > 1)
            os << '^' << free_rank;
        first = false;
    }
    for (const auto& d : torsion) {
        if (!first)
            os << " + ";
        os << "Z/" << d;
        first = false;
    }
    return os.str();
}

AbGroupInvariants direct_sum(const AbGroupInvariants& a, const AbGroupInvariants& b)
{
    std::vector<Integer> orders = a.torsion;
    orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
    return AbGroupInvariants::from_cyclic(a.free_rank + b.free_rank, orders);
}

AbGroupInvariants tensor(const AbGroupInvariants& a, const AbGroupInvariants& b)
{
    std::vector<Integer> orders;
    // Z^p (x) Z/d = (Z/d)^p
    for (std::size_t i = 0; i < a.free_rank; ++i)
        orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
    for (std::size_t i = 0; i < b.free_rank; ++i)
        orders.insert(orders.end(), a.torsion.begin(), a.torsion.end());
    for (const auto& x : a.torsion)
        for (const auto& y : b.torsion)
            orders.push_back(boost::multiprecision::gcd(x, y));
    return AbGroupInvariants::from_cyclic(a.free_rank * b.free_rank, orders);
}

AbGroupInvariants tor1(const AbGroupInvariants& a, const AbGroupInvariants& b)
{
    std::vector<Integer> orders;
    for (const auto& x : a.torsion)
        for (const auto& y : b.torsion)
            orders.push_back(boost::multiprecision::gcd(x, y));
    return AbGroupInvariants::from_cyclic(0, orders);
}

AbGroupInvariants parse_invariants(const std::string& text)
{
    AbGroupInvariants g;
    std::string s;
    for (char c : text)
        if (c != ' ')
            s.push_back(c);
    if (s == "0")
        return g;
    std::vector<Integer> orders;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find('+', pos);
        std::string term = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        pos = next == std::string::npos ? s.size() : next + 1;
        auto digits = [&](std::size_t from) {
            std::string n = term.substr(from);
            if (n.empty() || n.find_first_not_of("0123456789") != std::string::npos)
                throw Error(ErrorKind::Parse, "bad abelian group term '" + term + "'");
            return n;
        };
        if (term == "Z") {
            g.free_rank += 1;
        } else if (term.rfind("Z^", 0) == 0) {
            g.free_rank += std::stoul(digits(2));
        } else if (term.rfind("Z/", 0) == 0) {
            orders.emplace_back(digits(2));
        } else {
            throw Error(ErrorKind::Parse, "bad abelian group term '" + term + "'");
        }
    }
    return AbGroupInvariants::from_cyclic(g.free_rank, orders);
}

} // namespace bredon
