#include "support/oracles.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <boost/integer/common_factor.hpp>

namespace oracle {

namespace {

using Rows = std::vector<std::vector<std::int64_t>>;

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m)
{
    return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % m);
}

std::int64_t reduce(std::int64_t a, std::int64_t m)
{
    a %= m;
    return a < 0 ? a + m : a;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m)
{
    // extended Euclid; a must be a unit
    std::int64_t t = 0, new_t = 1, r = m, new_r = reduce(a, m);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
        std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
    }
    if (r != 1)
        throw std::logic_error("not a unit");
    return reduce(t, m);
}

int valuation(std::int64_t a, std::int64_t p)
{
    int v = 0;
    while (a % p == 0) {
        a /= p;
        ++v;
    }
    return v;
}

std::vector<std::pair<std::int64_t, int>> prime_powers(int n)
{
    std::vector<std::pair<std::int64_t, int>> out;
    for (int p = 2; p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0)
            out.emplace_back(p, e);
    }
    return out;
}

} // namespace

Rows bar_boundary(const bredon::FiniteGroup& g, std::size_t n)
{
    const std::size_t base = static_cast<std::size_t>(g.order()) - 1;
    auto count = [&](std::size_t k) {
        std::size_t c = 1;
        for (std::size_t i = 0; i < k; ++i)
            c *= base;
        return c;
    };
    const std::size_t cols = count(n), rows = count(n - 1);
    Rows d(rows, std::vector<std::int64_t>(cols, 0));
    if (base == 0)
        return d;
    std::vector<int> tuple(n);
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t x = c;
        for (std::size_t i = n; i-- > 0;) {
            tuple[i] = static_cast<int>(x % base) + 1;
            x /= base;
        }
        // index of an (n-1)-tuple, or nothing if it contains the identity
        auto add = [&](const std::vector<int>& face, std::int64_t sign) {
            std::size_t r = 0;
            for (int e : face) {
                if (e == 0)
                    return;
                r = r * base + static_cast<std::size_t>(e - 1);
            }
            d[r][c] += sign;
        };
        std::vector<int> face(tuple.begin() + 1, tuple.end());
        add(face, 1);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            face.assign(tuple.begin(), tuple.end());
            face[i] = g.mul(tuple[i], tuple[i + 1]);
            face.erase(face.begin() + static_cast<long>(i) + 1);
            add(face, (i + 1) % 2 ? -1 : 1);
        }
        face.assign(tuple.begin(), tuple.end() - 1);
        add(face, n % 2 ? -1 : 1);
    }
    return d;
}

std::size_t rank_mod_prime(Rows rows, std::int64_t p)
{
    if (rows.empty())
        return 0;
    const std::size_t nr = rows.size(), nc = rows[0].size();
    for (auto& r : rows)
        for (auto& v : r)
            v = reduce(v, p);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < nc && rank < nr; ++c) {
        std::size_t piv = rank;
        while (piv < nr && rows[piv][c] == 0)
            ++piv;
        if (piv == nr)
            continue;
        std::swap(rows[piv], rows[rank]);
        const std::int64_t inv = inverse_mod(rows[rank][c], p);
        std::vector<std::size_t> support;
        for (std::size_t j = c; j < nc; ++j)
            if (rows[rank][j] != 0)
                support.push_back(j);
        for (std::size_t r = rank + 1; r < nr; ++r) {
            if (rows[r][c] == 0)
                continue;
            const std::int64_t f = mulmod(rows[r][c], inv, p);
            for (std::size_t j : support)
                rows[r][j] = reduce(rows[r][j] - mulmod(f, rows[rank][j], p), p);
        }
        ++rank;
    }
    return rank;
}

std::vector<std::size_t> valuations_mod_prime_power(Rows rows, std::int64_t p, int k)
{
    std::int64_t q = 1;
    for (int i = 0; i < k; ++i)
        q *= p;
    std::vector<std::size_t> counts(static_cast<std::size_t>(k), 0);
    if (rows.empty())
        return counts;
    const std::size_t nr = rows.size(), nc = rows[0].size();
    for (auto& r : rows)
        for (auto& v : r)
            v = reduce(v, q);
    std::vector<char> row_done(nr, 0), col_done(nc, 0);
    for (;;) {
        // pivot of least valuation among the remaining rows and columns
        int best = k;
        std::size_t pr = 0, pc = 0;
        for (std::size_t r = 0; r < nr && best > 0; ++r) {
            if (row_done[r])
                continue;
            for (std::size_t c = 0; c < nc; ++c) {
                if (col_done[c] || rows[r][c] == 0)
                    continue;
                int v = valuation(rows[r][c], p);
                if (v < best) {
                    best = v;
                    pr = r;
                    pc = c;
                    if (v == 0)
                        break;
                }
            }
        }
        if (best == k)
            break;
        if (best > 0)
            ++counts[static_cast<std::size_t>(best)];
        std::int64_t scale = 1;
        for (int i = 0; i < best; ++i)
            scale *= p;
        // pivot = scale * unit; every other entry of the pivot column is a multiple of scale
        const std::int64_t unit_inv = inverse_mod((rows[pr][pc] / scale) % (q / scale), q / scale);
        std::vector<std::size_t> support;
        for (std::size_t c = 0; c < nc; ++c)
            if (!col_done[c] && rows[pr][c] != 0)
                support.push_back(c);
        for (std::size_t r = 0; r < nr; ++r) {
            if (r == pr || row_done[r] || rows[r][pc] == 0)
                continue;
            const std::int64_t f = mulmod(rows[r][pc] / scale, unit_inv, q);
            for (std::size_t c : support)
                rows[r][c] = reduce(rows[r][c] - mulmod(f, rows[pr][c], q), q);
        }
        // clearing the pivot row by column operations does not touch the remaining rows
        row_done[pr] = 1;
        col_done[pc] = 1;
    }
    return counts;
}

GroupHomology bar_group_homology(const bredon::FiniteGroup& g, std::size_t degree)
{
    const int order = g.order();
    const auto primes = prime_powers(order);
    constexpr std::int64_t kLargePrimes[] = {1'000'000'007LL, 998'244'353LL};

    // ranks[n] and torsion[n] describe d_n for n = 1..degree+1
    std::vector<std::size_t> dims(degree + 2), ranks(degree + 3, 0);
    std::vector<std::vector<Integer>> torsion(degree + 3);
    std::size_t dim = 1;
    for (std::size_t n = 0; n <= degree + 1; ++n) {
        dims[n] = dim;
        dim *= static_cast<std::size_t>(order - 1);
    }
    for (std::size_t n = 1; n <= degree + 1; ++n) {
        Rows d = bar_boundary(g, n);
        std::size_t r = 0;
        for (auto p : kLargePrimes)
            r = std::max(r, rank_mod_prime(d, p));
        ranks[n] = r;
        std::map<std::size_t, Integer> cyclic; // divisor index -> order, built prime by prime
        for (auto [p, e] : primes) {
            const int k = e + 2;
            auto counts = valuations_mod_prime_power(d, p, k);
            for (int v = e + 1; v < k; ++v)
                if (counts[static_cast<std::size_t>(v)] != 0)
                    throw std::logic_error("bar oracle: torsion exponent exceeds |G|");
            // the j-th largest p-power joins the j-th largest cyclic factor
            std::size_t slot = 0;
            for (int v = e; v >= 1; --v)
                for (std::size_t i = 0; i < counts[static_cast<std::size_t>(v)]; ++i) {
                    Integer pv = 1;
                    for (int t = 0; t < v; ++t)
                        pv *= p;
                    auto [it, fresh] = cyclic.emplace(slot++, Integer(1));
                    it->second *= pv;
                }
        }
        for (const auto& [slot, value] : cyclic)
            torsion[n].push_back(value);
    }
    GroupHomology out;
    for (std::size_t n = 0; n <= degree; ++n) {
        const std::size_t free_rank = dims[n] - ranks[n] - ranks[n + 1];
        out.homology.push_back(AbGroupInvariants::from_cyclic(free_rank, torsion[n + 1]));
        out.cohomology.push_back(AbGroupInvariants::from_cyclic(free_rank, torsion[n]));
    }
    return out;
}

Integer bareiss_determinant(std::vector<std::vector<Integer>> m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m[swap][k] == 0)
                ++swap;
            if (swap == n)
                return 0;
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

std::vector<Integer> minor_gcds(const bredon::IntMatrix& a)
{
    const std::size_t kmax = std::min(a.rows(), a.cols());
    std::vector<Integer> out;
    auto subsets = [](std::size_t n, std::size_t k) {
        std::vector<std::vector<std::size_t>> all;
        std::vector<std::size_t> cur(k);
        for (std::size_t i = 0; i < k; ++i)
            cur[i] = i;
        for (;;) {
            all.push_back(cur);
            std::size_t i = k;
            while (i > 0 && cur[i - 1] == n - k + i - 1)
                --i;
            if (i == 0)
                break;
            ++cur[i - 1];
            for (std::size_t j = i; j < k; ++j)
                cur[j] = cur[j - 1] + 1;
        }
        return all;
    };
    for (std::size_t k = 1; k <= kmax; ++k) {
        Integer g = 0;
        auto rs = subsets(a.rows(), k), cs = subsets(a.cols(), k);
        for (const auto& r : rs)
            for (const auto& c : cs) {
                std::vector<std::vector<Integer>> m(k, std::vector<Integer>(k));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j)
                        m[i][j] = a(r[i], c[j]);
                Integer d = bareiss_determinant(std::move(m));
                g = boost::integer::gcd(g, d < 0 ? Integer(-d) : d);
            }
        out.push_back(g);
    }
    return out;
}

std::vector<std::vector<int>> brute_force_subgroups(const bredon::FiniteGroup& g)
{
    const int n = g.order();
    if (n > 16)
        throw std::invalid_argument("brute-force subgroup oracle is limited to order 16");
    std::vector<std::vector<int>> out;
    // the identity (index 0) is in every subgroup; subsets of the other elements
    for (std::uint32_t mask = 0; mask < (1U << (n - 1)); ++mask) {
        std::vector<char> in(static_cast<std::size_t>(n), 0);
        in[0] = 1;
        for (int i = 1; i < n; ++i)
            if (mask >> (i - 1) & 1U)
                in[static_cast<std::size_t>(i)] = 1;
        const int size = 1 + __builtin_popcount(mask);
        if (n % size != 0)
            continue;
        bool closed = true;
        for (int a = 0; a < n && closed; ++a)
            for (int b = 0; b < n && closed; ++b)
                if (in[static_cast<std::size_t>(a)] && in[static_cast<std::size_t>(b)] &&
                    !in[static_cast<std::size_t>(g.mul(a, b))])
                    closed = false;
        if (!closed)
            continue;
        std::vector<int> members;
        for (int i = 0; i < n; ++i)
            if (in[static_cast<std::size_t>(i)])
                members.push_back(i);
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end());
    return out;
}

int normalizer_order(const bredon::FiniteGroup& g, const std::vector<int>& h)
{
    int count = 0;
    for (int x = 0; x < g.order(); ++x) {
        std::vector<int> conj;
        for (int a : h)
            conj.push_back(g.mul(g.mul(g.inv(x), a), x));
        std::sort(conj.begin(), conj.end());
        if (conj == h)
            ++count;
    }
    return count;
}

} // namespace oracle
