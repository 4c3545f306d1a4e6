#include "bredon/smith.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <utility>

#include "bredon/error.hpp"

namespace bredon {

namespace {

class Reducer {
public:
    Reducer(IntMatrix a, bool track) : a_(std::move(a)), track_(track)
    {
        if (track_) {
            u_ = IntMatrix::identity(a_.rows());
            ui_ = u_;
            v_ = IntMatrix::identity(a_.cols());
            vi_ = v_;
        }
    }

    void run()
    {
        const std::size_t lim = std::min(a_.rows(), a_.cols());
        for (t_ = 0; t_ < lim; ++t_) {
            if (!select_global_pivot())
                break;
            reduce_pivot();
            if (a_(t_, t_) < 0)
                row_neg(t_);
            ++rank_;
        }
    }

    std::size_t rank() const { return rank_; }
    IntMatrix& a() { return a_; }
    IntMatrix& u() { return u_; }
    IntMatrix& ui() { return ui_; }
    IntMatrix& v() { return v_; }
    IntMatrix& vi() { return vi_; }

private:
    void row_add(std::size_t dst, std::size_t src, const Integer& k)
    {
        a_.add_row_multiple(dst, src, k);
        if (track_) {
            u_.add_row_multiple(dst, src, k);
            ui_.add_col_multiple(src, dst, -k);
        }
    }
    void col_add(std::size_t dst, std::size_t src, const Integer& k)
    {
        a_.add_col_multiple(dst, src, k);
        if (track_) {
            v_.add_col_multiple(dst, src, k);
            vi_.add_row_multiple(src, dst, -k);
        }
    }
    void row_swap(std::size_t x, std::size_t y)
    {
        a_.swap_rows(x, y);
        if (track_) {
            u_.swap_rows(x, y);
            ui_.swap_cols(x, y);
        }
    }
    void col_swap(std::size_t x, std::size_t y)
    {
        a_.swap_cols(x, y);
        if (track_) {
            v_.swap_cols(x, y);
            vi_.swap_rows(x, y);
        }
    }
    void row_neg(std::size_t r)
    {
        a_.negate_row(r);
        if (track_) {
            u_.negate_row(r);
            ui_.negate_col(r);
        }
    }

    bool select_global_pivot()
    {
        std::size_t bi = 0, bj = 0;
        Integer best = 0;
        for (std::size_t i = t_; i < a_.rows(); ++i)
            for (std::size_t j = t_; j < a_.cols(); ++j) {
                const Integer& x = a_(i, j);
                if (x == 0)
                    continue;
                Integer ax = abs(x);
                if (best == 0 || ax < best) {
                    best = ax;
                    bi = i;
                    bj = j;
                    if (best == 1)
                        goto found;
                }
            }
        if (best == 0)
            return false;
    found:
        row_swap(t_, bi);
        col_swap(t_, bj);
        return true;
    }

    void reduce_pivot()
    {
        for (;;) {
            bool clean = true;
            for (std::size_t i = t_ + 1; i < a_.rows(); ++i) {
                if (a_(i, t_) == 0)
                    continue;
                Integer q = a_(i, t_) / a_(t_, t_);
                row_add(i, t_, -q);
                if (a_(i, t_) != 0)
                    clean = false;
            }
            for (std::size_t j = t_ + 1; j < a_.cols(); ++j) {
                if (a_(t_, j) == 0)
                    continue;
                Integer q = a_(t_, j) / a_(t_, t_);
                col_add(j, t_, -q);
                if (a_(t_, j) != 0)
                    clean = false;
            }
            if (!clean) {
                // a smaller remainder sits in the pivot row or column; promote it
                std::size_t bi = t_, bj = t_;
                Integer best = abs(a_(t_, t_));
                for (std::size_t i = t_ + 1; i < a_.rows(); ++i)
                    if (a_(i, t_) != 0 && abs(a_(i, t_)) < best) {
                        best = abs(a_(i, t_));
                        bi = i;
                        bj = t_;
                    }
                for (std::size_t j = t_ + 1; j < a_.cols(); ++j)
                    if (a_(t_, j) != 0 && abs(a_(t_, j)) < best) {
                        best = abs(a_(t_, j));
                        bi = t_;
                        bj = j;
                    }
                row_swap(t_, bi);
                col_swap(t_, bj);
                continue;
            }
            const Integer& p = a_(t_, t_);
            if (abs(p) == 1)
                return;
            bool divisible = true;
            for (std::size_t i = t_ + 1; i < a_.rows() && divisible; ++i)
                for (std::size_t j = t_ + 1; j < a_.cols(); ++j)
                    if (a_(i, j) != 0 && a_(i, j) % p != 0) {
                        row_add(t_, i, 1);
                        divisible = false;
                        break;
                    }
            if (divisible)
                return;
        }
    }

    IntMatrix a_, u_, ui_, v_, vi_;
    bool track_;
    std::size_t t_ = 0;
    std::size_t rank_ = 0;
};

struct Overflow {};

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Overflow{};
    return r;
}
inline std::int64_t checked_sub(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw Overflow{};
    return r;
}

template <typename T>
T from_integer(const Integer& v)
{
    if constexpr (std::is_same_v<T, Integer>) {
        return v;
    } else {
        if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
            throw Overflow{};
        return static_cast<std::int64_t>(v);
    }
}

template <typename T>
T mul(const T& a, const T& b)
{
    if constexpr (std::is_same_v<T, Integer>)
        return a * b;
    else
        return checked_mul(a, b);
}

template <typename T>
T sub(const T& a, const T& b)
{
    if constexpr (std::is_same_v<T, Integer>)
        return a - b;
    else
        return checked_sub(a, b);
}

// Unit-pivot elimination over rows. Units found are appended to `out`; the leftover
// core is reduced densely.
template <typename T>
std::vector<Integer> sparse_divisors(const SparseMatrix& a, const SparseEliminationOptions& opts)
{
    using RowEntry = std::pair<std::uint32_t, T>;
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    std::vector<std::vector<RowEntry>> rows(m);
    std::vector<std::vector<std::uint32_t>> col_rows(n);
    for (std::size_t c = 0; c < n; ++c)
        for (const auto& e : a.column(c)) {
            rows[e.row].emplace_back(static_cast<std::uint32_t>(c), from_integer<T>(e.value));
            col_rows[c].push_back(static_cast<std::uint32_t>(e.row));
        }
    // columns were visited in order, so rows are already sorted by column

    std::vector<char> row_alive(m, 1);
    using HeapItem = std::pair<std::size_t, std::uint32_t>;
    std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<>> heap;
    for (std::size_t r = 0; r < m; ++r)
        if (!rows[r].empty())
            heap.emplace(rows[r].size(), static_cast<std::uint32_t>(r));

    std::vector<Integer> out;
    std::vector<RowEntry> merged;
    while (!heap.empty()) {
        auto [len, r] = heap.top();
        heap.pop();
        if (!row_alive[r] || rows[r].size() != len || len == 0)
            continue;
        // choose the unit entry whose column is shortest
        std::size_t best = rows[r].size();
        std::size_t best_count = 0;
        for (std::size_t k = 0; k < rows[r].size(); ++k) {
            const T& v = rows[r][k].second;
            if (v == 1 || v == -1) {
                std::size_t cnt = col_rows[rows[r][k].first].size();
                if (best == rows[r].size() || cnt < best_count) {
                    best = k;
                    best_count = cnt;
                }
            }
        }
        if (best == rows[r].size())
            continue; // deferred until modified
        const std::uint32_t pc = rows[r][best].first;
        const T pv = rows[r][best].second;
        auto& crs = col_rows[pc];
        std::sort(crs.begin(), crs.end());
        crs.erase(std::unique(crs.begin(), crs.end()), crs.end());
        for (std::uint32_t r2 : crs) {
            if (r2 == r || !row_alive[r2])
                continue;
            auto& row2 = rows[r2];
            auto it = std::lower_bound(row2.begin(), row2.end(), pc,
                                       [](const RowEntry& e, std::uint32_t c) { return e.first < c; });
            if (it == row2.end() || it->first != pc)
                continue;
            const T factor = mul<T>(it->second, pv); // pv is its own inverse
            merged.clear();
            merged.reserve(row2.size() + rows[r].size());
            auto i1 = row2.begin();
            auto i2 = rows[r].begin();
            while (i1 != row2.end() || i2 != rows[r].end()) {
                if (i2 == rows[r].end() || (i1 != row2.end() && i1->first < i2->first)) {
                    merged.push_back(*i1++);
                } else if (i1 == row2.end() || i2->first < i1->first) {
                    T v = sub<T>(T(0), mul<T>(factor, i2->second));
                    col_rows[i2->first].push_back(r2);
                    merged.emplace_back(i2->first, std::move(v));
                    ++i2;
                } else {
                    T v = sub<T>(i1->second, mul<T>(factor, i2->second));
                    if (v != 0)
                        merged.emplace_back(i1->first, std::move(v));
                    ++i1;
                    ++i2;
                }
            }
            row2.swap(merged);
            heap.emplace(row2.size(), r2);
        }
        row_alive[r] = 0;
        rows[r].clear();
        rows[r].shrink_to_fit();
        crs.clear();
        out.emplace_back(1);
    }

    // dense core
    std::vector<std::uint32_t> core_rows;
    std::vector<std::int64_t> col_index(n, -1);
    std::size_t core_cols = 0;
    for (std::size_t r = 0; r < m; ++r) {
        if (!row_alive[r] || rows[r].empty())
            continue;
        core_rows.push_back(static_cast<std::uint32_t>(r));
        for (const auto& e : rows[r])
            if (col_index[e.first] < 0)
                col_index[e.first] = static_cast<std::int64_t>(core_cols++);
    }
    if (!core_rows.empty()) {
        if (core_rows.size() * core_cols > opts.dense_core_budget)
            throw Error(ErrorKind::BudgetExceeded,
                        "dense core " + std::to_string(core_rows.size()) + "x" + std::to_string(core_cols) +
                            " after sparse elimination exceeds budget");
        IntMatrix core(core_rows.size(), core_cols);
        for (std::size_t i = 0; i < core_rows.size(); ++i)
            for (const auto& e : rows[core_rows[i]])
                core(i, static_cast<std::size_t>(col_index[e.first])) = Integer(e.second);
        auto rest = elementary_divisors(core);
        out.insert(out.end(), rest.begin(), rest.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<Integer> SmithForm::diagonal() const
{
    std::vector<Integer> d;
    for (std::size_t i = 0; i < rank; ++i)
        d.push_back(D(i, i));
    return d;
}

SmithForm smith_normal_form(const IntMatrix& a)
{
    Reducer red(a, true);
    red.run();
    SmithForm s;
    s.rank = red.rank();
    s.D = std::move(red.a());
    s.U = std::move(red.u());
    s.U_inv = std::move(red.ui());
    s.V = std::move(red.v());
    s.V_inv = std::move(red.vi());
    return s;
}

std::vector<Integer> elementary_divisors(const IntMatrix& a)
{
    Reducer red(a, false);
    red.run();
    std::vector<Integer> d;
    for (std::size_t i = 0; i < red.rank(); ++i)
        d.push_back(red.a()(i, i));
    return d;
}

std::vector<Integer> elementary_divisors(const SparseMatrix& a, const SparseEliminationOptions& opts)
{
    try {
        return sparse_divisors<std::int64_t>(a, opts);
    } catch (const Overflow&) {
        return sparse_divisors<Integer>(a, opts);
    }
}

std::size_t rank_of(const IntMatrix& a)
{
    return elementary_divisors(a).size();
}

IntMatrix kernel_basis(const IntMatrix& a)
{
    if (a.rows() == 0)
        return IntMatrix::identity(a.cols());
    SmithForm s = smith_normal_form(a);
    return s.V.select_cols(s.rank, a.cols());
}

std::optional<std::vector<Integer>> solve_integer(const IntMatrix& a, const std::vector<Integer>& b)
{
    if (b.size() != a.rows())
        throw Error(ErrorKind::InvalidArgument, "solve_integer: right-hand side size mismatch");
    SmithForm s = smith_normal_form(a);
    std::vector<Integer> ub(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.rows(); ++k)
            if (s.U(i, k) != 0)
                ub[i] += s.U(i, k) * b[k];
    std::vector<Integer> y(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i < s.rank) {
            if (ub[i] % s.D(i, i) != 0)
                return std::nullopt;
            y[i] = ub[i] / s.D(i, i);
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    std::vector<Integer> x(a.cols());
    for (std::size_t i = 0; i < a.cols(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (s.V(i, k) != 0 && y[k] != 0)
                x[i] += s.V(i, k) * y[k];
    return x;
}

Integer determinant(const IntMatrix& a)
{
    if (a.rows() != a.cols())
        throw Error(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0)
        return 1;
    // Bareiss fraction-free elimination
    IntMatrix m = a;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& a)
{
    if (a.rows() != a.cols())
        return false;
    return abs(determinant(a)) == 1;
}

} // namespace bredon
