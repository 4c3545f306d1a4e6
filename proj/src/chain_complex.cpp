#include "bredon/chain_complex.hpp"

#include <string>

#include "bredon/error.hpp"

namespace bredon {

ChainComplexZ::ChainComplexZ(std::vector<std::size_t> ranks) : ranks_(std::move(ranks))
{
    boundaries_.resize(ranks_.size());
    for (std::size_t n = 1; n < ranks_.size(); ++n)
        boundaries_[n] = SparseMatrix(ranks_[n - 1], ranks_[n]);
}

void ChainComplexZ::set_boundary(std::size_t n, SparseMatrix d)
{
    if (n == 0 || n >= ranks_.size())
        throw Error(ErrorKind::InvalidArgument, "boundary index " + std::to_string(n) + " out of range");
    if (d.rows() != ranks_[n - 1] || d.cols() != ranks_[n])
        throw Error(ErrorKind::BoundaryMismatch, "d_" + std::to_string(n) + " has wrong shape");
    boundaries_[n] = std::move(d);
}

bool ChainComplexZ::squares_to_zero() const
{
    for (std::size_t n = 2; n < ranks_.size(); ++n)
        if (!(boundaries_[n - 1] * boundaries_[n]).is_zero())
            return false;
    return true;
}

void ChainComplexZ::validate() const
{
    for (std::size_t n = 2; n < ranks_.size(); ++n)
        if (!(boundaries_[n - 1] * boundaries_[n]).is_zero())
            throw Error(ErrorKind::BoundaryMismatch, "d_" + std::to_string(n - 1) + " d_" + std::to_string(n) + " != 0");
}

AbGroupInvariants homology_from_divisors(std::size_t dim, const std::vector<Integer>& incoming,
                                         std::size_t outgoing_rank)
{
    if (incoming.size() + outgoing_rank > dim)
        throw Error(ErrorKind::BoundaryMismatch, "rank-nullity violated: composite of boundaries is nonzero");
    std::vector<Integer> torsion;
    for (const auto& d : incoming)
        if (d != 1)
            torsion.push_back(d);
    return AbGroupInvariants::from_cyclic(dim - incoming.size() - outgoing_rank, torsion);
}

AbGroupInvariants ChainComplexZ::homology(std::size_t n, const SparseEliminationOptions& opts) const
{
    if (n >= ranks_.size())
        throw Error(ErrorKind::InvalidArgument, "homology degree " + std::to_string(n) + " out of range");
    if (n + 1 < ranks_.size() && n >= 1 && !(boundaries_[n] * boundaries_[n + 1]).is_zero())
        throw Error(ErrorKind::BoundaryMismatch, "d_" + std::to_string(n) + " d_" + std::to_string(n + 1) + " != 0");
    std::size_t out_rank = n == 0 ? 0 : elementary_divisors(boundaries_[n], opts).size();
    std::vector<Integer> in = n + 1 < ranks_.size() ? elementary_divisors(boundaries_[n + 1], opts)
                                                    : std::vector<Integer>{};
    return homology_from_divisors(ranks_[n], in, out_rank);
}

std::vector<AbGroupInvariants> ChainComplexZ::homology_all(const SparseEliminationOptions& opts) const
{
    validate();
    std::vector<std::vector<Integer>> divs(ranks_.size() + 1);
    for (std::size_t n = 1; n < ranks_.size(); ++n)
        divs[n] = elementary_divisors(boundaries_[n], opts);
    std::vector<AbGroupInvariants> out;
    for (std::size_t n = 0; n < ranks_.size(); ++n)
        out.push_back(homology_from_divisors(ranks_[n], divs[n + 1], n == 0 ? 0 : divs[n].size()));
    return out;
}

CochainComplexZ::CochainComplexZ(std::vector<std::size_t> ranks) : ranks_(std::move(ranks))
{
    coboundaries_.resize(ranks_.size());
    for (std::size_t n = 1; n < ranks_.size(); ++n)
        coboundaries_[n] = SparseMatrix(ranks_[n], ranks_[n - 1]);
}

void CochainComplexZ::set_coboundary(std::size_t n, SparseMatrix d)
{
    if (n == 0 || n >= ranks_.size())
        throw Error(ErrorKind::InvalidArgument, "coboundary index " + std::to_string(n) + " out of range");
    if (d.rows() != ranks_[n] || d.cols() != ranks_[n - 1])
        throw Error(ErrorKind::BoundaryMismatch, "delta^" + std::to_string(n) + " has wrong shape");
    coboundaries_[n] = std::move(d);
}

void CochainComplexZ::validate() const
{
    for (std::size_t n = 2; n < ranks_.size(); ++n)
        if (!(coboundaries_[n] * coboundaries_[n - 1]).is_zero())
            throw Error(ErrorKind::BoundaryMismatch,
                        "delta^" + std::to_string(n) + " delta^" + std::to_string(n - 1) + " != 0");
}

AbGroupInvariants CochainComplexZ::cohomology(std::size_t n, const SparseEliminationOptions& opts) const
{
    if (n >= ranks_.size())
        throw Error(ErrorKind::InvalidArgument, "cohomology degree " + std::to_string(n) + " out of range");
    std::vector<Integer> in = n == 0 ? std::vector<Integer>{} : elementary_divisors(coboundaries_[n], opts);
    std::size_t out_rank = n + 1 < ranks_.size() ? elementary_divisors(coboundaries_[n + 1], opts).size() : 0;
    return homology_from_divisors(ranks_[n], in, out_rank);
}

std::vector<AbGroupInvariants> CochainComplexZ::cohomology_all(const SparseEliminationOptions& opts) const
{
    validate();
    std::vector<std::vector<Integer>> divs(ranks_.size() + 1);
    for (std::size_t n = 1; n < ranks_.size(); ++n)
        divs[n] = elementary_divisors(coboundaries_[n], opts);
    std::vector<AbGroupInvariants> out;
    for (std::size_t n = 0; n < ranks_.size(); ++n)
        out.push_back(homology_from_divisors(ranks_[n], divs[n], divs[n + 1].size()));
    return out;
}

ChainComplexZ tensor_complexes(const ChainComplexZ& a, const ChainComplexZ& b, std::size_t top)
{
    // offsets[n][p] = start of the A_p (x) B_{n-p} block inside (A (x) B)_n
    std::vector<std::vector<std::size_t>> offsets(top + 1);
    std::vector<std::size_t> ranks(top + 1, 0);
    for (std::size_t n = 0; n <= top; ++n) {
        offsets[n].assign(n + 1, 0);
        for (std::size_t p = 0; p <= n; ++p) {
            offsets[n][p] = ranks[n];
            std::size_t q = n - p;
            if (p <= a.top() && q <= b.top())
                ranks[n] += a.rank(p) * b.rank(q);
        }
    }
    ChainComplexZ t(ranks);
    for (std::size_t n = 1; n <= top; ++n) {
        SparseMatrix d(ranks[n - 1], ranks[n]);
        for (std::size_t p = 0; p <= n; ++p) {
            std::size_t q = n - p;
            if (p > a.top() || q > b.top())
                continue;
            const std::size_t bq = b.rank(q);
            for (std::size_t i = 0; i < a.rank(p); ++i)
                for (std::size_t j = 0; j < bq; ++j) {
                    std::size_t col = offsets[n][p] + i * bq + j;
                    SparseMatrix::Column entries;
                    if (p >= 1 && q <= b.top()) {
                        std::size_t bq2 = b.rank(q);
                        for (const auto& e : a.boundary(p).column(i))
                            entries.push_back({offsets[n - 1][p - 1] + e.row * bq2 + j, e.value});
                    }
                    if (q >= 1) {
                        std::size_t bq1 = b.rank(q - 1);
                        Integer sign = p % 2 == 0 ? 1 : -1;
                        for (const auto& e : b.boundary(q).column(j))
                            entries.push_back({offsets[n - 1][p] + i * bq1 + e.row, sign * e.value});
                    }
                    d.set_column(col, std::move(entries));
                }
        }
        t.set_boundary(n, std::move(d));
    }
    return t;
}

} // namespace bredon
