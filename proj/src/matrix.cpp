#include "bredon/matrix.hpp"

#include <algorithm>
#include <ostream>

#include "bredon/error.hpp"

namespace bredon {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::CompositionMismatch: return "CompositionMismatch";
    case ErrorKind::VarianceMismatch: return "VarianceMismatch";
    case ErrorKind::FamilyNotCompatible: return "FamilyNotCompatible";
    case ErrorKind::FamilyNotSemiFull: return "FamilyNotSemiFull";
    case ErrorKind::NotFreeSum: return "NotFreeSum";
    case ErrorKind::NotObjectwiseFree: return "NotObjectwiseFree";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::StabilizerOutsideFamily: return "StabilizerOutsideFamily";
    case ErrorKind::BoundarySquareNonzero: return "BoundarySquareNonzero";
    case ErrorKind::BoundaryMismatch: return "BoundaryMismatch";
    case ErrorKind::NotChainMap: return "NotChainMap";
    case ErrorKind::NotACycle: return "NotACycle";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Error";
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> data)
    : rows_(rows), cols_(cols), data_(std::move(data))
{
    if (data_.size() != rows * cols)
        throw Error(ErrorKind::InvalidArgument, "matrix data size does not match dimensions");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw Error(ErrorKind::InvalidArgument, "ragged matrix literal");
        for (long long v : r)
            data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

bool IntMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v == 0; });
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    IntMatrix b(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c)
            b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
}

void IntMatrix::set_block(std::size_t r0, std::size_t c0, const IntMatrix& b)
{
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
            (*this)(r0 + r, c0 + c) = b(r, c);
}

void IntMatrix::add_block(std::size_t r0, std::size_t c0, const IntMatrix& b, const Integer& scale)
{
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
            if (b(r, c) != 0)
                (*this)(r0 + r, c0 + c) += scale * b(r, c);
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k)
{
    if (k == 0)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        if ((*this)(src, c) != 0)
            (*this)(dst, c) += k * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k)
{
    if (k == 0)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        if ((*this)(r, src) != 0)
            (*this)(r, dst) += k * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r)
{
    for (std::size_t c = 0; c < cols_; ++c)
        (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c)
{
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, c) = -(*this)(r, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows())
        throw Error(ErrorKind::InvalidArgument, "matrix product dimension mismatch");
    IntMatrix p(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Integer& aik = a(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b(k, j) != 0)
                    p(i, j) += aik * b(k, j);
        }
    return p;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(ErrorKind::InvalidArgument, "matrix sum dimension mismatch");
    IntMatrix s = a;
    s.add_block(0, 0, b);
    return s;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(ErrorKind::InvalidArgument, "matrix difference dimension mismatch");
    IntMatrix s = a;
    s.add_block(0, 0, b, -1);
    return s;
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b)
{
    IntMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j) == 0)
                continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
        }
    return k;
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows() != b.rows())
        throw Error(ErrorKind::InvalidArgument, "hstack row mismatch");
    IntMatrix m(a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.cols())
        throw Error(ErrorKind::InvalidArgument, "vstack column mismatch");
    IntMatrix m(a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m)
{
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r > 0)
            os << ',';
        os << '[';
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c > 0)
                os << ',';
            os << m(r, c);
        }
        os << ']';
    }
    return os << ']';
}

void normalize_column(SparseMatrix::Column& col)
{
    std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.row < b.row; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < col.size();) {
        std::size_t row = col[i].row;
        Integer sum = 0;
        for (; i < col.size() && col[i].row == row; ++i)
            sum += col[i].value;
        if (sum != 0)
            col[out++] = {row, std::move(sum)};
    }
    col.resize(out);
}

SparseMatrix SparseMatrix::from_dense(const IntMatrix& m)
{
    SparseMatrix s(m.rows(), m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (m(r, c) != 0)
                s.columns_[c].push_back({r, m(r, c)});
    return s;
}

IntMatrix SparseMatrix::to_dense() const
{
    IntMatrix m(rows_, cols());
    for (std::size_t c = 0; c < cols(); ++c)
        for (const auto& e : columns_[c])
            m(e.row, c) = e.value;
    return m;
}

std::size_t SparseMatrix::nonzeros() const
{
    std::size_t n = 0;
    for (const auto& c : columns_)
        n += c.size();
    return n;
}

void SparseMatrix::set_column(std::size_t c, Column entries)
{
    normalize_column(entries);
    if (!entries.empty() && entries.back().row >= rows_)
        throw Error(ErrorKind::InvalidArgument, "sparse entry row out of range");
    columns_[c] = std::move(entries);
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Integer& v)
{
    if (v == 0)
        return;
    auto& col = columns_[c];
    auto it = std::lower_bound(col.begin(), col.end(), r, [](const Entry& e, std::size_t row) { return e.row < row; });
    if (it != col.end() && it->row == r) {
        it->value += v;
        if (it->value == 0)
            col.erase(it);
    } else {
        col.insert(it, {r, v});
    }
}

SparseMatrix SparseMatrix::transpose() const
{
    SparseMatrix t(cols(), rows_);
    for (std::size_t c = 0; c < cols(); ++c)
        for (const auto& e : columns_[c])
            t.columns_[e.row].push_back({c, e.value});
    return t;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b)
{
    if (a.cols() != b.rows())
        throw Error(ErrorKind::InvalidArgument, "sparse product dimension mismatch");
    SparseMatrix p(a.rows(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        SparseMatrix::Column acc;
        for (const auto& eb : b.column(j))
            for (const auto& ea : a.column(eb.row))
                acc.push_back({ea.row, ea.value * eb.value});
        p.set_column(j, std::move(acc));
    }
    return p;
}

} // namespace bredon
