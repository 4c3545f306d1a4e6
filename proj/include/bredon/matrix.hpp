#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bredon {

using Integer = boost::multiprecision::cpp_int;

/// Dense integer matrix, row-major, arbitrary precision entries.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> data);
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix transpose() const;
    bool is_zero() const;
    IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const IntMatrix& b);
    void add_block(std::size_t r0, std::size_t c0, const IntMatrix& b, const Integer& scale = 1);
    IntMatrix select_rows(std::size_t begin, std::size_t end) const { return block(begin, 0, end - begin, cols_); }
    IntMatrix select_cols(std::size_t begin, std::size_t end) const { return block(0, begin, rows_, end - begin); }

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += k * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
    void negate_row(std::size_t r);
    void negate_col(std::size_t c);

    friend bool operator==(const IntMatrix& a, const IntMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);
IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Column-compressed sparse integer matrix. Column entries are kept sorted by row.
class SparseMatrix {
public:
    struct Entry {
        std::size_t row;
        Integer value;
        friend bool operator==(const Entry&, const Entry&) = default;
    };
    using Column = std::vector<Entry>;

    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

    static SparseMatrix from_dense(const IntMatrix& m);
    IntMatrix to_dense() const;

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return columns_.size(); }
    std::size_t nonzeros() const;

    const Column& column(std::size_t c) const { return columns_[c]; }
    /// Replaces column c; entries are sorted, merged and zero-pruned.
    void set_column(std::size_t c, Column entries);
    void add(std::size_t r, std::size_t c, const Integer& v);

    SparseMatrix transpose() const;
    bool is_zero() const { return nonzeros() == 0; }

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b)
    {
        return a.rows_ == b.rows_ && a.columns_ == b.columns_;
    }

private:
    std::size_t rows_ = 0;
    std::vector<Column> columns_;
};

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);

/// Normalizes an unsorted entry list: sorts by row, merges duplicates, drops zeros.
void normalize_column(SparseMatrix::Column& col);

} // namespace bredon
