#pragma once

#include "homcat/field.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace homcat {

using Vec = std::vector<std::uint32_t>;

// Dense row-major matrix over F_p.
class Mat {
  public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols, std::uint32_t p);

    static Mat identity(std::size_t n, std::uint32_t p);
    static Mat from_rows(std::uint32_t p, std::initializer_list<std::initializer_list<std::int64_t>> rows);
    static Mat from_rows(std::uint32_t p, const std::vector<std::vector<std::int64_t>> &rows);
    static Mat column(const Vec &v, std::uint32_t p);
    // Columns given as vectors; rows = n (needed when cols is empty).
    static Mat from_columns(const std::vector<Vec> &cols, std::size_t n, std::uint32_t p);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t modulus() const { return p_; }

    std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::uint32_t &at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::int64_t v) { data_[r * cols_ + c] = reduce(v, p_); }
    const std::uint32_t *row_ptr(std::size_t r) const { return data_.data() + r * cols_; }
    std::uint32_t *row_ptr(std::size_t r) { return data_.data() + r * cols_; }
    const std::vector<std::uint32_t> &data() const { return data_; }

    Vec col(std::size_t c) const;
    Vec row(std::size_t r) const;
    void set_col(std::size_t c, const Vec &v);

    Mat operator*(const Mat &o) const;
    Vec operator*(const Vec &v) const;
    Mat operator+(const Mat &o) const;
    Mat operator-(const Mat &o) const;
    Mat scaled(std::uint32_t s) const;
    Mat &operator+=(const Mat &o);
    // this += s * o
    void add_scaled(const Mat &o, std::uint32_t s);

    Mat transpose() const;
    Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Mat &b);
    Mat select_cols(const std::vector<std::size_t> &idx) const;
    Mat select_rows(const std::vector<std::size_t> &idx) const;

    bool is_zero() const;
    bool is_identity() const;
    bool operator==(const Mat &o) const;
    bool operator!=(const Mat &o) const { return !(*this == o); }

    // Row-major flattening, used when a space of matrices is treated as a vector space.
    Vec flatten() const { return data_; }
    static Mat unflatten(const Vec &v, std::size_t rows, std::size_t cols, std::uint32_t p);

    std::string str() const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::uint32_t p_ = 2;
    std::vector<std::uint32_t> data_;
};

Mat hstack(const Mat &a, const Mat &b);
Mat vstack(const Mat &a, const Mat &b);
Mat direct_sum(const Mat &a, const Mat &b);

struct Rref {
    Mat reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

// Gauss-Jordan; the pivot in each column is the first nonzero entry at or below the current row.
Rref rref(const Mat &m);
std::size_t rank(const Mat &m);
// Columns form a basis of the right null space.
Mat kernel_basis(const Mat &m);
// Some x with a x = b, or nullopt.
std::optional<Mat> solve(const Mat &a, const Mat &b);
std::optional<Mat> inverse(const Mat &m);
// The pivot columns of m, i.e. a basis of its column space drawn from its columns.
Mat column_basis(const Mat &m);
std::vector<std::size_t> pivot_columns(const Mat &m);

// Incrementally maintained row-reduced basis of a subspace of F_p^n.
class SpanBuilder {
  public:
    SpanBuilder(std::size_t n, std::uint32_t p) : n_(n), p_(p) {}
    // Returns true if v was independent of the current span.
    bool add(const Vec &v);
    bool contains(const Vec &v) const;
    // v reduced against the basis; zero iff v is in the span.
    Vec residue(const Vec &v) const;
    std::size_t dim() const { return rows_.size(); }
    std::size_t ambient() const { return n_; }

  private:
    std::size_t n_;
    std::uint32_t p_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> piv_;
};

} // namespace homcat
