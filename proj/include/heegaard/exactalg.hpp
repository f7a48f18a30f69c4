#pragma once

// Exact integer linear algebra: matrices over arbitrary-precision integers,
// Smith normal form with transforms, Bareiss determinants, integer solving.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace heegaard {

using Int = boost::multiprecision::cpp_int;
using IntVector = std::vector<Int>;

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
    static IntMatrix diagonal(const IntVector& entries);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntVector row(std::size_t i) const;
    IntVector col(std::size_t j) const;
    void set_row(std::size_t i, const IntVector& values);

    IntMatrix transpose() const;
    IntVector apply(const IntVector& v) const;  // this * v, v a column vector

    // Row/column operations used by the normal-form algorithms.
    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    void add_row_multiple(std::size_t target, std::size_t source, const Int& factor);
    void add_col_multiple(std::size_t target, std::size_t source, const Int& factor);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

    bool is_zero() const;
    Int max_abs_entry() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom);
IntMatrix hstack(const IntMatrix& left, const IntMatrix& right);
IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);

/// U * M * V = D with U, V unimodular and D in Smith form. The inverses of
/// the transforms are kept as well; callers extracting generators of a
/// cokernel need V^-1.
struct SmithDecomposition {
    IntMatrix u;
    IntMatrix d;
    IntMatrix v;
    IntMatrix u_inv;
    IntMatrix v_inv;

    /// Diagonal of D, length min(rows, cols).
    IntVector diagonal() const;
    std::size_t rank() const;
};

SmithDecomposition snf(const IntMatrix& m);

Int det(const IntMatrix& m);

/// Some integer x with m * x = b, or nullopt when no integral solution exists.
std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& b);

bool is_perfect_square(const Int& n);

/// Row-style Hermite normal form of the row lattice: echelon, positive
/// pivots, entries above a pivot reduced into [0, pivot). Zero rows dropped.
IntMatrix hermite_normal_form(const IntMatrix& m);

Int gcd_of(const IntVector& v);
std::string to_string(const IntVector& v);

}  // namespace heegaard
