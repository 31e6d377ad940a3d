#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "icode/field.hpp"

namespace icode {

/// Dense vector over GF(p). Entries are canonical representatives in [0, p).
class Vector {
public:
    Vector(FieldSpec field, std::vector<std::uint64_t> entries);
    static Vector zeros(FieldSpec field, int n);

    const FieldSpec& field() const { return field_; }
    int size() const { return static_cast<int>(v_.size()); }
    std::uint64_t operator[](int i) const { return v_[static_cast<std::size_t>(i)]; }
    void set(int i, std::uint64_t value);
    const std::vector<std::uint64_t>& entries() const { return v_; }

    bool operator==(const Vector&) const = default;

private:
    FieldSpec field_;
    std::vector<std::uint64_t> v_;
};

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);

/// Dense row-major matrix over GF(p). Rows and columns are 0-based here;
/// receiver/message indexing (1-based) lives in the problem layer.
class Matrix {
public:
    Matrix(FieldSpec field, int rows, int cols);
    Matrix(FieldSpec field, int rows, int cols, std::vector<std::uint64_t> entries);
    static Matrix identity(FieldSpec field, int n);

    const FieldSpec& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    std::uint64_t at(int r, int c) const {
        return a_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                  static_cast<std::size_t>(c)];
    }
    void set(int r, int c, std::uint64_t value);

    Vector row(int r) const;
    bool is_zero_one() const;
    const std::vector<std::uint64_t>& entries() const { return a_; }

    bool operator==(const Matrix&) const = default;

private:
    FieldSpec field_;
    int rows_;
    int cols_;
    std::vector<std::uint64_t> a_;
};

Matrix identity(int n, const FieldSpec& field);

/// Rank over GF(p) by exact Gaussian elimination, first-nonzero
/// (leftmost column, topmost row) pivoting.
int rank(const Matrix& m);

/// Unique solution of a·x = b for square full-rank a.
Vector solve(const Matrix& a, const Vector& b);

Matrix row_concat(const Matrix& top, const Matrix& bottom);
Matrix col_concat(const Matrix& left, const Matrix& right);
Matrix transpose(const Matrix& m);

Vector operator*(const Vector& x, const Matrix& a); // row vector times matrix
Vector operator*(const Matrix& a, const Vector& x); // matrix times column vector

/// Rows of m picked by 0-based indices, in the given order.
Matrix select_rows(const Matrix& m, std::span<const int> idx);
/// Columns of m picked by 0-based indices, in the given order.
Matrix select_cols(const Matrix& m, std::span<const int> idx);
/// The n cyclically adjacent rows starting at 0-based row `start`.
Matrix cyclic_row_window(const Matrix& m, int start, int n);

/// Same entry pattern read in another prime field (entries reduced mod p).
Matrix reduce_mod(const Matrix& m, const FieldSpec& field);

} // namespace icode
