#include "icode/matrix.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace icode {

namespace {

void check_entries(const FieldSpec& field, const std::vector<std::uint64_t>& v) {
    for (std::uint64_t e : v) {
        if (e >= field.modulus()) {
            throw invalid_parameters("entry " + std::to_string(e) +
                                     " out of range for GF(" +
                                     std::to_string(field.modulus()) + ")");
        }
    }
}

} // namespace

Vector::Vector(FieldSpec field, std::vector<std::uint64_t> entries)
    : field_(field), v_(std::move(entries)) {
    check_entries(field_, v_);
}

Vector Vector::zeros(FieldSpec field, int n) {
    if (n < 0) throw invalid_dimension("negative vector length");
    return Vector(field, std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0));
}

void Vector::set(int i, std::uint64_t value) {
    if (value >= field_.modulus()) {
        throw invalid_parameters("entry out of range for field");
    }
    v_[static_cast<std::size_t>(i)] = value;
}

Vector operator+(const Vector& a, const Vector& b) {
    if (a.field() != b.field() || a.size() != b.size()) {
        throw invalid_dimension("vector addition shape/field mismatch");
    }
    std::vector<std::uint64_t> out(static_cast<std::size_t>(a.size()));
    for (int i = 0; i < a.size(); ++i) out[static_cast<std::size_t>(i)] = a.field().add(a[i], b[i]);
    return Vector(a.field(), std::move(out));
}

Vector operator-(const Vector& a, const Vector& b) {
    if (a.field() != b.field() || a.size() != b.size()) {
        throw invalid_dimension("vector subtraction shape/field mismatch");
    }
    std::vector<std::uint64_t> out(static_cast<std::size_t>(a.size()));
    for (int i = 0; i < a.size(); ++i) out[static_cast<std::size_t>(i)] = a.field().sub(a[i], b[i]);
    return Vector(a.field(), std::move(out));
}

Matrix::Matrix(FieldSpec field, int rows, int cols)
    : field_(field), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw invalid_dimension("negative matrix dimension");
    a_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
}

Matrix::Matrix(FieldSpec field, int rows, int cols, std::vector<std::uint64_t> entries)
    : field_(field), rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (rows < 0 || cols < 0) throw invalid_dimension("negative matrix dimension");
    if (a_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
        throw invalid_dimension("entry count does not match rows x cols");
    }
    check_entries(field_, a_);
}

Matrix Matrix::identity(FieldSpec field, int n) {
    if (n < 1) throw invalid_dimension("identity needs n >= 1");
    Matrix m(field, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

void Matrix::set(int r, int c, std::uint64_t value) {
    if (value >= field_.modulus()) {
        throw invalid_parameters("entry out of range for field");
    }
    a_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
       static_cast<std::size_t>(c)] = value;
}

Vector Matrix::row(int r) const {
    std::vector<std::uint64_t> out(static_cast<std::size_t>(cols_));
    for (int c = 0; c < cols_; ++c) out[static_cast<std::size_t>(c)] = at(r, c);
    return Vector(field_, std::move(out));
}

bool Matrix::is_zero_one() const {
    return std::ranges::all_of(a_, [](std::uint64_t e) { return e <= 1; });
}

Matrix identity(int n, const FieldSpec& field) { return Matrix::identity(field, n); }

namespace {

// Row-echelon reduction on a flat buffer; returns the rank. Pivot choice is
// the first nonzero going left-to-right in columns, top-to-bottom in rows,
// so results are identical on every platform.
int echelon_rank(std::vector<std::uint64_t>& a, int rows, int cols, const FieldSpec& f) {
    const auto idx = [cols](int r, int c) {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) +
               static_cast<std::size_t>(c);
    };
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i) {
            if (a[idx(i, c)] != 0) { piv = i; break; }
        }
        if (piv < 0) continue;
        if (piv != r) {
            for (int j = c; j < cols; ++j) std::swap(a[idx(piv, j)], a[idx(r, j)]);
        }
        const std::uint64_t piv_inv = f.inv(a[idx(r, c)]);
        for (int j = c; j < cols; ++j) a[idx(r, j)] = f.mul(a[idx(r, j)], piv_inv);
        for (int i = r + 1; i < rows; ++i) {
            const std::uint64_t t = a[idx(i, c)];
            if (t == 0) continue;
            for (int j = c; j < cols; ++j) {
                a[idx(i, j)] = f.sub(a[idx(i, j)], f.mul(t, a[idx(r, j)]));
            }
        }
        ++r;
    }
    return r;
}

} // namespace

int rank(const Matrix& m) {
    std::vector<std::uint64_t> a = m.entries();
    return echelon_rank(a, m.rows(), m.cols(), m.field());
}

Vector solve(const Matrix& a, const Vector& b) {
    if (a.field() != b.field()) throw invalid_dimension("solve: field mismatch");
    if (a.rows() != a.cols()) throw invalid_dimension("solve: matrix not square");
    if (a.rows() != b.size()) throw invalid_dimension("solve: rhs length mismatch");
    const int n = a.rows();
    const FieldSpec& f = a.field();
    if (n == 0) return Vector::zeros(f, 0);

    // Augmented [a | b], forward elimination then back substitution.
    const int cols = n + 1;
    std::vector<std::uint64_t> w(static_cast<std::size_t>(n) * static_cast<std::size_t>(cols));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) w[static_cast<std::size_t>(i * cols + j)] = a.at(i, j);
        w[static_cast<std::size_t>(i * cols + n)] = b[i];
    }
    const auto idx = [cols](int r, int c) { return static_cast<std::size_t>(r * cols + c); };
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i) {
            if (w[idx(i, c)] != 0) { piv = i; break; }
        }
        if (piv < 0) throw singular_system("solve: matrix is singular");
        if (piv != c) {
            for (int j = c; j < cols; ++j) std::swap(w[idx(piv, j)], w[idx(c, j)]);
        }
        const std::uint64_t piv_inv = f.inv(w[idx(c, c)]);
        for (int j = c; j < cols; ++j) w[idx(c, j)] = f.mul(w[idx(c, j)], piv_inv);
        for (int i = c + 1; i < n; ++i) {
            const std::uint64_t t = w[idx(i, c)];
            if (t == 0) continue;
            for (int j = c; j < cols; ++j) w[idx(i, j)] = f.sub(w[idx(i, j)], f.mul(t, w[idx(c, j)]));
        }
    }
    std::vector<std::uint64_t> x(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        std::uint64_t acc = w[idx(i, n)];
        for (int j = i + 1; j < n; ++j) acc = f.sub(acc, f.mul(w[idx(i, j)], x[static_cast<std::size_t>(j)]));
        x[static_cast<std::size_t>(i)] = acc;
    }
    return Vector(f, std::move(x));
}

Matrix row_concat(const Matrix& top, const Matrix& bottom) {
    if (top.field() != bottom.field()) throw invalid_dimension("row_concat: field mismatch");
    if (top.cols() != bottom.cols()) throw invalid_dimension("row_concat: column count mismatch");
    Matrix out(top.field(), top.rows() + bottom.rows(), top.cols());
    for (int i = 0; i < top.rows(); ++i)
        for (int j = 0; j < top.cols(); ++j) out.set(i, j, top.at(i, j));
    for (int i = 0; i < bottom.rows(); ++i)
        for (int j = 0; j < bottom.cols(); ++j) out.set(top.rows() + i, j, bottom.at(i, j));
    return out;
}

Matrix col_concat(const Matrix& left, const Matrix& right) {
    if (left.field() != right.field()) throw invalid_dimension("col_concat: field mismatch");
    if (left.rows() != right.rows()) throw invalid_dimension("col_concat: row count mismatch");
    Matrix out(left.field(), left.rows(), left.cols() + right.cols());
    for (int i = 0; i < left.rows(); ++i) {
        for (int j = 0; j < left.cols(); ++j) out.set(i, j, left.at(i, j));
        for (int j = 0; j < right.cols(); ++j) out.set(i, left.cols() + j, right.at(i, j));
    }
    return out;
}

Matrix transpose(const Matrix& m) {
    Matrix out(m.field(), m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.set(j, i, m.at(i, j));
    return out;
}

Vector operator*(const Vector& x, const Matrix& a) {
    if (x.field() != a.field()) throw invalid_dimension("vector*matrix: field mismatch");
    if (x.size() != a.rows()) throw invalid_dimension("vector*matrix: shape mismatch");
    const FieldSpec& f = a.field();
    std::vector<std::uint64_t> y(static_cast<std::size_t>(a.cols()), 0);
    for (int i = 0; i < a.rows(); ++i) {
        const std::uint64_t xi = x[i];
        if (xi == 0) continue;
        for (int j = 0; j < a.cols(); ++j) {
            auto& yj = y[static_cast<std::size_t>(j)];
            yj = f.add(yj, f.mul(xi, a.at(i, j)));
        }
    }
    return Vector(f, std::move(y));
}

Vector operator*(const Matrix& a, const Vector& x) {
    if (x.field() != a.field()) throw invalid_dimension("matrix*vector: field mismatch");
    if (x.size() != a.cols()) throw invalid_dimension("matrix*vector: shape mismatch");
    const FieldSpec& f = a.field();
    std::vector<std::uint64_t> y(static_cast<std::size_t>(a.rows()), 0);
    for (int i = 0; i < a.rows(); ++i) {
        std::uint64_t acc = 0;
        for (int j = 0; j < a.cols(); ++j) acc = f.add(acc, f.mul(a.at(i, j), x[j]));
        y[static_cast<std::size_t>(i)] = acc;
    }
    return Vector(f, std::move(y));
}

Matrix select_rows(const Matrix& m, std::span<const int> idx) {
    Matrix out(m.field(), static_cast<int>(idx.size()), m.cols());
    for (int i = 0; i < static_cast<int>(idx.size()); ++i) {
        const int r = idx[static_cast<std::size_t>(i)];
        if (r < 0 || r >= m.rows()) throw invalid_index("row index out of range");
        for (int j = 0; j < m.cols(); ++j) out.set(i, j, m.at(r, j));
    }
    return out;
}

Matrix select_cols(const Matrix& m, std::span<const int> idx) {
    Matrix out(m.field(), m.rows(), static_cast<int>(idx.size()));
    for (int j = 0; j < static_cast<int>(idx.size()); ++j) {
        const int c = idx[static_cast<std::size_t>(j)];
        if (c < 0 || c >= m.cols()) throw invalid_index("column index out of range");
        for (int i = 0; i < m.rows(); ++i) out.set(i, j, m.at(i, c));
    }
    return out;
}

Matrix cyclic_row_window(const Matrix& m, int start, int n) {
    if (n < 0 || n > m.rows()) throw invalid_parameters("window larger than matrix");
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = (start + i) % m.rows();
    return select_rows(m, idx);
}

Matrix reduce_mod(const Matrix& m, const FieldSpec& field) {
    std::vector<std::uint64_t> a(m.entries().size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = m.entries()[i] % field.modulus();
    return Matrix(field, m.rows(), m.cols(), std::move(a));
}

} // namespace icode
