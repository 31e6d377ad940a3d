#include <doctest.h>

#include <random>
#include <set>

#include "golden_fixtures.hpp"
#include "icode/matrix.hpp"

using namespace icode;

namespace {

Matrix random_matrix(const FieldSpec& f, int rows, int cols, std::mt19937& gen) {
    std::uniform_int_distribution<std::uint64_t> dist(0, f.modulus() - 1);
    Matrix m(f, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.set(i, j, dist(gen));
    return m;
}

// Independent rank oracle: the row space of an r x c matrix over GF(p) has
// exactly p^rank elements, so enumerate all p^r row combinations and count
// the distinct vectors.
std::uint64_t row_span_size(const Matrix& m) {
    const FieldSpec& f = m.field();
    const std::uint64_t p = f.modulus();
    std::set<std::vector<std::uint64_t>> span;
    std::vector<std::uint64_t> coeff(static_cast<std::size_t>(m.rows()), 0);
    while (true) {
        std::vector<std::uint64_t> v(static_cast<std::size_t>(m.cols()), 0);
        for (int i = 0; i < m.rows(); ++i) {
            for (int j = 0; j < m.cols(); ++j) {
                v[static_cast<std::size_t>(j)] = f.add(
                    v[static_cast<std::size_t>(j)],
                    f.mul(coeff[static_cast<std::size_t>(i)], m.at(i, j)));
            }
        }
        span.insert(v);
        std::size_t pos = coeff.size();
        while (pos > 0 && coeff[pos - 1] == p - 1) coeff[--pos] = 0;
        if (pos == 0) break;
        ++coeff[pos - 1];
    }
    return span.size();
}

std::uint64_t pow_u64(std::uint64_t base, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

} // namespace

TEST_CASE("field creation accepts primes and rejects everything else") {
    CHECK(FieldSpec(2).modulus() == 2);
    CHECK(FieldSpec(3).modulus() == 3);
    CHECK(FieldSpec(2147483647).modulus() == 2147483647);
    CHECK_THROWS_AS(FieldSpec(0), invalid_parameters);
    CHECK_THROWS_AS(FieldSpec(1), invalid_parameters);
    CHECK_THROWS_AS(FieldSpec(4), invalid_parameters);
    CHECK_THROWS_AS(FieldSpec(9), invalid_parameters);   // prime power, not prime
    CHECK_THROWS_AS(FieldSpec(27), invalid_parameters);
    CHECK_THROWS_AS(FieldSpec(1ull << 32), invalid_parameters);
}

TEST_CASE("field arithmetic is exact and canonical") {
    const FieldSpec f(7);
    CHECK(f.add(5, 6) == 4);
    CHECK(f.sub(2, 5) == 4);
    CHECK(f.neg(0) == 0);
    CHECK(f.mul(3, 5) == 1);
    for (std::uint64_t a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.reduce(-1) == 6);
    CHECK(f.reduce(14) == 0);

    const FieldSpec big(2147483647);
    CHECK(big.mul(big.modulus() - 1, big.modulus() - 1) == 1);
    CHECK(big.mul(big.inv(123456789), 123456789) == 1);
}

TEST_CASE("identity matrices") {
    const FieldSpec f(5);
    const Matrix i1 = identity(1, f);
    CHECK(i1.rows() == 1);
    CHECK(i1.at(0, 0) == 1);

    const Matrix i3 = identity(3, f);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) CHECK(i3.at(r, c) == (r == c ? 1u : 0u));

    CHECK_THROWS_AS(identity(0, f), invalid_dimension);
}

TEST_CASE("matrix construction validates shape and entries") {
    const FieldSpec f(3);
    CHECK_THROWS_AS(Matrix(f, 2, 2, {1, 0, 1}), invalid_dimension);
    CHECK_THROWS_AS(Matrix(f, 1, 2, {1, 3}), invalid_parameters);
    CHECK(Matrix(f, 0, 4).rows() == 0);
}

TEST_CASE("rank basics") {
    const FieldSpec f2(2);
    CHECK(rank(identity(4, f2)) == 4);
    CHECK(rank(Matrix(f2, 3, 3)) == 0);
    CHECK(rank(Matrix(f2, 0, 5)) == 0);

    // Characteristic matters: rows (1,1) and (1,-1) coincide only over GF(2).
    const Matrix m2(f2, 2, 2, {1, 1, 1, 1});
    CHECK(rank(m2) == 1);
    const FieldSpec f3(3);
    CHECK(rank(Matrix(f3, 2, 2, {1, 1, 1, 2})) == 2);
}

TEST_CASE("rank of the wrapped 17-row window of the 21x17 code") {
    const Matrix l = fixtures::l21x17(FieldSpec(2));
    const Matrix window = cyclic_row_window(l, 17, 17); // rows 18..21, 1..13
    CHECK(window.rows() == 17);
    CHECK(rank(window) == 17);
}

TEST_CASE("rank agrees with the span-size oracle on random small matrices") {
    std::mt19937 gen(42);
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        const FieldSpec f(p);
        for (int trial = 0; trial < 40; ++trial) {
            std::uniform_int_distribution<int> dim(1, p == 2 ? 6 : 4);
            const Matrix m = random_matrix(f, dim(gen), dim(gen), gen);
            CHECK(row_span_size(m) == pow_u64(p, rank(m)));
        }
    }
}

TEST_CASE("rank is transpose-invariant") {
    std::mt19937 gen(7);
    const FieldSpec f(5);
    for (int trial = 0; trial < 60; ++trial) {
        const Matrix m = random_matrix(f, 1 + trial % 6, 1 + (trial / 2) % 6, gen);
        CHECK(rank(m) == rank(transpose(m)));
    }
}

TEST_CASE("solve handles identity, homogeneous, and random round trips") {
    const FieldSpec f(3);
    std::mt19937 gen(99);
    std::uniform_int_distribution<std::uint64_t> dist(0, 2);

    const Vector b(f, {2, 0, 1});
    CHECK(solve(identity(3, f), b) == b);

    int done = 0;
    while (done < 30) {
        const Matrix a = random_matrix(f, 4, 4, gen);
        if (rank(a) < 4) continue;
        CHECK(solve(a, Vector::zeros(f, 4)) == Vector::zeros(f, 4));
        std::vector<std::uint64_t> xs(4);
        for (auto& v : xs) v = dist(gen);
        const Vector x(f, xs);
        CHECK(solve(a, a * x) == x);
        CHECK(a * solve(a, a * x) == a * x);
        ++done;
    }

    CHECK_THROWS_AS(solve(Matrix(f, 2, 2), Vector::zeros(f, 2)), singular_system);
    CHECK_THROWS_AS(solve(Matrix(f, 2, 3), Vector::zeros(f, 2)), invalid_dimension);
    CHECK_THROWS_AS(solve(identity(2, f), Vector::zeros(f, 3)), invalid_dimension);
}

TEST_CASE("concatenation and transpose") {
    const FieldSpec f(2);
    const Matrix i2 = identity(2, f);

    const Matrix c4x2 = row_concat(i2, i2);
    CHECK(c4x2 == Matrix(f, 4, 2, {1, 0, 0, 1, 1, 0, 0, 1}));

    const Matrix ones4x1(f, 4, 1, {1, 1, 1, 1});
    const Matrix block = col_concat(identity(4, f), ones4x1);
    CHECK(block.cols() == 5);
    for (int r = 0; r < 4; ++r) CHECK(block.at(r, 4) == 1);

    CHECK(transpose(ones4x1) == Matrix(f, 1, 4, {1, 1, 1, 1}));

    CHECK_THROWS_AS(row_concat(i2, identity(3, f)), invalid_dimension);
    CHECK_THROWS_AS(col_concat(i2, identity(3, f)), invalid_dimension);
}

TEST_CASE("concatenation is associative and transpose is an involution") {
    std::mt19937 gen(1234);
    const FieldSpec f(3);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix a = random_matrix(f, 2, 3, gen);
        const Matrix b = random_matrix(f, 4, 3, gen);
        const Matrix c = random_matrix(f, 1, 3, gen);
        CHECK(row_concat(row_concat(a, b), c) == row_concat(a, row_concat(b, c)));
        const Matrix at = transpose(a), bt = transpose(b), ct = transpose(c);
        CHECK(col_concat(col_concat(at, bt), ct) == col_concat(at, col_concat(bt, ct)));
        CHECK(transpose(transpose(a)) == a);
    }
}

TEST_CASE("vector-matrix products") {
    const FieldSpec f(5);
    const Matrix m(f, 2, 3, {1, 2, 3, 4, 0, 1});
    const Vector x(f, {2, 3});
    CHECK(x * m == Vector(f, {4, 4, 4})); // (2+12, 4+0, 6+3) mod 5
    const Vector y(f, {1, 1, 1});
    CHECK(m * y == Vector(f, {1, 0}));    // (6, 5) mod 5
    CHECK_THROWS_AS(x * transpose(m), invalid_dimension);
}

TEST_CASE("cyclic row windows wrap") {
    const FieldSpec f(2);
    const Matrix m = identity(3, f);
    const Matrix w = cyclic_row_window(m, 2, 2);
    CHECK(w == Matrix(f, 2, 3, {0, 0, 1, 1, 0, 0}));
    CHECK_THROWS_AS(cyclic_row_window(m, 0, 4), invalid_parameters);
}

TEST_CASE("reduce_mod reinterprets entries in another prime field") {
    const FieldSpec f7(7);
    const Matrix m(f7, 2, 2, {6, 3, 2, 1});
    const Matrix m2 = reduce_mod(m, FieldSpec(2));
    CHECK(m2 == Matrix(FieldSpec(2), 2, 2, {0, 1, 0, 1}));
}
