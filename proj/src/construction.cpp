#include "icode/construction.hpp"

#include <numeric>
#include <string>

namespace icode {

namespace {

void check_problem_size(int k, int d) {
    if (k < 2 || d < 1 || d > k - 1) {
        throw invalid_parameters("need 1 <= D <= K-1, got K=" + std::to_string(k) +
                                 " D=" + std::to_string(d));
    }
}

} // namespace

LambdaChain lambda_chain(int k, int d) {
    check_problem_size(k, d);
    LambdaChain chain{k, d, {}};
    int prev2 = k - d; // lambda_{-1}
    int prev1 = d;     // lambda_0
    while (true) {
        const int r = prev2 % prev1;
        if (r == 0) break; // divisibility reached; the chain ends one step earlier
        chain.lambdas.push_back(r);
        prev2 = prev1;
        prev1 = r;
    }
    return chain;
}

Matrix rectangular_circulant(int mu, int lam, const FieldSpec& field) {
    if (mu < 1 || lam < 1) throw invalid_parameters("circulant dimensions must be positive");
    if (mu % lam != 0) {
        throw invalid_parameters("circulant needs lambda | mu, got mu=" + std::to_string(mu) +
                                 " lambda=" + std::to_string(lam));
    }
    Matrix m(field, mu, lam);
    for (int i = 0; i < mu; ++i) m.set(i, i % lam, 1);
    return m;
}

namespace {

Matrix build_core_impl(int r, int c, const FieldSpec& field, std::vector<CoreBlock>* trace) {
    Matrix block = [&]() {
        if (r >= c && r % c == 0) return rectangular_circulant(r, c, field);
        if (c > r && c % r == 0) return transpose(rectangular_circulant(c, r, field));
        if (r <= c) {
            // Fat: floor(c/r) identity blocks, the remainder block on the right.
            Matrix out = Matrix::identity(field, r);
            for (int i = 1; i < c / r; ++i) out = col_concat(out, Matrix::identity(field, r));
            return col_concat(out, build_core_impl(r, c % r, field, trace));
        }
        // Tall: floor(r/c) identity blocks, the remainder block underneath.
        Matrix out = Matrix::identity(field, c);
        for (int i = 1; i < r / c; ++i) out = row_concat(out, Matrix::identity(field, c));
        return row_concat(out, build_core_impl(r % c, c, field, trace));
    }();
    if (trace) trace->push_back(CoreBlock{r, c, block});
    return block;
}

} // namespace

CoreBlock build_core(int r, int c, const FieldSpec& field) {
    if (r < 1 || c < 1) throw invalid_parameters("core block dimensions must be positive");
    return CoreBlock{r, c, build_core_impl(r, c, field, nullptr)};
}

std::vector<CoreBlock> build_core_trace(int r, int c, const FieldSpec& field) {
    if (r < 1 || c < 1) throw invalid_parameters("core block dimensions must be positive");
    std::vector<CoreBlock> trace;
    build_core_impl(r, c, field, &trace);
    return trace;
}

Matrix build_encoding_matrix(int k, int d, const FieldSpec& field) {
    check_problem_size(k, d);
    return row_concat(Matrix::identity(field, k - d), build_core(d, k - d, field).matrix);
}

Matrix build_dual_matrix(int k, int d, const FieldSpec& field) {
    check_problem_size(k, d);
    return row_concat(Matrix::identity(field, d), transpose(build_core(d, k - d, field).matrix));
}

Matrix permute_matrix(const Matrix& l, int m) {
    const int k = l.rows();
    if (k < 1 || m < 1 || std::gcd(m, k) != 1) {
        throw invalid_parameters("permutation multiplier must satisfy gcd(m, K) = 1");
    }
    Matrix out(l.field(), k, l.cols());
    for (int i = 0; i < k; ++i) {
        // 1-based pi(k) = m*k mod K with representatives 1..K.
        const int target = static_cast<int>((static_cast<long long>(m) * (i + 1) - 1) % k);
        for (int j = 0; j < l.cols(); ++j) out.set(target, j, l.at(i, j));
    }
    return out;
}

} // namespace icode
