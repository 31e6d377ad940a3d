#pragma once

#include <vector>

#include "icode/matrix.hpp"

namespace icode {

/// Euclidean remainder chain for a message count K and antidote count D:
/// lambda_1 = (K-D) mod D, lambda_2 = D mod lambda_1, and
/// lambda_i = lambda_{i-2} mod lambda_{i-1}, stopped at the first term that
/// divides its predecessor. Empty exactly when D divides K-D; the last term
/// of a nonempty chain is gcd(K, D).
struct LambdaChain {
    int k = 0;
    int d = 0;
    std::vector<int> lambdas;

    int length() const { return static_cast<int>(lambdas.size()); }
};

LambdaChain lambda_chain(int k, int d);

/// mu x lambda stack of mu/lambda identity blocks I_lambda (requires
/// lambda | mu). Equals I_lambda when mu == lambda. Any lambda cyclically
/// adjacent rows are linearly independent over every field.
Matrix rectangular_circulant(int mu, int lam, const FieldSpec& field);

/// A block produced by the construction recursion. For r <= c every r
/// cyclically adjacent columns are independent over every prime field and
/// the leading r columns are I_r; for r > c the transposed statement holds.
struct CoreBlock {
    int r = 0;
    int c = 0;
    Matrix matrix;
};

/// G(r, c): if min(r,c) divides max(r,c) this is the rectangular circulant
/// (or its transpose); otherwise for r <= c it is floor(c/r) copies of I_r
/// followed by G(r, c mod r) on the right, and for r > c the transposed
/// stacking. Unrolls the same block sequence as the remainder chain.
CoreBlock build_core(int r, int c, const FieldSpec& field);

/// Every intermediate block of the recursion, innermost first. The last
/// element is build_core(r, c). Used to check the adjacency invariant at
/// each level.
std::vector<CoreBlock> build_core_trace(int r, int c, const FieldSpec& field);

/// The K x (K-D) encoding matrix [I_{K-D}; G(D, K-D)] for the cyclic
/// problem with K messages and D consecutive antidotes per receiver. Every
/// K-D cyclically adjacent rows are full rank over every prime field, which
/// makes the code capacity-achieving at length K-D.
Matrix build_encoding_matrix(int k, int d, const FieldSpec& field);

/// The K x D matrix [I_D; G(D, K-D)^T] serving the complementary problem
/// whose receivers know the K-D messages after their own. Every D cyclically
/// adjacent rows are full rank over every prime field.
Matrix build_dual_matrix(int k, int d, const FieldSpec& field);

/// Row relabeling by pi(k) = m*k mod K (representatives 1..K): row pi(k) of
/// the result is row k of l. Requires gcd(m, K) = 1.
Matrix permute_matrix(const Matrix& l, int m);

} // namespace icode
