#pragma once

#include <cstdint>
#include <vector>

#include "icode/matrix.hpp"
#include "icode/problem.hpp"

namespace icode {

struct WindowFailure {
    std::uint64_t prime = 0;
    int start = 0; // 1-based first row of the failing cyclic window

    bool operator==(const WindowFailure&) const = default;
};

/// Result of sweeping every cyclic window of n adjacent rows over a set of
/// prime fields. Empty failures means every window had full rank everywhere.
struct WindowReport {
    int rows = 0;
    int window = 0;
    std::vector<std::uint64_t> primes;
    std::vector<WindowFailure> failures;

    bool all_full_rank() const { return failures.empty(); }
};

/// Rank-checks the n cyclically adjacent rows starting at every row of l,
/// over every listed prime (entries reduced mod p). Failures are reported
/// in (prime, start) order.
WindowReport check_adjacent_windows(const Matrix& l, int n,
                                    const std::vector<std::uint64_t>& primes);

/// Per-receiver decodability of l for spec over the given field: receiver k
/// can decode iff its row leaves the span of the interference rows, i.e.
/// rank(rows I_k + {k}) > rank(rows I_k).
std::vector<bool> check_decodability(const Matrix& l, const ProblemSpec& spec,
                                     const FieldSpec& field);

/// True when m is K x K, has nonzero diagonal, and every off-diagonal
/// nonzero entry (i, j) has j in receiver i's antidote set.
bool fits_side_information(const Matrix& m, const ProblemSpec& spec);

struct MinrankResult {
    ProblemSpec spec;
    FieldSpec field;
    int minrank = 0;
    Matrix witness;
};

/// Exhaustive minimum rank over all matrices fitting the side-information
/// pattern: the optimal scalar linear code length for the instance. The
/// search enumerates the K*D free entries lexicographically with diagonals
/// fixed to 1 (row scaling preserves rank, so this loses nothing) and stops
/// early only when a rank-1 witness appears. Throws budget_exceeded when
/// p^(K*D) > work_limit; never returns a partial answer.
MinrankResult minrank_oracle(const ProblemSpec& spec, const FieldSpec& field,
                             std::uint64_t work_limit = 1ull << 22);

} // namespace icode
