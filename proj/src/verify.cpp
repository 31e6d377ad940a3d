#include "icode/verify.hpp"

#include <algorithm>
#include <string>

namespace icode {

WindowReport check_adjacent_windows(const Matrix& l, int n,
                                    const std::vector<std::uint64_t>& primes) {
    if (n < 1 || n > l.rows()) {
        throw invalid_parameters("window size must lie in [1, rows]");
    }
    WindowReport report{l.rows(), n, primes, {}};
    for (std::uint64_t p : primes) {
        const Matrix lp = reduce_mod(l, FieldSpec(p));
        for (int start = 0; start < l.rows(); ++start) {
            if (rank(cyclic_row_window(lp, start, n)) != n) {
                report.failures.push_back(WindowFailure{p, start + 1});
            }
        }
    }
    return report;
}

std::vector<bool> check_decodability(const Matrix& l, const ProblemSpec& spec,
                                     const FieldSpec& field) {
    if (l.rows() != spec.k()) {
        throw invalid_dimension("matrix must have one row per message");
    }
    const Matrix lp = reduce_mod(l, field);
    std::vector<bool> ok(static_cast<std::size_t>(spec.k()), false);
    for (int rcv = 1; rcv <= spec.k(); ++rcv) {
        std::vector<int> rows;
        for (int i : interference_set(spec, rcv)) rows.push_back(i - 1);
        const int interference_rank = rank(select_rows(lp, rows));
        rows.push_back(rcv - 1);
        ok[static_cast<std::size_t>(rcv - 1)] =
            rank(select_rows(lp, rows)) > interference_rank;
    }
    return ok;
}

bool fits_side_information(const Matrix& m, const ProblemSpec& spec) {
    if (m.rows() != spec.k() || m.cols() != spec.k()) return false;
    for (int i = 1; i <= spec.k(); ++i) {
        if (m.at(i - 1, i - 1) == 0) return false;
        const std::vector<int> known = antidote_set(spec, i);
        for (int j = 1; j <= spec.k(); ++j) {
            if (j == i) continue;
            if (m.at(i - 1, j - 1) != 0 && !std::ranges::binary_search(known, j)) {
                return false;
            }
        }
    }
    return true;
}

namespace {

// Rank of a K x K scratch buffer, destructive. Same pivoting rule as
// Matrix rank but without per-candidate allocation; the oracle calls this
// millions of times.
int scratch_rank(std::vector<std::uint64_t>& a, int n, const FieldSpec& f) {
    int r = 0;
    for (int c = 0; c < n && r < n; ++c) {
        int piv = -1;
        for (int i = r; i < n; ++i) {
            if (a[static_cast<std::size_t>(i * n + c)] != 0) { piv = i; break; }
        }
        if (piv < 0) continue;
        if (piv != r) {
            for (int j = c; j < n; ++j) {
                std::swap(a[static_cast<std::size_t>(piv * n + j)],
                          a[static_cast<std::size_t>(r * n + j)]);
            }
        }
        const std::uint64_t inv = f.inv(a[static_cast<std::size_t>(r * n + c)]);
        for (int j = c; j < n; ++j) {
            auto& e = a[static_cast<std::size_t>(r * n + j)];
            e = f.mul(e, inv);
        }
        for (int i = r + 1; i < n; ++i) {
            const std::uint64_t t = a[static_cast<std::size_t>(i * n + c)];
            if (t == 0) continue;
            for (int j = c; j < n; ++j) {
                auto& e = a[static_cast<std::size_t>(i * n + j)];
                e = f.sub(e, f.mul(t, a[static_cast<std::size_t>(r * n + j)]));
            }
        }
        ++r;
    }
    return r;
}

} // namespace

MinrankResult minrank_oracle(const ProblemSpec& spec, const FieldSpec& field,
                             std::uint64_t work_limit) {
    const int k = spec.k();
    const std::uint64_t p = field.modulus();

    // Free entries: (receiver, antidote) positions, row-major order.
    std::vector<std::pair<int, int>> free_pos; // 0-based
    for (int i = 1; i <= k; ++i) {
        for (int j : antidote_set(spec, i)) free_pos.emplace_back(i - 1, j - 1);
    }

    std::uint64_t space = 1;
    for (std::size_t i = 0; i < free_pos.size(); ++i) {
        if (space > work_limit / p) {
            throw budget_exceeded("minrank search space p^" +
                                  std::to_string(free_pos.size()) + " exceeds work limit " +
                                  std::to_string(work_limit));
        }
        space *= p;
    }
    if (space > work_limit) {
        throw budget_exceeded("minrank search space exceeds work limit");
    }

    std::vector<std::uint64_t> digits(free_pos.size(), 0);
    std::vector<std::uint64_t> candidate(static_cast<std::size_t>(k) *
                                         static_cast<std::size_t>(k));
    std::vector<std::uint64_t> scratch(candidate.size());

    int best = k + 1;
    std::vector<std::uint64_t> best_entries;
    while (true) {
        std::ranges::fill(candidate, 0);
        for (int i = 0; i < k; ++i) candidate[static_cast<std::size_t>(i * k + i)] = 1;
        for (std::size_t i = 0; i < free_pos.size(); ++i) {
            const auto [r, c] = free_pos[i];
            candidate[static_cast<std::size_t>(r * k + c)] = digits[i];
        }
        scratch = candidate;
        const int rk = scratch_rank(scratch, k, field);
        if (rk < best) {
            best = rk;
            best_entries = candidate;
            if (best == 1) break; // nothing can beat the running lower bound
        }
        // Next assignment in lexicographic order (last digit fastest).
        std::size_t pos = digits.size();
        while (pos > 0 && digits[pos - 1] == p - 1) digits[--pos] = 0;
        if (pos == 0) break;
        ++digits[pos - 1];
    }

    MinrankResult result{spec, field, best, Matrix(field, k, k, std::move(best_entries))};
    if (!fits_side_information(result.witness, spec) || rank(result.witness) != best) {
        throw std::logic_error("minrank witness failed its post-hoc validation");
    }
    return result;
}

} // namespace icode
