// Acceptance suite: each criterion prints exactly one PASS/FAIL line with
// its runtime. Run with no arguments for all criteria or with a criterion
// number (1..9) for a single one. Exit code 0 iff everything passed.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "../golden_fixtures.hpp"
#include "icode/codec.hpp"
#include "icode/construction.hpp"
#include "icode/verify.hpp"

using namespace icode;

namespace {

struct Criterion {
    int number;
    std::string title;
    std::function<bool(std::string&)> check; // fills a failure note
    double budget_seconds;                   // hard runtime bound, 0 = none
};

// 1. The five worked-example encoding matrices, entry for entry.
bool check_reference_matrices(std::string& note) {
    const FieldSpec f(2);
    const struct {
        int k, d;
        Matrix expected;
    } cases[] = {
        {21, 4, fixtures::l21x17(f)},  {21, 17, fixtures::l21x4(f)},
        {44, 17, fixtures::l44x27(f)}, {44, 27, fixtures::l44x17(f)},
        {7, 3, fixtures::l7x4(f)},
    };
    for (const auto& c : cases) {
        if (build_encoding_matrix(c.k, c.d, f) != c.expected) {
            note = "mismatch at K=" + std::to_string(c.k) + " D=" + std::to_string(c.d);
            return false;
        }
    }
    return true;
}

// 2. Remainder-chain fixtures.
bool check_chain_fixtures(std::string& note) {
    const struct {
        int k, d;
        std::vector<int> expected;
    } cases[] = {
        {21, 4, {1}},
        {21, 17, {4, 1}},
        {44, 17, {10, 7, 3, 1}},
        {44, 27, {17, 10, 7, 3, 1}},
    };
    for (const auto& c : cases) {
        if (lambda_chain(c.k, c.d).lambdas != c.expected) {
            note = "chain mismatch at K=" + std::to_string(c.k) +
                   " D=" + std::to_string(c.d);
            return false;
        }
    }
    return true;
}

// 3. Full-rank cyclic windows for K in [3,40], D in [1,K-2], six primes.
bool check_window_sweep(std::string& note) {
    const std::vector<std::uint64_t> primes = {2, 3, 5, 7, 11, 13};
    long failures = 0;
    std::string first;
    for (int k = 3; k <= 40; ++k) {
        for (int d = 1; d <= k - 2; ++d) {
            const Matrix l = build_encoding_matrix(k, d, FieldSpec(2));
            const WindowReport report = check_adjacent_windows(l, k - d, primes);
            if (!report.all_full_rank()) {
                failures += static_cast<long>(report.failures.size());
                if (first.empty()) {
                    first = "K=" + std::to_string(k) + " D=" + std::to_string(d) + " p=" +
                            std::to_string(report.failures[0].prime) + " start=" +
                            std::to_string(report.failures[0].start);
                }
            }
        }
    }
    if (failures > 0) {
        note = std::to_string(failures) + " window failures, first at " + first;
        return false;
    }
    return true;
}

// 4. Exhaustive minrank equals K-D (the reciprocal of the capacity).
bool check_minrank(std::string& note) {
    const std::pair<int, int> cases[] = {{4, 1}, {4, 2}, {5, 1}, {5, 2},
                                         {5, 3}, {6, 2}, {7, 3}};
    for (const auto& [k, d] : cases) {
        const MinrankResult res = minrank_oracle(ProblemSpec(k, d), FieldSpec(2));
        const Rational optimal_length = capacity_one_sided(k, d).reciprocal();
        if (optimal_length.den != 1 || res.minrank != optimal_length.num ||
            res.minrank != k - d) {
            note = "K=" + std::to_string(k) + " D=" + std::to_string(d) + " gave minrank " +
                   std::to_string(res.minrank);
            return false;
        }
        if (!fits_side_information(res.witness, res.spec) ||
            rank(res.witness) != res.minrank) {
            note = "invalid witness at K=" + std::to_string(k) + " D=" + std::to_string(d);
            return false;
        }
    }
    return true;
}

// 5. Decoding round trip, 100 seeded vectors per instance and field.
bool check_round_trip(std::string& note) {
    for (int k = 2; k <= 30; ++k) {
        for (int d = 1; d <= k - 1; ++d) {
            for (std::uint64_t p : {2ull, 5ull}) {
                const FieldSpec f(p);
                const IndexCode code(ProblemSpec(k, d), build_encoding_matrix(k, d, f));
                for (std::uint64_t seed = 1; seed <= 100; ++seed) {
                    if (!simulate_round(code, seed).all_decoded()) {
                        note = "failure at K=" + std::to_string(k) + " D=" +
                               std::to_string(d) + " p=" + std::to_string(p) +
                               " seed=" + std::to_string(seed);
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

// 6. The published per-receiver symbol subsets each suffice to decode.
bool check_decode_tables(std::string& note) {
    const FieldSpec f(2);
    const struct {
        int k, d;
        const std::vector<std::vector<int>>& table;
    } cases[] = {
        {21, 4, fixtures::decode_table_21_4()},
        {21, 17, fixtures::decode_table_21_17()},
    };
    for (const auto& c : cases) {
        const IndexCode code(ProblemSpec(c.k, c.d), build_encoding_matrix(c.k, c.d, f));
        for (int rcv = 1; rcv <= c.k; ++rcv) {
            if (!symbols_suffice(code, rcv, c.table[static_cast<std::size_t>(rcv - 1)])) {
                note = "receiver " + std::to_string(rcv) + " of the K=" +
                       std::to_string(c.k) + " D=" + std::to_string(c.d) +
                       " table cannot decode from its listed symbols";
                return false;
            }
        }
    }
    return true;
}

// 7. Dual construction: D-window sweep plus full decoding round trip for
// the complementary antidote pattern.
bool check_dual(std::string& note) {
    const std::vector<std::uint64_t> primes = {2, 3, 5, 7, 11, 13};
    for (int k = 2; k <= 30; ++k) {
        for (int d = 1; d <= k - 1; ++d) {
            const Matrix dual = build_dual_matrix(k, d, FieldSpec(2));
            if (!check_adjacent_windows(dual, d, primes).all_full_rank()) {
                note = "window failure at K=" + std::to_string(k) + " D=" + std::to_string(d);
                return false;
            }
            for (std::uint64_t p : {2ull, 5ull}) {
                const FieldSpec f(p);
                const IndexCode code(ProblemSpec(k, k - d),
                                     build_dual_matrix(k, d, f));
                for (std::uint64_t seed = 1; seed <= 10; ++seed) {
                    if (!simulate_round(code, seed).all_decoded()) {
                        note = "decode failure at K=" + std::to_string(k) + " D=" +
                               std::to_string(d) + " p=" + std::to_string(p);
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

// 8. Shifted antidotes decode with the unchanged matrix; relabeled problems
// decode with the relabeled matrix.
bool check_variants(std::string& note) {
    const std::uint64_t seeds[] = {1, 2, 3};
    for (int k = 2; k <= 20; ++k) {
        for (int d = 1; d <= k - 1; ++d) {
            for (std::uint64_t p : {2ull, 5ull}) {
                const FieldSpec f(p);
                const Matrix l = build_encoding_matrix(k, d, f);
                for (int t = 0; t <= k - d - 1; ++t) {
                    const IndexCode code(ProblemSpec(k, d, UniformShift{t}), l);
                    for (std::uint64_t seed : seeds) {
                        if (!simulate_round(code, seed).all_decoded()) {
                            note = "shift failure at K=" + std::to_string(k) + " D=" +
                                   std::to_string(d) + " t=" + std::to_string(t) +
                                   " p=" + std::to_string(p);
                            return false;
                        }
                    }
                }
                for (int m = 1; m <= k; ++m) {
                    if (std::gcd(m, k) != 1) continue;
                    const IndexCode code(ProblemSpec(k, d, Permuted{m}),
                                         permute_matrix(l, m));
                    for (std::uint64_t seed : seeds) {
                        if (!simulate_round(code, seed).all_decoded()) {
                            note = "relabel failure at K=" + std::to_string(k) + " D=" +
                                   std::to_string(d) + " m=" + std::to_string(m) +
                                   " p=" + std::to_string(p);
                            return false;
                        }
                    }
                }
            }
        }
    }
    return true;
}

// 9. Capacity formulas agree at U=0 and invert to the constructed length.
bool check_capacity(std::string& note) {
    const FieldSpec f(2);
    for (int k = 2; k <= 100; ++k) {
        for (int d = 1; d <= k - 1; ++d) {
            const Rational one_sided = capacity_one_sided(k, d);
            if (one_sided != capacity_general(k, 0, d)) {
                note = "formula mismatch at K=" + std::to_string(k) +
                       " D=" + std::to_string(d);
                return false;
            }
            const Rational length = one_sided.reciprocal();
            const Matrix l = build_encoding_matrix(k, d, f);
            if (length.den != 1 || length.num != l.cols()) {
                note = "length mismatch at K=" + std::to_string(k) +
                       " D=" + std::to_string(d);
                return false;
            }
        }
    }
    return true;
}

std::vector<Criterion> criteria() {
    return {
        {1, "worked-example matrices reproduced bit-exactly", check_reference_matrices, 1.0},
        {2, "remainder-chain fixtures", check_chain_fixtures, 0.0},
        {3, "full-rank cyclic windows, K<=40, primes {2,3,5,7,11,13}", check_window_sweep,
         300.0},
        {4, "exhaustive minrank equals K-D on seven instances", check_minrank, 120.0},
        {5, "decoding round trip, K<=30, GF(2)/GF(5), 100 seeds", check_round_trip, 0.0},
        {6, "published decoding tables certified symbol-by-symbol", check_decode_tables, 0.0},
        {7, "dual codes: window sweep and round trip, K<=30", check_dual, 0.0},
        {8, "shifted and relabeled variants decode, K<=20", check_variants, 0.0},
        {9, "capacity formulas and code lengths agree, K<=100", check_capacity, 0.0},
    };
}

bool run_criterion(const Criterion& c) {
    const auto start = std::chrono::steady_clock::now();
    std::string note;
    bool ok = false;
    try {
        ok = c.check(note);
    } catch (const std::exception& e) {
        ok = false;
        note = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && c.budget_seconds > 0 && seconds > c.budget_seconds) {
        ok = false;
        note = "exceeded runtime budget of " + std::to_string(c.budget_seconds) + " s";
    }
    std::ostringstream line;
    line << (ok ? "[PASS]" : "[FAIL]") << " criterion " << c.number << ": " << c.title;
    if (!ok && !note.empty()) line << " — " << note;
    char timing[32];
    std::snprintf(timing, sizeof(timing), " (%.2f s)", seconds);
    line << timing;
    std::cout << line.str() << std::endl;
    return ok;
}

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc > 1) {
        only = std::atoi(argv[1]);
        if (only < 1 || only > 9) {
            std::cerr << "usage: acceptance_tests [1-9]\n";
            return 2;
        }
    }
    bool all_ok = true;
    for (const Criterion& c : criteria()) {
        if (only != 0 && c.number != only) continue;
        all_ok = run_criterion(c) && all_ok;
    }
    return all_ok ? 0 : 1;
}
