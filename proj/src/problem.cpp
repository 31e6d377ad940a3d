#include "icode/problem.hpp"

#include <algorithm>
#include <numeric>

namespace icode {

namespace {

int wrap_1k(long long v, int k) {
    long long r = v % k;
    if (r <= 0) r += k;
    return static_cast<int>(r);
}

} // namespace

ProblemSpec::ProblemSpec(int k, int d, AntidotePattern pattern)
    : k_(k), d_(d), pattern_(std::move(pattern)) {
    if (k < 2 || d < 1 || d > k - 1) {
        throw invalid_parameters("need 1 <= D <= K-1, got K=" + std::to_string(k) +
                                 " D=" + std::to_string(d));
    }
    const int max_shift = k - d - 1;
    if (const auto* s = std::get_if<UniformShift>(&pattern_)) {
        if (s->t < 0 || s->t > max_shift) {
            throw invalid_parameters("shift t must lie in [0, K-D-1]");
        }
    } else if (const auto* ps = std::get_if<PerReceiverShifts>(&pattern_)) {
        if (static_cast<int>(ps->shifts.size()) != k) {
            throw invalid_parameters("per-receiver shifts must list exactly K offsets");
        }
        for (int t : ps->shifts) {
            if (t < 0 || t > max_shift) {
                throw invalid_parameters("shift t_k must lie in [0, K-D-1]");
            }
        }
    } else if (const auto* pm = std::get_if<Permuted>(&pattern_)) {
        if (pm->multiplier < 1 || std::gcd(pm->multiplier, k) != 1) {
            throw invalid_parameters("permutation multiplier must satisfy gcd(m, K) = 1");
        }
    }
}

int permuted_index(int m, int k_total, int k) {
    return wrap_1k(static_cast<long long>(m) * k, k_total);
}

int inverse_multiplier(int m, int k_total) {
    for (int inv = 1; inv <= k_total; ++inv) {
        if (static_cast<long long>(m) * inv % k_total == 1 % k_total) return inv;
    }
    throw invalid_parameters("multiplier has no inverse mod K");
}

std::vector<int> antidote_set(const ProblemSpec& spec, int rcv) {
    const int k = spec.k();
    if (rcv < 1 || rcv > k) throw invalid_index("receiver index out of range");
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(spec.d()));
    std::visit(
        [&](const auto& pat) {
            using T = std::decay_t<decltype(pat)>;
            if constexpr (std::is_same_v<T, Permuted>) {
                // Antidotes of receiver pi(j) are {pi(j+1), ..., pi(j+D)}.
                const int j = permuted_index(inverse_multiplier(pat.multiplier, k), k, rcv);
                for (int i = 1; i <= spec.d(); ++i) {
                    out.push_back(permuted_index(pat.multiplier, k, j + i));
                }
            } else {
                int t = 0;
                if constexpr (std::is_same_v<T, UniformShift>) t = pat.t;
                if constexpr (std::is_same_v<T, PerReceiverShifts>) {
                    t = pat.shifts[static_cast<std::size_t>(rcv - 1)];
                }
                for (int i = 1; i <= spec.d(); ++i) out.push_back(wrap_1k(rcv + t + i, k));
            }
        },
        spec.pattern());
    std::ranges::sort(out);
    return out;
}

std::vector<int> interference_set(const ProblemSpec& spec, int rcv) {
    const std::vector<int> known = antidote_set(spec, rcv);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(spec.k() - spec.d() - 1));
    for (int i = 1; i <= spec.k(); ++i) {
        if (i != rcv && !std::ranges::binary_search(known, i)) out.push_back(i);
    }
    return out;
}

Rational Rational::of(long long num, long long den) {
    if (den == 0) throw invalid_parameters("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational{num, den};
}

Rational Rational::reciprocal() const {
    if (num == 0) throw invalid_parameters("reciprocal of zero");
    return Rational::of(den, num);
}

std::string Rational::to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Rational capacity_general(int k, int u, int d) {
    if (k < 1 || u < 0 || d < 0 || u > d || u + d > k - 1) {
        throw invalid_parameters("capacity needs 0 <= U <= D and U+D <= K-1");
    }
    const int a = u + d;
    if (a == k - 1) return Rational::of(1, 1);
    return Rational::of(u + 1, k - a + 2 * u);
}

Rational capacity_one_sided(int k, int d) {
    if (k < 2 || d < 1 || d > k - 1) {
        throw invalid_parameters("capacity needs 1 <= D <= K-1");
    }
    if (d == k - 1) return Rational::of(1, 1);
    return Rational::of(1, k - d);
}

} // namespace icode
