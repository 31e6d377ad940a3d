#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "icode/errors.hpp"

namespace icode {

// Side-information patterns. All index arithmetic is cyclic with
// representatives 1..K, matching the usual subscript convention.

/// Receiver k knows the D messages immediately after its own.
struct Neighboring {
    bool operator==(const Neighboring&) const = default;
};

/// Receiver k knows messages k+t+1 .. k+t+D; t in [0, K-D-1].
struct UniformShift {
    int t = 0;

    bool operator==(const UniformShift&) const = default;
};

/// Per-receiver offsets t_k, each in [0, K-D-1].
struct PerReceiverShifts {
    std::vector<int> shifts; // shifts[k-1] is receiver k's offset

    bool operator==(const PerReceiverShifts&) const = default;
};

/// Relabeling by pi(k) = m*k mod K with gcd(m, K) = 1: receiver pi(k) knows
/// {pi(k+1), ..., pi(k+D)}.
struct Permuted {
    int multiplier = 1;

    bool operator==(const Permuted&) const = default;
};

using AntidotePattern = std::variant<Neighboring, UniformShift, PerReceiverShifts, Permuted>;

/// A problem instance: K messages/receivers, D antidotes per receiver, and
/// the pattern placing them. Validated on construction.
class ProblemSpec {
public:
    ProblemSpec(int k, int d, AntidotePattern pattern = Neighboring{});

    int k() const { return k_; }
    int d() const { return d_; }
    const AntidotePattern& pattern() const { return pattern_; }

    bool operator==(const ProblemSpec&) const = default;

private:
    int k_;
    int d_;
    AntidotePattern pattern_;
};

/// 1-based representative of m*k mod K in 1..K.
int permuted_index(int m, int k_total, int k);
/// Multiplier m' with permuted_index(m', K, permuted_index(m, K, k)) == k.
int inverse_multiplier(int m, int k_total);

/// The D message indices receiver rcv already knows, ascending.
std::vector<int> antidote_set(const ProblemSpec& spec, int rcv);

/// The K-D-1 message indices receiver rcv neither wants nor knows, ascending.
std::vector<int> interference_set(const ProblemSpec& spec, int rcv);

/// Exact rational in lowest terms with positive denominator.
struct Rational {
    long long num = 0;
    long long den = 1;

    static Rational of(long long num, long long den);
    Rational reciprocal() const;
    std::string to_string() const;

    bool operator==(const Rational&) const = default;
};

/// Per-message capacity with U antidotes before and D after the wanted
/// message: 1 when U+D = K-1, else (U+1)/(K-(U+D)+2U).
Rational capacity_general(int k, int u, int d);

/// One-sided specialization: 1 when D = K-1, else 1/(K-D).
Rational capacity_one_sided(int k, int d);

} // namespace icode
