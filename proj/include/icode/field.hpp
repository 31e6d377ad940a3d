#pragma once

#include <cstdint>

#include "icode/errors.hpp"

namespace icode {

bool is_prime(std::uint64_t n);

/// Arithmetic in GF(p) for a prime modulus p <= 2^31. Values are canonical
/// representatives in [0, p). Products fit in 64 bits because p < 2^31.
/// Prime fields only: all matrices this library constructs are 0/1, and the
/// rank of a 0/1 matrix over any field depends only on the characteristic.
class FieldSpec {
public:
    explicit FieldSpec(std::uint64_t p);

    std::uint64_t modulus() const { return p_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p_; }

    /// Multiplicative inverse of a nonzero element.
    std::uint64_t inv(std::uint64_t a) const;

    /// Canonical representative of an arbitrary signed value.
    std::uint64_t reduce(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        if (r < 0) r += static_cast<std::int64_t>(p_);
        return static_cast<std::uint64_t>(r);
    }

    bool operator==(const FieldSpec&) const = default;

private:
    std::uint64_t p_;
};

} // namespace icode
