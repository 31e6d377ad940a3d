#include "icode/field.hpp"

#include <string>

namespace icode {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

FieldSpec::FieldSpec(std::uint64_t p) : p_(p) {
    if (p > (1ull << 31)) {
        throw invalid_parameters("field modulus too large: " + std::to_string(p) +
                                 " exceeds 2^31");
    }
    if (!is_prime(p)) {
        throw invalid_parameters("field modulus must be prime, got " + std::to_string(p));
    }
}

std::uint64_t FieldSpec::inv(std::uint64_t a) const {
    if (a == 0) throw invalid_parameters("inverse of zero");
    // Extended Euclid on (a, p).
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    return reduce(t);
}

} // namespace icode
