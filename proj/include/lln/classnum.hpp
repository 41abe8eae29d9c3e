#pragma once

// Class numbers h(-a) of imaginary quadratic fields Q(sqrt(-a)) for positive
// square-free a, computed by counting reduced primitive binary quadratic
// forms (A, B, C) of the field discriminant:
//
//   D = -a when a = 3 (mod 4), otherwise D = -4a,
//   B^2 - 4AC = D,  |B| <= A <= C,  gcd(A, B, C) = 1,
//   and B >= 0 whenever |B| = A or A = C.
//
// Two independent enumeration orders are provided; they must always agree.

#include "lln/arith.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace lln {

namespace detail {

inline void check_classnum_input(std::int64_t a) {
    if (a <= 0) throw std::invalid_argument("class_number: a must be positive");
    for (std::int64_t d = 2; d * d <= a; ++d)
        if (a % (d * d) == 0)
            throw std::invalid_argument("class_number: a must be square-free");
}

inline std::int64_t field_discriminant(std::int64_t a) {
    return (a % 4 == 3) ? -a : -4 * a;
}

inline std::int64_t gcd3(std::int64_t x, std::int64_t y, std::int64_t z) {
    return std::gcd(std::gcd(x, y), z);
}

}  // namespace detail

// Outer loop over A, inner over B.
inline std::int64_t class_number(std::int64_t a) {
    detail::check_classnum_input(a);
    const std::int64_t D = detail::field_discriminant(a);
    const std::int64_t absD = -D;
    std::int64_t count = 0;
    for (std::int64_t A = 1; 3 * A * A <= absD; ++A) {
        // B runs over -A..A with the parity of D
        std::int64_t B0 = -A;
        if (((B0 - D) & 1) != 0) ++B0;
        for (std::int64_t B = B0; B <= A; B += 2) {
            std::int64_t num = B * B - D;  // = B^2 + |D| > 0
            if (num % (4 * A) != 0) continue;
            std::int64_t C = num / (4 * A);
            if (C < A) continue;
            if (detail::gcd3(A, B < 0 ? -B : B, C) != 1) continue;
            if (B < 0 && (-B == A || A == C)) continue;
            ++count;
        }
    }
    return count;
}

// Outer loop over B >= 0, inner over divisors A; counts +-B together.
inline std::int64_t class_number_alt(std::int64_t a) {
    detail::check_classnum_input(a);
    const std::int64_t D = detail::field_discriminant(a);
    const std::int64_t absD = -D;
    std::int64_t count = 0;
    for (std::int64_t B = (D % 2 == 0) ? 0 : 1; 3 * B * B <= absD; B += 2) {
        std::int64_t num = (B * B + absD) / 4;  // parity of B matches D, so exact
        std::int64_t Amin = B > 0 ? B : 1;
        for (std::int64_t A = Amin; A * A <= num; ++A) {
            if (num % A != 0) continue;
            std::int64_t C = num / A;
            if (detail::gcd3(A, B, C) != 1) continue;
            count += (B == 0 || B == A || A == C) ? 1 : 2;
        }
    }
    return count;
}

// All square-free a <= bound with h(-a) == target, ascending.
inline std::vector<std::int64_t> tally_class_numbers(std::int64_t target,
                                                     std::int64_t bound) {
    if (target <= 0 || bound <= 0)
        throw std::invalid_argument("tally_class_numbers: positive arguments required");
    std::vector<std::int64_t> hits;
    for (std::int64_t a = 1; a <= bound; ++a) {
        bool squarefree = true;
        for (std::int64_t d = 2; d * d <= a && squarefree; ++d)
            if (a % (d * d) == 0) squarefree = false;
        if (!squarefree) continue;
        if (class_number(a) == target) hits.push_back(a);
    }
    return hits;
}

}  // namespace lln
