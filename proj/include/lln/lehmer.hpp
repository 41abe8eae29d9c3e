#pragma once

// Lehmer pairs attached to the factorization (b^l + x*sqrt(-p))/2 =
// ((u + v*sqrt(-p))/2)^n, the Lehmer numbers coming from the real-part sum,
// equivalence of signature pairs, and a budgeted primitive-divisor test.
//
// Conventions: alpha = (v*sqrt(p) + u*i)/2, so (alpha + conj(alpha))^2 = p*v^2
// and alpha*conj(alpha) = (u^2 + p*v^2)/4.  For odd n the Lehmer number
// u~_n = (alpha^n - conj(alpha)^n)/(alpha - conj(alpha)) equals
// +-S/2^(n-1) where S is the real-part sum below.

#include "lln/arith.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lln {

// Thrown when a quantity that the theory predicts to be an integer fails the
// exact divisibility check (happens for p not congruent to 3 mod 4).
struct NotIntegralError : std::domain_error {
    using std::domain_error::domain_error;
};

struct LehmerParams {
    Int u, v, p;

    LehmerParams(Int u_, Int v_, Int p_) : u(std::move(u_)), v(std::move(v_)), p(std::move(p_)) {
        if (is_even(u) || is_even(v))
            throw std::invalid_argument("LehmerParams: u and v must be odd");
        if (gcd(u, v) != 1) throw std::invalid_argument("LehmerParams: u, v must be coprime");
        if (p <= 0 || p % 4 != 3 || !is_prime(p))
            throw std::invalid_argument("LehmerParams: p must be a prime congruent to 3 mod 4");
    }
};

// (A + B*sqrt(-p))/2 with A = B (mod 2).
struct HalfElem {
    Int A, B, p;
};

// S = sum_{r=0}^{(n-1)/2} C(n, 2r) * u^(n-2r-1) * (-p)^r * v^(2r); the
// real-part identity reads 2^(n-1) * b^l = u * S.
inline Int real_part_sum(const Int& u, const Int& v, const Int& p, unsigned n) {
    if (n % 2 == 0) throw std::invalid_argument("real_part_sum: n must be odd");
    Int s = 0;
    for (unsigned r = 0; 2 * r <= n - 1; ++r) {
        Int term = binomial(Int(n), Int(2 * r)) * ipow(u, n - 2 * r - 1) * ipow(-p, r) * ipow(v, 2 * r);
        s += term;
    }
    return s;
}

// ((u + v*sqrt(-p))/2)^n as a HalfElem, via exact binary exponentiation on
// the integer numerator pair followed by one divisibility check against
// 2^(n-1).  Integrality is guaranteed when u = v (mod 2) and p = 3 (mod 4)
// (the half-ring is closed); other p may fail, reported as NotIntegralError.
inline HalfElem half_power(const Int& u, const Int& v, const Int& p, unsigned n) {
    if (n == 0 || n % 2 == 0) throw std::invalid_argument("half_power: n must be odd and positive");
    if (is_odd(u - v)) throw std::invalid_argument("half_power: u and v must have equal parity");
    // numerator pair: (u + v*sqrt(-p))^n = X + Y*sqrt(-p)
    Int X = 1, Y = 0;       // accumulator
    Int bx = u, by = v;     // square-and-multiply base
    unsigned e = n;
    while (e > 0) {
        if (e & 1) {
            Int nx = X * bx - p * Y * by;
            Int ny = X * by + Y * bx;
            X = std::move(nx);
            Y = std::move(ny);
        }
        e >>= 1;
        if (e > 0) {
            Int sx = bx * bx - p * by * by;
            Int sy = 2 * bx * by;
            bx = std::move(sx);
            by = std::move(sy);
        }
    }
    Int scale = ipow(Int(2), n - 1);
    if (X % scale != 0 || Y % scale != 0)
        throw NotIntegralError("half_power: numerators not divisible by 2^(n-1)");
    return HalfElem{X / scale, Y / scale, p};
}

// |u~_n| = |S| / 2^(n-1), with the divisibility asserted exactly.
inline Int lehmer_number_abs(const LehmerParams& params, unsigned n) {
    if (n % 2 == 0) throw std::invalid_argument("lehmer_number_abs: n must be odd");
    Int s = real_part_sum(params.u, params.v, params.p, n);
    Int scale = ipow(Int(2), n - 1);
    if (s % scale != 0)
        throw NotIntegralError("lehmer_number_abs: real-part sum not divisible by 2^(n-1)");
    return abs(s / scale);
}

// Unordered pair {(alpha+beta)^2, (alpha-beta)^2}; for our pairs the two
// components are p*v^2 and -u^2 in either order.
struct Signature {
    Int lo, hi;  // stored sorted so the pair is unordered

    Signature(Int a, Int b) {
        if (a * b == 0) throw std::invalid_argument("Signature: components must be nonzero");
        if (a > b) std::swap(a, b);
        lo = std::move(a);
        hi = std::move(b);
    }

    friend bool operator==(const Signature& x, const Signature& y) {
        return x.lo == y.lo && x.hi == y.hi;
    }
};

// Lehmer-pair equivalence (alpha1/alpha2 = beta1/beta2 in {+-1, +-i})
// descends to signatures as equality up to simultaneous negation.
inline bool is_equivalent(const Signature& s1, const Signature& s2) {
    return s1 == s2 || Signature(-s1.lo, -s1.hi) == s2;
}

struct DefectiveClass {
    unsigned n;
    Signature signature;
    std::string description;
};

// The finitely many defectiveness classes the analysis names for n = 7 and
// n = 13; the n = 3 and n = 5 classes are parametrized families handled by
// the solver's subcase ladders.
inline std::vector<DefectiveClass> named_defective_pairs(unsigned n) {
    if (n == 7) {
        return {
            {7, Signature(1, -7), "pair generated by (1 +- sqrt(-7))/2"},
            {7, Signature(1, -19), "pair generated by (1 +- sqrt(-19))/2"},
        };
    }
    if (n == 13) {
        return {{13, Signature(1, -7), "pair generated by (1 +- sqrt(-7))/2"}};
    }
    throw std::invalid_argument("named_defective_pairs: only n = 7 and n = 13 have named classes");
}

enum class PrimitiveDivisorStatus { Yes, No, Unknown };

struct PrimitiveDivisorResult {
    PrimitiveDivisorStatus status;
    std::optional<Int> witness;  // a primitive prime divisor when status == Yes
};

// A prime q is a primitive divisor of u~_n when q | u~_n, q does not divide
// p * u^2 * v^2, and q divides no earlier odd-index term u~_m (odd m < n).
// Factoring is budgeted: an incomplete factorization with no qualifying known
// prime yields Unknown rather than a claim.
inline PrimitiveDivisorResult has_primitive_divisor(const LehmerParams& params, unsigned n,
                                                    std::uint64_t budget = 2'000'000) {
    if (n % 2 == 0 || n < 3) throw std::invalid_argument("has_primitive_divisor: n must be odd and >= 3");
    Int target = lehmer_number_abs(params, n);
    if (target == 1) return {PrimitiveDivisorStatus::No, std::nullopt};

    std::vector<Int> earlier;  // |u~_m| for odd m < n
    for (unsigned m = 1; m < n; m += 2) earlier.push_back(lehmer_number_abs(params, m));
    Int discr = params.p * params.u * params.u * params.v * params.v;

    Factorization fac = factor_bounded(target, budget);
    for (const auto& [q, mult] : fac.factors) {
        if (discr % q == 0) continue;
        bool divides_earlier = false;
        for (const Int& t : earlier) {
            if (t != 0 && t % q == 0) {
                divides_earlier = true;
                break;
            }
        }
        if (!divides_earlier) return {PrimitiveDivisorStatus::Yes, q};
    }
    if (!fac.complete) return {PrimitiveDivisorStatus::Unknown, std::nullopt};
    return {PrimitiveDivisorStatus::No, std::nullopt};
}

}  // namespace lln
