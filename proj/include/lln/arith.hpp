#pragma once

// Exact integer arithmetic shared by every other header: integer roots,
// perfect-square and prime-power recognition, bounded factorisation,
// binomial coefficients.  Everything is deterministic; the only probabilistic
// ingredient is Miller-Rabin above the proven deterministic range, and a
// false positive there could at worst mislabel a PrimePower flag -- it never
// feeds into an exact equation check.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lln {

using Int = boost::multiprecision::cpp_int;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::powm;

// pow with a plain unsigned exponent (boost's signature, re-exported so
// callers do not need to reach into boost directly).
inline Int ipow(const Int& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

// Parity helpers that are safe for negative values (bitwise ops on negative
// cpp_int are best avoided).
inline bool is_odd(const Int& n) { return n % 2 != 0; }
inline bool is_even(const Int& n) { return n % 2 == 0; }

// Floor of the square root.  Negative input is a caller bug.
inline Int isqrt(const Int& n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative input");
    return boost::multiprecision::sqrt(n);
}

// Non-negative square root when n is a perfect square, empty otherwise.
inline std::optional<Int> as_square(const Int& n) {
    if (n < 0) return std::nullopt;
    Int r = isqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

// Floor of the k-th root, n >= 0, k >= 1.
inline Int iroot(const Int& n, unsigned k) {
    if (n < 0) throw std::invalid_argument("iroot: negative input");
    if (k == 0) throw std::invalid_argument("iroot: zeroth root");
    if (k == 1 || n < 2) return n;
    unsigned bits = boost::multiprecision::msb(n) + 1;
    Int lo = Int(1) << ((bits - 1) / k);  // 2^floor((bits-1)/k) <= root
    Int hi = lo * 2;                      // root < 2^(floor((bits-1)/k)+1)
    while (lo < hi) {                     // invariant: lo <= root < hi + 1
        Int mid = (lo + hi + 1) / 2;
        if (ipow(mid, k) <= n)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

namespace detail {

// One Miller-Rabin round; true means `a` proves n composite.
inline bool mr_witness(const Int& n, const Int& a, const Int& d, int s) {
    Int base = a % n;
    if (base == 0) return false;
    Int x = powm(base, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true;
}

}  // namespace detail

// Primality.  Below ~3.3e24 the thirteen fixed bases are a proven
// deterministic test (covers the full 64-bit range with a wide margin);
// beyond that, forty pseudo-random rounds from a fixed seed.
inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    static constexpr int small_primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23,
                                           29, 31, 37, 41, 43, 47, 53, 59, 61,
                                           67, 71, 73, 79, 83, 89, 97};
    for (int p : small_primes) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Int d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    static constexpr int det_bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    for (int a : det_bases)
        if (detail::mr_witness(n, Int(a), d, s)) return false;
    static const Int det_limit("3317044064679887385961981");
    if (n < det_limit) return true;
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    for (int round = 0; round < 40; ++round) {
        Int a = 2 + Int(rng()) % (n - 3);
        if (detail::mr_witness(n, a, d, s)) return false;
    }
    return true;
}

// n = sign * base^exponent with base an odd prime, exponent >= 1.
struct PrimePower {
    Int base;
    unsigned exponent = 0;
    int sign = 1;
};

// Three-state answer: engaged value, definite "no", or budget exhaustion.
// The root-extraction algorithm below never actually exhausts (it needs no
// factoring), but the state is part of the contract for callers.
struct MaybePrimePower {
    std::optional<PrimePower> value;
    bool unknown = false;
};

// Decide whether n = +-q^r for an odd prime q.  Strategy: strip n down to a
// non-perfect-power core m (so n = +-m^e with e maximal), then n is an odd
// prime power iff m is an odd prime.
inline MaybePrimePower odd_prime_power(const Int& n) {
    MaybePrimePower out;
    if (n == 0) return out;
    Int m = abs(n);
    if (m == 1 || (m & 1) == 0) return out;
    unsigned e_total = 1;
    bool reduced = true;
    while (reduced && m > 3) {
        reduced = false;
        unsigned bits = boost::multiprecision::msb(m) + 1;
        for (unsigned e = 2; e < bits; ++e) {
            Int r = iroot(m, e);
            if (ipow(r, e) == m) {
                m = r;
                e_total *= e;
                reduced = true;
                break;
            }
        }
    }
    if (!is_prime(m)) return out;
    out.value = PrimePower{m, e_total, n < 0 ? -1 : 1};
    return out;
}

// Factorisation of |n| as (prime, exponent) pairs in ascending prime order.
// `complete` is false when the effort budget ran out; the composite
// remainder is then left in `cofactor`.
struct Factorization {
    int sign = 1;
    std::vector<std::pair<Int, unsigned>> factors;
    Int cofactor = 1;
    bool complete = true;

    Int reassemble() const {
        Int m = cofactor;
        for (const auto& [p, e] : factors) m *= ipow(p, e);
        return sign * m;
    }
};

namespace detail {

// Brent's cycle variant of Pollard rho.  Returns a nontrivial factor of the
// odd composite n, or 0 once the shared iteration budget is exhausted.
inline Int pollard_brent(const Int& n, std::uint64_t& budget) {
    std::mt19937_64 rng(0xbf58476d1ce4e5b9ULL ^
                        static_cast<std::uint64_t>(n % 0x7fffffff));
    while (budget > 0) {
        Int y = Int(rng() % 0xffffffffULL) % n;
        Int c = 1 + Int(rng() % 0xffffULL);
        Int x = y, q = 1, g = 1, ys = y;
        std::uint64_t r = 1;
        const std::uint64_t batch = 128;
        while (g == 1 && budget > 0) {
            x = y;
            for (std::uint64_t i = 0; i < r && budget > 0; ++i) {
                y = (y * y + c) % n;
                --budget;
            }
            std::uint64_t k = 0;
            while (k < r && g == 1 && budget > 0) {
                ys = y;
                std::uint64_t lim = std::min(batch, r - k);
                for (std::uint64_t i = 0; i < lim && budget > 0; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                    --budget;
                }
                g = gcd(q, n);
                k += lim;
            }
            r *= 2;
        }
        if (g == n) {  // backtrack one step at a time
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                g = gcd(abs(x - ys), n);
            }
        }
        if (g > 1 && g < n) return g;
        // g == n: retry with fresh parameters (budget keeps draining)
    }
    return 0;
}

}  // namespace detail

inline Factorization factor_bounded(const Int& n, std::uint64_t budget = 2'000'000) {
    if (n == 0) throw std::invalid_argument("factor_bounded: zero input");
    Factorization out;
    out.sign = n < 0 ? -1 : 1;
    Int m = abs(n);
    std::vector<std::pair<Int, unsigned>> found;
    auto strip = [&](const Int& p) {
        unsigned e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e) found.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    for (Int d = 5; d < 100000 && d * d <= m; d += 6) {
        strip(d);
        strip(d + 2);
    }
    // The remainder has no prime factor below 1e5; split it recursively.
    std::vector<Int> pending;
    if (m > 1) pending.push_back(m);
    while (!pending.empty()) {
        Int t = pending.back();
        pending.pop_back();
        if (is_prime(t)) {
            unsigned e = 0;
            for (auto& [p, cnt] : found)
                if (p == t) {
                    ++cnt;
                    e = 1;
                    break;
                }
            if (!e) found.emplace_back(t, 1u);
            continue;
        }
        // perfect powers fall to root extraction before rho
        bool split = false;
        unsigned bits = boost::multiprecision::msb(t) + 1;
        for (unsigned e = 2; e < bits && !split; ++e) {
            Int r = iroot(t, e);
            if (ipow(r, e) == t) {
                for (unsigned i = 0; i < e; ++i) pending.push_back(r);
                split = true;
            }
        }
        if (split) continue;
        Int d = detail::pollard_brent(t, budget);
        if (d == 0) {
            out.cofactor *= t;
            out.complete = false;
            continue;
        }
        pending.push_back(d);
        pending.push_back(t / d);
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    // merge duplicates produced by the pending-stack path
    for (const auto& [p, e] : found) {
        if (!out.factors.empty() && out.factors.back().first == p)
            out.factors.back().second += e;
        else
            out.factors.emplace_back(p, e);
    }
    return out;
}

// Product of the distinct primes of n; empty when the budget ran out.
inline std::optional<Int> radical(const Int& n, std::uint64_t budget = 2'000'000) {
    if (n == 0) throw std::invalid_argument("radical: zero input");
    Factorization f = factor_bounded(n, budget);
    if (!f.complete) return std::nullopt;
    Int r = 1;
    for (const auto& [p, e] : f.factors) r *= p;
    return r;
}

// Three-state square-freeness test (unknown when factoring stalls and the
// cofactor could still hide a repeated prime).
struct SquarefreeResult {
    bool squarefree = false;
    bool known = true;
};

inline SquarefreeResult is_squarefree(const Int& n, std::uint64_t budget = 2'000'000) {
    if (n == 0) return {false, true};
    Factorization f = factor_bounded(n, budget);
    for (const auto& [p, e] : f.factors)
        if (e > 1) return {false, true};
    if (!f.complete) {
        // the unfactored cofactor might itself be a perfect power
        if (as_square(f.cofactor)) return {false, true};
        return {false, false};
    }
    return {true, true};
}

// Exact binomial coefficient via the multiplicative formula.
inline Int binomial(const Int& n, const Int& k) {
    if (n < 0 || k < 0) throw std::invalid_argument("binomial: negative argument");
    if (k > n) throw std::invalid_argument("binomial: k exceeds n");
    Int kk = k;
    if (n - k < kk) kk = n - k;
    if (kk > 1000000) throw std::invalid_argument("binomial: k too large");
    Int num = 1;
    for (Int i = 1; i <= kk; ++i) {
        num *= n - kk + i;
        num /= i;  // exact at every step: C(n-kk+i, i) is integral
    }
    return num;
}

}  // namespace lln
