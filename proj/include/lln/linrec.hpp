#pragma once

// Fibonacci and Lucas sequences, plus the square-detection scans used to
// classify the n = 5 subcases.  The scans confirm classical classification
// theorems (Ljunggren, Cohn, Bugeaud-Mignotte-Siksek, Luca-Patel) up to a
// bound; the full statements are imported as axioms by the solver, and the
// scans act as regression guards.

#include "lln/arith.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace lln {

struct FibLucasPair {
    unsigned k;
    Int F;  // F0 = 0, F1 = 1
    Int L;  // L0 = 2, L1 = 1
};

namespace detail {

// Iterator state producing F_k, L_k incrementally.
struct FibLucasIter {
    unsigned k = 0;
    Int f = 0, f_next = 1;  // F_k, F_{k+1}
    Int l = 2, l_next = 1;  // L_k, L_{k+1}

    FibLucasPair current() const { return {k, f, l}; }

    void advance() {
        Int f2 = f + f_next;
        Int l2 = l + l_next;
        f = std::move(f_next);
        f_next = std::move(f2);
        l = std::move(l_next);
        l_next = std::move(l2);
        ++k;
    }
};

}  // namespace detail

inline FibLucasPair fib_lucas(unsigned k) {
    detail::FibLucasIter it;
    while (it.k < k) it.advance();
    return it.current();
}

enum class SequenceKind { Fibonacci, Lucas };

// All indices k <= bound whose k-th term is a perfect square.
inline std::vector<unsigned> square_scan(SequenceKind kind, unsigned bound) {
    if (bound < 2) throw std::invalid_argument("square_scan: bound must be >= 2");
    std::vector<unsigned> hits;
    detail::FibLucasIter it;
    for (; it.k <= bound; it.advance()) {
        const Int& term = kind == SequenceKind::Fibonacci ? it.f : it.l;
        if (as_square(term)) hits.push_back(it.k);
    }
    return hits;
}

// All indices m <= bound with 5 * F_m a perfect square.
inline std::vector<unsigned> five_fib_square_scan(unsigned bound) {
    if (bound < 2) throw std::invalid_argument("five_fib_square_scan: bound must be >= 2");
    std::vector<unsigned> hits;
    detail::FibLucasIter it;
    for (; it.k <= bound; it.advance()) {
        if (as_square(5 * it.f)) hits.push_back(it.k);
    }
    return hits;
}

// All (k, eps) with 3 <= k <= bound, eps in {+1, -1}, k - 2*eps >= 0, and
// F_k + F_{k+2*eps} a perfect square.
inline std::vector<std::pair<unsigned, int>> adjacent_sum_square_scan(unsigned bound) {
    if (bound < 3) throw std::invalid_argument("adjacent_sum_square_scan: bound must be >= 3");
    std::vector<std::pair<unsigned, int>> hits;
    // F_1 .. F_{bound+2} so that every F_{k +- 2} is at hand
    std::vector<Int> F(bound + 3);
    F[0] = 0;
    F[1] = 1;
    for (unsigned i = 2; i < F.size(); ++i) F[i] = F[i - 1] + F[i - 2];
    for (unsigned k = 3; k <= bound; ++k) {
        for (int eps : {-1, +1}) {
            if (static_cast<int>(k) - 2 * eps < 0) continue;
            unsigned other = static_cast<unsigned>(static_cast<int>(k) + 2 * eps);
            if (as_square(F[k] + F[other])) hits.emplace_back(k, eps);
        }
    }
    return hits;
}

}  // namespace lln
