#pragma once

// Pell-type forms u^2 - d v^2 = N for N in {+-1, +-4}, solved through the
// continued-fraction expansion of sqrt(d):
//
//   * N = +-1 comes straight from the convergent just before the period
//     repeats (period length even -> +1 only, odd -> -1 first).
//   * N = +-4 is found by an ascending scan of v.  The scan bound is sound:
//     an odd solution (U, V) of U^2 - d V^2 = +-4 cubes to an integral
//     solution of u^2 - d v^2 = +-1 with v >= V, and an even solution is
//     twice a +-1 solution, so the first hit occurs at v <= 2 * v(+-1).
//
// Also the specific quadratic form 7 v^2 - 3 u^2 = 4, whose odd solutions
// are parametrised by s^2 - 21 r^2 = 1.

#include "lln/arith.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lln {

struct PellForm {
    Int d;  // positive non-square
    int n;  // one of +1, -1, +4, -4

    PellForm(Int d_, int n_) : d(std::move(d_)), n(n_) {
        if (d <= 0) throw std::invalid_argument("PellForm: d must be positive");
        if (as_square(d)) throw std::invalid_argument("PellForm: d must not be a square");
        if (n != 1 && n != -1 && n != 4 && n != -4)
            throw std::invalid_argument("PellForm: N must be one of +-1, +-4");
    }
};

// A solution together with its power index t: the fundamental solution has
// t = 1 and later ones are obtained by composing with the fundamental.
struct PellSolution {
    PellForm form;
    Int u, v;
    unsigned index;

    PellSolution(PellForm f, Int u_, Int v_, unsigned t)
        : form(std::move(f)), u(std::move(u_)), v(std::move(v_)), index(t) {
        if (u * u - form.d * v * v != form.n)
            throw std::invalid_argument("PellSolution: values do not satisfy the form");
    }
};

struct ContinuedFraction {
    Int a0;
    std::vector<Int> period;  // canonical period of sqrt(d); last term is 2*a0
};

// Standard P-Q recurrence for the periodic continued fraction of sqrt(d).
inline ContinuedFraction cf_expansion(const Int& d) {
    if (d <= 0) throw std::invalid_argument("cf_expansion: d must be positive");
    if (as_square(d)) throw std::invalid_argument("cf_expansion: d must not be a square");
    ContinuedFraction out;
    Int a0 = isqrt(d);
    out.a0 = a0;
    Int P = 0, Q = 1, a = a0;
    while (true) {
        P = a * Q - P;
        Q = (d - P * P) / Q;
        a = (P + a0) / Q;
        out.period.push_back(a);
        if (a == 2 * a0) break;
    }
    return out;
}

namespace detail {

// Convergent p/q just before the period repeats: p^2 - d q^2 = (-1)^len.
inline std::pair<Int, Int> cf_final_convergent(const Int& /*d*/, const ContinuedFraction& cf) {
    Int p_prev = 1, p = cf.a0;
    Int q_prev = 0, q = 1;
    // consume all period terms except the closing 2*a0
    for (std::size_t i = 0; i + 1 < cf.period.size(); ++i) {
        const Int& ai = cf.period[i];
        Int p_next = ai * p + p_prev;
        Int q_next = ai * q + q_prev;
        p_prev = p;
        q_prev = q;
        p = p_next;
        q = q_next;
    }
    return {p, q};
}

}  // namespace detail

// Smallest solution with v >= 1 (and u > 0); empty when the form has none.
inline std::optional<PellSolution> fundamental_solution(const PellForm& form) {
    ContinuedFraction cf = cf_expansion(form.d);
    auto [p, q] = detail::cf_final_convergent(form.d, cf);
    const bool odd_period = cf.period.size() % 2 == 1;
    // p^2 - d q^2 = -1 for odd period length, +1 for even.
    if (form.n == 1) {
        if (!odd_period) return PellSolution(form, p, q, 1);
        return PellSolution(form, p * p + form.d * q * q, 2 * p * q, 1);
    }
    if (form.n == -1) {
        if (!odd_period) return std::nullopt;
        return PellSolution(form, p, q, 1);
    }
    // N = +-4: ascending scan.  For +4, (2p', 2q') doubles the +1 fundamental
    // (p', q'), so the minimum has v <= 2q'.  For -4 with an odd period,
    // (2p, 2q) doubles the -1 fundamental, bounding v by 2q likewise.  For -4
    // with an even period, -1 is unsolvable but -4 may still be (e.g. d = 8
    // and (2, 1)): any solution (u + v*sqrt(d))/2 larger than the +1
    // fundamental unit descends below it on division by that unit, which
    // again gives v <= 2q with (p, q) the +1 fundamental.
    Int v1;
    if (form.n == 4) {
        v1 = odd_period ? 2 * p * q : q;
    } else {
        v1 = q;
    }
    for (Int v = 1; v <= 2 * v1; ++v) {
        if (auto u = as_square(form.d * v * v + form.n)) return PellSolution(form, *u, v, 1);
    }
    return std::nullopt;
}

// The next larger solution, by composing with the fundamental of the unit
// form (x^2 - d y^2 = 1 resp. = 4).  The half-composition for N = +-4 is
// always integral: both factors have u = v (mod 2) when d is odd, and both
// are even when d is even.
inline PellSolution next_solution(const PellSolution& s) {
    const Int& d = s.form.d;
    if (s.form.n == 1 || s.form.n == -1) {
        auto unit = fundamental_solution(PellForm(d, 1));
        // the +1 form is always solvable
        Int u2 = s.u * unit->u + d * s.v * unit->v;
        Int v2 = s.u * unit->v + s.v * unit->u;
        return PellSolution(s.form, u2, v2, s.index + 1);
    }
    auto unit = fundamental_solution(PellForm(d, 4));
    Int num_u = s.u * unit->u + d * s.v * unit->v;
    Int num_v = s.u * unit->v + s.v * unit->u;
    if (num_u % 2 != 0 || num_v % 2 != 0)
        throw std::logic_error("next_solution: half-composition not integral");
    return PellSolution(s.form, num_u / 2, num_v / 2, s.index + 1);
}

// Solutions with u and v both odd, in ascending order.  Gives up (with
// exhausted = true) after examining 10 * count candidates.
struct OddSolutions {
    std::vector<PellSolution> solutions;
    bool exhausted = false;
};

inline OddSolutions odd_solutions(const PellForm& form, unsigned count) {
    OddSolutions out;
    auto cur = fundamental_solution(form);
    if (!cur) return out;
    for (unsigned seen = 0; seen < 10 * count && out.solutions.size() < count; ++seen) {
        if (is_odd(cur->u) && is_odd(cur->v)) out.solutions.push_back(*cur);
        cur = next_solution(*cur);
    }
    out.exhausted = out.solutions.size() < count;
    return out;
}

// Odd solutions (v, u) of 7 v^2 - 3 u^2 = 4, ascending in v.  Every solution
// of s^2 - 21 r^2 = 1 induces three candidate pairs
//   (s + 3r, s + 7r), (-s + 3r, s - 7r), (4s + 18r, 6s + 28r);
// the third is always even and is dropped by the oddness filter, and the
// first two are canonicalised to positive entries.
struct Form734Solution {
    Int v, u;

    Form734Solution(Int v_, Int u_) : v(std::move(v_)), u(std::move(u_)) {
        if (7 * v * v - 3 * u * u != 4)
            throw std::invalid_argument("Form734Solution: values do not satisfy the form");
    }
};

inline std::vector<Form734Solution> form734_solutions(unsigned count) {
    std::set<std::pair<Int, Int>> seen;
    Int s = 1, r = 0;  // unit solution of s^2 - 21 r^2 = 1; fundamental is (55, 12)
    for (unsigned t = 0; t <= count + 1; ++t) {
        const std::pair<Int, Int> candidates[3] = {
            {s + 3 * r, s + 7 * r},
            {-s + 3 * r, s - 7 * r},
            {4 * s + 18 * r, 6 * s + 28 * r},
        };
        for (const auto& [cv, cu] : candidates) {
            if (is_even(cv) || is_even(cu)) continue;  // oddness filter
            seen.emplace(abs(cv), abs(cu));
        }
        Int s2 = 55 * s + 21 * 12 * r;
        Int r2 = 12 * s + 55 * r;
        s = s2;
        r = r2;
    }
    std::vector<Form734Solution> out;
    for (const auto& [v, u] : seen) {
        if (out.size() >= count) break;
        out.emplace_back(v, u);
    }
    return out;
}

}  // namespace lln
