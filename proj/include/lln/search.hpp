#pragma once

// Exhaustive brute-force oracle for a*x^2 + b^(2l) = 4*y^n over a y-range,
// plus verification of solution-tuple corpora.  All arithmetic is exact; the
// y-range may be split into contiguous chunks executed concurrently, merged
// back in chunk order so results are deterministic.

#include "lln/arith.hpp"

#include <chrono>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace lln {

struct SolutionTuple {
    Int a, x, y, b, l, n;

    SolutionTuple(Int a_, Int x_, Int y_, Int b_, Int l_, Int n_)
        : a(std::move(a_)), x(std::move(x_)), y(std::move(y_)), b(std::move(b_)), l(std::move(l_)), n(std::move(n_)) {
        x = abs(x);  // the equation is even in x
        if (a <= 0) throw std::invalid_argument("SolutionTuple: a must be positive");
        if (is_even(b)) throw std::invalid_argument("SolutionTuple: b must be odd");
        if (l < 1) throw std::invalid_argument("SolutionTuple: l must be >= 1");
        if (n < 3 || is_even(n) || !is_prime(n))
            throw std::invalid_argument("SolutionTuple: n must be an odd prime");
        if (gcd(x, y) != 1) throw std::invalid_argument("SolutionTuple: x, y must be coprime");
        Int bl = ipow(b, static_cast<unsigned>(l));
        if (a * x * x + bl * bl != 4 * ipow(y, static_cast<unsigned>(n)))
            throw std::invalid_argument("SolutionTuple: equation fails");
    }

    friend bool operator==(const SolutionTuple& s, const SolutionTuple& t) {
        return s.a == t.a && s.x == t.x && s.y == t.y && s.b == t.b && s.l == t.l && s.n == t.n;
    }
};

struct SearchReport {
    Int a, b;
    unsigned l = 1, n = 3;
    Int y_max;
    std::vector<SolutionTuple> solutions;
    double elapsed_seconds = 0.0;
    unsigned partitions = 1;
};

namespace detail {

// Scan y in [lo, hi] and append hits in ascending y.
inline void brute_force_chunk(const Int& a, const Int& b, unsigned l, unsigned n,
                              const Int& lo, const Int& hi, std::vector<SolutionTuple>& out) {
    Int b2l = ipow(b, 2 * l);
    for (Int y = lo; y <= hi; ++y) {
        Int t = 4 * ipow(y, n) - b2l;
        if (t <= 0 || t % a != 0) continue;
        auto x = as_square(t / a);
        if (!x) continue;
        if (gcd(*x, y) != 1) continue;
        out.emplace_back(a, *x, y, b, l, n);
    }
}

}  // namespace detail

// Complete scan over y in [1, y_max].  For partitions > 1 the range is split
// into that many contiguous chunks run on separate threads; the merged result
// is identical to the single-threaded scan.
inline SearchReport brute_force(const Int& a, const Int& b, unsigned l, unsigned n,
                                const Int& y_max, unsigned partitions = 1) {
    if (a <= 0 || is_even(a)) throw std::invalid_argument("brute_force: a must be positive and odd");
    if (is_even(b)) throw std::invalid_argument("brute_force: b must be odd");
    if (gcd(a, b) != 1) throw std::invalid_argument("brute_force: a, b must be coprime");
    if (l < 1) throw std::invalid_argument("brute_force: l must be >= 1");
    if (n < 3 || n % 2 == 0 || !is_prime(Int(n)))
        throw std::invalid_argument("brute_force: n must be an odd prime");
    if (y_max < 1) throw std::invalid_argument("brute_force: y_max must be >= 1");
    if (partitions < 1) throw std::invalid_argument("brute_force: partitions must be >= 1");
    if (partitions > 64) partitions = 64;
    if (Int(partitions) > y_max) partitions = static_cast<unsigned>(y_max);

    auto t0 = std::chrono::steady_clock::now();
    SearchReport report;
    report.a = a;
    report.b = b;
    report.l = l;
    report.n = n;
    report.y_max = y_max;
    report.partitions = partitions;

    if (partitions == 1) {
        detail::brute_force_chunk(a, b, l, n, 1, y_max, report.solutions);
    } else {
        std::vector<std::vector<SolutionTuple>> chunks(partitions);
        std::vector<std::thread> workers;
        Int step = y_max / partitions;
        for (unsigned i = 0; i < partitions; ++i) {
            Int lo = 1 + step * i;
            Int hi = (i + 1 == partitions) ? y_max : step * (i + 1);
            workers.emplace_back([&, i, lo, hi] {
                detail::brute_force_chunk(a, b, l, n, lo, hi, chunks[i]);
            });
        }
        for (auto& w : workers) w.join();
        for (auto& c : chunks)
            for (auto& s : c) report.solutions.push_back(std::move(s));
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

struct CorpusEntryReport {
    std::string source;            // raw line or tuple rendering
    bool valid = false;            // tuple constructed and equation verified
    std::string error;             // populated when !valid
    Int residue_plus;              // 2^(n-1) * b^l mod a, for +b
    Int residue_minus;             // same for -b
    bool congruent_pm1 = false;    // either sign lands in {1, a-1} mod a
    MaybePrimePower b_prime_power; // classification of b
};

namespace detail {

inline Int congruence_residue(const Int& a, const Int& b, unsigned l, unsigned n) {
    Int base = ((b % a) + a) % a;
    Int bl = powm(base, l, a);
    Int two = powm(Int(2), n - 1, a);
    return bl * two % a;
}

}  // namespace detail

// Re-verify a corpus of claimed solutions: exact equation check via the
// SolutionTuple invariants, congruence residues for both signs of b, and
// prime-power classification of b.
inline std::vector<CorpusEntryReport> verify_corpus(const std::vector<SolutionTuple>& entries) {
    std::vector<CorpusEntryReport> out;
    out.reserve(entries.size());
    for (const auto& e : entries) {
        CorpusEntryReport rep;
        std::ostringstream os;
        os << e.a << ' ' << e.x << ' ' << e.y << ' ' << e.b << ' ' << e.l << ' ' << e.n;
        rep.source = os.str();
        try {
            (void)SolutionTuple(e.a, e.x, e.y, e.b, e.l, e.n);
            rep.valid = true;
        } catch (const std::exception& ex) {
            rep.error = ex.what();
        }
        if (rep.valid) {
            unsigned l = static_cast<unsigned>(e.l);
            unsigned n = static_cast<unsigned>(e.n);
            rep.residue_plus = detail::congruence_residue(e.a, e.b, l, n);
            rep.residue_minus = detail::congruence_residue(e.a, -e.b, l, n);
            auto pm1 = [&](const Int& r) { return r == 1 % e.a || r == (e.a - 1) % e.a; };
            rep.congruent_pm1 = pm1(rep.residue_plus) || pm1(rep.residue_minus);
            rep.b_prime_power = odd_prime_power(e.b);
        }
        out.push_back(std::move(rep));
    }
    return out;
}

// TSV corpus: one tuple per line, columns `a x y b l n`, `#` comments and
// blank lines ignored.  Malformed lines raise with their line number; a line
// that parses but fails the solution invariants is reported, not thrown.
struct ParsedCorpus {
    std::vector<SolutionTuple> entries;
    std::vector<std::string> rejected;  // per-line diagnostics for invalid tuples
};

inline ParsedCorpus parse_corpus_tsv(std::istream& in) {
    ParsedCorpus out;
    std::string line;
    unsigned lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string trimmed = line;
        auto first = trimmed.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (trimmed[first] == '#') continue;
        std::istringstream ls(line);
        std::string fa, fx, fy, fb, fl, fn, extra;
        if (!(ls >> fa >> fx >> fy >> fb >> fl >> fn))
            throw std::runtime_error("corpus line " + std::to_string(lineno) + ": expected 6 columns");
        if (ls >> extra)
            throw std::runtime_error("corpus line " + std::to_string(lineno) + ": trailing data");
        try {
            out.entries.emplace_back(Int(fa), Int(fx), Int(fy), Int(fb), Int(fl), Int(fn));
        } catch (const std::exception& ex) {
            out.rejected.push_back("line " + std::to_string(lineno) + ": " + ex.what());
        }
    }
    return out;
}

}  // namespace lln
