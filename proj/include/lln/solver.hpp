#pragma once

// The decision engine for a*x^2 + b^(2l) = 4*y^n: hypothesis checks, verdicts
// with machine-checkable certificates, and the subcase classifier for
// n in {3, 5, 7, 13}.
//
// No-solution rules, named by what they check:
//   mod4_reduction        a = 1 (mod 4): both x-parities fail modulo 4.
//   special_prime_gt3     a in {7,11,19,43,67,163}, prime n > 3,
//                         2^(n-1) b^l != +-1 (mod a), gcd(n,b)=1, b = +-q^r.
//   special_prime_eq3     same special a except 7, n = 3, 4 b^l != +-1 (mod a).
//   class_number_coprime  square-free a outside {3} and the special set,
//                         gcd(n, h(-a)) = 1 plus the gt3 conditions.
//
// Everything else is Undecided with the failing hypotheses listed and, where
// the corpus knows one, an actual solution attached as a witness.

#include "lln/arith.hpp"
#include "lln/classnum.hpp"
#include "lln/corpus.hpp"
#include "lln/families.hpp"
#include "lln/lehmer.hpp"
#include "lln/linrec.hpp"
#include "lln/search.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace lln {

inline constexpr std::array<long, 6> special_set = {7, 11, 19, 43, 67, 163};

inline bool in_special_set(const Int& a) {
    for (long p : special_set)
        if (a == p) return true;
    return false;
}

struct ProblemInstance {
    Int a, b;
    unsigned l, n;

    ProblemInstance(Int a_, Int b_, unsigned l_, unsigned n_)
        : a(std::move(a_)), b(std::move(b_)), l(l_), n(n_) {
        if (a <= 0 || is_even(a)) throw std::invalid_argument("ProblemInstance: a must be positive and odd");
        SquarefreeResult sf = is_squarefree(a);
        if (!sf.known) throw std::invalid_argument("ProblemInstance: could not verify a is square-free");
        if (!sf.squarefree) throw std::invalid_argument("ProblemInstance: a must be square-free");
        if (b == 0 || is_even(b)) throw std::invalid_argument("ProblemInstance: b must be odd and nonzero");
        if (gcd(a, b) != 1) throw std::invalid_argument("ProblemInstance: a and b must be coprime");
        if (l < 1) throw std::invalid_argument("ProblemInstance: l must be >= 1");
        if (n < 3 || n % 2 == 0 || !is_prime(Int(n)))
            throw std::invalid_argument("ProblemInstance: n must be an odd prime");
    }

    Int blpow() const { return ipow(b, l); }
};

// ---------------------------------------------------------------------------
// Hypothesis report

struct ConditionReport {
    int a_mod4 = 0;
    bool is_squarefree_flag = false;
    MaybePrimePower b_prime_power;       // engaged iff b = +-q^r
    Int congruence_residue_plus;         // 2^(n-1) * b^l mod a
    Int congruence_residue_minus;        // 2^(n-1) * (-b)^l mod a
    bool congruence_ok = false;          // both residues outside {1, a-1}
    bool gcd_n_b_ok = false;
    std::optional<long long> h;          // class number h(-a), when in range
    std::optional<bool> gcd_n_h_ok;
    bool a_in_special_set = false;
};

namespace detail {

inline constexpr long long kClassNumberLimit = 2'000'000;

}  // namespace detail

inline ConditionReport condition_report(const ProblemInstance& inst) {
    ConditionReport rep;
    rep.a_mod4 = static_cast<int>(inst.a % 4);
    rep.is_squarefree_flag = true;  // enforced at construction
    rep.b_prime_power = odd_prime_power(inst.b);
    rep.congruence_residue_plus = detail::congruence_residue(inst.a, inst.b, inst.l, inst.n);
    rep.congruence_residue_minus = detail::congruence_residue(inst.a, -inst.b, inst.l, inst.n);
    auto pm1 = [&](const Int& r) { return r == 1 % inst.a || r == (inst.a - 1) % inst.a; };
    rep.congruence_ok = !pm1(rep.congruence_residue_plus) && !pm1(rep.congruence_residue_minus);
    rep.gcd_n_b_ok = gcd(Int(inst.n), inst.b) == 1;
    rep.a_in_special_set = in_special_set(inst.a);
    if (inst.a <= detail::kClassNumberLimit) {
        long long h = class_number(static_cast<long long>(inst.a));
        rep.h = h;
        rep.gcd_n_h_ok = std::gcd(static_cast<long long>(inst.n), h) == 1;
    }
    return rep;
}

// y-parity forced by a mod 8 (reduction of the equation modulo 8).
enum class ParityConstraint { YOdd, YEven, NoConstraint };

inline ParityConstraint parity_constraint(const Int& a) {
    if (is_even(a)) throw std::invalid_argument("parity_constraint: a must be odd");
    Int r = ((a % 8) + 8) % 8;
    if (r == 3) return ParityConstraint::YOdd;
    if (r == 7) return ParityConstraint::YEven;
    return ParityConstraint::NoConstraint;
}

// ---------------------------------------------------------------------------
// Certificates

enum class ParityKind { Any, OddOnly, EvenOnly };

// One side of a residue argument: the set {coeff * w^2 + constant mod m}
// as w ranges over residues with the given parity.
struct ResidueSide {
    Int coeff;
    Int constant;
    ParityKind parity = ParityKind::Any;
};

inline std::set<Int> enumerate_residues(const ResidueSide& side, const Int& modulus) {
    if (modulus < 2) throw std::invalid_argument("enumerate_residues: modulus must be >= 2");
    std::set<Int> out;
    // range [0, 2m) so that both parities of every residue class appear
    for (Int w = 0; w < 2 * modulus; ++w) {
        if (side.parity == ParityKind::OddOnly && is_even(w)) continue;
        if (side.parity == ParityKind::EvenOnly && is_odd(w)) continue;
        Int r = ((side.coeff * w * w + side.constant) % modulus + modulus) % modulus;
        out.insert(r);
    }
    return out;
}

// Evidence that an equation lhs(w1) = rhs(w2) has no solutions modulo m:
// the two residue sets are disjoint.  The sets are cached so that tampering
// is detectable by re-enumeration.
struct ResidueContradiction {
    Int modulus;
    ResidueSide lhs, rhs;
    std::set<Int> lhs_residues, rhs_residues;
    std::string context;  // the equation this encodes, for display
};

inline ResidueContradiction make_residue_contradiction(Int modulus, ResidueSide lhs,
                                                       ResidueSide rhs, std::string context) {
    ResidueContradiction c;
    c.modulus = std::move(modulus);
    c.lhs = std::move(lhs);
    c.rhs = std::move(rhs);
    c.context = std::move(context);
    c.lhs_residues = enumerate_residues(c.lhs, c.modulus);
    c.rhs_residues = enumerate_residues(c.rhs, c.modulus);
    for (const Int& r : c.lhs_residues)
        if (c.rhs_residues.count(r))
            throw std::logic_error("make_residue_contradiction: sides are not disjoint");
    return c;
}

struct Mod4Reduction {};

struct TheoremCitation {
    std::string rule;  // special_prime_gt3 | special_prime_eq3 | class_number_coprime
};

struct Certificate {
    std::variant<Mod4Reduction, TheoremCitation, ResidueContradiction> detail;
    std::optional<ProblemInstance> instance;  // required for the first two kinds

    std::string kind_name() const {
        if (std::holds_alternative<Mod4Reduction>(detail)) return "mod4_reduction";
        if (std::holds_alternative<TheoremCitation>(detail))
            return std::get<TheoremCitation>(detail).rule;
        return "residue_contradiction";
    }
};

inline bool verify_certificate(const Certificate& cert);

// ---------------------------------------------------------------------------
// Verdicts

enum class VerdictKind { NoSolution, FamilyCase, SporadicExcluded, Undecided };

inline std::string verdict_kind_name(VerdictKind k) {
    switch (k) {
        case VerdictKind::NoSolution: return "NoSolution";
        case VerdictKind::FamilyCase: return "FamilyCase";
        case VerdictKind::SporadicExcluded: return "SporadicExcluded";
        case VerdictKind::Undecided: return "Undecided";
    }
    return "?";
}

struct Verdict {
    VerdictKind kind = VerdictKind::Undecided;
    std::optional<Certificate> certificate;      // NoSolution
    std::vector<FamilyId> families;              // FamilyCase
    std::optional<MembershipResult> membership;  // FamilyCase: is b^l generated?
    std::vector<SolutionTuple> witnesses;        // known solutions for Undecided
    std::vector<std::string> failed_conditions;  // Undecided
    std::string reason;
};

// ---------------------------------------------------------------------------
// Subcase classifier for n in {3, 5, 7, 13}

enum class SubcaseKind { Contradiction, FamilyRef, Sporadic, Rejected };

inline std::string subcase_kind_name(SubcaseKind k) {
    switch (k) {
        case SubcaseKind::Contradiction: return "Contradiction";
        case SubcaseKind::FamilyRef: return "FamilyRef";
        case SubcaseKind::Sporadic: return "Sporadic";
        case SubcaseKind::Rejected: return "Rejected";
    }
    return "?";
}

struct SubcaseOutcome {
    std::string label;
    SubcaseKind kind = SubcaseKind::Rejected;
    std::optional<ResidueContradiction> certificate;
    std::vector<FamilyId> families;
    std::vector<SolutionTuple> sporadics;
    std::vector<std::string> notes;
};

namespace detail {

inline SubcaseOutcome contradiction(std::string label, ResidueContradiction cert) {
    SubcaseOutcome o;
    o.label = std::move(label);
    o.kind = SubcaseKind::Contradiction;
    o.certificate = std::move(cert);
    return o;
}

inline SubcaseOutcome family_ref(std::string label, std::vector<FamilyId> fams, std::string note) {
    SubcaseOutcome o;
    o.label = std::move(label);
    o.kind = SubcaseKind::FamilyRef;
    o.families = std::move(fams);
    o.notes.push_back(std::move(note));
    return o;
}

// Build the sporadic solution attached to parameters (u, v, p): the power
// ((u + v*sqrt(-p))/2)^n = (A + B*sqrt(-p))/2 yields b^l = |A|, x = |B|,
// y = (u^2 + p v^2)/4.
inline SolutionTuple sporadic_tuple(const Int& u, const Int& v, const Int& p, unsigned n) {
    HalfElem e = half_power(u, v, p, n);
    Int blpow = abs(e.A);
    Int x = abs(e.B);
    Int y = (u * u + p * v * v) / 4;
    Int b = blpow;
    Int l = 1;
    if (auto pp = odd_prime_power(blpow); pp.value && pp.value->exponent > 1) {
        b = pp.value->base;
        l = pp.value->exponent;
    }
    return SolutionTuple(p, x, y, b, l, Int(n));
}

// Decompositions v^2 * p of a positive odd integer with v odd and p prime.
inline std::vector<std::pair<Int, Int>> odd_square_times_prime(const Int& m) {
    std::vector<std::pair<Int, Int>> out;
    for (Int v = 1; v * v <= m; v += 2) {
        if (m % (v * v) != 0) continue;
        Int p = m / (v * v);
        if (is_prime(p)) out.emplace_back(v, p);
    }
    return out;
}

inline std::vector<SubcaseOutcome> classify_n3(const Int& p) {
    const bool p7 = p == 7;
    std::vector<SubcaseOutcome> out;

    // (a.i) u^2 = 3p v^2 - 4: impossible modulo 3 for every p
    out.push_back(contradiction(
        "a.i", make_residue_contradiction(3, {1, 0, ParityKind::OddOnly},
                                          {3 * p, -4, ParityKind::OddOnly}, "u^2 = 3p*v^2 - 4")));

    // (a.ii) u^2 = 3p v^2 + 4
    if (p7)
        out.push_back(family_ref("a.ii", {FamilyId::F1}, "u^2 - 21v^2 = 4 with u, v odd"));
    else
        out.push_back(contradiction(
            "a.ii", make_residue_contradiction(8, {1, 0, ParityKind::OddOnly},
                                               {3 * p, 4, ParityKind::OddOnly}, "u^2 = 3p*v^2 + 4")));

    // (a.iii) p v^2 = 3u^2 + 4
    if (p7)
        out.push_back(family_ref("a.iii", {FamilyId::F2, FamilyId::F3},
                                 "7v^2 - 3u^2 = 4, two odd sign branches over s^2 - 21r^2 = 1"));
    else
        out.push_back(contradiction(
            "a.iii", make_residue_contradiction(8, {p, 0, ParityKind::OddOnly},
                                                {3, 4, ParityKind::OddOnly}, "p*v^2 = 3u^2 + 4")));

    // (a.iv) p v^2 = 3u^2 - 4; for p = 7 the contradiction moves to modulo 7
    if (p7)
        out.push_back(contradiction(
            "a.iv", make_residue_contradiction(7, {3, 0, ParityKind::OddOnly},
                                               {7, 4, ParityKind::OddOnly}, "3u^2 = 7v^2 + 4")));
    else
        out.push_back(contradiction(
            "a.iv", make_residue_contradiction(8, {p, 0, ParityKind::OddOnly},
                                               {3, -4, ParityKind::OddOnly}, "p*v^2 = 3u^2 - 4")));

    // (b.i) p v^2 = 3t^2 + 4 with u = 3t (the 3-power exponent is forced to 1,
    // else 3 would divide gcd(u, v))
    if (p7)
        out.push_back(family_ref("b.i", {FamilyId::F4, FamilyId::F5},
                                 "7v^2 - 3t^2 = 4 with u = 3t, two odd sign branches"));
    else
        out.push_back(contradiction(
            "b.i", make_residue_contradiction(8, {p, 0, ParityKind::OddOnly},
                                              {3, 4, ParityKind::OddOnly}, "p*v^2 = 3t^2 + 4 (u = 3t)")));

    // (b.ii) p v^2 = 3t^2 - 4 with u = 3t
    if (p7)
        out.push_back(contradiction(
            "b.ii", make_residue_contradiction(7, {3, 0, ParityKind::OddOnly},
                                               {7, 4, ParityKind::OddOnly}, "3t^2 = 7v^2 + 4 (u = 3t)")));
    else
        out.push_back(contradiction(
            "b.ii", make_residue_contradiction(8, {p, 0, ParityKind::OddOnly},
                                               {3, -4, ParityKind::OddOnly}, "p*v^2 = 3t^2 - 4 (u = 3t)")));

    // (b.iii) 3p t^2 = u^2 + 4 with v = 3t: impossible modulo 3 for every p
    out.push_back(contradiction(
        "b.iii", make_residue_contradiction(3, {3 * p, 0, ParityKind::OddOnly},
                                            {1, 4, ParityKind::OddOnly}, "3p*t^2 = u^2 + 4 (v = 3t)")));

    // (b.iv) u^2 = 3p t^2 + 4 with v = 3t
    if (p7)
        out.push_back(family_ref("b.iv", {FamilyId::F6}, "u^2 - 21t^2 = 4 with v = 3t, t odd"));
    else
        out.push_back(contradiction(
            "b.iv", make_residue_contradiction(8, {1, 0, ParityKind::OddOnly},
                                               {3 * p, 4, ParityKind::OddOnly}, "u^2 = 3p*t^2 + 4 (v = 3t)")));

    return out;
}

inline constexpr unsigned kScanBound = 200;

// Dispose of one candidate (u^2 value, v^2*p value) pair for the given p;
// emits a sporadic tuple on full match, otherwise explains the rejection.
inline void dispose_candidate(SubcaseOutcome& o, const Int& p, unsigned n, const std::string& where,
                              const Int& u_sq, const Int& vp) {
    auto u = as_square(u_sq);
    if (!u) {
        o.notes.push_back(where + ": u^2 = " + u_sq.str() + " is not a square");
        return;
    }
    if (is_even(*u)) {
        o.notes.push_back(where + ": u = " + u->str() + " is even");
        return;
    }
    if (vp <= 0 || is_even(vp)) {
        o.notes.push_back(where + ": v^2*p = " + vp.str() + " admits no odd v and odd prime p");
        return;
    }
    auto reps = odd_square_times_prime(vp);
    if (reps.empty()) {
        o.notes.push_back(where + ": v^2*p = " + vp.str() + " is not an odd square times a prime");
        return;
    }
    for (const auto& [v, cand_p] : reps) {
        if (cand_p != p) {
            std::string qual = in_special_set(cand_p) ? "" : " (outside the special set)";
            o.notes.push_back(where + ": matches p = " + cand_p.str() + qual + ", not p = " + p.str());
            continue;
        }
        o.kind = SubcaseKind::Sporadic;
        o.sporadics.push_back(sporadic_tuple(*u, v, p, n));
        o.notes.push_back(where + ": u = " + u->str() + ", v = " + v.str() + ", p = " + p.str());
    }
}

inline std::vector<SubcaseOutcome> classify_n5(const Int& p) {
    std::vector<SubcaseOutcome> out;
    FibLucasPair fl[kScanBound + 3];
    for (unsigned k = 0; k < kScanBound + 3; ++k) fl[k] = fib_lucas(k);

    {  // (a.i) F_{k-2e} = -u^2 < 0
        SubcaseOutcome o;
        o.label = "a.i";
        o.kind = SubcaseKind::Rejected;
        o.notes.push_back("F_{k-2e} = -u^2 < 0 is impossible: Fibonacci terms are non-negative and u is odd");
        out.push_back(std::move(o));
    }
    {  // (a.ii) u^2 = F_{k-2e}, v^2*p = 4F_k - F_{k-2e}
        SubcaseOutcome o;
        o.label = "a.ii";
        o.kind = SubcaseKind::Rejected;
        for (unsigned j : square_scan(SequenceKind::Fibonacci, kScanBound)) {
            for (int eps : {+1, -1}) {
                int k = static_cast<int>(j) + 2 * eps;
                if (k < 3) continue;
                std::string where = "k = " + std::to_string(k) + ", e = " + std::to_string(eps);
                dispose_candidate(o, p, 5, where, fl[j].F, 4 * fl[k].F - fl[j].F);
            }
        }
        out.push_back(std::move(o));
    }
    {  // (a.iii) u^2 = F_k + F_{k+2e}, v^2*p = F_{k-2e}
        SubcaseOutcome o;
        o.label = "a.iii";
        o.kind = SubcaseKind::Rejected;
        for (auto [k, eps] : adjacent_sum_square_scan(kScanBound)) {
            int ki = static_cast<int>(k);
            std::string where = "k = " + std::to_string(k) + ", e = " + std::to_string(eps);
            dispose_candidate(o, p, 5, where, fl[ki].F + fl[ki + 2 * eps].F, fl[ki - 2 * eps].F);
        }
        out.push_back(std::move(o));
    }
    {  // (a.iv) F_{k-2e} = -v^2*p < 0
        SubcaseOutcome o;
        o.label = "a.iv";
        o.kind = SubcaseKind::Rejected;
        o.notes.push_back("F_{k-2e} = -v^2*p < 0 is impossible: Fibonacci terms are non-negative");
        out.push_back(std::move(o));
    }
    {  // (b.i) L_{k-2e} = -u^2 < 0
        SubcaseOutcome o;
        o.label = "b.i";
        o.kind = SubcaseKind::Rejected;
        o.notes.push_back("L_{k-2e} = -u^2 < 0 is impossible: Lucas terms are positive");
        out.push_back(std::move(o));
    }
    {  // (b.ii) u^2 = L_{k-2e}, v^2*p = 4L_k - L_{k-2e}; index k = 1 excluded
        SubcaseOutcome o;
        o.label = "b.ii";
        o.kind = SubcaseKind::Rejected;
        for (unsigned j : square_scan(SequenceKind::Lucas, kScanBound)) {
            for (int eps : {+1, -1}) {
                int k = static_cast<int>(j) + 2 * eps;
                if (k < 0 || k == 1) continue;
                std::string where = "k = " + std::to_string(k) + ", e = " + std::to_string(eps);
                dispose_candidate(o, p, 5, where, fl[j].L, 4 * fl[k].L - fl[j].L);
            }
        }
        out.push_back(std::move(o));
    }
    {  // (b.iii) u^2 = 4L_k - L_{k-2e} = 5F_{k+e}, v^2*p = L_{k-2e}
        SubcaseOutcome o;
        o.label = "b.iii";
        o.kind = SubcaseKind::Rejected;
        for (unsigned m : five_fib_square_scan(kScanBound)) {
            for (int eps : {+1, -1}) {
                int k = static_cast<int>(m) - eps;  // m = k + e
                int j = k - 2 * eps;
                if (k < 0 || j < 0 || k == 1) continue;
                std::string where = "k = " + std::to_string(k) + ", e = " + std::to_string(eps);
                dispose_candidate(o, p, 5, where, 4 * fl[k].L - fl[j].L, fl[j].L);
            }
        }
        out.push_back(std::move(o));
    }
    {  // (b.iv) L_{k-2e} = -v^2*p < 0
        SubcaseOutcome o;
        o.label = "b.iv";
        o.kind = SubcaseKind::Rejected;
        o.notes.push_back("L_{k-2e} = -v^2*p < 0 is impossible: Lucas terms are positive");
        out.push_back(std::move(o));
    }
    return out;
}

inline std::vector<SubcaseOutcome> classify_defective(const Int& p, unsigned n) {
    std::vector<SubcaseOutcome> out;
    for (const DefectiveClass& cls : named_defective_pairs(n)) {
        SubcaseOutcome o;
        o.label = "class {" + cls.signature.lo.str() + ", " + cls.signature.hi.str() + "}";
        // our pairs have signature {p*v^2, -u^2}; matching a class {1, -q}
        // up to simultaneous negation forces p*v^2 = q and u^2 = 1
        if (is_equivalent(Signature(p, -1), cls.signature)) {
            o.kind = SubcaseKind::Sporadic;
            o.sporadics.push_back(sporadic_tuple(1, 1, p, n));
            o.notes.push_back("matched with u = v = 1");
        } else {
            o.kind = SubcaseKind::Rejected;
            Int q = -(cls.signature.lo < 0 ? cls.signature.lo : cls.signature.hi);
            o.notes.push_back("signature requires p = " + q.str() + ", not p = " + p.str());
        }
        out.push_back(std::move(o));
    }
    return out;
}

}  // namespace detail

inline std::vector<SubcaseOutcome> classify_small_n(const Int& p, unsigned n) {
    if (!in_special_set(p))
        throw std::invalid_argument("classify_small_n: p must be in {7, 11, 19, 43, 67, 163}");
    switch (n) {
        case 3: return detail::classify_n3(p);
        case 5: return detail::classify_n5(p);
        case 7:
        case 13: return detail::classify_defective(p, n);
        default:
            throw std::invalid_argument("classify_small_n: n must be one of 3, 5, 7, 13");
    }
}

// ---------------------------------------------------------------------------
// Certificate verification

inline bool verify_certificate(const Certificate& cert) {
    if (std::holds_alternative<Mod4Reduction>(cert.detail)) {
        if (!cert.instance) return false;
        const ProblemInstance& inst = *cert.instance;
        if (inst.a % 4 != 1) return false;
        // b odd means b^(2l) = 1 (mod 4); enumerate both x parities
        for (int x = 0; x < 4; ++x)
            if ((inst.a * x * x + 1) % 4 == 0) return false;
        return true;
    }
    if (std::holds_alternative<ResidueContradiction>(cert.detail)) {
        const auto& rc = std::get<ResidueContradiction>(cert.detail);
        std::set<Int> lhs = enumerate_residues(rc.lhs, rc.modulus);
        std::set<Int> rhs = enumerate_residues(rc.rhs, rc.modulus);
        if (lhs != rc.lhs_residues || rhs != rc.rhs_residues) return false;
        for (const Int& r : lhs)
            if (rhs.count(r)) return false;
        return true;
    }
    const auto& citation = std::get<TheoremCitation>(cert.detail);
    if (!cert.instance) return false;
    const ProblemInstance& inst = *cert.instance;
    ConditionReport rep = condition_report(inst);
    bool base = rep.b_prime_power.value.has_value() && rep.congruence_ok && rep.gcd_n_b_ok;
    if (citation.rule == "special_prime_gt3")
        return base && rep.a_in_special_set && inst.n > 3;
    if (citation.rule == "special_prime_eq3")
        return base && rep.a_in_special_set && inst.a != 7 && inst.n == 3;
    if (citation.rule == "class_number_coprime")
        return base && !rep.a_in_special_set && inst.a != 3 && inst.n > 3 &&
               rep.gcd_n_h_ok.has_value() && *rep.gcd_n_h_ok;
    return false;
}

// ---------------------------------------------------------------------------
// The decision procedure

namespace detail {

inline Verdict no_solution(const ProblemInstance& inst, Certificate cert, std::string reason) {
    Verdict v;
    v.kind = VerdictKind::NoSolution;
    v.certificate = std::move(cert);
    v.reason = std::move(reason);
    (void)inst;
    return v;
}

// Known solutions consistent with the failed hypotheses: corpus entries for
// the same a (and same n for the congruent group), plus classifier sporadics.
inline std::vector<SolutionTuple> gather_witnesses(const ProblemInstance& inst,
                                                   const ConditionReport& rep) {
    std::vector<SolutionTuple> out;
    auto add = [&](const SolutionTuple& t) {
        if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
    };
    if (!rep.congruence_ok) {
        for (const auto& t : corpus_examples(CorpusGroup::CongruentExamples, &inst.a))
            if (t.n == inst.n) add(t);
        if (rep.a_in_special_set && (inst.n == 5 || inst.n == 7 || inst.n == 13)) {
            for (const auto& sub : classify_small_n(inst.a, inst.n))
                for (const auto& t : sub.sporadics)
                    if (t.n == inst.n) add(t);
        }
    }
    if (!rep.b_prime_power.value) {
        for (const auto& t : corpus_examples(CorpusGroup::CompositeBExamples, &inst.a)) add(t);
    }
    return out;
}

inline void note_failures(const ConditionReport& rep, unsigned n, std::vector<std::string>& out) {
    if (!rep.b_prime_power.value)
        out.push_back(rep.b_prime_power.unknown ? "b = +-q^r undetermined within budget"
                                                : "b is not +-(odd prime)^r");
    if (!rep.congruence_ok)
        out.push_back("2^(n-1) * b^l = +-1 (mod a) for one sign of b");
    if (!rep.gcd_n_b_ok) out.push_back("gcd(n, b) > 1");
    (void)n;
}

}  // namespace detail

inline Verdict solve(const ProblemInstance& inst) {
    ConditionReport rep = condition_report(inst);
    Verdict v;

    if (rep.a_mod4 == 1) {
        return detail::no_solution(
            inst, Certificate{Mod4Reduction{}, inst},
            "a = 1 (mod 4): reducing modulo 4 leaves no residue for 4*y^n");
    }

    if (rep.a_in_special_set) {
        if (inst.n == 3 && inst.a == 7) {
            v.kind = VerdictKind::FamilyCase;
            v.families.assign(all_families.begin(), all_families.end());
            v.membership = is_member(inst.blpow());
            v.reason = "a = 7, n = 3: all solutions fall into the six Pell-generated families";
            if (v.membership->found) {
                v.reason += "; b^l is member " + std::to_string(v.membership->found->second) +
                            " of " + family_name(v.membership->found->first);
            } else if (v.membership->exhausted) {
                v.reason += "; family membership of b^l undecided within budget";
            } else {
                v.reason += "; b^l is not a family member";
            }
            return v;
        }
        if (inst.n == 3) {  // a special, a != 7
            if (rep.b_prime_power.value && rep.congruence_ok && rep.gcd_n_b_ok) {
                return detail::no_solution(
                    inst, Certificate{TheoremCitation{"special_prime_eq3"}, inst},
                    "class-number-one prime a != 7 with n = 3, 4*b^l != +-1 (mod a), gcd(3, b) = 1");
            }
        } else {  // a special, n > 3
            if (rep.b_prime_power.value && rep.congruence_ok && rep.gcd_n_b_ok) {
                return detail::no_solution(
                    inst, Certificate{TheoremCitation{"special_prime_gt3"}, inst},
                    "class-number-one prime a with prime n > 3, 2^(n-1)*b^l != +-1 (mod a), gcd(n, b) = 1");
            }
        }
        v.kind = VerdictKind::Undecided;
        detail::note_failures(rep, inst.n, v.failed_conditions);
        v.witnesses = detail::gather_witnesses(inst, rep);
        v.reason = "hypotheses of the no-solution rules fail";
        return v;
    }

    if (inst.a == 3) {
        v.kind = VerdictKind::Undecided;
        v.failed_conditions.push_back("a = 3 is outside both no-solution rules");
        v.reason = "a = 3 is excluded from the class-number rule; only b = +-1 is classically settled "
                   "(3x^2 + 1 = 4y^n has (x, y) = (1, 1) as its only positive solution)";
        return v;
    }

    // general square-free a, a = 3 (mod 4), outside the special set
    detail::note_failures(rep, inst.n, v.failed_conditions);
    if (inst.n == 3) {
        v.failed_conditions.push_back("n = 3 is outside the class-number rule (requires n > 3)");
    } else if (!rep.h) {
        v.failed_conditions.push_back("class number h(-a) out of computation range");
    } else if (!*rep.gcd_n_h_ok) {
        v.failed_conditions.push_back("gcd(n, h(-a)) = gcd(" + std::to_string(inst.n) + ", " +
                                      std::to_string(*rep.h) + ") > 1");
    }
    if (v.failed_conditions.empty()) {
        return detail::no_solution(
            inst, Certificate{TheoremCitation{"class_number_coprime"}, inst},
            "square-free a with gcd(n, h(-a)) = 1, prime n > 3, 2^(n-1)*b^l != +-1 (mod a), gcd(n, b) = 1");
    }
    v.kind = VerdictKind::Undecided;
    v.witnesses = detail::gather_witnesses(inst, rep);
    v.reason = "hypotheses of the no-solution rules fail";
    return v;
}

}  // namespace lln
