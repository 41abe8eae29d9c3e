#pragma once

// The six infinite solution families of 7x^2 + (b^l)^2 = 4y^3, generated
// from Pell-type parametrizations.  Every member comes from an odd pair
// (u, v) through the closed forms
//
//   x = (3u^2 v - 7v^3)/4,   y = (u^2 + 7v^2)/4,   b^l = (u^3 - 21uv^2)/4,
//
// and is equation-verified on construction.  Sources of (u, v):
//
//   F1: odd solutions of u^2 - 21v^2 = 4
//   F2: (v, u) = ( s + 3r,   s + 7r )   with s^2 - 21r^2 = 1
//   F3: (v, u) = (-s + 3r,   s - 7r )
//   F4: (v, u) = ( s + 3r, 3(s + 7r))
//   F5: (v, u) = (-s + 3r, 3(s - 7r))
//   F6: odd solutions (u, t) of u^2 - 21t^2 = 4, with v = 3t
//
// The expanded per-family polynomial formulas in (s, r) are avoided on
// purpose: deriving members from (u, v) plus an exact equation check is
// immune to transcription slips in those expansions.

#include "lln/arith.hpp"
#include "lln/pell.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lln {

enum class FamilyId { F1, F2, F3, F4, F5, F6 };

inline constexpr std::array<FamilyId, 6> all_families = {
    FamilyId::F1, FamilyId::F2, FamilyId::F3, FamilyId::F4, FamilyId::F5, FamilyId::F6,
};

inline std::string family_name(FamilyId id) {
    switch (id) {
        case FamilyId::F1: return "F1";
        case FamilyId::F2: return "F2";
        case FamilyId::F3: return "F3";
        case FamilyId::F4: return "F4";
        case FamilyId::F5: return "F5";
        case FamilyId::F6: return "F6";
    }
    throw std::invalid_argument("family_name: bad id");
}

struct FamilyMember {
    FamilyId id;
    unsigned index;  // 1-based position within the family
    Int u, v;
    Int x, y, blpow;
    Int congruence_flag;  // residue of 4*blpow mod 7, in [0, 7)
    MaybePrimePower prime_power_flag;
    bool coprime_xy;

    bool congruent_pm1_mod7() const { return congruence_flag == 1 || congruence_flag == 6; }
};

namespace detail {

inline FamilyMember make_family_member(FamilyId id, unsigned index, const Int& u, const Int& v) {
    if (is_even(u) || is_even(v))
        throw std::logic_error("make_family_member: parameters must be odd");
    Int x4 = 3 * u * u * v - 7 * v * v * v;
    Int y4 = u * u + 7 * v * v;
    Int b4 = u * u * u - 21 * u * v * v;
    if (x4 % 4 != 0 || y4 % 4 != 0 || b4 % 4 != 0)
        throw std::logic_error("make_family_member: closed forms not integral");
    FamilyMember m;
    m.id = id;
    m.index = index;
    m.u = u;
    m.v = v;
    m.x = x4 / 4;
    m.y = y4 / 4;
    m.blpow = b4 / 4;
    if (7 * m.x * m.x + m.blpow * m.blpow != 4 * m.y * m.y * m.y)
        throw std::logic_error("make_family_member: member fails the equation");
    m.congruence_flag = ((4 * m.blpow) % 7 + 7) % 7;
    m.prime_power_flag = odd_prime_power(m.blpow);
    m.coprime_xy = gcd(m.x, m.y) == 1;
    return m;
}

}  // namespace detail

// Lazily produces the members of one family in generation order.
class FamilyGenerator {
  public:
    explicit FamilyGenerator(FamilyId id) : id_(id) {}

    FamilyMember next() {
        ++index_;
        switch (id_) {
            case FamilyId::F1:
            case FamilyId::F6: {
                advance_pell_odd();
                if (id_ == FamilyId::F1)
                    return detail::make_family_member(id_, index_, pell_->u, pell_->v);
                return detail::make_family_member(id_, index_, pell_->u, 3 * pell_->v);
            }
            case FamilyId::F2:
            case FamilyId::F3:
            case FamilyId::F4:
            case FamilyId::F5: {
                Int v, u;
                switch (id_) {
                    case FamilyId::F2: v = s_ + 3 * r_, u = s_ + 7 * r_; break;
                    case FamilyId::F3: v = -s_ + 3 * r_, u = s_ - 7 * r_; break;
                    case FamilyId::F4: v = s_ + 3 * r_, u = 3 * (s_ + 7 * r_); break;
                    default:           v = -s_ + 3 * r_, u = 3 * (s_ - 7 * r_); break;
                }
                advance_unit();
                return detail::make_family_member(id_, index_, u, v);
            }
        }
        throw std::logic_error("FamilyGenerator: bad id");
    }

  private:
    // next solution of u^2 - 21v^2 = 4 with both components odd
    void advance_pell_odd() {
        if (pell_)
            pell_ = next_solution(*pell_);
        else
            pell_ = fundamental_solution(PellForm(21, 4));
        while (!(is_odd(pell_->u) && is_odd(pell_->v))) pell_ = next_solution(*pell_);
    }

    // next solution of s^2 - 21r^2 = 1, starting from the unit (1, 0)
    void advance_unit() {
        Int s2 = 55 * s_ + 252 * r_;
        Int r2 = 12 * s_ + 55 * r_;
        s_ = std::move(s2);
        r_ = std::move(r2);
    }

    FamilyId id_;
    unsigned index_ = 0;
    std::optional<PellSolution> pell_;
    Int s_ = 1, r_ = 0;
};

inline std::vector<FamilyMember> generate(FamilyId id, unsigned count) {
    if (count < 1) throw std::invalid_argument("generate: count must be positive");
    std::vector<FamilyMember> out;
    out.reserve(count);
    FamilyGenerator gen(id);
    for (unsigned i = 0; i < count; ++i) out.push_back(gen.next());
    return out;
}

struct MembershipResult {
    std::optional<std::pair<FamilyId, unsigned>> found;  // family and 1-based index
    bool exhausted = false;  // budget ran out before the search became definitive
};

// Searches the families in order of increasing |blpow| (ties broken by
// family order) for a member with blpow = +-value.  The search is definitive
// once every family's next member exceeds |value|, because |blpow| increases
// strictly along each family.
inline MembershipResult is_member(const Int& value, unsigned budget = 600) {
    if (is_even(value)) throw std::invalid_argument("is_member: value must be odd");
    Int target = abs(value);
    std::vector<FamilyGenerator> gens;
    std::vector<FamilyMember> heads;
    for (FamilyId id : all_families) {
        gens.emplace_back(id);
        heads.push_back(gens.back().next());
    }
    MembershipResult out;
    for (unsigned examined = heads.size();; ++examined) {
        // family with the smallest |blpow| at its head (ties: lowest id)
        std::size_t best = 0;
        for (std::size_t i = 1; i < heads.size(); ++i)
            if (abs(heads[i].blpow) < abs(heads[best].blpow)) best = i;
        if (abs(heads[best].blpow) > target) return out;  // definitive miss
        if (abs(heads[best].blpow) == target) {
            out.found = {heads[best].id, heads[best].index};
            return out;
        }
        if (examined >= budget) {
            out.exhausted = true;
            return out;
        }
        heads[best] = gens[best].next();
    }
}

}  // namespace lln
