#include "lln/families.hpp"

#include <doctest.h>

#include <vector>

using namespace lln;

TEST_CASE("frozen first members of every family") {
    // (x, y, blpow) triples, verified by direct substitution
    auto check = [](FamilyId id, unsigned idx, long long x, long long y, long long blpow) {
        FamilyMember m = generate(id, idx)[idx - 1];
        CAPTURE(family_name(id));
        CAPTURE(idx);
        CHECK(m.x == x);
        CHECK(m.y == y);
        CHECK(m.blpow == blpow);
    };
    check(FamilyId::F1, 1, 17, 8, 5);
    check(FamilyId::F1, 2, 1765, 176, 23);
    check(FamilyId::F2, 1, -1, 2, -5);
    check(FamilyId::F2, 2, -91, 19322, -5371655);
    check(FamilyId::F3, 1, 1, 2, -5);
    check(FamilyId::F3, 2, 19, 842, 48865);
    check(FamilyId::F4, 1, 5, 4, -9);
    check(FamilyId::F4, 2, 10549175, 57964, -1251);
    check(FamilyId::F5, 1, -5, 4, -9);
    check(FamilyId::F5, 2, -95855, 2524, 261);
    check(FamilyId::F6, 1, 9, 22, -205);
    check(FamilyId::F6, 2, 45, 526, -24127);
}

TEST_CASE("every generated member satisfies the cubic equation exactly") {
    for (FamilyId id : all_families) {
        std::vector<FamilyMember> members = generate(id, 25);
        REQUIRE(members.size() == 25);
        Int prev_abs = 0;
        for (const FamilyMember& m : members) {
            CAPTURE(family_name(id));
            CAPTURE(m.index);
            CHECK(7 * m.x * m.x + m.blpow * m.blpow == 4 * m.y * m.y * m.y);
            CHECK(is_odd(m.u));
            CHECK(is_odd(m.v));
            CHECK(abs(m.blpow) > prev_abs);  // strictly increasing within the family
            prev_abs = abs(m.blpow);
            CHECK(m.congruent_pm1_mod7());  // observed on every member so far
            CHECK(is_even(m.y));            // consistent with a = 7 = 7 (mod 8)
        }
    }
}

TEST_CASE("family parameters satisfy their defining conics") {
    for (const FamilyMember& m : generate(FamilyId::F1, 10))
        CHECK(m.u * m.u - 21 * m.v * m.v == 4);
    for (const FamilyMember& m : generate(FamilyId::F6, 10)) {
        CHECK(m.v % 3 == 0);
        Int t = m.v / 3;
        CHECK(m.u * m.u - 21 * t * t == 4);
    }
    for (const FamilyMember& m : generate(FamilyId::F2, 10))
        CHECK(7 * m.v * m.v - 3 * m.u * m.u == 4);
    for (const FamilyMember& m : generate(FamilyId::F3, 10))
        CHECK(7 * m.v * m.v - 3 * m.u * m.u == 4);
    for (const FamilyMember& m : generate(FamilyId::F4, 10)) {
        CHECK(m.u % 3 == 0);
        Int t = m.u / 3;
        CHECK(7 * m.v * m.v - 3 * t * t == 4);
    }
    for (const FamilyMember& m : generate(FamilyId::F5, 10)) {
        CHECK(m.u % 3 == 0);
        Int t = m.u / 3;
        CHECK(7 * m.v * m.v - 3 * t * t == 4);
    }
}

TEST_CASE("membership search") {
    auto r5 = is_member(5);
    REQUIRE(r5.found.has_value());
    CHECK(r5.found->first == FamilyId::F1);  // ties at |blpow| = 5 go to the lowest id
    CHECK(r5.found->second == 1);

    auto r23 = is_member(23);
    REQUIRE(r23.found.has_value());
    CHECK(r23.found->first == FamilyId::F1);
    CHECK(r23.found->second == 2);

    auto r9 = is_member(-9);
    REQUIRE(r9.found.has_value());
    CHECK(r9.found->first == FamilyId::F4);
    CHECK(r9.found->second == 1);

    auto r205 = is_member(205);  // F6 stores blpow = -205; sign-insensitive
    REQUIRE(r205.found.has_value());
    CHECK(r205.found->first == FamilyId::F6);

    auto r7 = is_member(7);
    CHECK_FALSE(r7.found.has_value());
    CHECK_FALSE(r7.exhausted);  // definitive: all heads already exceed 7

    auto rbudget = is_member(Int("1000000000000000000000001"), 12);
    CHECK_FALSE(rbudget.found.has_value());
    CHECK(rbudget.exhausted);

    CHECK_THROWS_AS(is_member(4), std::invalid_argument);
}

TEST_CASE("membership agrees with generation on a prefix of every family") {
    for (FamilyId id : all_families) {
        for (const FamilyMember& m : generate(id, 4)) {
            auto r = is_member(m.blpow, 4000);
            REQUIRE(r.found.has_value());
            // the found member must carry the same |blpow| (ties between
            // families can legitimately resolve to an earlier id)
            FamilyMember found = generate(r.found->first, r.found->second).back();
            CHECK(abs(found.blpow) == abs(m.blpow));
        }
    }
}

TEST_CASE("generator validation") {
    CHECK_THROWS_AS(generate(FamilyId::F1, 0), std::invalid_argument);
    CHECK(family_name(FamilyId::F3) == "F3");
}
