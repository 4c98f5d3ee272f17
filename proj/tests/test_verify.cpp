#include <doctest.h>

#include <map>

#include "bosonic/demazure.hpp"
#include "bosonic/verify.hpp"

using namespace bosonic;

TEST_CASE("uncolored YBE holds for both families") {
    for (Family fam : {Family::P, Family::R}) {
        VerificationReport rep = check_ybe_uncolored(fam, 2);
        CHECK(rep.pass());
        CHECK(rep.cases_checked == 16 * 9);
    }
}

TEST_CASE("uncolored YBE fault injection fails") {
    UncoloredHooks hooks;
    hooks.vertex = [](Family fam, HSpin a, VSpinU b, HSpin c, VSpinU d, int zi, int rank) {
        LaurentPoly w = uncolored_weight(fam, a, b, c, d, zi, rank);
        if (a.is_minus() && c.is_plus()) return -w;  // flip the C-weight sign
        return w;
    };
    CHECK_FALSE(check_ybe_uncolored(Family::R, 2, hooks).pass());

    UncoloredHooks rhooks;
    rhooks.rmatrix = [](HSpin sw, HSpin nw, HSpin ne, HSpin se, int zi, int zj, int rank) {
        LaurentPoly w = rmatrix_uncolored(sw, nw, ne, se, zi, zj, rank);
        if (sw.is_minus() && nw.is_plus() && ne.is_minus())
            return w * LaurentPoly::t(rank, 1);
        return w;
    };
    CHECK_FALSE(check_ybe_uncolored(Family::R, 2, rhooks).pass());
}

TEST_CASE("colored YBE small sweep") {
    for (Family fam : {Family::P, Family::R}) {
        VerificationReport rep = check_ybe_colored(fam, 2, 2);
        CHECK(rep.pass());
    }
    // threaded run gives the same statistics
    VerificationReport seq = check_ybe_colored(Family::R, 2, 1, 1);
    VerificationReport par = check_ybe_colored(Family::R, 2, 1, 2);
    CHECK(seq.cases_checked == par.cases_checked);
    CHECK(par.pass());
}

TEST_CASE("colored YBE fault injection fails") {
    ColoredHooks hooks;
    hooks.vertex = [](Family fam, HSpin a, const VSpinC& b, HSpin c, const VSpinC& d,
                      int zi, int rank) {
        LaurentPoly w = fused_weight(fam, a, b, c, d, zi, rank);
        if (a.is_color() && c.is_plus()) return w * LaurentPoly::t(rank, 1);
        return w;
    };
    CHECK_FALSE(check_ybe_colored(Family::R, 2, 2, 1, hooks).pass());
}

TEST_CASE("auxiliary YBE all colors, small") {
    for (Family fam : {Family::P, Family::R})
        for (int k = 1; k <= 2; ++k) CHECK(check_ybe_aux(fam, 2, k, 3).pass());
    for (int k = 1; k <= 3; ++k) CHECK(check_ybe_aux(Family::R, 3, k, 2).pass());
}

TEST_CASE("auxiliary YBE fault injection fails") {
    AuxHooks hooks;
    hooks.rmatrix = [](int color, HSpin sw, HSpin nw, HSpin ne, HSpin se, int zi, int zj,
                       int rank) {
        LaurentPoly w = rmatrix_aux(color, sw, nw, ne, se, zi, zj, rank);
        if (sw.is_color() && nw.is_color() && sw != nw && ne == nw)
            return w * LaurentPoly::constant(rank, 2);
        return w;
    };
    bool any_fail = false;
    for (int k = 1; k <= 2; ++k)
        any_fail = any_fail || !check_ybe_aux(Family::R, 2, k, 2, hooks).pass();
    CHECK(any_fail);
}

TEST_CASE("local lifting, rank 2") {
    VerificationReport rep = check_local_lifting(2, 3);
    CHECK(rep.pass());
    CHECK(rep.cases_checked > 0);
}

TEST_CASE("global lifting holds for R and fails for P") {
    CHECK(check_global_lifting({1, 0}, {1, 2}, Family::R).pass());
    CHECK(check_global_lifting({2, 1}, {2, 1}, Family::R).pass());
    // an improper flag (repeated colors) also lifts
    CHECK(check_global_lifting({2, 1}, {1, 1}, Family::R).pass());
    CHECK(check_global_lifting({2, 1, 0}, {1, 2, 3}, Family::R).pass());
    // the P-family counterexample documents the R-only scope
    VerificationReport p = check_global_lifting({0, 0}, {1, 2}, Family::P);
    CHECK_FALSE(p.pass());
    REQUIRE(p.failures.size() == 1);
    CHECK(p.failures[0].lhs == LaurentPoly::constant(2, 1));  // Z_P^unc = P_0 = 1
}

TEST_CASE("monostatic check") {
    CHECK(check_monostatic({4, 2, 2}, {1, 3, 2}).pass());
    CHECK(check_monostatic({1, 0, -1}, {3, 2, 1}).pass());
    CHECK(check_monostatic({0, 0}, {2, 1}).pass());
}

TEST_CASE("demazure evaluation, rank 2") {
    CHECK(check_demeval({1, 0}).pass());
    CHECK(check_demeval({2, 0}).pass());
}

TEST_CASE("demazure evaluation spot checks, rank 4") {
    for (const Permutation& w :
         {Permutation({2, 1, 4, 3}), Permutation({4, 1, 2, 3}), Permutation::longest(4)})
        for (const Permutation& y : {Permutation::identity(4), Permutation({1, 3, 2, 4})}) {
            SystemSpec spec =
                SystemSpec::colored(Family::R, {2, 1, 1, 0}, flag_of(y), flag_of(w));
            CHECK(partition_function(spec) == tau({2, 1, 1, 0}, w, y));
        }
}

TEST_CASE("state-level lifting refines the global identity") {
    // Summing colored state weights over the fibers of the color-forgetting
    // projection reproduces each uncolored state weight individually.
    const WeightVec lam{2, 1};
    const int r = 2;
    auto project = [&](const State& s) {
        std::string key;
        for (const auto& row : s.h) {
            for (HSpin h : row) key += h.is_plus() ? '+' : '-';
            key += '|';
        }
        for (const auto& level : s.v_mult)
            for (const auto& v : level) {
                int total = 0;
                for (int m : v) total += m;
                key += static_cast<char>('0' + total);
            }
        return key;
    };
    std::map<std::string, LaurentPoly> fibers;
    std::vector<int> flag{1, 2};
    std::vector<int> d = flag;
    std::sort(d.begin(), d.end());
    do {
        for_each_state(SystemSpec::colored(Family::R, lam, flag, d),
                       [&](const State& s, const LaurentPoly& w) {
                           auto [it, fresh] =
                               fibers.emplace(project(s), LaurentPoly::zero(r));
                           it->second += w;
                           return true;
                       });
    } while (std::next_permutation(d.begin(), d.end()));

    long long uncolored_states = 0;
    for_each_state(SystemSpec::uncolored(Family::R, lam),
                   [&](const State& s, const LaurentPoly& w) {
                       ++uncolored_states;
                       std::string key;
                       for (const auto& row : s.h) {
                           for (HSpin h : row) key += h.is_plus() ? '+' : '-';
                           key += '|';
                       }
                       for (const auto& level : s.v_count)
                           for (int v : level) key += static_cast<char>('0' + v);
                       REQUIRE(fibers.count(key) == 1);
                       CHECK(fibers.at(key) == w);
                       fibers.erase(key);
                       return true;
                   });
    CHECK(uncolored_states > 1);
    CHECK(fibers.empty());  // every colored state projects onto some uncolored state
}

TEST_CASE("demazure train argument, rank 2") {
    for (const auto& w : all_permutations(2)) {
        CHECK(check_demtrain({1, 0}, 1, w).pass());
        CHECK(check_demtrain({2, 1}, 1, w).pass());
    }
}

TEST_CASE("demazure train argument, rank 3 full sweep") {
    for (const auto& w : all_permutations(3))
        for (int i = 1; i <= 2; ++i) CHECK(check_demtrain({2, 1, 0}, i, w).pass());
}

TEST_CASE("uncolored partition function identities") {
    CHECK(check_uncolored_pf({1, 1}).pass());
    CHECK(check_uncolored_pf({2, 0}).pass());
    CHECK(check_uncolored_pf({0, 0, 0}).pass());
    CHECK(check_uncolored_pf({3, 1, 0}).pass());
}

TEST_CASE("laurent property sweep") {
    VerificationReport rep = check_laurent_properties(3, 50, 20240205);
    CHECK(rep.pass());
    CHECK(rep.cases_checked > 0);
}
