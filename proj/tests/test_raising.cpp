#include "doctest.h"
#include "support.hpp"

#include "walks/oracle.hpp"
#include "walks/raising.hpp"
#include "walks/sixstep.hpp"
#include "walks/transducer.hpp"

using namespace walks;
using namespace walks::testing;

namespace {

Pairing pairs(std::initializer_list<std::pair<std::size_t, std::size_t>> solid,
              std::initializer_list<std::pair<std::size_t, std::size_t>> dashed) {
    Pairing p;
    for (auto [a, b] : solid) p.push_back({a, b, PairKind::Solid});
    for (auto [a, b] : dashed) p.push_back({a, b, PairKind::Dashed});
    std::sort(p.begin(), p.end());
    return p;
}

}  // namespace

TEST_CASE("three-step raising on the worked example") {
    const P1Raising r = raising_p1(tan(1, eu_input), true);
    CHECK(format_word(r.motzkin) == "L U L U U L D D D");
    CHECK(format_word(r.motzkin, TokenStyle::Numeric) == "0 1 0 1 1 0 -1 -1 -1");
    CHECK(format_marked_word(r.snapshots[2], false) == "L• U D•");
    CHECK(r.pairing == pairs({{2, 3}, {5, 6}, {4, 9}}, {{6, 7}, {3, 8}}));
    CHECK(noncrossing(r.pairing, PairKind::Solid));
    CHECK(noncrossing(r.pairing, PairKind::Dashed));
}

TEST_CASE("three passes on the worked example") {
    const EuResult e = eu_three_pass(tan(1, eu_input));
    REQUIRE(e.passes.size() == 3);
    CHECK(e.passes[0] == "0 0 SE 0 0 SE W W SE");
    // The algorithm as stated gives this after pass 2; see the decisions ledger.
    CHECK(e.passes[1] == "0 1 -1 1 1 -1 W W -1");
    CHECK(e.passes[2] == "0 1 0 1 1 0 -1 -1 -1");
    CHECK(e.motzkin == raising_p1(tan(1, eu_input)).motzkin);
    CHECK(e.pairing == pairs({{2, 3}, {4, 6}, {5, 9}}, {{3, 7}, {6, 8}}));
    CHECK(e.pairing != raising_p1(tan(1, eu_input)).pairing);
}

TEST_CASE("membership violations are reported with a position") {
    try {
        raising_p1(tan(1, "N W"));
        FAIL("expected a violation");
    } catch (const MembershipError& e) {
        CHECK(e.position() == 2);
    }
    CHECK_THROWS_AS(eu_three_pass(tan(1, "SE")), MembershipError);
    CHECK_THROWS_AS(raising_general(2, tan(2, "1")), MembershipError);
    CHECK_THROWS_AS(raising_sym(sym("S")), MembershipError);
    // N then NW leaves the quadrant at the second step.
    CHECK_THROWS_AS(raising_sym(sym("N NW")), MembershipError);
}

TEST_CASE("six-step raising") {
    CHECK(format_word(raising_sym(sym("N SE")).bicol) == "U D");
    CHECK(format_word(raising_sym(sym("E NW")).bicol) == "u d");
    const SymRaising r = raising_sym(sym("N E SE NW W"), true);
    CHECK(r.bicol == psi_sym(sym("N E SE NW W")).output);
    CHECK(r.snapshots.size() == 5);
}

TEST_CASE("general raising on the p = 5 example") {
    const GeneralRaising g = raising_general(5, tan(5, fig12_wbar), true);
    CHECK(format_word(g.luk) == fig12_w);
    REQUIRE(g.snapshots.size() == 21);
    CHECK(format_annotated_word(g.snapshots[0]) == "0^5_0");
    CHECK(format_annotated_word(g.snapshots[20]) ==
          "5^0_0 D^1_- D^1_- D^1_- 2^0_- D^0_- D^1_2 1^0_- D^0_- D^2_2 0^0_- D^4_1 4^1_0 D^1_- D^1_- D^1_- 3^0_- "
          "D^1_1 D^1_- D^1_- D^1_-");
    // Proxies are absolute positions: t = position - proxy.
    for (const auto& L : g.snapshots)
        for (std::size_t k = 0; k < L.size(); ++k)
            if (L[k].t >= 1) {
                CHECK(L[k].proxy == k + 1 - static_cast<std::size_t>(L[k].t));
                CHECK(L[L[k].proxy - 1].t == -1);
            }
}

TEST_CASE("general raising, p = 2 example") {
    CHECK(format_word(raising_general(2, tan(2, "2 D D 0")).luk) == "2 0 D D");
}

TEST_CASE("raisability never increases") {
    std::mt19937_64 rng(2);
    for (int p = 1; p <= 4; ++p)
        for (int k = 0; k < 100; ++k) {
            const GeneralRaising g = raising_general(p, random_ptandem(p, 24, rng), true);
            for (std::size_t i = 1; i < g.snapshots.size(); ++i)
                for (std::size_t j = 0; j < g.snapshots[i - 1].size(); ++j)
                    CHECK(g.snapshots[i][j].j <= g.snapshots[i - 1][j].j);
        }
}

TEST_CASE("each intermediate word is a half-plane walk and a prefix run") {
    std::mt19937_64 rng(4);
    for (int p = 1; p <= 3; ++p)
        for (int k = 0; k < 60; ++k) {
            const Word w = random_ptandem(p, 16, rng);
            const GeneralRaising g = raising_general(p, w, true);
            for (std::size_t i = 0; i < g.snapshots.size(); ++i) {
                std::vector<int> mus;
                for (const auto& a : g.snapshots[i]) mus.push_back(a.mu);
                const Word Li = Word::luk(p, mus);
                CHECK(is_member(Li, WalkClass::lukasiewicz(p)));
                CHECK(raising_general(p, w.prefix(i + 1)).luk == Li);
            }
        }
}

TEST_CASE("case c with m = p appends a letter of raisability 0") {
    const GeneralRaising g = raising_general(2, tan(2, "2 D D 0"), true);
    const auto& last = g.snapshots.back().back();
    CHECK(last.j == 0);
    CHECK(last.t > 0);
}

TEST_CASE("three-step pairings are noncrossing per kind") {
    for (std::size_t n = 0; n <= 10; ++n)
        enumerate_class(WalkClass::quarter(), n, [](const Word& w) {
            const P1Raising r = raising_p1(w);
            CHECK(noncrossing(r.pairing, PairKind::Solid));
            CHECK(noncrossing(r.pairing, PairKind::Dashed));
            CHECK(extract_pairing(r.history) == r.pairing);
        });
    CHECK(extract_pairing({}).empty());
}

TEST_CASE("p = 1 reduction") {
    for (std::size_t n = 0; n <= 10; ++n)
        enumerate_class(WalkClass::quarter(), n, [](const Word& w) {
            CHECK(raising_general(1, w).luk == raising_p1(w).motzkin);
        });
}

TEST_CASE("six-step raising agrees with the transducer") {
    const auto rep = verify_raising_sym_equivalence(7);
    INFO(format_report(rep));
    CHECK(rep.passed());
}
