#include "doctest.h"
#include "support.hpp"

#include "walks/oracle.hpp"

using namespace walks;
using namespace walks::testing;

TEST_CASE("parse and format round trip on canonical text") {
    for (auto text : {fig12_w, fig12_wbar}) CHECK(format_word(luk(5, text)) == text);
    CHECK(format_word(tan(5, fig12_wbar)) == fig12_wbar);
    CHECK(format_word(luk(1, fig4_motzkin)) == fig4_motzkin);
    CHECK(format_word(tan(1, eu_input)) == eu_input);
    CHECK(format_word(sym("N NW S")) == "N NW S");
    CHECK(format_word(bic("U l d L")) == "U l d L");
    CHECK(format_word(yam(fig4_yamanouchi)) == fig4_yamanouchi);
    CHECK(format_word(Word(AlphabetSpec::tandem(3))) == "");
}

TEST_CASE("the example word has 21 letters") {
    const Word w = luk(5, fig12_w);
    REQUIRE(w.size() == 21);
    CHECK(w.values().front() == 5);
    CHECK(w.values()[4] == 2);
    CHECK(std::get<LukLetter>(w[1]).mu == -1);
}

TEST_CASE("numeric style prints -1") {
    CHECK(format_word(luk(1, "U L D"), TokenStyle::Numeric) == "1 0 -1");
    CHECK(format_word(tan(1, "N W SE"), TokenStyle::Numeric) == "1 0 -1");
    CHECK(format_word(luk(1, "1 0 -1")) == "U L D");
}

TEST_CASE("parse errors name the offending token") {
    CHECK_THROWS_WITH_AS(luk(3, "4"), doctest::Contains("out of range"), WordError);
    CHECK_THROWS_WITH_AS(luk(3, "1 D x"), doctest::Contains("3"), WordError);
    CHECK_THROWS_AS(sym("N U"), WordError);
    CHECK_THROWS_AS(yam("1 4"), WordError);
    CHECK_THROWS_AS(tan(2, "N"), WordError);  // compass aliases only at p = 1
}

TEST_CASE("bicoloured tokens") {
    const Word w = bic("U D L");
    REQUIRE(w.size() == 3);
    CHECK(std::get<BicolLetter>(w[0]) == BicolLetter{Dir3::Up, Colour::Solid});
    CHECK(std::get<BicolLetter>(w[1]) == BicolLetter{Dir3::Down, Colour::Solid});
    CHECK(std::get<BicolLetter>(bic("l")[0]) == BicolLetter{Dir3::Level, Colour::Striped});
}

TEST_CASE("step vectors") {
    CHECK(step_vector(TandemLetter::long_step(3), 5) == StepVector{-2, 3});
    CHECK(step_vector(TandemLetter::se(), 4) == StepVector{1, -1});
    CHECK(step_vector(SymLetter{SymDir::NW}, 1) == StepVector{-1, 1});
    CHECK(step_vector(LukLetter{2}, 3) == StepVector{1, 2});
    CHECK(step_vector(BicolLetter{Dir3::Up, Colour::Striped}, 1) == StepVector{1, 1});
    CHECK(step_vector(YamLetter{3}, 1) == StepVector{-1, 0});
}

TEST_CASE("prefix paths") {
    CHECK(prefix_path(Word(AlphabetSpec::tandem(1))) == std::vector<LatticePoint>{{0, 0}});
    CHECK(prefix_path(tan(1, "N SE")) == std::vector<LatticePoint>{{0, 0}, {0, 1}, {1, 0}});
    // The drawn p = 5 walk ends at (9,9): 15 SE steps against long steps 5 3 3 4 5 4.
    CHECK(prefix_path(tan(5, fig12_wbar)).back() == LatticePoint{9, 9});
    CHECK(prefix_path(tan(1, "N"), {2, 3}).back() == LatticePoint{2, 4});
}

TEST_CASE("membership") {
    CHECK(is_member(luk(1, fig4_motzkin), WalkClass::motzkin()));
    CHECK_FALSE(is_member(luk(2, "D"), WalkClass::lukasiewicz(2)));
    CHECK(is_member(tan(1, "N N SE"), WalkClass::quarter()));
    CHECK_FALSE(is_member(tan(1, "N W"), WalkClass::quarter()));
    CHECK(is_member(tan(1, "N SE"), WalkClass::half_plane()));
    CHECK_FALSE(is_member(tan(1, "N"), WalkClass::half_plane()));
    CHECK(is_member(yam(fig4_yamanouchi), WalkClass::yamanouchi()));
    CHECK(is_member(luk(5, fig12_w), WalkClass::lukasiewicz(5)));
    CHECK(is_member(tan(5, fig12_wbar), WalkClass::ptandem(5)));
    CHECK(is_member(sym("E NW"), WalkClass::qsym()));
    CHECK_FALSE(is_member(sym("E S"), WalkClass::qsym()));
    CHECK(is_member(bic("u L d"), WalkClass::bicol()));
    CHECK_THROWS_AS(is_member(luk(1, "U"), WalkClass::quarter()), WordError);
}

TEST_CASE("is_member agrees with the tally oracle on every short word") {
    const std::vector<WalkClass> classes = {WalkClass::motzkin(),       WalkClass::half_plane(),
                                            WalkClass::quarter(),       WalkClass::yamanouchi(),
                                            WalkClass::qsym(),          WalkClass::bicol(),
                                            WalkClass::lukasiewicz(2),  WalkClass::ptandem(2),
                                            WalkClass::lukasiewicz(3),  WalkClass::ptandem(3)};
    for (const auto& c : classes)
        for (std::size_t n = 0; n <= 5; ++n)
            enumerate_all(c.alphabet(), n, [&](const Word& w) {
                INFO(to_string(c) << " " << format_word(w));
                CHECK(is_member(w, c) == oracle_member(w, c));
            });
}

TEST_CASE("recoding") {
    CHECK(format_word(recode(luk(1, "U D"), RecodeScheme::MotzkinToHalfPlane)) == "N SE");
    CHECK(format_word(recode(yam(fig4_yamanouchi), RecodeScheme::YamanouchiToQuarter)) ==
          "N SE N N SE SE N N N N SE N SE W SE W N N W SE N N SE N N");
    for (std::size_t n = 0; n <= 8; ++n) {
        std::uint64_t m = 0, h = 0, y = 0, q = 0;
        enumerate_class(WalkClass::motzkin(), n, [&](const Word& w) {
            ++m;
            const Word r = recode(w, RecodeScheme::MotzkinToHalfPlane);
            CHECK(is_member(r, WalkClass::half_plane()));
            CHECK(recode(r, RecodeScheme::HalfPlaneToMotzkin) == w);
        });
        h = enumerate_class(WalkClass::half_plane(), n, [](const Word&) {});
        enumerate_class(WalkClass::yamanouchi(), n, [&](const Word& w) {
            ++y;
            const Word r = recode(w, RecodeScheme::YamanouchiToQuarter);
            CHECK(is_member(r, WalkClass::quarter()));
            CHECK(recode(r, RecodeScheme::QuarterToYamanouchi) == w);
        });
        q = enumerate_class(WalkClass::quarter(), n, [](const Word&) {});
        CHECK(m == h);
        CHECK(y == q);
    }
}

TEST_CASE("reflection swaps coordinates") {
    CHECK(format_word(reflect(sym("N S E W SE NW"))) == "E W N S NW SE");
    CHECK(reflect(reflect(sym("N SE W"))) == sym("N SE W"));
}

TEST_CASE("words built from letters of another alphabet are refused") {
    CHECK_THROWS_AS(Word(AlphabetSpec::lukasiewicz(1), {LukLetter{2}}), WordError);
    CHECK_THROWS_AS(Word(AlphabetSpec::sym(), {YamLetter{1}}), WordError);
}
