#include "doctest.h"
#include "support.hpp"

#include "walks/oracle.hpp"

#include <cstdlib>
#include <set>

using namespace walks;
using namespace walks::testing;

TEST_CASE("Motzkin counts") {
    const std::vector<std::uint64_t> want = {1, 1, 2, 4, 9, 21, 51, 127, 323};
    for (std::size_t n = 0; n < want.size(); ++n) {
        CHECK(enumerate_class(WalkClass::motzkin(), n, [](const Word&) {}) == want[n]);
        CHECK(count_class(WalkClass::motzkin(), n) == want[n]);
    }
}

TEST_CASE("2-Lukasiewicz words of length 3") {
    std::set<std::vector<int>> got;
    for (const auto& w : collect_class(WalkClass::lukasiewicz(2), 3)) got.insert(w.values());
    CHECK(got == std::set<std::vector<int>>{{0, 0, 0}, {0, 1, -1}, {1, -1, 0}, {1, 0, -1}, {2, -1, -1}});
}

TEST_CASE("Qsym of length 1") {
    const auto ws = collect_class(WalkClass::qsym(), 1);
    REQUIRE(ws.size() == 2);
    CHECK(format_word(ws[0]) == "N");
    CHECK(format_word(ws[1]) == "E");
}

TEST_CASE("enumeration matches naive filtering") {
    const std::vector<WalkClass> classes = {WalkClass::motzkin(),      WalkClass::half_plane(),
                                            WalkClass::quarter(),      WalkClass::yamanouchi(),
                                            WalkClass::qsym(),         WalkClass::bicol(),
                                            WalkClass::lukasiewicz(2), WalkClass::ptandem(2),
                                            WalkClass::lukasiewicz(3), WalkClass::ptandem(3)};
    for (const auto& c : classes)
        for (std::size_t n = 0; n <= 6; ++n) {
            std::vector<std::vector<Letter>> naive, dfs;
            enumerate_all(c.alphabet(), n, [&](const Word& w) {
                if (oracle_member(w, c)) naive.push_back(w.letters());
            });
            enumerate_class(c, n, [&](const Word& w) { dfs.push_back(w.letters()); });
            INFO(to_string(c) << " n=" << n);
            CHECK(dfs.size() == naive.size());
            CHECK(std::set(dfs.begin(), dfs.end()).size() == dfs.size());
            CHECK(std::set(dfs.begin(), dfs.end()) == std::set(naive.begin(), naive.end()));
            CHECK(count_class(c, n) == dfs.size());
        }
}

TEST_CASE("enumeration is in lexicographic letter order") {
    const auto letters = alphabet_letters(AlphabetSpec::tandem(2));
    auto rank = [&](const Letter& l) { return std::find(letters.begin(), letters.end(), l) - letters.begin(); };
    std::vector<std::vector<long>> seen;
    enumerate_class(WalkClass::ptandem(2), 6, [&](const Word& w) {
        std::vector<long> r;
        for (const auto& l : w.letters()) r.push_back(rank(l));
        seen.push_back(r);
    });
    CHECK(std::is_sorted(seen.begin(), seen.end()));
}

TEST_CASE("the cap stops runaway enumeration") {
    CHECK_THROWS_AS(enumerate_class(WalkClass::qsym(), 8, [](const Word&) {}, 100), EnumerationCap);
    setenv("WALKS_MAX_ENUM", "5", 1);
    CHECK(enumeration_cap() == 5);
    CHECK_THROWS_AS(enumerate_class(WalkClass::motzkin(), 6, [](const Word&) {}), EnumerationCap);
    unsetenv("WALKS_MAX_ENUM");
    CHECK(enumeration_cap() == 10'000'000ULL);
}

TEST_CASE("exact counts beyond 64 bits") {
    const BigCount c = count_class(WalkClass::qsym(), 60);
    CHECK(c > BigCount(std::numeric_limits<std::uint64_t>::max()));
    CHECK(c == (BigCount(1) << 60) * count_class(WalkClass::quarter(), 60));
}

TEST_CASE("random p-tandem words stay in the quadrant") {
    std::mt19937_64 rng(1);
    for (int p = 1; p <= 5; ++p)
        for (int k = 0; k < 100; ++k) CHECK(is_member(random_ptandem(p, 40, rng), WalkClass::ptandem(p)));
    std::mt19937_64 a(42), b(42);
    CHECK(random_ptandem(3, 30, a) == random_ptandem(3, 30, b));
}

TEST_CASE("suites pass at small sizes") {
    std::vector<VerificationReport> reps = {
        verify_bijection_suite(1, 9),   verify_bijection_suite(2, 6),
        verify_two_n_law(7, 6),         verify_raising_transducer_equivalence(2, 7),
        verify_eu_equivalence(9),       verify_stack_lemmas(2, 7),
        verify_stack_lemmas(3, 6),      verify_stack_lemmas_random(5, 200, 30, 1),
    };
    for (const auto& r : reps) {
        INFO(format_report(r));
        CHECK(r.passed());
    }
}

TEST_CASE("the p = 5 example round trips and satisfies the lemmas") {
    VerificationReport rep;
    check_stack_lemmas(5, tan(5, fig12_wbar), rep);
    CHECK(rep.checked == 1);
    CHECK(rep.failures.empty());
}

TEST_CASE("reports") {
    VerificationReport a, b;
    a.name = "a";
    a.checked = 3;
    b.checked = 2;
    b.fail("x", "y", "z");
    CHECK(a.passed());
    a.merge(b);
    CHECK(a.checked == 5);
    CHECK_FALSE(a.passed());
    CHECK(format_report(a).rfind("FAIL a: 5 checked, 1 failures", 0) == 0);
    CHECK_FALSE(VerificationReport{}.passed());
}
