#include "doctest.h"
#include "support.hpp"

#include "walks/oracle.hpp"
#include "walks/pda.hpp"
#include "walks/sixstep.hpp"
#include "walks/transducer.hpp"

using namespace walks;
using namespace walks::testing;

TEST_CASE("the eleven rules") {
    const PushdownTransducer t = build_p1_pdt();
    CHECK(t.rules.size() == 11);
    CHECK(t.deterministic());
    CHECK(t.well_formed());
    const std::string dump = dump_rules(t);
    CHECK(dump.find("U; ι/ιι, ι/ι; N\n") != std::string::npos);
    CHECK(dump.find("D; o/o, o/o") == std::string::npos);
    int up = 0, level = 0, down = 0;
    for (const auto& r : t.rules) {
        const int mu = std::get<LukLetter>(r.input).mu;
        (mu == 1 ? up : mu == 0 ? level : down) += 1;
    }
    CHECK(up == 4);
    CHECK(level == 4);
    CHECK(down == 3);
    CHECK(t.initial == PdtConfig{0, {StackSym::o()}, {StackSym::o()}});
}

TEST_CASE("running the eleven rules") {
    const PushdownTransducer t = build_p1_pdt();
    const PdtRun a = run_pdt(t, luk(1, fig4_motzkin));
    CHECK(a.accepted);
    CHECK(format_word(recode(a.output, RecodeScheme::QuarterToYamanouchi)) == fig4_yamanouchi);

    const PdtRun b = run_pdt(t, luk(1, "D"));
    CHECK(b.reject_position == 1);
    CHECK_FALSE(b.accepted);

    const PdtRun c = run_pdt(t, luk(1, "U"));
    CHECK(format_word(c.output) == "N");
    CHECK_FALSE(c.accepted);
    CHECK(c.final_config.stack1 == StackWord{StackSym::o(), StackSym::iota()});
    CHECK(c.final_config.stack2 == StackWord{StackSym::o()});
}

TEST_CASE("generated machines") {
    for (int p = 1; p <= 5; ++p) {
        const PushdownTransducer g = generate_pdt(PdtModel::General, p);
        CHECK(g.deterministic());
        CHECK(g.well_formed());
        // T6 rules read -1 and rewrite a_{l,m} to a_{l,m+1}.
        int t6 = 0;
        for (const auto& r : g.rules)
            if (std::get<LukLetter>(r.input).mu == -1 && r.top1.kind == StackSym::Kind::A && r.repl1.size() == 1 &&
                r.repl1[0] == StackSym::a(r.top1.l, r.top1.m + 1))
                ++t6;
        CHECK(t6 == p * (p - 1) / 2);
    }
    const PushdownTransducer s = generate_pdt(PdtModel::SixStep);
    CHECK(s.deterministic());
    CHECK(s.well_formed());
    CHECK(alphabet_letters(s.input_alphabet).size() == 6);
}

TEST_CASE("the generated p = 1 machine is the eleven rules up to renaming") {
    const PushdownTransducer g = generate_pdt(PdtModel::General, 1);
    CHECK(g.rules.size() == 11);
    CHECK(same_rules(relabel(g, {{StackSym::a(0, 0), StackSym::iota()}}, true), build_p1_pdt()));
    CHECK_FALSE(same_rules(g, build_p1_pdt()));
}

TEST_CASE("machines agree with the counter transducers") {
    for (auto [p, n] : {std::pair{1, 10}, {2, 7}, {3, 6}}) {
        const auto rep = verify_pdt_equivalence(p, n);
        INFO(format_report(rep));
        CHECK(rep.passed());
    }
    const auto rep = verify_pdt_sym_equivalence(6);
    INFO(format_report(rep));
    CHECK(rep.passed());
}

TEST_CASE("stacks keep their sentinel") {
    const PushdownTransducer g = generate_pdt(PdtModel::General, 3);
    std::mt19937_64 rng(9);
    for (int k = 0; k < 50; ++k) {
        const Word w = psi_p(3, random_ptandem(3, 18, rng)).output;
        const PdtRun r = run_pdt(g, w);
        CHECK(r.final_config.stack1.front() == StackSym::o());
        CHECK(r.final_config.stack2.front() == StackSym::o());
    }
}
