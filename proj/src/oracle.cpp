#include "walks/oracle.hpp"

#include "walks/parameters.hpp"
#include "walks/pda.hpp"
#include "walks/raising.hpp"
#include "walks/sixstep.hpp"
#include "walks/transducer.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

namespace walks {

bool oracle_member(const Word& w, const WalkClass& c) {
    if (!(w.alphabet() == c.alphabet())) throw WordError("oracle_member: alphabet does not fit " + to_string(c));
    const int p = c.p;
    switch (c.kind) {
    case WalkClassKind::Motzkin:
    case WalkClassKind::Lukasiewicz: {
        long h = 0;
        for (const auto& l : w.letters()) {
            h += std::get<LukLetter>(l).mu;
            if (h < 0) return false;
        }
        return h == 0;
    }
    case WalkClassKind::BicolMotzkin: {
        long h = 0;
        for (const auto& l : w.letters()) {
            Dir3 d = std::get<BicolLetter>(l).dir;
            h += d == Dir3::Up ? 1 : d == Dir3::Down ? -1 : 0;
            if (h < 0) return false;
        }
        return h == 0;
    }
    case WalkClassKind::HalfPlaneTandem: {
        long north = 0, se = 0;
        for (const auto& l : w.letters()) {
            int mb = std::get<TandemLetter>(l).mubar;
            if (mb == 1) ++north;
            if (mb == -1) ++se;
            if (se > north) return false;
        }
        return se == north;
    }
    case WalkClassKind::QuarterTandem1: {
        long north = 0, se = 0, west = 0;
        for (const auto& l : w.letters()) {
            int mb = std::get<TandemLetter>(l).mubar;
            (mb == 1 ? north : mb == -1 ? se : west) += 1;
            if (!(north >= se && se >= west)) return false;
        }
        return true;
    }
    case WalkClassKind::Yamanouchi3: {
        long c1 = 0, c2 = 0, c3 = 0;
        for (const auto& l : w.letters()) {
            int d = std::get<YamLetter>(l).digit;
            (d == 1 ? c1 : d == 2 ? c2 : c3) += 1;
            if (!(c1 >= c2 && c2 >= c3)) return false;
        }
        return true;
    }
    case WalkClassKind::QSym: {
        std::map<SymDir, long> n;
        for (const auto& l : w.letters()) {
            n[std::get<SymLetter>(l).dir] += 1;
            const long x = n[SymDir::E] + n[SymDir::SE] - n[SymDir::W] - n[SymDir::NW];
            const long y = n[SymDir::N] + n[SymDir::NW] - n[SymDir::S] - n[SymDir::SE];
            if (x < 0 || y < 0) return false;
        }
        return true;
    }
    case WalkClassKind::PTandem: {
        long se = 0, west = 0, north = 0;
        for (const auto& l : w.letters()) {
            int mb = std::get<TandemLetter>(l).mubar;
            if (mb < 0) {
                ++se;
            } else {
                west += p - mb;
                north += mb;
            }
            if (se < west || north < se) return false;
        }
        return true;
    }
    }
    return false;
}

std::uint64_t enumeration_cap() {
    if (const char* env = std::getenv("WALKS_MAX_ENUM")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
        }
    }
    return 10'000'000ULL;
}

namespace {

bool half_plane(const WalkClass& c) {
    switch (c.kind) {
    case WalkClassKind::Motzkin:
    case WalkClassKind::HalfPlaneTandem:
    case WalkClassKind::BicolMotzkin:
    case WalkClassKind::Lukasiewicz: return true;
    default: return false;
    }
}

struct Dfs {
    AlphabetSpec alphabet;
    std::vector<Letter> letters;
    std::vector<StepVector> steps;
    bool half;
    std::size_t n;
    std::uint64_t cap;
    const WordVisitor& visit;
    std::vector<Letter> cur;
    std::uint64_t emitted = 0;

    void go(long x, long y) {
        const std::size_t depth = cur.size();
        if (depth == n) {
            if (half && y != 0) return;
            if (++emitted > cap) throw EnumerationCap("enumeration exceeded cap of " + std::to_string(cap) + " words");
            visit(Word(alphabet, cur));
            return;
        }
        const long remaining = static_cast<long>(n - depth - 1);
        for (std::size_t k = 0; k < letters.size(); ++k) {
            const long nx = x + steps[k].dx, ny = y + steps[k].dy;
            if (ny < 0) continue;
            if (half ? ny > remaining : nx < 0) continue;
            cur.push_back(letters[k]);
            go(nx, ny);
            cur.pop_back();
        }
    }
};

}  // namespace

std::uint64_t enumerate_class(const WalkClass& c, std::size_t n, const WordVisitor& visit, std::uint64_t cap) {
    Dfs d{c.alphabet(), alphabet_letters(c.alphabet()), {}, half_plane(c), n, cap ? cap : enumeration_cap(), visit, {}};
    for (const auto& l : d.letters) d.steps.push_back(step_vector(l, c.p));
    d.cur.reserve(n);
    d.go(0, 0);
    return d.emitted;
}

std::vector<Word> collect_class(const WalkClass& c, std::size_t n) {
    std::vector<Word> out;
    enumerate_class(c, n, [&](const Word& w) { out.push_back(w); });
    return out;
}

std::uint64_t enumerate_all(const AlphabetSpec& a, std::size_t n, const WordVisitor& visit) {
    const auto letters = alphabet_letters(a);
    std::vector<std::size_t> idx(n, 0);
    std::vector<Letter> cur(n, letters.empty() ? Letter{} : letters[0]);
    std::uint64_t count = 0;
    while (true) {
        for (std::size_t k = 0; k < n; ++k) cur[k] = letters[idx[k]];
        visit(Word(a, cur));
        ++count;
        std::size_t k = n;
        while (k > 0) {
            --k;
            if (++idx[k] < letters.size()) break;
            idx[k] = 0;
            if (k == 0) return count;
        }
        if (n == 0) return count;
    }
}

BigCount count_class(const WalkClass& c, std::size_t n) {
    const auto letters = alphabet_letters(c.alphabet());
    std::vector<StepVector> steps;
    for (const auto& l : letters) steps.push_back(step_vector(l, c.p));
    const bool half = half_plane(c);
    std::map<std::pair<long, long>, BigCount> cur{{{0, 0}, 1}};
    for (std::size_t k = 0; k < n; ++k) {
        std::map<std::pair<long, long>, BigCount> next;
        for (const auto& [pt, cnt] : cur)
            for (const auto& s : steps) {
                const long x = half ? 0 : pt.first + s.dx;
                const long y = pt.second + s.dy;
                if (y < 0 || x < 0) continue;
                next[{x, y}] += cnt;
            }
        cur = std::move(next);
    }
    BigCount total = 0;
    for (const auto& [pt, cnt] : cur)
        if (!half || pt.second == 0) total += cnt;
    return total;
}

Word random_ptandem(int p, std::size_t n, std::mt19937_64& rng) {
    std::vector<int> out;
    long x = 0, y = 0;
    std::vector<int> options;
    for (std::size_t k = 0; k < n; ++k) {
        options.clear();
        for (int mb = -1; mb <= p; ++mb) {
            const long nx = x + (mb < 0 ? 1 : mb - p), ny = y + (mb < 0 ? -1 : mb);
            if (nx >= 0 && ny >= 0) options.push_back(mb);
        }
        std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
        const int mb = options[pick(rng)];
        x += mb < 0 ? 1 : mb - p;
        y += mb < 0 ? -1 : mb;
        out.push_back(mb);
    }
    return Word::tandem(p, out);
}

void VerificationReport::fail(std::string input, std::string expectation, std::string observed) {
    failures.push_back({std::move(input), std::move(expectation), std::move(observed)});
}

void VerificationReport::merge(const VerificationReport& o) {
    checked += o.checked;
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
    elapsed += o.elapsed;
}

namespace {

class Timer {
public:
    explicit Timer(VerificationReport& r) : r_(r), start_(std::chrono::steady_clock::now()) {}
    ~Timer() { r_.elapsed = std::chrono::steady_clock::now() - start_; }
    Timer(const Timer&) = delete;
    Timer& operator=(const Timer&) = delete;

private:
    VerificationReport& r_;
    std::chrono::steady_clock::time_point start_;
};

std::string str(const Word& w) { return format_word(w, TokenStyle::Numeric); }

long k_of(int p, const Word& w) {
    long k = 0;
    for (int mu : w.values()) k += mu >= 0 ? p : -2;
    return k;
}

long kbar_of(int p, const Word& w) {
    long k = 0;
    for (const auto& l : w.letters()) {
        auto s = step_vector(l, p);
        k += s.dy - s.dx;
    }
    return k;
}

long count_value(const Word& w, int v) {
    auto vals = w.values();
    return std::count(vals.begin(), vals.end(), v);
}

}  // namespace

VerificationReport verify_bijection_suite(int p, std::size_t n_max) {
    VerificationReport rep;
    rep.name = "bijection p=" + std::to_string(p) + " n<=" + std::to_string(n_max);
    Timer timer(rep);
    const auto L = WalkClass::lukasiewicz(p);
    const auto T = WalkClass::ptandem(p);
    for (std::size_t n = 0; n <= n_max; ++n) {
        std::set<std::vector<int>> images;
        const auto nl = enumerate_class(L, n, [&](const Word& w) {
            ++rep.checked;
            const Run r = phi_p(p, w);
            if (!r.accepted()) {
                rep.fail(str(w), "phi_p ends at (eps,0)", r.ok() ? "final " + format_stack(r.final_state().H) : "error");
                return;
            }
            if (!oracle_member(r.output, T)) rep.fail(str(w), "image in T_p", str(r.output));
            const Run back = psi_p(p, r.output);
            if (!(back.output == w) || !back.accepted()) rep.fail(str(w), "psi_p(phi_p(w)) = w", str(back.output));
            if (k_of(p, w) != kbar_of(p, r.output))
                rep.fail(str(w), "k = kbar", std::to_string(k_of(p, w)) + " vs " + std::to_string(kbar_of(p, r.output)));
            if (count_value(w, -1) != count_value(r.output, -1)) rep.fail(str(w), "#(-1) = #SE", str(r.output));
            // Factorization at every return to the axis.
            long h = 0;
            const auto mus = w.values();
            for (std::size_t i = 1; i < n; ++i) {
                h += mus[i - 1];
                if (h != 0) continue;
                std::vector<int> a(mus.begin(), mus.begin() + i), b(mus.begin() + i, mus.end());
                auto cat = phi_p(p, Word::luk(p, a)).output.concat(phi_p(p, Word::luk(p, b)).output);
                if (!(cat == r.output)) rep.fail(str(w), "phi_p factors at " + std::to_string(i), str(cat));
            }
            images.insert(r.output.values());
        });
        const auto nt = enumerate_class(T, n, [&](const Word& wb) {
            ++rep.checked;
            const Run r = psi_p(p, wb);
            if (!r.accepted()) {
                rep.fail(str(wb), "psi_p ends at (eps,0)", format_stack(r.final_state().H));
                return;
            }
            if (!oracle_member(r.output, L)) rep.fail(str(wb), "preimage in L_p", str(r.output));
            const Run f = phi_p(p, r.output);
            if (!(f.output == wb)) rep.fail(str(wb), "phi_p(psi_p(w)) = w", str(f.output));
        });
        if (nl != nt) rep.fail("n=" + std::to_string(n), "|L_p(n)| = |T_p(n)|", std::to_string(nl) + " vs " + std::to_string(nt));
        if (images.size() != nt)
            rep.fail("n=" + std::to_string(n), "image of L_p(n) is all of T_p(n)", std::to_string(images.size()));
        if (n <= 6) {
            enumerate_all(T.alphabet(), n, [&](const Word& wb) {
                ++rep.checked;
                if (psi_p(p, wb).accepted() != oracle_member(wb, T))
                    rep.fail(str(wb), "psi_p accepts exactly T_p", "disagrees");
            });
        }
    }
    return rep;
}

VerificationReport verify_sym_bijection_suite(std::size_t n_max) {
    VerificationReport rep;
    rep.name = "six-step bijection n<=" + std::to_string(n_max);
    Timer timer(rep);
    for (std::size_t n = 0; n <= n_max; ++n) {
        const auto nb = enumerate_class(WalkClass::bicol(), n, [&](const Word& w) {
            ++rep.checked;
            const SymRun r = phi_sym(w);
            if (!r.accepted()) {
                rep.fail(format_word(w), "phi_sym ends at (0,0)", "no");
                return;
            }
            if (!oracle_member(r.output, WalkClass::qsym())) rep.fail(format_word(w), "image in Qsym", format_word(r.output));
            if (!(psi_sym(r.output).output == w)) rep.fail(format_word(w), "psi_sym(phi_sym(w)) = w", "differs");
        });
        const auto nq = enumerate_class(WalkClass::qsym(), n, [&](const Word& wb) {
            ++rep.checked;
            const SymRun r = psi_sym(wb);
            if (!r.accepted()) rep.fail(format_word(wb), "psi_sym ends at (0,0)", "no");
            else if (!(phi_sym(r.output).output == wb)) rep.fail(format_word(wb), "phi_sym(psi_sym(w)) = w", "differs");
        });
        if (nb != nq) rep.fail("n=" + std::to_string(n), "|Mbicol(n)| = |Qsym(n)|", std::to_string(nb) + " vs " + std::to_string(nq));
    }
    return rep;
}

VerificationReport verify_two_n_law(std::size_t n_max, std::size_t projection_n_max) {
    VerificationReport rep;
    rep.name = "2^n law n<=" + std::to_string(n_max);
    Timer timer(rep);
    for (std::size_t n = 0; n <= n_max; ++n) {
        const std::uint64_t q = enumerate_class(WalkClass::quarter(), n, [](const Word&) {});
        std::uint64_t qs = 0;
        if (n <= projection_n_max) {
            std::set<std::pair<std::vector<int>, std::vector<std::size_t>>> seen;
            qs = enumerate_class(WalkClass::qsym(), n, [&](const Word& wb) {
                const Projection pr = two_n_projection(wb);
                if (!oracle_member(pr.q1, WalkClass::quarter())) rep.fail(format_word(wb), "projection in Q", format_word(pr.q1));
                if (!seen.insert({pr.q1.values(), pr.striped}).second) rep.fail(format_word(wb), "projection injective", "collision");
            });
            if (seen.size() != (std::uint64_t{1} << n) * q)
                rep.fail("n=" + std::to_string(n), "projection onto Q(n) x 2^[n]", std::to_string(seen.size()));
        } else {
            qs = enumerate_class(WalkClass::qsym(), n, [](const Word&) {});
        }
        rep.checked += qs;
        if (qs != (std::uint64_t{1} << n) * q)
            rep.fail("n=" + std::to_string(n), "|Qsym(n)| = 2^n |Q(n)|", std::to_string(qs) + " vs 2^n*" + std::to_string(q));
    }
    return rep;
}

VerificationReport verify_raising_transducer_equivalence(int p, std::size_t n_max) {
    VerificationReport rep;
    rep.name = "raising = psi_p p=" + std::to_string(p) + " n<=" + std::to_string(n_max);
    Timer timer(rep);
    for (std::size_t n = 0; n <= n_max; ++n)
        enumerate_class(WalkClass::ptandem(p), n, [&](const Word& wb) {
            ++rep.checked;
            const Word want = psi_p(p, wb).output;
            try {
                const Word got = raising_general(p, wb).luk;
                if (!(got == want)) rep.fail(str(wb), str(want), str(got));
                if (p == 1) {
                    const Word r1 = raising_p1(wb).motzkin;
                    if (!(r1 == want)) rep.fail(str(wb), "raising_p1 " + str(want), str(r1));
                }
            } catch (const MembershipError& e) {
                rep.fail(str(wb), str(want), e.what());
            }
        });
    return rep;
}

VerificationReport verify_raising_sym_equivalence(std::size_t n_max) {
    VerificationReport rep;
    rep.name = "raising_sym = psi_sym n<=" + std::to_string(n_max);
    Timer timer(rep);
    for (std::size_t n = 0; n <= n_max; ++n)
        enumerate_class(WalkClass::qsym(), n, [&](const Word& wb) {
            ++rep.checked;
            const Word want = psi_sym(wb).output;
            try {
                const Word got = raising_sym(wb).bicol;
                if (!(got == want)) rep.fail(format_word(wb), format_word(want), format_word(got));
            } catch (const MembershipError& e) {
                rep.fail(format_word(wb), format_word(want), e.what());
            }
        });
    return rep;
}

VerificationReport verify_eu_equivalence(std::size_t n_max) {
    VerificationReport rep;
    rep.name = "three-pass = psi_1 n<=" + std::to_string(n_max);
    Timer timer(rep);
    for (std::size_t n = 0; n <= n_max; ++n)
        enumerate_class(WalkClass::quarter(), n, [&](const Word& wb) {
            ++rep.checked;
            const Word want = psi_p(1, wb).output;
            try {
                const Word got = eu_three_pass(wb).motzkin;
                if (!(got == want)) rep.fail(format_word(wb), format_word(want), format_word(got));
            } catch (const MembershipError& e) {
                rep.fail(format_word(wb), format_word(want), e.what());
            }
        });
    return rep;
}

VerificationReport verify_pdt_equivalence(int p, std::size_t n_max) {
    VerificationReport rep;
    rep.name = "pdt = phi_p p=" + std::to_string(p) + " n<=" + std::to_string(n_max);
    Timer timer(rep);
    const PushdownTransducer t = p == 1 ? build_p1_pdt() : generate_pdt(PdtModel::General, p);
    for (std::size_t n = 0; n <= n_max; ++n)
        enumerate_all(AlphabetSpec::lukasiewicz(p), n, [&](const Word& w) {
            ++rep.checked;
            const Run r = phi_p(p, w);
            const PdtRun m = run_pdt(t, w);
            if (!r.ok()) {
                if (m.reject_position != r.failure->position)
                    rep.fail(str(w), "reject at " + std::to_string(r.failure->position),
                             m.reject_position ? std::to_string(*m.reject_position) : "no reject");
                return;
            }
            if (m.reject_position) {
                rep.fail(str(w), "no reject", "reject at " + std::to_string(*m.reject_position));
                return;
            }
            if (!(m.output == r.output)) rep.fail(str(w), str(r.output), str(m.output));
            if (m.accepted != r.accepted() || m.accepted != oracle_member(w, WalkClass::lukasiewicz(p)))
                rep.fail(str(w), "accepted iff in L_p", m.accepted ? "accepted" : "not accepted");
        });
    return rep;
}

VerificationReport verify_pdt_sym_equivalence(std::size_t n_max) {
    VerificationReport rep;
    rep.name = "pdt = phi_sym n<=" + std::to_string(n_max);
    Timer timer(rep);
    const PushdownTransducer t = generate_pdt(PdtModel::SixStep);
    for (std::size_t n = 0; n <= n_max; ++n)
        enumerate_all(AlphabetSpec::bicol(), n, [&](const Word& w) {
            ++rep.checked;
            const SymRun r = phi_sym(w);
            const PdtRun m = run_pdt(t, w);
            if (!r.ok()) {
                if (m.reject_position != r.failure->position) rep.fail(format_word(w), "reject where phi_sym fails", "differs");
                return;
            }
            if (m.reject_position) {
                rep.fail(format_word(w), "no reject", "reject");
                return;
            }
            if (!(m.output == r.output)) rep.fail(format_word(w), format_word(r.output), format_word(m.output));
            if (m.accepted != r.accepted() || m.accepted != oracle_member(w, WalkClass::bicol()))
                rep.fail(format_word(w), "accepted iff in Mbicol", m.accepted ? "accepted" : "not accepted");
        });
    return rep;
}

void check_stack_lemmas(int p, const Word& wbar, VerificationReport& rep) {
    ++rep.checked;
    const AugmentedRun aug = psi_p_augmented(p, wbar);
    const GeneralRaising gr = raising_general(p, wbar);
    const auto bars = wbar.values();
    const std::size_t n = bars.size();
    using Set = std::set<std::size_t>;
    auto show = [](const Set& s) { return format_positions(std::vector<std::size_t>(s.begin(), s.end())); };

    std::vector<Set> raisers_b(n + 1);
    Set touched;  // raised or frozen at any time
    for (std::size_t i = 1; i <= n; ++i) {
        const auto& st = gr.history.steps[i - 1];
        if (st.raised) touched.insert(st.raised);
        for (auto f : st.frozen) touched.insert(f);
        if ((st.label == "b1" || st.label == "b2") && st.raised) raisers_b[st.raised].insert(i);
    }
    // v_events are in processing order n..1.
    std::vector<Set> popped(n + 1);
    for (const auto& e : aug.v_events)
        if (e.kind == VEvent::Kind::Pop) popped[e.position].insert(e.popped.begin(), e.popped.end());
    std::vector<Set> t6(n + 1), t5(n + 1);
    Set t7;
    for (std::size_t i = 1; i <= n; ++i) {
        const Tag t = aug.run.tags[i - 1];
        if (t == Tag::T6) t6[aug.h_origin[i]].insert(i);
        if (t == Tag::T5) t5[aug.h_origin[i]].insert(i);
        if (t == Tag::T7) t7.insert(i);
    }
    const std::string w = str(wbar);
    for (std::size_t j = 1; j <= n; ++j) {
        const int mb = bars[j - 1];
        if (mb >= 1 && popped[j] != raisers_b[j])
            rep.fail(w, "upish at " + std::to_string(j) + ": raisers " + show(raisers_b[j]), "V pops " + show(popped[j]));
        if (mb >= 0 && mb < p) {
            const auto& st = gr.history.steps[j - 1];
            const Set frozen(st.frozen.begin(), st.frozen.end());
            if (t6[j] != frozen)
                rep.fail(w, "leftish at " + std::to_string(j) + ": frozen " + show(frozen), "T6 at " + show(t6[j]));
            if (t5[j] != Set{st.raised})
                rep.fail(w, "leftish at " + std::to_string(j) + ": raised " + std::to_string(st.raised), "T5 at " + show(t5[j]));
        }
    }
    Set idle;
    for (std::size_t i = 1; i <= n; ++i)
        if (bars[i - 1] == -1 && !touched.count(i)) idle.insert(i);
    if (idle != t7) rep.fail(w, "T7 at untouched modality -1 letters " + show(idle), "T7 at " + show(t7));
}

VerificationReport verify_stack_lemmas(int p, std::size_t n_max) {
    VerificationReport rep;
    rep.name = "stack lemmas p=" + std::to_string(p) + " n<=" + std::to_string(n_max);
    Timer timer(rep);
    for (std::size_t n = 0; n <= n_max; ++n)
        enumerate_class(WalkClass::ptandem(p), n, [&](const Word& wb) { check_stack_lemmas(p, wb, rep); });
    return rep;
}

VerificationReport verify_stack_lemmas_random(int p, std::size_t count, std::size_t max_len, std::uint64_t seed) {
    VerificationReport rep;
    rep.name = "stack lemmas p=" + std::to_string(p) + " random " + std::to_string(count);
    Timer timer(rep);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    for (std::size_t k = 0; k < count; ++k) check_stack_lemmas(p, random_ptandem(p, len(rng), rng), rep);
    return rep;
}

VerificationReport verify_suffix_bounds(int p, std::size_t n_max) {
    VerificationReport rep;
    rep.name = "suffix bounds p=" + std::to_string(p) + " n<=" + std::to_string(n_max);
    Timer timer(rep);
    for (std::size_t n = 0; n <= n_max; ++n)
        enumerate_class(WalkClass::ptandem(p), n, [&](const Word& wb) {
            ++rep.checked;
            for (const auto& e : check_suffix_bounds(p, wb)) rep.fail(str(wb), "suffix bounds", e);
        });
    return rep;
}

std::string format_report(const VerificationReport& r, std::size_t max_failures) {
    std::ostringstream os;
    os << (r.passed() ? "PASS " : "FAIL ") << r.name << ": " << r.checked << " checked, " << r.failures.size()
       << " failures, " << r.elapsed.count() << " s\n";
    for (std::size_t k = 0; k < std::min(max_failures, r.failures.size()); ++k) {
        const auto& f = r.failures[k];
        os << "  " << f.input << ": expected " << f.expectation << ", got " << f.observed << '\n';
    }
    return os.str();
}

}  // namespace walks
