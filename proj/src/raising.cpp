#include "walks/raising.hpp"

#include <algorithm>

namespace walks {

namespace {

[[noreturn]] void violation(std::size_t pos, const std::string& what) {
    throw MembershipError("not a quarter-plane walk: " + what + " at position " + std::to_string(pos), pos);
}

// Rightmost index (0-based) in [0, end) satisfying pred, or npos.
template <class V, class Pred>
std::size_t rfind_if(const V& v, Pred pred) {
    for (std::size_t k = v.size(); k-- > 0;)
        if (pred(v[k])) return k;
    return static_cast<std::size_t>(-1);
}

constexpr std::size_t npos = static_cast<std::size_t>(-1);

Word marked_to_luk(const std::vector<MarkedLetter1>& m) {
    std::vector<Letter> ls;
    for (const auto& l : m) ls.emplace_back(LukLetter{l.value == Dir3::Up ? 1 : l.value == Dir3::Level ? 0 : -1});
    return Word(AlphabetSpec::lukasiewicz(1), std::move(ls));
}

void sort_pairing(Pairing& pr) { std::sort(pr.begin(), pr.end()); }

}  // namespace

P1Raising raising_p1(const Word& wbar, bool keep) {
    if (!(wbar.alphabet() == AlphabetSpec::tandem(1))) throw WordError("raising_p1 expects an S_1 word");
    P1Raising res;
    std::vector<MarkedLetter1> M;
    const auto bars = wbar.values();
    for (std::size_t k = 0; k < bars.size(); ++k) {
        const std::size_t i = k + 1;
        RaiseStep st;
        if (bars[k] == 1) {
            st.label = "up";
            M.push_back({Dir3::Level, true});
        } else if (bars[k] == -1) {
            st.label = "down";
            auto at = rfind_if(M, [](const MarkedLetter1& l) { return l.value == Dir3::Level && l.raisable; });
            if (at == npos) violation(i, "no raisable level step for SE");
            M[at] = {Dir3::Up, false};
            st.raised = at + 1;
            M.push_back({Dir3::Down, true});
        } else {
            st.label = "back";
            auto at = rfind_if(M, [](const MarkedLetter1& l) { return l.value == Dir3::Down && l.raisable; });
            if (at == npos) violation(i, "no raisable down step for W");
            M[at] = {Dir3::Level, false};
            st.raised = at + 1;
            M.push_back({Dir3::Down, false});
        }
        res.history.steps.push_back(std::move(st));
        if (keep) res.snapshots.push_back(M);
    }
    res.motzkin = marked_to_luk(M);
    res.pairing = extract_pairing(res.history);
    return res;
}

EuResult eu_three_pass(const Word& wbar) {
    if (!(wbar.alphabet() == AlphabetSpec::tandem(1))) throw WordError("eu_three_pass expects an S_1 word");
    // Cells hold either an unconverted step (conv = false, value = mubar)
    // or a converted Motzkin value.
    struct Cell {
        bool conv;
        int value;
    };
    const auto bars = wbar.values();
    const std::size_t n = bars.size();
    std::vector<Cell> c(n);
    for (std::size_t k = 0; k < n; ++k) c[k] = {false, bars[k]};
    EuResult res;
    res.history.steps.resize(n);
    auto render = [&] {
        std::string s;
        for (std::size_t k = 0; k < n; ++k) {
            if (k) s += ' ';
            s += c[k].conv ? std::to_string(c[k].value) : format_letter(wbar[k], wbar.alphabet());
        }
        return s;
    };
    for (std::size_t k = n; k-- > 0;)
        if (!c[k].conv && c[k].value == 1) {
            c[k] = {true, 0};
            res.history.steps[k].label = "pass1";
        }
    res.passes.push_back(render());
    auto pass = [&](int step, int target, int raised_to, const char* label) {
        for (std::size_t k = n; k-- > 0;) {
            if (c[k].conv || c[k].value != step) continue;
            std::size_t at = npos;
            for (std::size_t q = k; q-- > 0;)
                if (c[q].conv && c[q].value == target) {
                    at = q;
                    break;
                }
            if (at == npos) violation(k + 1, std::string("nothing to pair with in ") + label);
            c[at].value = raised_to;
            c[k] = {true, -1};
            res.history.steps[k].label = label;
            res.history.steps[k].raised = at + 1;
        }
        res.passes.push_back(render());
    };
    pass(-1, 0, 1, "pass2");
    pass(0, -1, 0, "pass3");
    std::vector<int> mus(n);
    for (std::size_t k = 0; k < n; ++k) mus[k] = c[k].value;
    res.motzkin = Word::luk(1, mus);
    res.pairing = extract_pairing(res.history);
    return res;
}

SymRaising raising_sym(const Word& wbar, bool keep) {
    if (!(wbar.alphabet() == AlphabetSpec::sym())) throw WordError("raising_sym expects a six-step word");
    SymRaising res;
    std::vector<MarkedLetter1> M;
    auto solid_l_or_striped_d = [](const MarkedLetter1& l) {
        return l.raisable && ((l.colour == Colour::Solid && l.value == Dir3::Level) ||
                              (l.colour == Colour::Striped && l.value == Dir3::Down));
    };
    auto striped_l_or_solid_d = [](const MarkedLetter1& l) {
        return l.raisable && ((l.colour == Colour::Striped && l.value == Dir3::Level) ||
                              (l.colour == Colour::Solid && l.value == Dir3::Down));
    };
    // Raising a Level gives an Up of the same colour, raising a Down gives a Level.
    auto raise = [&](std::size_t at) {
        M[at].value = M[at].value == Dir3::Level ? Dir3::Up : Dir3::Level;
        M[at].raisable = false;
    };
    for (std::size_t k = 0; k < wbar.size(); ++k) {
        const std::size_t i = k + 1;
        const SymDir d = std::get<SymLetter>(wbar[k]).dir;
        RaiseStep st;
        std::size_t at = npos;
        switch (d) {
        case SymDir::N:
            st.label = "up2";
            M.push_back({Dir3::Level, true, Colour::Solid});
            break;
        case SymDir::E:
            st.label = "right";
            M.push_back({Dir3::Level, true, Colour::Striped});
            break;
        case SymDir::SE:
        case SymDir::S:
            st.label = d == SymDir::SE ? "diagdown" : "down2";
            at = rfind_if(M, solid_l_or_striped_d);
            if (at == npos) violation(i, "no raisable solid level or striped down step");
            raise(at);
            M.push_back({Dir3::Down, d == SymDir::SE, d == SymDir::SE ? Colour::Solid : Colour::Striped});
            break;
        case SymDir::NW:
        case SymDir::W:
            st.label = d == SymDir::NW ? "diagup" : "left";
            at = rfind_if(M, striped_l_or_solid_d);
            if (at == npos) violation(i, "no raisable striped level or solid down step");
            raise(at);
            M.push_back({Dir3::Down, d == SymDir::NW, d == SymDir::NW ? Colour::Striped : Colour::Solid});
            break;
        }
        if (at != npos) st.raised = at + 1;
        res.history.steps.push_back(std::move(st));
        if (keep) res.snapshots.push_back(M);
    }
    std::vector<Letter> ls;
    for (const auto& l : M) ls.emplace_back(BicolLetter{l.value, l.colour});
    res.bicol = Word(AlphabetSpec::bicol(), std::move(ls));
    return res;
}

GeneralRaising raising_general(int p, const Word& wbar, bool keep) {
    if (!(wbar.alphabet() == AlphabetSpec::tandem(p))) throw WordError("raising_general expects a word over S_p");
    GeneralRaising res;
    std::vector<AnnotatedLetter> L;
    const auto bars = wbar.values();
    for (std::size_t k = 0; k < bars.size(); ++k) {
        const std::size_t i = k + 1;
        RaiseStep st;
        if (bars[k] == p) {
            st.label = "a";
            L.push_back({0, p, 0, 0});
        } else if (bars[k] == -1) {
            auto at = rfind_if(L, [](const AnnotatedLetter& a) { return a.j > 0 && a.t >= 0; });
            if (at == npos) violation(i, "no raisable letter of modality >= 0 for (1,-1)");
            AnnotatedLetter& a = L[at];
            if (a.t == 0) {
                st.label = "b1";
                a.mu += 1;
            } else {
                st.label = "b2";
                st.proxy = a.proxy;
                L[a.proxy - 1].mu += 1;
            }
            a.j -= 1;
            st.raised = at + 1;
            L.push_back({-1, 1, -1, 0});
        } else {
            st.label = "c";
            const int m = p - bars[k];
            std::vector<std::size_t> found;  // 0-based, newest first
            for (std::size_t q = L.size(); q-- > 0 && found.size() < static_cast<std::size_t>(m);)
                if (L[q].j > 0 && L[q].t == -1) found.push_back(q);
            if (found.size() < static_cast<std::size_t>(m))
                violation(i, "fewer than " + std::to_string(m) + " raisable letters of modality -1");
            const std::size_t oldest = found.back();
            L[oldest].mu += 1;
            for (std::size_t q : found) L[q].j = 0;
            st.raised = oldest + 1;
            for (std::size_t q = found.size() - 1; q-- > 0;) st.frozen.push_back(found[q] + 1);
            const int d = static_cast<int>(i - (oldest + 1));
            L.push_back({-1, p - m, d, oldest + 1});
        }
        res.history.steps.push_back(std::move(st));
        if (keep) res.snapshots.push_back(L);
    }
    std::vector<int> mus;
    for (const auto& a : L) mus.push_back(a.mu);
    res.luk = Word::luk(p, mus);
    return res;
}

Pairing extract_pairing(const RaisingHistory& h) {
    Pairing pr;
    for (std::size_t k = 0; k < h.steps.size(); ++k) {
        const auto& st = h.steps[k];
        if (!st.raised) continue;
        if (st.label == "down" || st.label == "pass2") pr.push_back({st.raised, k + 1, PairKind::Solid});
        else if (st.label == "back" || st.label == "pass3") pr.push_back({st.raised, k + 1, PairKind::Dashed});
    }
    sort_pairing(pr);
    return pr;
}

bool noncrossing(const Pairing& pr, PairKind kind) {
    for (const auto& a : pr)
        for (const auto& b : pr) {
            if (a.kind != kind || b.kind != kind) continue;
            if (a.earlier < b.earlier && b.earlier < a.later && a.later < b.later) return false;
        }
    return true;
}

std::string format_marked(const MarkedLetter1& l, bool bicol) {
    static const char* solid[] = {"U", "L", "D"};
    static const char* striped[] = {"u", "l", "d"};
    std::string s = (bicol && l.colour == Colour::Striped ? striped : solid)[static_cast<int>(l.value)];
    if (l.raisable) s += "•";
    return s;
}

std::string format_marked_word(const std::vector<MarkedLetter1>& w, bool bicol) {
    std::string s;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) s += ' ';
        s += format_marked(w[k], bicol);
    }
    return s;
}

std::string format_annotated(const AnnotatedLetter& a) {
    std::string s = a.mu == -1 ? "D" : std::to_string(a.mu);
    s += '^' + std::to_string(a.j) + '_';
    s += a.t == -1 ? std::string("-") : std::to_string(a.t);
    return s;
}

std::string format_annotated_word(const std::vector<AnnotatedLetter>& w) {
    std::string s;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) s += ' ';
        s += format_annotated(w[k]);
    }
    return s;
}

}  // namespace walks
