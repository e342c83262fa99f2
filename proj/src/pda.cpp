#include "walks/pda.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

namespace walks {

std::string to_string(const StackSym& s) {
    switch (s.kind) {
    case StackSym::Kind::O: return "o";
    case StackSym::Kind::Iota: return "ι";
    case StackSym::Kind::A: return "a[" + std::to_string(s.l) + "," + std::to_string(s.m) + "]";
    }
    return "?";
}

namespace {

// Sortable key for letters: variant index then payload.
std::tuple<int, int, int> letter_key(const Letter& l) {
    return std::visit(
        [&](const auto& x) -> std::tuple<int, int, int> {
            using T = std::decay_t<decltype(x)>;
            const int idx = static_cast<int>(l.index());
            if constexpr (std::is_same_v<T, LukLetter>) return {idx, x.mu, 0};
            else if constexpr (std::is_same_v<T, TandemLetter>) return {idx, x.mubar, 0};
            else if constexpr (std::is_same_v<T, BicolLetter>) return {idx, int(x.dir), int(x.colour)};
            else if constexpr (std::is_same_v<T, SymLetter>) return {idx, int(x.dir), 0};
            else return {idx, x.digit, 0};
        },
        l);
}

using RuleKey = std::tuple<std::tuple<int, int, int>, int, StackSym, StackSym>;

RuleKey key_of(const PdtRule& r) { return {letter_key(r.input), r.state, r.top1, r.top2}; }

auto full_key(const PdtRule& r) {
    std::vector<std::tuple<int, int, int>> out;
    for (const auto& l : r.output) out.push_back(letter_key(l));
    return std::make_tuple(key_of(r), r.repl1, r.repl2, r.next_state, out);
}

StackWord word(std::initializer_list<StackSym> s) { return StackWord(s); }

StackWord with_iotas(StackSym base, int k) {
    StackWord w{base};
    for (int c = 0; c < k; ++c) w.push_back(StackSym::iota());
    return w;
}

PdtRule rule(Letter in, StackSym t1, StackWord r1, StackSym t2, StackWord r2, Letter out) {
    return PdtRule{in, 0, t1, std::move(r1), t2, std::move(r2), 0, {out}};
}

}  // namespace

bool PushdownTransducer::deterministic() const {
    std::set<RuleKey> keys;
    for (const auto& r : rules)
        if (!keys.insert(key_of(r)).second) return false;
    return true;
}

bool PushdownTransducer::well_formed() const {
    auto in = [](const std::vector<StackSym>& z, const StackSym& s) { return std::find(z.begin(), z.end(), s) != z.end(); };
    const int nstates = static_cast<int>(states.size());
    for (const auto& r : rules) {
        if (!letter_in(r.input, input_alphabet)) return false;
        if (r.state < 0 || r.state >= nstates || r.next_state < 0 || r.next_state >= nstates) return false;
        if (!in(z1, r.top1) || !in(z2, r.top2)) return false;
        for (const auto& s : r.repl1)
            if (!in(z1, s)) return false;
        for (const auto& s : r.repl2)
            if (!in(z2, s)) return false;
        for (const auto& l : r.output)
            if (!letter_in(l, output_alphabet)) return false;
    }
    return true;
}

PushdownTransducer build_p1_pdt() {
    const auto o = StackSym::o();
    const auto i = StackSym::iota();
    const Letter U = LukLetter{1}, L = LukLetter{0}, D = LukLetter{-1};
    const Letter N = TandemLetter{1}, W = TandemLetter{0}, SE = TandemLetter::se();
    PushdownTransducer t;
    t.name = "p1";
    t.input_alphabet = AlphabetSpec::lukasiewicz(1);
    t.output_alphabet = AlphabetSpec::tandem(1);
    t.states = {"q"};
    t.z1 = {o, i};
    t.z2 = {o, i};
    t.initial = {0, {o}, {o}};
    t.accepting = {{0, {o}, {o}}};
    t.rules = {
        rule(U, o, word({o, i}), o, word({o}), N),
        rule(U, o, word({o, i}), i, word({i}), N),
        rule(U, i, word({i, i}), o, word({o}), N),
        rule(U, i, word({i, i}), i, word({i}), N),
        rule(L, o, word({o}), o, word({o}), N),
        rule(L, o, word({o}), i, word({i}), N),
        rule(L, i, word({}), o, word({o, i}), SE),
        rule(L, i, word({}), i, word({i, i}), SE),
        rule(D, i, word({}), o, word({o}), SE),
        rule(D, o, word({o}), i, word({}), W),
        rule(D, i, word({i}), i, word({}), W),
    };
    return t;
}

namespace {

PushdownTransducer general(int p) {
    if (p < 1) throw WordError("p must be >= 1");
    const auto o = StackSym::o();
    const auto io = StackSym::iota();
    PushdownTransducer t;
    t.name = "general(" + std::to_string(p) + ")";
    t.input_alphabet = AlphabetSpec::lukasiewicz(p);
    t.output_alphabet = AlphabetSpec::tandem(p);
    t.states = {"q"};
    t.z1 = {o};
    std::vector<StackSym> letters;
    for (int l = 0; l < p; ++l)
        for (int m = 0; l + m < p; ++m) letters.push_back(StackSym::a(l, m));
    t.z1.insert(t.z1.end(), letters.begin(), letters.end());
    t.z2 = {o, io};
    t.initial = {0, {o}, {o}};
    t.accepting = {{0, {o}, {o}}};
    const Letter SE = TandemLetter::se();
    auto longstep = [](int mb) { return Letter{TandemLetter{mb}}; };
    // T1
    for (const auto& X : t.z1)
        for (const auto& Y : t.z2) t.rules.push_back(rule(LukLetter{p}, X, {X}, Y, with_iotas(Y, p), longstep(p)));
    // T2, T5
    for (int q = 0; q < p; ++q)
        for (const auto& X : t.z1) {
            t.rules.push_back(rule(LukLetter{q}, X, {X}, o, with_iotas(o, q), longstep(p)));
            t.rules.push_back(rule(LukLetter{q}, X, {X, StackSym::a(q, 0)}, io, {}, SE));
        }
    for (const auto& a : letters) {
        // T3
        t.rules.push_back(rule(LukLetter{-1}, a, {}, o, with_iotas(o, a.l), longstep(p - a.m - 1)));
        if (a.l + a.m == p - 1)  // T4
            t.rules.push_back(rule(LukLetter{-1}, a, {}, io, with_iotas(io, a.l), longstep(p - a.m - 1)));
        else  // T6
            t.rules.push_back(rule(LukLetter{-1}, a, {StackSym::a(a.l, a.m + 1)}, io, {}, SE));
    }
    // T7
    t.rules.push_back(rule(LukLetter{-1}, o, {o}, io, {}, SE));
    return t;
}

PushdownTransducer six_step() {
    const auto o = StackSym::o();
    const auto io = StackSym::iota();
    const auto a = StackSym::a(0, 0);
    PushdownTransducer t;
    t.name = "six-step";
    t.input_alphabet = AlphabetSpec::bicol();
    t.output_alphabet = AlphabetSpec::sym();
    t.states = {"q"};
    t.z1 = {o, a};
    t.z2 = {o, io};
    t.initial = {0, {o}, {o}};
    t.accepting = {{0, {o}, {o}}};
    auto sol = [](Dir3 d) { return Letter{BicolLetter{d, Colour::Solid}}; };
    auto str = [](Dir3 d) { return Letter{BicolLetter{d, Colour::Striped}}; };
    auto out = [](SymDir d) { return Letter{SymLetter{d}}; };
    for (const auto& X : t.z1)
        for (const auto& Y : t.z2) {
            t.rules.push_back(rule(sol(Dir3::Up), X, {X}, Y, {Y, io}, out(SymDir::N)));    // U1
            t.rules.push_back(rule(str(Dir3::Up), X, {X, a}, Y, {Y}, out(SymDir::E)));     // U1'
        }
    for (const auto& X : t.z1) {
        t.rules.push_back(rule(sol(Dir3::Level), X, {X, a}, io, {}, out(SymDir::SE)));    // L2
        t.rules.push_back(rule(sol(Dir3::Level), X, {X}, o, {o}, out(SymDir::N)));        // L1
        t.rules.push_back(rule(str(Dir3::Down), X, {X}, io, {}, out(SymDir::S)));         // D3'
    }
    for (const auto& Y : t.z2) {
        t.rules.push_back(rule(sol(Dir3::Down), a, {}, Y, {Y}, out(SymDir::W)));          // D3
        t.rules.push_back(rule(str(Dir3::Level), a, {}, Y, {Y, io}, out(SymDir::NW)));    // L2'
        t.rules.push_back(rule(str(Dir3::Level), o, {o}, Y, {Y}, out(SymDir::E)));        // L1'
    }
    t.rules.push_back(rule(sol(Dir3::Down), o, {o}, io, {}, out(SymDir::SE)));            // D2
    t.rules.push_back(rule(str(Dir3::Down), a, {}, o, {o}, out(SymDir::NW)));             // D2'
    return t;
}

}  // namespace

PushdownTransducer generate_pdt(PdtModel model, int p) {
    return model == PdtModel::General ? general(p) : six_step();
}

PdtRun run_pdt(const PushdownTransducer& t, const Word& w) {
    if (!(w.alphabet() == t.input_alphabet))
        throw WordError("machine " + t.name + " reads " + to_string(t.input_alphabet));
    PdtRun r;
    PdtConfig c = t.initial;
    std::vector<Letter> out;
    for (std::size_t k = 0; k < w.size(); ++k) {
        const PdtRule* hit = nullptr;
        if (!c.stack1.empty() && !c.stack2.empty()) {
            for (const auto& rule : t.rules)
                if (rule.state == c.state && rule.top1 == c.stack1.back() && rule.top2 == c.stack2.back() &&
                    rule.input == w[k]) {
                    hit = &rule;
                    break;
                }
        }
        if (!hit) {
            r.reject_position = k + 1;
            break;
        }
        c.stack1.pop_back();
        c.stack1.insert(c.stack1.end(), hit->repl1.begin(), hit->repl1.end());
        c.stack2.pop_back();
        c.stack2.insert(c.stack2.end(), hit->repl2.begin(), hit->repl2.end());
        c.state = hit->next_state;
        out.insert(out.end(), hit->output.begin(), hit->output.end());
    }
    r.output = Word(t.output_alphabet, std::move(out));
    r.final_config = c;
    r.accepted = !r.reject_position && std::find(t.accepting.begin(), t.accepting.end(), c) != t.accepting.end();
    return r;
}

std::string format_rule(const PdtRule& r, const PushdownTransducer& t) {
    auto sw = [](const StackWord& w) {
        if (w.empty()) return std::string("ε");
        std::string s;
        for (const auto& x : w) s += to_string(x);
        return s;
    };
    std::string outs;
    for (std::size_t k = 0; k < r.output.size(); ++k) {
        if (k) outs += ' ';
        outs += format_letter(r.output[k], t.output_alphabet);
    }
    if (r.output.empty()) outs = "ε";
    return format_letter(r.input, t.input_alphabet) + "; " + to_string(r.top1) + "/" + sw(r.repl1) + ", " +
           to_string(r.top2) + "/" + sw(r.repl2) + "; " + outs;
}

std::string dump_rules(const PushdownTransducer& t) {
    std::ostringstream os;
    for (const auto& r : t.rules) os << format_rule(r, t) << '\n';
    return os.str();
}

PushdownTransducer relabel(const PushdownTransducer& t, const std::vector<std::pair<StackSym, StackSym>>& rename,
                           bool swap_stacks) {
    auto ren = [&](StackSym s) {
        for (const auto& [from, to] : rename)
            if (s == from) return to;
        return s;
    };
    auto ren_word = [&](StackWord w) {
        for (auto& s : w) s = ren(s);
        return w;
    };
    auto ren_set = [&](std::vector<StackSym> z) {
        for (auto& s : z) s = ren(s);
        std::sort(z.begin(), z.end());
        z.erase(std::unique(z.begin(), z.end()), z.end());
        return z;
    };
    PushdownTransducer u = t;
    u.z1 = ren_set(t.z1);
    u.z2 = ren_set(t.z2);
    for (auto& r : u.rules) {
        r.top1 = ren(r.top1);
        r.top2 = ren(r.top2);
        r.repl1 = ren_word(r.repl1);
        r.repl2 = ren_word(r.repl2);
        if (swap_stacks) {
            std::swap(r.top1, r.top2);
            std::swap(r.repl1, r.repl2);
        }
    }
    auto fix = [&](PdtConfig c) {
        c.stack1 = ren_word(c.stack1);
        c.stack2 = ren_word(c.stack2);
        if (swap_stacks) std::swap(c.stack1, c.stack2);
        return c;
    };
    u.initial = fix(t.initial);
    for (auto& c : u.accepting) c = fix(c);
    if (swap_stacks) std::swap(u.z1, u.z2);
    return u;
}

bool same_rules(const PushdownTransducer& a, const PushdownTransducer& b) {
    if (a.rules.size() != b.rules.size()) return false;
    std::multiset<decltype(full_key(a.rules[0]))> ka, kb;
    for (const auto& r : a.rules) ka.insert(full_key(r));
    for (const auto& r : b.rules) kb.insert(full_key(r));
    return ka == kb;
}

}  // namespace walks
