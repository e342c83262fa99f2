#include "walks/transducer.hpp"

#include "json.hpp"

#include <sstream>
#include <stdexcept>

namespace walks {

bool valid_state(const CounterState& s, int p) {
    if (s.v < 0) return false;
    for (const auto& a : s.H)
        if (a.l < 0 || a.m < 0 || a.l + a.m > p - 1) return false;
    return true;
}

std::string tag_name(Tag t, int p) {
    if (p == 1) {
        switch (t) {
        case Tag::T1: return "U1";
        case Tag::T2: return "L1";
        case Tag::T3:
        case Tag::T4: return "D3";
        case Tag::T5: return "L2";
        case Tag::T6: return "T6";
        case Tag::T7: return "D2";
        case Tag::T8: return "DE";
        }
    }
    return "T" + std::to_string(static_cast<int>(t));
}

std::optional<Tag> parse_tag(std::string_view name) {
    if (name.size() == 2 && name[0] == 'T' && name[1] >= '1' && name[1] <= '8')
        return static_cast<Tag>(name[1] - '0');
    if (name == "U1") return Tag::T1;
    if (name == "L1") return Tag::T2;
    if (name == "D3") return Tag::T4;
    if (name == "L2") return Tag::T5;
    if (name == "D2") return Tag::T7;
    if (name == "DE") return Tag::T8;
    return std::nullopt;
}

Tag lr_apply(int p, int mu, CounterState& s, int& out) {
    if (mu == p) {
        s.v += p;
        out = p;
        return Tag::T1;
    }
    if (mu >= 0) {
        if (s.v == 0) {
            s.v = mu;
            out = p;
            return Tag::T2;
        }
        s.H.push_back({mu, 0});
        s.v -= 1;
        out = -1;
        return Tag::T5;
    }
    if (s.v == 0) {
        if (s.H.empty()) return Tag::T8;
        StackLetter a = s.H.back();
        s.H.pop_back();
        s.v = a.l;
        out = p - a.m - 1;
        return Tag::T3;
    }
    if (s.H.empty()) {
        s.v -= 1;
        out = -1;
        return Tag::T7;
    }
    StackLetter& top = s.H.back();
    if (top.l + top.m == p - 1) {
        StackLetter a = top;
        s.H.pop_back();
        s.v += a.l;
        out = p - a.m - 1;
        return Tag::T4;
    }
    top.m += 1;
    s.v -= 1;
    out = -1;
    return Tag::T6;
}

Tag rl_apply(int p, int mubar, CounterState& s, int& out) {
    if (mubar == p) {
        if (s.v <= p - 1) {
            out = s.v;
            s.v = 0;
            return Tag::T2;
        }
        out = p;
        s.v -= p;
        return Tag::T1;
    }
    if (mubar >= 0) {
        const int m = p - 1 - mubar;
        out = -1;
        if (s.v <= mubar) {
            s.H.push_back({s.v, m});
            s.v = 0;
            return Tag::T3;
        }
        s.H.push_back({mubar, m});
        s.v -= mubar;
        return Tag::T4;
    }
    s.v += 1;
    if (s.H.empty()) {
        out = -1;
        return Tag::T7;
    }
    StackLetter& top = s.H.back();
    if (top.m == 0) {
        out = top.l;
        s.H.pop_back();
        return Tag::T5;
    }
    top.m -= 1;
    out = -1;
    return Tag::T6;
}

StepResult lr_step(int p, int mu, const CounterState& s) {
    StepResult r{Tag::T8, s, std::nullopt};
    int out = 0;
    r.tag = lr_apply(p, mu, r.next, out);
    if (r.tag != Tag::T8) r.output = out;
    return r;
}

StepResult rl_step(int p, int mubar, const CounterState& s) {
    StepResult r{Tag::T8, s, std::nullopt};
    int out = 0;
    r.tag = rl_apply(p, mubar, r.next, out);
    r.output = out;
    return r;
}

const CounterState& Run::final_state() const {
    return direction == Direction::LR ? states.back() : states.front();
}

Run phi_p(int p, const Word& w) {
    if (!(w.alphabet() == AlphabetSpec::lukasiewicz(p)))
        throw WordError("phi_p expects a word over " + to_string(AlphabetSpec::lukasiewicz(p)));
    Run r;
    r.p = p;
    r.direction = Direction::LR;
    r.input = w;
    const auto mus = w.values();
    std::vector<int> outs;
    outs.reserve(mus.size());
    r.tags.reserve(mus.size());
    r.states.reserve(mus.size() + 1);
    CounterState s;
    r.states.push_back(s);
    for (std::size_t i = 0; i < mus.size(); ++i) {
        int out = 0;
        Tag t = lr_apply(p, mus[i], s, out);
        if (t == Tag::T8) {
            r.failure = RunFailure{i + 1, t, s};
            break;
        }
        r.tags.push_back(t);
        r.states.push_back(s);
        outs.push_back(out);
    }
    r.output = Word::tandem(p, outs);
    return r;
}

namespace {

// Shared by psi_p and psi_p_augmented.
template <class Hook>
Run run_rl(int p, const Word& wbar, Hook&& hook) {
    if (!(wbar.alphabet() == AlphabetSpec::tandem(p)))
        throw WordError("psi_p expects a word over " + to_string(AlphabetSpec::tandem(p)));
    Run r;
    r.p = p;
    r.direction = Direction::RL;
    r.input = wbar;
    const auto bars = wbar.values();
    const std::size_t n = bars.size();
    std::vector<int> outs(n);
    r.tags.resize(n);
    r.states.resize(n + 1);
    CounterState s;
    r.states[n] = s;
    for (std::size_t i = n; i >= 1; --i) {
        const CounterState before = s;
        int out = 0;
        Tag t = rl_apply(p, bars[i - 1], s, out);
        hook(i, t, before, s, out);
        r.tags[i - 1] = t;
        r.states[i - 1] = s;
        outs[i - 1] = out;
    }
    r.output = Word::luk(p, outs);
    return r;
}

}  // namespace

Run psi_p(int p, const Word& wbar) {
    return run_rl(p, wbar, [](std::size_t, Tag, const CounterState&, const CounterState&, int) {});
}

AugmentedRun psi_p_augmented(int p, const Word& wbar) {
    AugmentedRun a;
    const std::size_t n = wbar.size();
    a.V.resize(n + 1);
    a.h_origin.assign(n + 1, 0);
    std::vector<std::size_t> V;
    std::vector<std::size_t> origins;  // parallel to H
    auto hook = [&](std::size_t i, Tag t, const CounterState& before, const CounterState& after, int) {
        VEvent e;
        e.position = i;
        if (t == Tag::T5 || t == Tag::T6 || t == Tag::T7) {
            if (t != Tag::T7) a.h_origin[i] = origins.back();
            if (t == Tag::T5) origins.pop_back();
            e.kind = VEvent::Kind::Push;
            V.push_back(i);
        } else {
            if (t == Tag::T3 || t == Tag::T4) origins.push_back(i);
            e.kind = VEvent::Kind::Pop;
            for (int c = before.v - after.v; c > 0; --c) {
                e.popped.push_back(V.back());
                V.pop_back();
            }
        }
        a.v_events.push_back(std::move(e));
        a.V[i - 1] = V;
    };
    a.run = run_rl(p, wbar, hook);
    return a;
}

std::string format_stack(const std::vector<StackLetter>& H) {
    std::string s = "[";
    for (std::size_t i = 0; i < H.size(); ++i) {
        if (i) s += ',';
        s += '[' + std::to_string(H[i].l) + ',' + std::to_string(H[i].m) + ']';
    }
    return s + ']';
}

std::string format_positions(const std::vector<std::size_t>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s + ']';
}

namespace {

struct RowText {
    std::string in, tr, out;
};

RowText row_text(const Run& r, std::size_t i) {
    if (i == 0) return {"-", "-", "-"};
    return {format_letter(r.input[i - 1], r.input.alphabet()), tag_name(r.tags[i - 1], r.p),
            format_letter(r.output[i - 1], r.output.alphabet())};
}

}  // namespace

std::string trace_tsv(const Run& r, const TraceColumns& cols, const std::vector<std::vector<std::size_t>>* V) {
    std::ostringstream os;
    os << "i\tin\ttr\tH\tv\tout";
    if (cols.v_stack) os << "\tV";
    for (const auto& [name, _] : cols.extra) os << '\t' << name;
    os << '\n';
    for (std::size_t i = 0; i < r.states.size(); ++i) {
        auto t = row_text(r, i);
        os << i << '\t' << t.in << '\t' << t.tr << '\t' << format_stack(r.states[i].H) << '\t' << r.states[i].v << '\t'
           << t.out;
        if (cols.v_stack) os << '\t' << (V ? format_positions((*V)[i]) : "-");
        for (const auto& [_, vals] : cols.extra) os << '\t' << vals[i];
        os << '\n';
    }
    return os.str();
}

std::string trace_jsonl(const Run& r, const TraceColumns& cols, const std::vector<std::vector<std::size_t>>* V) {
    std::string out;
    for (std::size_t i = 0; i < r.states.size(); ++i) {
        nlohmann::ordered_json j;
        auto t = row_text(r, i);
        j["i"] = i;
        j["in"] = i ? nlohmann::ordered_json(t.in) : nlohmann::ordered_json(nullptr);
        j["tr"] = i ? nlohmann::ordered_json(t.tr) : nlohmann::ordered_json(nullptr);
        auto H = nlohmann::ordered_json::array();
        for (const auto& a : r.states[i].H) H.push_back({a.l, a.m});
        j["H"] = H;
        j["v"] = r.states[i].v;
        j["out"] = i ? nlohmann::ordered_json(t.out) : nlohmann::ordered_json(nullptr);
        if (cols.v_stack && V) j["V"] = (*V)[i];
        for (const auto& [name, vals] : cols.extra) j[name] = vals[i];
        out += j.dump();
        out += '\n';
    }
    return out;
}

}  // namespace walks
