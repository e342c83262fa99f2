#include "walks/parameters.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

namespace walks {

long Parameter::sigma1_of(const std::vector<StackLetter>& H) const {
    long s = 0;
    for (const auto& a : H) s += sigma1(a);
    return s;
}

namespace {

int input_mu(const Letter& l) {
    if (auto* x = std::get_if<LukLetter>(&l)) return x->mu;
    if (auto* x = std::get_if<BicolLetter>(&l)) return x->mu();
    throw std::invalid_argument("not an input letter");
}

const std::map<std::string_view, std::string_view>& aliases() {
    static const std::map<std::string_view, std::string_view> m = {
        {"λ", "lambda"}, {"ζ", "zeta"}, {"ξ", "xi"}, {"x̄", "xbar"}, {"ȳ", "ybar"},
        {"k̄", "kbar"},   {"r̄", "rbar"}, {"s̄", "sbar"},
    };
    return m;
}

}  // namespace

std::vector<std::string> builtin_names() {
    return {"lambda", "zeta", "xi", "v", "z", "xbar", "ybar", "kbar", "k", "rbar", "sbar", "h"};
}

Parameter builtin_parameter(std::string_view name) {
    if (auto it = aliases().find(name); it != aliases().end()) name = it->second;
    Parameter q;
    q.name = std::string(name);
    auto dx = [](const Letter& l, int p) { return long(step_vector(l, p).dx); };
    auto dy = [](const Letter& l, int p) { return long(step_vector(l, p).dy); };
    if (name == "lambda" || name == "h") {
        q.sigma1 = [](const StackLetter&) { return 1L; };
    } else if (name == "zeta") {
        q.sigma1 = [](const StackLetter& a) { return long(a.l + 1); };
    } else if (name == "xi") {
        q.sigma1 = [](const StackLetter& a) { return long(a.m + 1); };
    } else if (name == "v") {
        q.sigma2 = 1;
    } else if (name == "z") {
        q.alpha = [](const Letter& l, int) { return long(input_mu(l)); };
    } else if (name == "xbar") {
        q.alpha_bar = dx;
    } else if (name == "ybar") {
        q.alpha_bar = dy;
    } else if (name == "kbar") {
        q.alpha_bar = [](const Letter& l, int p) {
            auto s = step_vector(l, p);
            return long(s.dy - s.dx);
        };
    } else if (name == "k") {
        q.alpha = [](const Letter& l, int p) { return input_mu(l) >= 0 ? long(p) : -2L; };
    } else if (name == "rbar") {
        q.alpha_bar = dx;
        q.sigma1 = [](const StackLetter& a) { return -long(a.m + 1); };
    } else if (name == "sbar") {
        q.alpha_bar = dy;
        q.sigma2 = -1;
    } else {
        throw std::invalid_argument("unknown parameter '" + std::string(name) + "'");
    }
    return q;
}

CounterState as_counter_state(const CounterPair& c) {
    CounterState s;
    s.H.assign(static_cast<std::size_t>(c.h), StackLetter{0, 0});
    s.v = c.v;
    return s;
}

namespace {

std::vector<long> evaluate(const Parameter& q, int p, Direction dir, const Word& in, const Word& out,
                           const std::vector<CounterState>& states) {
    const std::size_t n = in.size();
    std::vector<long> step(n);
    for (std::size_t j = 0; j < n; ++j) {
        const Letter& luk = dir == Direction::LR ? in[j] : out[j];
        const Letter& tan = dir == Direction::LR ? out[j] : in[j];
        step[j] = q.alpha(luk, p) + q.alpha_bar(tan, p);
    }
    std::vector<long> vals(n + 1);
    if (dir == Direction::LR) {
        long acc = 0;
        for (std::size_t i = 0; i <= n; ++i) {
            if (i) acc += step[i - 1];
            vals[i] = acc + q.sigma1_of(states[i].H) + q.sigma2 * states[i].v;
        }
    } else {
        long acc = 0;
        for (std::size_t i = n + 1; i-- > 0;) {
            if (i < n) acc += step[i];
            vals[i] = acc - q.sigma1_of(states[i].H) - q.sigma2 * states[i].v;
        }
    }
    return vals;
}

}  // namespace

std::vector<long> evaluate_along(const Parameter& q, const Run& r) {
    if (!r.ok()) throw std::invalid_argument("evaluate_along needs a completed run");
    return evaluate(q, r.p, r.direction, r.input, r.output, r.states);
}

std::vector<long> evaluate_along(const Parameter& q, const SymRun& r) {
    if (!r.ok()) throw std::invalid_argument("evaluate_along needs a completed run");
    std::vector<CounterState> states;
    states.reserve(r.states.size());
    for (const auto& c : r.states) states.push_back(as_counter_state(c));
    return evaluate(q, 1, r.direction, r.input, r.output, states);
}

long transition_variation(const Parameter& q, const TransitionInstance& t) {
    return q.alpha(t.mu, t.p) + q.alpha_bar(t.abar, t.p) + q.sigma1_of(t.right.H) - q.sigma1_of(t.left.H) +
           q.sigma2 * (t.right.v - t.left.v);
}

std::vector<TaggedInstance> transition_instances(int p) {
    std::vector<std::vector<StackLetter>> stacks = {{}};
    for (int l = 0; l < p; ++l)
        for (int m = 0; l + m < p; ++m) {
            stacks.push_back({StackLetter{l, m}});
            stacks.push_back({StackLetter{0, p - 1}, StackLetter{l, m}});
        }
    std::vector<TaggedInstance> out;
    for (const auto& H : stacks)
        for (int v = 0; v <= p + 1; ++v)
            for (int mu = -1; mu <= p; ++mu) {
                CounterState left{H, v};
                auto r = lr_step(p, mu, left);
                if (r.tag == Tag::T8) continue;
                TaggedInstance ti;
                ti.tag = r.tag;
                if (r.tag == Tag::T2 || r.tag == Tag::T5) ti.q = mu;
                if (r.tag == Tag::T3 || r.tag == Tag::T4 || r.tag == Tag::T6) {
                    ti.l = H.back().l;
                    ti.m = H.back().m;
                }
                ti.inst = TransitionInstance{p, LukLetter{mu}, left, r.next, TandemLetter{*r.output}};
                out.push_back(std::move(ti));
            }
    return out;
}

std::vector<SymTaggedInstance> sym_transition_instances() {
    std::vector<SymTaggedInstance> out;
    for (int h = 0; h <= 2; ++h)
        for (int v = 0; v <= 2; ++v)
            for (const auto& l : alphabet_letters(AlphabetSpec::bicol())) {
                CounterPair c{h, v};
                SymDir d{};
                SymTag t = sym_lr_apply(std::get<BicolLetter>(l), c, d);
                if (t == SymTag::DE || t == SymTag::DEp) continue;
                out.push_back({t, TransitionInstance{1, l, as_counter_state({h, v}), as_counter_state(c), SymLetter{d}}});
            }
    return out;
}

namespace {

using Row = std::array<LinearForm, 7>;

// Columns T1..T7; forms over (p, l, m, q, 1).
const std::map<std::string_view, Row>& general_table() {
    constexpr LinearForm Z{};
    constexpr LinearForm P{1, 0, 0, 0, 0};
    constexpr LinearForm Q{0, 0, 0, 1, 0};
    constexpr LinearForm L{0, 1, 0, 0, 0};
    constexpr LinearForm ONE{0, 0, 0, 0, 1};
    constexpr LinearForm NEG1{0, 0, 0, 0, -1};
    constexpr LinearForm NEG2{0, 0, 0, 0, -2};
    constexpr LinearForm MM1{0, 0, -1, 0, -1};   // -m-1
    constexpr LinearForm PMM1{1, 0, -1, 0, -1};  // p-m-1
    constexpr LinearForm LM1{0, -1, 0, 0, -1};   // -l-1
    constexpr LinearForm Q1{0, 0, 0, 1, 1};      // q+1
    constexpr LinearForm PQ{1, 0, 0, -1, 0};     // p-q
    constexpr LinearForm PML{1, -1, -1, 0, -1};  // p-m-1-l
    static const std::map<std::string_view, Row> t = {
        {"xbar", {Z, Z, MM1, MM1, ONE, ONE, ONE}},
        {"ybar", {P, P, PMM1, PMM1, NEG1, NEG1, NEG1}},
        {"z", {P, Q, NEG1, NEG1, Q, NEG1, NEG1}},
        {"v", {P, Q, L, L, NEG1, NEG1, NEG1}},
        {"lambda", {Z, Z, NEG1, NEG1, ONE, Z, Z}},
        {"zeta", {Z, Z, LM1, LM1, Q1, Z, Z}},
        {"xi", {Z, Z, MM1, MM1, ONE, ONE, Z}},
        {"k", {P, P, NEG2, NEG2, P, NEG2, NEG2}},
        {"kbar", {P, P, P, P, NEG2, NEG2, NEG2}},
        {"rbar", {Z, Z, Z, Z, Z, Z, ONE}},
        {"sbar", {Z, PQ, PML, Z, Z, Z, Z}},
    };
    return t;
}

// Columns U1 U1' L2 L2' L1 L1' D3 D3' D2 D2'.
const std::map<std::string_view, std::array<int, 10>>& sym_table() {
    static const std::map<std::string_view, std::array<int, 10>> t = {
        {"xbar", {0, 1, 1, -1, 0, 1, -1, 0, 1, -1}},
        {"ybar", {1, 0, -1, 1, 1, 0, 0, -1, -1, 1}},
        {"z", {1, 1, 0, 0, 0, 0, -1, -1, -1, -1}},
        {"h", {0, 1, 1, -1, 0, 0, -1, 0, 0, -1}},
        {"v", {1, 0, -1, 1, 0, 0, 0, -1, -1, 0}},
        {"k", {1, 1, 1, 1, 1, 1, -2, -2, -2, -2}},
        {"kbar", {1, -1, -2, 2, 1, -1, 1, -1, -2, 2}},
        {"rbar", {0, 0, 0, 0, 0, 1, 0, 0, 1, 0}},
        {"sbar", {0, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
    };
    return t;
}

int sym_column(SymTag t) {
    switch (t) {
    case SymTag::U1: return 0;
    case SymTag::U1p: return 1;
    case SymTag::L2: return 2;
    case SymTag::L2p: return 3;
    case SymTag::L1: return 4;
    case SymTag::L1p: return 5;
    case SymTag::D3: return 6;
    case SymTag::D3p: return 7;
    case SymTag::D2: return 8;
    case SymTag::D2p: return 9;
    default: throw std::invalid_argument("no table column for " + sym_tag_name(t));
    }
}

std::string describe(const TransitionInstance& t) {
    return "mu=" + format_letter(t.mu, AlphabetSpec{std::holds_alternative<BicolLetter>(t.mu) ? AlphabetKind::BicolMotzkin
                                                                                               : AlphabetKind::Lukasiewicz,
                                                    t.p},
                                 TokenStyle::Numeric) +
           " H=" + format_stack(t.left.H) + " v=" + std::to_string(t.left.v);
}

}  // namespace

LinearForm expected_variation(std::string_view param, Tag t) {
    const auto& tab = general_table();
    auto it = tab.find(param);
    if (it == tab.end() || t == Tag::T8) throw std::invalid_argument("no table entry");
    return it->second[static_cast<int>(t) - 1];
}

int expected_sym_variation(std::string_view param, SymTag t) {
    const auto& tab = sym_table();
    auto it = tab.find(param);
    if (it == tab.end()) throw std::invalid_argument("no table entry");
    return it->second[sym_column(t)];
}

std::vector<std::string> table_parameters(bool six_step) {
    if (six_step) return {"xbar", "ybar", "z", "h", "v", "k", "kbar", "rbar", "sbar"};
    return {"xbar", "ybar", "z", "v", "lambda", "zeta", "xi", "k", "kbar", "rbar", "sbar"};
}

TableReport verify_variation_table(int p) {
    TableReport rep;
    const auto insts = transition_instances(p);
    std::array<bool, 7> seen{};
    for (const auto& name : table_parameters(false)) {
        const Parameter q = builtin_parameter(name);
        for (const auto& ti : insts) {
            seen[static_cast<int>(ti.tag) - 1] = true;
            const long got = transition_variation(q, ti.inst);
            const long want = expected_variation(name, ti.tag).at(p, ti.l, ti.m, ti.q);
            ++rep.compared;
            if (got != want)
                rep.mismatches.push_back("p=" + std::to_string(p) + " " + tag_name(ti.tag, 2) + " " + name + " " +
                                         describe(ti.inst) + ": got " + std::to_string(got) + ", table " +
                                         std::to_string(want));
        }
    }
    // T6 needs l+m <= p-2, so it has no instance at p = 1.
    for (int t = 0; t < 7; ++t)
        if (!seen[t] && !(p == 1 && t == 5)) rep.mismatches.push_back("no instance of T" + std::to_string(t + 1));
    return rep;
}

TableReport verify_sym_variation_table() {
    TableReport rep;
    const auto insts = sym_transition_instances();
    std::array<bool, 10> seen{};
    for (const auto& name : table_parameters(true)) {
        const Parameter q = builtin_parameter(name);
        for (const auto& ti : insts) {
            seen[sym_column(ti.tag)] = true;
            const long got = transition_variation(q, ti.inst);
            const long want = expected_sym_variation(name, ti.tag);
            ++rep.compared;
            if (got != want)
                rep.mismatches.push_back(sym_tag_name(ti.tag) + " " + name + " " + describe(ti.inst) + ": got " +
                                         std::to_string(got) + ", table " + std::to_string(want));
        }
    }
    for (int c = 0; c < 10; ++c)
        if (!seen[c]) rep.mismatches.push_back("no instance of column " + std::to_string(c));
    return rep;
}

std::vector<std::string> check_suffix_bounds(int p, const Word& wbar) {
    std::vector<std::string> errs;
    const Run r = psi_p(p, wbar);
    if (!r.accepted()) {
        errs.push_back("not a p-tandem walk: " + format_word(wbar));
        return errs;
    }
    const std::size_t n = wbar.size();
    const auto path = prefix_path(wbar);
    const auto rbar = evaluate_along(builtin_parameter("rbar"), phi_p(p, r.output));
    const auto sbar = evaluate_along(builtin_parameter("sbar"), phi_p(p, r.output));
    std::vector<long> min_x(n + 1), min_y(n + 1);
    min_x[n] = path[n].x;
    min_y[n] = path[n].y;
    for (std::size_t i = n; i-- > 0;) {
        min_x[i] = std::min<long>(path[i].x, min_x[i + 1]);
        min_y[i] = std::min<long>(path[i].y, min_y[i + 1]);
    }
    const auto mus = r.output.values();
    long bx = 0, by = 0;
    for (std::size_t i = 0; i <= n; ++i) {
        if (i) {
            const Tag t = r.tags[i - 1];
            if (t == Tag::T7) bx += 1;
            if (t == Tag::T2) by += p - mus[i - 1];
            if (t == Tag::T3) {
                const StackLetter a = r.states[i - 1].H.back();
                if (p - a.m - 1 > a.l) by += p - a.m - 1 - a.l;
            }
        }
        const std::string at = " at i=" + std::to_string(i) + " in " + format_word(wbar);
        if (rbar[i] != bx) errs.push_back("rbar=" + std::to_string(rbar[i]) + " but T7 count " + std::to_string(bx) + at);
        if (sbar[i] != by) errs.push_back("sbar=" + std::to_string(sbar[i]) + " but T2/T3 sum " + std::to_string(by) + at);
        if (min_x[i] < bx) errs.push_back("suffix min x below bound" + at);
        if (min_y[i] < by) errs.push_back("suffix min y below bound" + at);
    }
    return errs;
}

}  // namespace walks
