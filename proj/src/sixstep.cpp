#include "walks/sixstep.hpp"

#include <algorithm>
#include <sstream>

namespace walks {

std::string sym_tag_name(SymTag t) {
    static const char* names[] = {"U1", "L1", "L2", "D2", "D3", "DE", "U1'", "L1'", "L2'", "D2'", "D3'", "DE'"};
    return names[static_cast<int>(t)];
}

bool is_primed(SymTag t) { return static_cast<int>(t) >= static_cast<int>(SymTag::U1p); }

SymTag sym_lr_apply(const BicolLetter& in, CounterPair& s, SymDir& out) {
    if (in.colour == Colour::Solid) {
        switch (in.dir) {
        case Dir3::Up:
            s.v += 1;
            out = SymDir::N;
            return SymTag::U1;
        case Dir3::Level:
            if (s.v > 0) {
                s.h += 1;
                s.v -= 1;
                out = SymDir::SE;
                return SymTag::L2;
            }
            out = SymDir::N;
            return SymTag::L1;
        case Dir3::Down:
            if (s.h > 0) {
                s.h -= 1;
                out = SymDir::W;
                return SymTag::D3;
            }
            if (s.v > 0) {
                s.v -= 1;
                out = SymDir::SE;
                return SymTag::D2;
            }
            return SymTag::DE;
        }
    }
    switch (in.dir) {
    case Dir3::Up:
        s.h += 1;
        out = SymDir::E;
        return SymTag::U1p;
    case Dir3::Level:
        if (s.h > 0) {
            s.h -= 1;
            s.v += 1;
            out = SymDir::NW;
            return SymTag::L2p;
        }
        out = SymDir::E;
        return SymTag::L1p;
    case Dir3::Down:
        if (s.v > 0) {
            s.v -= 1;
            out = SymDir::S;
            return SymTag::D3p;
        }
        if (s.h > 0) {
            s.h -= 1;
            out = SymDir::NW;
            return SymTag::D2p;
        }
        return SymTag::DEp;
    }
    return SymTag::DEp;
}

SymTag sym_rl_apply(SymDir in, CounterPair& s, BicolLetter& out) {
    auto solid = [&](Dir3 d) { out = {d, Colour::Solid}; };
    auto striped = [&](Dir3 d) { out = {d, Colour::Striped}; };
    switch (in) {
    case SymDir::N:
        if (s.v > 0) {
            s.v -= 1;
            solid(Dir3::Up);
            return SymTag::U1;
        }
        solid(Dir3::Level);
        return SymTag::L1;
    case SymDir::SE:
        if (s.h > 0) {
            s.h -= 1;
            s.v += 1;
            solid(Dir3::Level);
            return SymTag::L2;
        }
        s.v += 1;
        solid(Dir3::Down);
        return SymTag::D2;
    case SymDir::W:
        s.h += 1;
        solid(Dir3::Down);
        return SymTag::D3;
    case SymDir::E:
        if (s.h > 0) {
            s.h -= 1;
            striped(Dir3::Up);
            return SymTag::U1p;
        }
        striped(Dir3::Level);
        return SymTag::L1p;
    case SymDir::NW:
        if (s.v > 0) {
            s.v -= 1;
            s.h += 1;
            striped(Dir3::Level);
            return SymTag::L2p;
        }
        s.h += 1;
        striped(Dir3::Down);
        return SymTag::D2p;
    case SymDir::S:
        s.v += 1;
        striped(Dir3::Down);
        return SymTag::D3p;
    }
    return SymTag::DE;
}

SymRun phi_sym(const Word& w) {
    if (!(w.alphabet() == AlphabetSpec::bicol())) throw WordError("phi_sym expects a bicoloured Motzkin word");
    SymRun r;
    r.direction = Direction::LR;
    r.input = w;
    std::vector<Letter> outs;
    CounterPair s;
    r.states.push_back(s);
    for (std::size_t i = 0; i < w.size(); ++i) {
        SymDir d{};
        SymTag t = sym_lr_apply(std::get<BicolLetter>(w[i]), s, d);
        if (t == SymTag::DE || t == SymTag::DEp) {
            r.failure = SymFailure{i + 1, t, s};
            break;
        }
        r.tags.push_back(t);
        r.states.push_back(s);
        outs.emplace_back(SymLetter{d});
    }
    r.output = Word(AlphabetSpec::sym(), std::move(outs));
    return r;
}

SymRun psi_sym(const Word& wbar) {
    if (!(wbar.alphabet() == AlphabetSpec::sym())) throw WordError("psi_sym expects a six-step word");
    const std::size_t n = wbar.size();
    SymRun r;
    r.direction = Direction::RL;
    r.input = wbar;
    r.tags.resize(n);
    r.states.resize(n + 1);
    std::vector<Letter> outs(n);
    CounterPair s;
    for (std::size_t i = n; i >= 1; --i) {
        BicolLetter b{};
        r.tags[i - 1] = sym_rl_apply(std::get<SymLetter>(wbar[i - 1]).dir, s, b);
        r.states[i - 1] = s;
        outs[i - 1] = b;
    }
    r.output = Word(AlphabetSpec::bicol(), std::move(outs));
    return r;
}

Decolored decolor(const Word& w) {
    if (!(w.alphabet() == AlphabetSpec::bicol())) throw WordError("decolor expects a bicoloured Motzkin word");
    Decolored d;
    std::vector<Letter> ls;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const auto& b = std::get<BicolLetter>(w[i]);
        ls.emplace_back(LukLetter{b.mu()});
        if (b.colour == Colour::Striped) d.striped.push_back(i + 1);
    }
    d.motzkin = Word(AlphabetSpec::lukasiewicz(1), std::move(ls));
    return d;
}

Word recolor(const Word& motzkin, const std::vector<std::size_t>& striped) {
    if (!(motzkin.alphabet() == AlphabetSpec::lukasiewicz(1))) throw WordError("recolor expects a Sigma_1 word");
    std::vector<Letter> ls;
    for (const auto& l : motzkin.letters()) {
        int mu = std::get<LukLetter>(l).mu;
        ls.emplace_back(BicolLetter{mu == 1 ? Dir3::Up : mu == 0 ? Dir3::Level : Dir3::Down, Colour::Solid});
    }
    for (std::size_t pos : striped) {
        if (pos < 1 || pos > ls.size()) throw WordError("recolor: position " + std::to_string(pos) + " out of range");
        std::get<BicolLetter>(ls[pos - 1]).colour = Colour::Striped;
    }
    return Word(AlphabetSpec::bicol(), std::move(ls));
}

Projection two_n_projection(const Word& wbar) {
    if (!is_member(wbar, WalkClass::qsym())) throw WordError("two_n_projection: word is not in Qsym");
    auto back = psi_sym(wbar);
    auto d = decolor(back.output);
    auto fwd = phi_p(1, d.motzkin);
    return {fwd.output, std::move(d.striped)};
}

std::optional<Word> sym_to_tandem1(const Word& w) {
    std::vector<Letter> ls;
    for (const auto& l : w.letters()) {
        switch (std::get<SymLetter>(l).dir) {
        case SymDir::N: ls.emplace_back(TandemLetter{1}); break;
        case SymDir::W: ls.emplace_back(TandemLetter{0}); break;
        case SymDir::SE: ls.emplace_back(TandemLetter::se()); break;
        default: return std::nullopt;
        }
    }
    return Word(AlphabetSpec::tandem(1), std::move(ls));
}

Word tandem1_to_sym(const Word& w) {
    if (!(w.alphabet() == AlphabetSpec::tandem(1))) throw WordError("tandem1_to_sym expects an S_1 word");
    std::vector<Letter> ls;
    for (const auto& l : w.letters()) {
        int mb = std::get<TandemLetter>(l).mubar;
        ls.emplace_back(SymLetter{mb == 1 ? SymDir::N : mb == 0 ? SymDir::W : SymDir::SE});
    }
    return Word(AlphabetSpec::sym(), std::move(ls));
}

std::string sym_trace_tsv(const SymRun& r) {
    std::ostringstream os;
    os << "i\tin\ttr\th\tv\tout\n";
    for (std::size_t i = 0; i < r.states.size(); ++i) {
        os << i << '\t';
        if (i == 0) os << "-\t-\t";
        else os << format_letter(r.input[i - 1], r.input.alphabet()) << '\t' << sym_tag_name(r.tags[i - 1]) << '\t';
        os << r.states[i].h << '\t' << r.states[i].v << '\t';
        os << (i == 0 ? std::string("-") : format_letter(r.output[i - 1], r.output.alphabet())) << '\n';
    }
    return os.str();
}

}  // namespace walks
