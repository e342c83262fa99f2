#include "walks/words.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace walks {

namespace {

bool parse_int(std::string_view tok, int& out) {
    if (tok.empty()) return false;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

std::vector<std::string_view> split_tokens(std::string_view text) {
    std::vector<std::string_view> toks;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        if (j > i) toks.push_back(text.substr(i, j - i));
        i = j;
    }
    return toks;
}

// Tokens that name letters of some alphabet; used to tell "wrong alphabet"
// apart from "unknown token".
bool known_anywhere(std::string_view t) {
    static const std::string_view names[] = {"U", "L", "D", "u", "l", "d", "N", "S", "E", "W", "SE", "NW"};
    int dummy;
    return parse_int(t, dummy) || std::find(std::begin(names), std::end(names), t) != std::end(names);
}

[[noreturn]] void reject(std::string_view tok, std::size_t pos, const AlphabetSpec& a, const char* why) {
    std::ostringstream os;
    os << "token '" << tok << "' at position " << pos << ' ' << why << " for alphabet " << to_string(a);
    throw WordError(os.str());
}

Letter parse_token(std::string_view t, std::size_t pos, const AlphabetSpec& a) {
    int n = 0;
    const bool numeric = parse_int(t, n);
    switch (a.kind) {
    case AlphabetKind::Lukasiewicz:
        if (numeric) {
            if (n < -1 || n > a.p) reject(t, pos, a, "is out of range");
            return LukLetter{n};
        }
        if (t == "D") return LukLetter{-1};
        if (t == "L") return LukLetter{0};
        if (t == "U") return LukLetter{1};
        break;
    case AlphabetKind::Tandem:
        if (numeric) {
            if (n < -1 || n > a.p) reject(t, pos, a, "is out of range");
            return TandemLetter{n};
        }
        if (t == "D" || t == "SE") return TandemLetter::se();
        if (a.p == 1 && t == "N") return TandemLetter{1};
        if (a.p == 1 && t == "W") return TandemLetter{0};
        break;
    case AlphabetKind::BicolMotzkin:
        if (t == "U") return BicolLetter{Dir3::Up, Colour::Solid};
        if (t == "L") return BicolLetter{Dir3::Level, Colour::Solid};
        if (t == "D") return BicolLetter{Dir3::Down, Colour::Solid};
        if (t == "u") return BicolLetter{Dir3::Up, Colour::Striped};
        if (t == "l") return BicolLetter{Dir3::Level, Colour::Striped};
        if (t == "d") return BicolLetter{Dir3::Down, Colour::Striped};
        break;
    case AlphabetKind::SymSix:
        if (t == "N") return SymLetter{SymDir::N};
        if (t == "S") return SymLetter{SymDir::S};
        if (t == "E") return SymLetter{SymDir::E};
        if (t == "W") return SymLetter{SymDir::W};
        if (t == "SE") return SymLetter{SymDir::SE};
        if (t == "NW") return SymLetter{SymDir::NW};
        break;
    case AlphabetKind::Yamanouchi3:
        if (numeric) {
            if (n < 1 || n > 3) reject(t, pos, a, "is out of range");
            return YamLetter{n};
        }
        break;
    }
    if (known_anywhere(t)) reject(t, pos, a, "belongs to another alphabet");
    reject(t, pos, a, "is unknown");
}

const char* sym_name(SymDir d) {
    switch (d) {
    case SymDir::N: return "N";
    case SymDir::S: return "S";
    case SymDir::E: return "E";
    case SymDir::W: return "W";
    case SymDir::SE: return "SE";
    case SymDir::NW: return "NW";
    }
    return "?";
}

}  // namespace

AlphabetSpec AlphabetSpec::lukasiewicz(int p) {
    if (p < 1) throw WordError("p must be >= 1");
    return {AlphabetKind::Lukasiewicz, p};
}

AlphabetSpec AlphabetSpec::tandem(int p) {
    if (p < 1) throw WordError("p must be >= 1");
    return {AlphabetKind::Tandem, p};
}

bool AlphabetSpec::operator==(const AlphabetSpec& o) const {
    if (kind != o.kind) return false;
    if (kind == AlphabetKind::Lukasiewicz || kind == AlphabetKind::Tandem) return p == o.p;
    return true;
}

std::string to_string(const AlphabetSpec& a) {
    switch (a.kind) {
    case AlphabetKind::Lukasiewicz: return "Sigma_" + std::to_string(a.p);
    case AlphabetKind::Tandem: return "S_" + std::to_string(a.p);
    case AlphabetKind::BicolMotzkin: return "Sigma_1,bicol";
    case AlphabetKind::SymSix: return "S_1,sym";
    case AlphabetKind::Yamanouchi3: return "{1,2,3}";
    }
    return "?";
}

bool letter_in(const Letter& l, const AlphabetSpec& a) {
    switch (a.kind) {
    case AlphabetKind::Lukasiewicz:
        if (auto* x = std::get_if<LukLetter>(&l)) return x->mu >= -1 && x->mu <= a.p;
        return false;
    case AlphabetKind::Tandem:
        if (auto* x = std::get_if<TandemLetter>(&l)) return x->mubar >= -1 && x->mubar <= a.p;
        return false;
    case AlphabetKind::BicolMotzkin: return std::holds_alternative<BicolLetter>(l);
    case AlphabetKind::SymSix: return std::holds_alternative<SymLetter>(l);
    case AlphabetKind::Yamanouchi3:
        if (auto* x = std::get_if<YamLetter>(&l)) return x->digit >= 1 && x->digit <= 3;
        return false;
    }
    return false;
}

Word::Word(AlphabetSpec alphabet, std::vector<Letter> letters)
    : alphabet_(alphabet), letters_(std::move(letters)) {
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (!letter_in(letters_[i], alphabet_)) {
            throw WordError("letter at position " + std::to_string(i + 1) + " is not in " + to_string(alphabet_));
        }
    }
}

Word Word::luk(int p, std::span<const int> mus) {
    std::vector<Letter> ls;
    ls.reserve(mus.size());
    for (int m : mus) ls.emplace_back(LukLetter{m});
    return Word(AlphabetSpec::lukasiewicz(p), std::move(ls));
}

Word Word::tandem(int p, std::span<const int> mubars) {
    std::vector<Letter> ls;
    ls.reserve(mubars.size());
    for (int m : mubars) ls.emplace_back(TandemLetter{m});
    return Word(AlphabetSpec::tandem(p), std::move(ls));
}

std::vector<int> Word::values() const {
    std::vector<int> out;
    out.reserve(letters_.size());
    for (const auto& l : letters_) {
        if (auto* a = std::get_if<LukLetter>(&l)) out.push_back(a->mu);
        else if (auto* b = std::get_if<TandemLetter>(&l)) out.push_back(b->mubar);
        else if (auto* c = std::get_if<YamLetter>(&l)) out.push_back(c->digit);
        else throw WordError("values() needs a Lukasiewicz, Tandem or Yamanouchi word");
    }
    return out;
}

Word Word::prefix(std::size_t n) const {
    n = std::min(n, letters_.size());
    return Word(alphabet_, std::vector<Letter>(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(n)));
}

Word Word::concat(const Word& other) const {
    if (!(alphabet_ == other.alphabet_)) throw WordError("concat: alphabet mismatch");
    std::vector<Letter> ls = letters_;
    ls.insert(ls.end(), other.letters_.begin(), other.letters_.end());
    return Word(alphabet_, std::move(ls));
}

Word parse_word(std::string_view text, const AlphabetSpec& alphabet) {
    std::vector<Letter> ls;
    auto toks = split_tokens(text);
    ls.reserve(toks.size());
    for (std::size_t i = 0; i < toks.size(); ++i) ls.push_back(parse_token(toks[i], i + 1, alphabet));
    return Word(alphabet, std::move(ls));
}

std::string format_letter(const Letter& l, const AlphabetSpec& a, TokenStyle style) {
    const bool compact = style == TokenStyle::Canonical && a.p == 1;
    if (auto* x = std::get_if<LukLetter>(&l)) {
        if (x->mu == -1) return style == TokenStyle::Numeric ? "-1" : "D";
        if (compact) return x->mu == 0 ? "L" : "U";
        return std::to_string(x->mu);
    }
    if (auto* x = std::get_if<TandemLetter>(&l)) {
        if (x->is_se()) return compact ? "SE" : style == TokenStyle::Numeric ? "-1" : "D";
        if (compact) return x->mubar == 1 ? "N" : "W";
        return std::to_string(x->mubar);
    }
    if (auto* x = std::get_if<BicolLetter>(&l)) {
        static const char* solid[] = {"U", "L", "D"};
        static const char* striped[] = {"u", "l", "d"};
        return (x->colour == Colour::Solid ? solid : striped)[static_cast<int>(x->dir)];
    }
    if (auto* x = std::get_if<SymLetter>(&l)) return sym_name(x->dir);
    return std::to_string(std::get<YamLetter>(l).digit);
}

std::string format_word(const Word& w, TokenStyle style) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += format_letter(w[i], w.alphabet(), style);
    }
    return out;
}

StepVector step_vector(const Letter& l, int p) {
    if (auto* x = std::get_if<LukLetter>(&l)) return {1, x->mu};
    if (auto* x = std::get_if<TandemLetter>(&l)) {
        if (x->is_se()) return {1, -1};
        return {x->mubar - p, x->mubar};
    }
    if (auto* x = std::get_if<BicolLetter>(&l)) return {1, x->mu()};
    if (auto* x = std::get_if<SymLetter>(&l)) {
        switch (x->dir) {
        case SymDir::N: return {0, 1};
        case SymDir::S: return {0, -1};
        case SymDir::E: return {1, 0};
        case SymDir::W: return {-1, 0};
        case SymDir::SE: return {1, -1};
        case SymDir::NW: return {-1, 1};
        }
    }
    // Yamanouchi digits read as the quarter-plane steps 1=N, 2=SE, 3=W.
    switch (std::get<YamLetter>(l).digit) {
    case 1: return {0, 1};
    case 2: return {1, -1};
    default: return {-1, 0};
    }
}

std::vector<LatticePoint> prefix_path(const Word& w, LatticePoint origin) {
    std::vector<LatticePoint> pts;
    pts.reserve(w.size() + 1);
    pts.push_back(origin);
    for (const auto& l : w.letters()) {
        auto [dx, dy] = step_vector(l, w.alphabet().p);
        origin.x += dx;
        origin.y += dy;
        pts.push_back(origin);
    }
    return pts;
}

AlphabetSpec WalkClass::alphabet() const {
    switch (kind) {
    case WalkClassKind::Motzkin: return AlphabetSpec::lukasiewicz(1);
    case WalkClassKind::HalfPlaneTandem:
    case WalkClassKind::QuarterTandem1: return AlphabetSpec::tandem(1);
    case WalkClassKind::Yamanouchi3: return AlphabetSpec::yamanouchi();
    case WalkClassKind::QSym: return AlphabetSpec::sym();
    case WalkClassKind::BicolMotzkin: return AlphabetSpec::bicol();
    case WalkClassKind::Lukasiewicz: return AlphabetSpec::lukasiewicz(p);
    case WalkClassKind::PTandem: return AlphabetSpec::tandem(p);
    }
    throw WordError("unknown walk class");
}

std::string to_string(const WalkClass& c) {
    switch (c.kind) {
    case WalkClassKind::Motzkin: return "M";
    case WalkClassKind::HalfPlaneTandem: return "H";
    case WalkClassKind::QuarterTandem1: return "Q";
    case WalkClassKind::Yamanouchi3: return "Y3";
    case WalkClassKind::QSym: return "Qsym";
    case WalkClassKind::BicolMotzkin: return "Mbicol";
    case WalkClassKind::Lukasiewicz: return "L" + std::to_string(c.p);
    case WalkClassKind::PTandem: return "T" + std::to_string(c.p);
    }
    return "?";
}

bool is_member(const Word& w, const WalkClass& c) {
    if (!(w.alphabet() == c.alphabet())) {
        throw WordError("alphabet " + to_string(w.alphabet()) + " is not admissible for class " + to_string(c));
    }
    const auto path = prefix_path(w);
    switch (c.kind) {
    case WalkClassKind::Motzkin:
    case WalkClassKind::HalfPlaneTandem:
    case WalkClassKind::BicolMotzkin:
    case WalkClassKind::Lukasiewicz:
        return std::all_of(path.begin(), path.end(), [](const LatticePoint& q) { return q.y >= 0; }) &&
               path.back().y == 0;
    case WalkClassKind::QuarterTandem1:
    case WalkClassKind::Yamanouchi3:
    case WalkClassKind::QSym:
    case WalkClassKind::PTandem:
        return std::all_of(path.begin(), path.end(), [](const LatticePoint& q) { return q.x >= 0 && q.y >= 0; });
    }
    return false;
}

Word recode(const Word& w, RecodeScheme scheme) {
    std::vector<Letter> out;
    out.reserve(w.size());
    switch (scheme) {
    case RecodeScheme::MotzkinToHalfPlane:
        if (!(w.alphabet() == AlphabetSpec::lukasiewicz(1))) throw WordError("recode: expected a Sigma_1 word");
        // U -> N (0,1), L -> W (-1,0), D -> SE.
        for (const auto& l : w.letters()) {
            int mu = std::get<LukLetter>(l).mu;
            out.emplace_back(TandemLetter{mu == 1 ? 1 : mu == 0 ? 0 : -1});
        }
        return Word(AlphabetSpec::tandem(1), std::move(out));
    case RecodeScheme::HalfPlaneToMotzkin:
        if (!(w.alphabet() == AlphabetSpec::tandem(1))) throw WordError("recode: expected an S_1 word");
        for (const auto& l : w.letters()) {
            int mb = std::get<TandemLetter>(l).mubar;
            out.emplace_back(LukLetter{mb == 1 ? 1 : mb == 0 ? 0 : -1});
        }
        return Word(AlphabetSpec::lukasiewicz(1), std::move(out));
    case RecodeScheme::YamanouchiToQuarter:
        if (!(w.alphabet() == AlphabetSpec::yamanouchi())) throw WordError("recode: expected a {1,2,3} word");
        for (const auto& l : w.letters()) {
            int d = std::get<YamLetter>(l).digit;
            out.emplace_back(TandemLetter{d == 1 ? 1 : d == 2 ? -1 : 0});
        }
        return Word(AlphabetSpec::tandem(1), std::move(out));
    case RecodeScheme::QuarterToYamanouchi:
        if (!(w.alphabet() == AlphabetSpec::tandem(1))) throw WordError("recode: expected an S_1 word");
        for (const auto& l : w.letters()) {
            int mb = std::get<TandemLetter>(l).mubar;
            out.emplace_back(YamLetter{mb == 1 ? 1 : mb == -1 ? 2 : 3});
        }
        return Word(AlphabetSpec::yamanouchi(), std::move(out));
    }
    throw WordError("recode: unknown scheme");
}

Word reflect(const Word& w) {
    if (!(w.alphabet() == AlphabetSpec::sym())) throw WordError("reflect: expected an S_1,sym word");
    std::vector<Letter> out;
    out.reserve(w.size());
    for (const auto& l : w.letters()) {
        SymDir d = std::get<SymLetter>(l).dir;
        SymDir r = d;
        switch (d) {
        case SymDir::N: r = SymDir::E; break;
        case SymDir::E: r = SymDir::N; break;
        case SymDir::S: r = SymDir::W; break;
        case SymDir::W: r = SymDir::S; break;
        case SymDir::SE: r = SymDir::NW; break;
        case SymDir::NW: r = SymDir::SE; break;
        }
        out.emplace_back(SymLetter{r});
    }
    return Word(w.alphabet(), std::move(out));
}

std::vector<Letter> alphabet_letters(const AlphabetSpec& a) {
    std::vector<Letter> out;
    switch (a.kind) {
    case AlphabetKind::Lukasiewicz:
        for (int mu = -1; mu <= a.p; ++mu) out.emplace_back(LukLetter{mu});
        break;
    case AlphabetKind::Tandem:
        for (int mb = -1; mb <= a.p; ++mb) out.emplace_back(TandemLetter{mb});
        break;
    case AlphabetKind::BicolMotzkin:
        for (Colour c : {Colour::Solid, Colour::Striped})
            for (Dir3 d : {Dir3::Up, Dir3::Level, Dir3::Down}) out.emplace_back(BicolLetter{d, c});
        break;
    case AlphabetKind::SymSix:
        for (SymDir d : {SymDir::N, SymDir::S, SymDir::E, SymDir::W, SymDir::SE, SymDir::NW})
            out.emplace_back(SymLetter{d});
        break;
    case AlphabetKind::Yamanouchi3:
        for (int d = 1; d <= 3; ++d) out.emplace_back(YamLetter{d});
        break;
    }
    return out;
}

}  // namespace walks
