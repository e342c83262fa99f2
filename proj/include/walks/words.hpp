#ifndef WALKS_WORDS_HPP
#define WALKS_WORDS_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace walks {

enum class AlphabetKind { Lukasiewicz, Tandem, BicolMotzkin, SymSix, Yamanouchi3 };

/// Step alphabet. `p` is meaningful for Lukasiewicz and Tandem only.
struct AlphabetSpec {
    AlphabetKind kind = AlphabetKind::Lukasiewicz;
    int p = 1;

    static AlphabetSpec lukasiewicz(int p);
    static AlphabetSpec tandem(int p);
    static AlphabetSpec bicol() { return {AlphabetKind::BicolMotzkin, 1}; }
    static AlphabetSpec sym() { return {AlphabetKind::SymSix, 1}; }
    static AlphabetSpec yamanouchi() { return {AlphabetKind::Yamanouchi3, 1}; }

    bool operator==(const AlphabetSpec& o) const;
};

std::string to_string(const AlphabetSpec& a);

// Letters. A Tandem letter stores the y-coordinate of the step: -1 is the
// small step (1,-1), 0..p is the long step (mubar - p, mubar).
struct LukLetter {
    int mu;
    auto operator<=>(const LukLetter&) const = default;
};

struct TandemLetter {
    int mubar;
    bool is_se() const { return mubar < 0; }
    static TandemLetter se() { return {-1}; }
    static TandemLetter long_step(int mubar) { return {mubar}; }
    auto operator<=>(const TandemLetter&) const = default;
};

enum class Dir3 : std::uint8_t { Up, Level, Down };
enum class Colour : std::uint8_t { Solid, Striped };

struct BicolLetter {
    Dir3 dir;
    Colour colour;
    int mu() const { return dir == Dir3::Up ? 1 : dir == Dir3::Level ? 0 : -1; }
    auto operator<=>(const BicolLetter&) const = default;
};

enum class SymDir : std::uint8_t { N, S, E, W, SE, NW };

struct SymLetter {
    SymDir dir;
    auto operator<=>(const SymLetter&) const = default;
};

struct YamLetter {
    int digit;
    auto operator<=>(const YamLetter&) const = default;
};

using Letter = std::variant<LukLetter, TandemLetter, BicolLetter, SymLetter, YamLetter>;

struct LatticePoint {
    long x = 0;
    long y = 0;
    auto operator<=>(const LatticePoint&) const = default;
};

/// Thrown for malformed text, out-of-range letters and alphabet mismatches.
class WordError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Immutable sequence of letters over one alphabet.
class Word {
public:
    Word() = default;
    explicit Word(AlphabetSpec alphabet) : alphabet_(alphabet) {}
    Word(AlphabetSpec alphabet, std::vector<Letter> letters);

    static Word luk(int p, std::span<const int> mus);
    static Word tandem(int p, std::span<const int> mubars);

    const AlphabetSpec& alphabet() const { return alphabet_; }
    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const Letter& operator[](std::size_t i) const { return letters_[i]; }

    /// mu values of a Lukasiewicz word or mubar values of a Tandem word.
    std::vector<int> values() const;

    Word prefix(std::size_t n) const;
    Word concat(const Word& other) const;

    bool operator==(const Word& o) const = default;

private:
    AlphabetSpec alphabet_{};
    std::vector<Letter> letters_;
};

bool letter_in(const Letter& l, const AlphabetSpec& a);

/// Token rendering. Canonical uses compass/U-L-D names at p = 1 and
/// integers (with D for -1) for larger p. Numeric always prints integers.
enum class TokenStyle { Canonical, Numeric };

Word parse_word(std::string_view text, const AlphabetSpec& alphabet);
std::string format_letter(const Letter& l, const AlphabetSpec& a, TokenStyle style = TokenStyle::Canonical);
std::string format_word(const Word& w, TokenStyle style = TokenStyle::Canonical);

struct StepVector {
    int dx;
    int dy;
    auto operator<=>(const StepVector&) const = default;
};

StepVector step_vector(const Letter& l, int p);
std::vector<LatticePoint> prefix_path(const Word& w, LatticePoint origin = {});

enum class WalkClassKind {
    Motzkin,
    HalfPlaneTandem,
    QuarterTandem1,
    Yamanouchi3,
    QSym,
    BicolMotzkin,
    Lukasiewicz,
    PTandem,
};

struct WalkClass {
    WalkClassKind kind;
    int p = 1;

    static WalkClass motzkin() { return {WalkClassKind::Motzkin, 1}; }
    static WalkClass half_plane() { return {WalkClassKind::HalfPlaneTandem, 1}; }
    static WalkClass quarter() { return {WalkClassKind::QuarterTandem1, 1}; }
    static WalkClass yamanouchi() { return {WalkClassKind::Yamanouchi3, 1}; }
    static WalkClass qsym() { return {WalkClassKind::QSym, 1}; }
    static WalkClass bicol() { return {WalkClassKind::BicolMotzkin, 1}; }
    static WalkClass lukasiewicz(int p) { return {WalkClassKind::Lukasiewicz, p}; }
    static WalkClass ptandem(int p) { return {WalkClassKind::PTandem, p}; }

    AlphabetSpec alphabet() const;
    bool operator==(const WalkClass&) const = default;
};

std::string to_string(const WalkClass& c);

/// Membership by walk geometry: half-plane classes need y >= 0 on every
/// prefix and final y = 0; quarter-plane classes need x, y >= 0 throughout.
bool is_member(const Word& w, const WalkClass& c);

enum class RecodeScheme { MotzkinToHalfPlane, HalfPlaneToMotzkin, YamanouchiToQuarter, QuarterToYamanouchi };

Word recode(const Word& w, RecodeScheme scheme);

/// Swap the coordinates of every six-step letter (N<->E, S<->W, SE<->NW).
Word reflect(const Word& w);

/// Letters of an alphabet in canonical enumeration order.
std::vector<Letter> alphabet_letters(const AlphabetSpec& a);

}  // namespace walks

#endif
