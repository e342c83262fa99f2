#ifndef WALKS_RAISING_HPP
#define WALKS_RAISING_HPP

#include "walks/words.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace walks {

/// A step that cannot be parsed means the input left the quadrant.
class MembershipError : public WordError {
public:
    MembershipError(const std::string& what, std::size_t position) : WordError(what), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Letter of the intermediate words for p = 1 and the six-step model.
/// Up letters are never raisable.
struct MarkedLetter1 {
    Dir3 value = Dir3::Level;
    bool raisable = false;
    Colour colour = Colour::Solid;
    bool operator==(const MarkedLetter1&) const = default;
};

/// <mu, j, t>. proxy is the absolute position of the proxy (0 if t < 1).
struct AnnotatedLetter {
    int mu = 0;
    int j = 0;
    int t = 0;
    std::size_t proxy = 0;
    bool operator==(const AnnotatedLetter&) const = default;
};

// One entry per input position. label names the case used; raised is the
// position of the letter that got raised (0 if none).
struct RaiseStep {
    std::string label;
    std::size_t raised = 0;
    std::size_t proxy = 0;               // general p, case b2
    std::vector<std::size_t> frozen;     // general p, case c: the m-1 newer letters
};

struct RaisingHistory {
    std::vector<RaiseStep> steps;
};

enum class PairKind { Solid, Dashed };

struct Pair {
    std::size_t earlier;
    std::size_t later;
    PairKind kind;
    auto operator<=>(const Pair&) const = default;
};

/// Sorted by (earlier, later, kind).
using Pairing = std::vector<Pair>;

struct P1Raising {
    Word motzkin;
    RaisingHistory history;
    Pairing pairing;
    std::vector<std::vector<MarkedLetter1>> snapshots;  // M_1..M_n when kept
};

P1Raising raising_p1(const Word& wbar, bool keep_snapshots = false);

struct EuResult {
    Word motzkin;
    RaisingHistory history;
    Pairing pairing;
    std::vector<std::string> passes;  // the word after each of the three passes
};

EuResult eu_three_pass(const Word& wbar);

struct SymRaising {
    Word bicol;
    RaisingHistory history;
    std::vector<std::vector<MarkedLetter1>> snapshots;
};

SymRaising raising_sym(const Word& wbar, bool keep_snapshots = false);

struct GeneralRaising {
    Word luk;
    RaisingHistory history;
    std::vector<std::vector<AnnotatedLetter>> snapshots;  // L_1..L_n when kept
};

GeneralRaising raising_general(int p, const Word& wbar, bool keep_snapshots = false);

Pairing extract_pairing(const RaisingHistory& h);

/// True when no two pairs of the given kind cross.
bool noncrossing(const Pairing& pr, PairKind kind);

std::string format_marked(const MarkedLetter1& l, bool bicol);
std::string format_marked_word(const std::vector<MarkedLetter1>& w, bool bicol);
/// mu^j_t with D for mu = -1 and '-' for t = -1, e.g. "D^3_2".
std::string format_annotated(const AnnotatedLetter& a);
std::string format_annotated_word(const std::vector<AnnotatedLetter>& w);

}  // namespace walks

#endif
