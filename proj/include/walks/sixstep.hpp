#ifndef WALKS_SIXSTEP_HPP
#define WALKS_SIXSTEP_HPP

#include "walks/transducer.hpp"
#include "walks/words.hpp"

#include <optional>
#include <string>
#include <vector>

namespace walks {

struct CounterPair {
    int h = 0;
    int v = 0;
    bool operator==(const CounterPair&) const = default;
};

// Primed tags (the *p values) fire on striped letters only.
enum class SymTag { U1, L1, L2, D2, D3, DE, U1p, L1p, L2p, D2p, D3p, DEp };

std::string sym_tag_name(SymTag t);
bool is_primed(SymTag t);

SymTag sym_lr_apply(const BicolLetter& in, CounterPair& s, SymDir& out);
SymTag sym_rl_apply(SymDir in, CounterPair& s, BicolLetter& out);

struct SymFailure {
    std::size_t position;
    SymTag tag;
    CounterPair state;
};

/// Same layout as Run: states[i] are the counters at time i.
struct SymRun {
    Direction direction = Direction::LR;
    Word input;
    Word output;
    std::vector<SymTag> tags;
    std::vector<CounterPair> states;
    std::optional<SymFailure> failure;

    bool ok() const { return !failure; }
    const CounterPair& final_state() const { return direction == Direction::LR ? states.back() : states.front(); }
    bool accepted() const { return ok() && final_state() == CounterPair{}; }
};

SymRun phi_sym(const Word& w);
SymRun psi_sym(const Word& wbar);

struct Decolored {
    Word motzkin;
    std::vector<std::size_t> striped;  // 1-based, increasing
};

Decolored decolor(const Word& w);
Word recolor(const Word& motzkin, const std::vector<std::size_t>& striped);

struct Projection {
    Word q1;  // over S_1
    std::vector<std::size_t> striped;
};

/// w in Qsym -> (Phi_1 of the decoloured preimage, striped positions).
Projection two_n_projection(const Word& wbar);

// Words of S_1,sym that only use N, W, SE are S_1 words and back.
std::optional<Word> sym_to_tandem1(const Word& w);
Word tandem1_to_sym(const Word& w);

std::string sym_trace_tsv(const SymRun& r);

}  // namespace walks

#endif
