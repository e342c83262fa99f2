#ifndef WALKS_PDA_HPP
#define WALKS_PDA_HPP

#include "walks/words.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace walks {

/// o (bottom marker), iota (unary unit) or a_{l,m}.
struct StackSym {
    enum class Kind { O, Iota, A } kind = Kind::O;
    int l = 0;
    int m = 0;

    static StackSym o() { return {Kind::O, 0, 0}; }
    static StackSym iota() { return {Kind::Iota, 0, 0}; }
    static StackSym a(int l, int m) { return {Kind::A, l, m}; }
    auto operator<=>(const StackSym&) const = default;
};

std::string to_string(const StackSym& s);

/// Stack words are written bottom to top.
using StackWord = std::vector<StackSym>;

struct PdtRule {
    Letter input;
    int state = 0;
    StackSym top1;
    StackWord repl1;
    StackSym top2;
    StackWord repl2;
    int next_state = 0;
    std::vector<Letter> output;
    bool operator==(const PdtRule&) const = default;
};

struct PdtConfig {
    int state = 0;
    StackWord stack1;
    StackWord stack2;
    bool operator==(const PdtConfig&) const = default;
};

struct PushdownTransducer {
    std::string name;
    AlphabetSpec input_alphabet;
    AlphabetSpec output_alphabet;
    std::vector<std::string> states;
    std::vector<StackSym> z1;
    std::vector<StackSym> z2;
    PdtConfig initial;
    std::vector<PdtConfig> accepting;
    std::vector<PdtRule> rules;

    bool deterministic() const;
    /// Every rule component is drawn from the declared alphabets.
    bool well_formed() const;
};

/// The eleven rules for p = 1, stack 1 counting v and stack 2 counting h.
PushdownTransducer build_p1_pdt();

enum class PdtModel { General, SixStep };

/// Stack 1 holds H (o then letters of A_p), stack 2 holds v in unary.
/// For the six-step model stack 1 holds h as a_{0,0} letters.
PushdownTransducer generate_pdt(PdtModel model, int p = 1);

struct PdtRun {
    Word output;
    bool accepted = false;
    std::optional<std::size_t> reject_position;  // 1-based, when no rule applies
    PdtConfig final_config;
};

PdtRun run_pdt(const PushdownTransducer& t, const Word& w);

std::string format_rule(const PdtRule& r, const PushdownTransducer& t);
std::string dump_rules(const PushdownTransducer& t);

/// Rename stack symbols and swap stacks; used to compare machines.
PushdownTransducer relabel(const PushdownTransducer& t, const std::vector<std::pair<StackSym, StackSym>>& rename,
                           bool swap_stacks);

/// Rule sets equal as sets.
bool same_rules(const PushdownTransducer& a, const PushdownTransducer& b);

}  // namespace walks

#endif
