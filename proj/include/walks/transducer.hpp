#ifndef WALKS_TRANSDUCER_HPP
#define WALKS_TRANSDUCER_HPP

#include "walks/words.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace walks {

/// a_{l,m} with l + m <= p - 1.
struct StackLetter {
    int l = 0;
    int m = 0;
    auto operator<=>(const StackLetter&) const = default;
};

/// (H, v). The top of H is H.back().
struct CounterState {
    std::vector<StackLetter> H;
    int v = 0;
    bool empty() const { return H.empty() && v == 0; }
    bool operator==(const CounterState&) const = default;
};

bool valid_state(const CounterState& s, int p);

enum class Tag { T1 = 1, T2, T3, T4, T5, T6, T7, T8 };

/// "T1".."T8", or the three-step names when p == 1.
std::string tag_name(Tag t, int p);
std::optional<Tag> parse_tag(std::string_view name);

// Raw steps on integer letters. LR reads mu in -1..p and writes mubar
// (-1 for SE); RL does the opposite. lr_apply leaves s untouched on T8.
Tag lr_apply(int p, int mu, CounterState& s, int& out);
Tag rl_apply(int p, int mubar, CounterState& s, int& out);

struct StepResult {
    Tag tag;
    CounterState next;
    std::optional<int> output;  // empty on T8
};

StepResult lr_step(int p, int mu, const CounterState& s);
StepResult rl_step(int p, int mubar, const CounterState& s);

enum class Direction { LR, RL };

struct RunFailure {
    std::size_t position;  // 1-based
    Tag tag;
    CounterState state;
};

/// A full run. states[i] holds the counters at time i (between letters i
/// and i+1), for both directions; tags[i-1] and output[i-1] belong to
/// position i. On failure the vectors stop at the failing position.
struct Run {
    int p = 1;
    Direction direction = Direction::LR;
    Word input;
    Word output;
    std::vector<Tag> tags;
    std::vector<CounterState> states;
    std::optional<RunFailure> failure;

    bool ok() const { return !failure; }
    const CounterState& final_state() const;
    /// ok and final counters (eps, 0).
    bool accepted() const { return ok() && final_state().empty(); }
};

Run phi_p(int p, const Word& w);
Run psi_p(int p, const Word& wbar);

struct VEvent {
    enum class Kind { Push, Pop } kind = Kind::Push;
    std::size_t position = 0;
    std::vector<std::size_t> popped;  // most recent first
    std::size_t count() const { return popped.size(); }
};

/// psi_p with the V stack, plus the origin of every H letter touched by
/// reverse T5/T6 (the position whose reverse T3/T4 pushed it).
struct AugmentedRun {
    Run run;
    std::vector<VEvent> v_events;                 // processing order, n down to 1
    std::vector<std::vector<std::size_t>> V;      // V[i], bottom to top, i = 0..n
    std::vector<std::size_t> h_origin;            // by position (index 0 unused); 0 = none
};

AugmentedRun psi_p_augmented(int p, const Word& wbar);

std::string format_stack(const std::vector<StackLetter>& H);
std::string format_positions(const std::vector<std::size_t>& v);

struct TraceColumns {
    bool v_stack = false;
    std::vector<std::pair<std::string, std::vector<long>>> extra;
};

/// Rows i = 0..n: i, in, tr, H, v, out, then the optional columns.
std::string trace_tsv(const Run& r, const TraceColumns& cols = {}, const std::vector<std::vector<std::size_t>>* V = nullptr);
std::string trace_jsonl(const Run& r, const TraceColumns& cols = {}, const std::vector<std::vector<std::size_t>>* V = nullptr);

}  // namespace walks

#endif
