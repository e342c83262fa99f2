#ifndef WALKS_PARAMETERS_HPP
#define WALKS_PARAMETERS_HPP

#include "walks/sixstep.hpp"
#include "walks/transducer.hpp"
#include "walks/words.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace walks {

/// Additive weights (alpha, alpha_bar, sigma1, sigma2). Letter weights get
/// the ambient p; sigma1 is extended to stack words letter by letter.
struct Parameter {
    std::string name;
    std::function<long(const Letter&, int p)> alpha = [](const Letter&, int) { return 0L; };
    std::function<long(const Letter&, int p)> alpha_bar = [](const Letter&, int) { return 0L; };
    std::function<long(const StackLetter&)> sigma1 = [](const StackLetter&) { return 0L; };
    long sigma2 = 0;

    long sigma1_of(const std::vector<StackLetter>& H) const;
};

/// ASCII names: lambda zeta xi v z xbar ybar kbar k rbar sbar h.
/// The Greek and barred spellings are accepted as aliases.
Parameter builtin_parameter(std::string_view name);
std::vector<std::string> builtin_names();

// Six-step counters read as a stack of h letters a_{0,0} plus v.
CounterState as_counter_state(const CounterPair& c);

/// Values q_0..q_n along a run, with the sign convention of the run's
/// direction. Only completed runs are accepted.
std::vector<long> evaluate_along(const Parameter& q, const Run& r);
std::vector<long> evaluate_along(const Parameter& q, const SymRun& r);

struct TransitionInstance {
    int p = 1;
    Letter mu;
    CounterState left;
    CounterState right;
    Letter abar;
};

long transition_variation(const Parameter& q, const TransitionInstance& t);

/// Every legal forward instance of a general-p transition with the pattern
/// values (l, m, q) that the tables are written in.
struct TaggedInstance {
    Tag tag;
    int l = 0, m = 0, q = 0;
    TransitionInstance inst;
};
std::vector<TaggedInstance> transition_instances(int p);

struct SymTaggedInstance {
    SymTag tag;
    TransitionInstance inst;
};
std::vector<SymTaggedInstance> sym_transition_instances();

/// a*p + b*l + c*m + d*q + e
struct LinearForm {
    int a = 0, b = 0, c = 0, d = 0, e = 0;
    long at(int p, int l, int m, int q) const { return long(a) * p + long(b) * l + long(c) * m + long(d) * q + e; }
};

LinearForm expected_variation(std::string_view param, Tag t);
int expected_sym_variation(std::string_view param, SymTag t);
std::vector<std::string> table_parameters(bool six_step);

struct TableReport {
    std::size_t compared = 0;
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty() && compared > 0; }
};

TableReport verify_variation_table(int p);
TableReport verify_sym_variation_table();

/// Suffix-minimum bounds for one word of T_p. Empty result means the
/// bounds hold and the increments sit exactly at T7 (x) and at T2 / T3 with
/// p-m-1 > l (y).
std::vector<std::string> check_suffix_bounds(int p, const Word& wbar);

}  // namespace walks

#endif
