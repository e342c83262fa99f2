#ifndef WALKS_ORACLE_HPP
#define WALKS_ORACLE_HPP

#include "walks/words.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace walks {

using BigCount = boost::multiprecision::cpp_int;

/// Membership recomputed from letter tallies, without step vectors.
bool oracle_member(const Word& w, const WalkClass& c);

class EnumerationCap : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Default 10^7, or WALKS_MAX_ENUM when set.
std::uint64_t enumeration_cap();

using WordVisitor = std::function<void(const Word&)>;

/// Members of c of length n, in lexicographic letter order, by pruned DFS.
/// Throws EnumerationCap when more than `cap` words would be emitted.
std::uint64_t enumerate_class(const WalkClass& c, std::size_t n, const WordVisitor& visit, std::uint64_t cap = 0);
std::vector<Word> collect_class(const WalkClass& c, std::size_t n);

/// All words of length n over an alphabet.
std::uint64_t enumerate_all(const AlphabetSpec& a, std::size_t n, const WordVisitor& visit);

/// Exact class size by dynamic programming over endpoints.
BigCount count_class(const WalkClass& c, std::size_t n);

/// Uniform choice among quadrant-preserving letters at each step.
Word random_ptandem(int p, std::size_t n, std::mt19937_64& rng);

struct Failure {
    std::string input;
    std::string expectation;
    std::string observed;
};

struct VerificationReport {
    std::string name;
    std::uint64_t checked = 0;
    std::vector<Failure> failures;
    std::chrono::duration<double> elapsed{};

    bool passed() const { return failures.empty() && checked > 0; }
    void fail(std::string input, std::string expectation, std::string observed);
    void merge(const VerificationReport& other);
};

VerificationReport verify_bijection_suite(int p, std::size_t n_max);
VerificationReport verify_sym_bijection_suite(std::size_t n_max);
VerificationReport verify_two_n_law(std::size_t n_max, std::size_t projection_n_max = 8);
VerificationReport verify_raising_transducer_equivalence(int p, std::size_t n_max);
VerificationReport verify_raising_sym_equivalence(std::size_t n_max);
VerificationReport verify_eu_equivalence(std::size_t n_max);

/// run_pdt against phi on every word of the input alphabet.
VerificationReport verify_pdt_equivalence(int p, std::size_t n_max);
VerificationReport verify_pdt_sym_equivalence(std::size_t n_max);

/// Both stack lemmas on one word of T_p.
void check_stack_lemmas(int p, const Word& wbar, VerificationReport& rep);
VerificationReport verify_stack_lemmas(int p, std::size_t n_max);
VerificationReport verify_stack_lemmas_random(int p, std::size_t count, std::size_t max_len, std::uint64_t seed);

VerificationReport verify_suffix_bounds(int p, std::size_t n_max);

std::string format_report(const VerificationReport& r, std::size_t max_failures = 5);

}  // namespace walks

#endif
