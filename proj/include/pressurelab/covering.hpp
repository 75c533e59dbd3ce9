#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "pressurelab/sft.hpp"

namespace plab {

enum class Strategy { Uniform, Greedy, Exhaustive };

Strategy strategy_from_string(const std::string& s);
std::string strategy_to_string(Strategy s);

// One cover element: weight(s) = exp(-length*s + birkhoff + correction).
struct CoverAtomInfo {
    Word word;
    int length = 0;
    double birkhoff = 0.0;
    double correction = 0.0;
};

// A finite min-weight covering instance over an indexed witness set.
// rows[a] lists the witnesses atom a covers (sorted ids). Uniform-strategy
// instances may leave rows empty.
struct CoverProblem {
    std::vector<CoverAtomInfo> atoms;
    size_t witness_count = 0;
    std::vector<std::vector<std::uint32_t>> rows;
    bool uniform_lengths = true;
};

double atom_weight_at(const CoverAtomInfo& a, double s);

struct CoverEval {
    double value = 0.0;
    std::vector<std::uint32_t> cover;  // chosen atom indices, ascending
};

// Upper bounds on the covering infimum at exponent s. Greedy picks by
// lowest weight per newly covered witness; exact searches all covers
// (node-budget guarded).
CoverEval greedy_cover(const CoverProblem& p, double s);
CoverEval exact_cover(const CoverProblem& p, double s, std::uint64_t node_budget);

double cover_value_at(const CoverProblem& p, const std::vector<std::uint32_t>& cover, double s);

// Solver for the level-1 crossing of s -> m(s). When every atom has the
// same length the greedy selection is s-invariant (weights share the factor
// exp(-N s)) and is computed once. Candidate covers from other scales may
// be attached; evaluation takes the cheapest of strategy and candidates.
class CoverSolver {
  public:
    CoverSolver(CoverProblem problem, Strategy strategy, std::uint64_t node_budget = 20000000ull);

    void add_candidate(std::vector<std::uint32_t> cover);

    double m_value(double s);

    // Bisection for m(s) = 1; bracket width shrinks below width_tol.
    double critical_value(double width_tol = 1e-12, double* m_at_critical = nullptr);

    const std::vector<std::uint32_t>& last_cover() const { return last_cover_; }
    const CoverProblem& problem() const { return problem_; }

  private:
    CoverEval evaluate(double s);

    CoverProblem problem_;
    Strategy strategy_;
    std::uint64_t node_budget_;
    std::vector<std::vector<std::uint32_t>> candidates_;
    std::optional<std::vector<std::uint32_t>> cached_greedy_;
    std::vector<std::uint32_t> last_cover_;
};

using WitnessIndex = std::unordered_map<Word, std::uint32_t, WordHash>;

WitnessIndex build_witness_index(const std::vector<Word>& witnesses);

// Enumerates all length-|base| words whose changed positions spoil at most
// `budget` of the `window_count` sliding windows of length `window_len`
// (cyclic windows wrap modulo the word length). Emits the base word too.
// Emission order is deterministic. window_count must be <= 64.
void enumerate_window_neighbors(const Word& base, int window_len, bool cyclic, int window_count,
                                long long budget, int alphabet,
                                const std::function<void(const Word&)>& emit);

// Number of windows of v (cyclic over the word length) of length window_len
// that differ from the aligned window of u somewhere; u, v same length.
int window_mismatch_count_cyclic(const Word& u, const Word& v, int window_len, int window_count);

// Linear variant: windows j..j+window_len-1 for j < window_count over words
// of length >= window_count + window_len - 1 (v may be longer than u; only
// u's positions are compared).
int window_mismatch_count_linear(const Word& u, const Word& v, int window_len, int window_count);

// Exact mean of the n cyclic orbitwise distances between the periodic
// extensions of two n-words.
double word_avg_distance(const SftSystem& sys, const Word& u, const Word& v);

}  // namespace plab
