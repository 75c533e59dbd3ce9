#pragma once

#include <optional>

#include "pressurelab/metric.hpp"
#include "pressurelab/mistake.hpp"

namespace plab {

enum class BallKind { Bowen, Mistake, Avg };

// Classical Bowen ball, strict inequality:
// max_{0<=j<n} d(f^j x, f^j y) < eps.
bool bowen_contains(const SftSystem& sys, const Point& x, const Point& y, int n, double eps);

// Mistake Bowen ball, non-strict on the good set:
// #{j < n : d(f^j x, f^j y) > eps} <= floor(g(n, eps)).
bool mistake_contains(const SftSystem& sys, const MistakeFunction& g, const Point& x, const Point& y, int n,
                      double eps);

// Mean of the first n orbitwise distances; the average-metric ball is
// avg_distance < eps.
double avg_distance(const SftSystem& sys, const Point& x, const Point& y, int n);

bool avg_contains(const SftSystem& sys, const Point& x, const Point& y, int n, double eps);

struct InclusionReport {
    bool in_bowen = false;
    bool in_avg = false;
    bool in_mistake_sqrt = false;
    bool chain_ok = false;
};

// Checks y against the chain  B_n(x,eps) c B_avg(x,eps) c B_n(g;x,sqrt(eps))
// with g(n,e) = n*e. Requires 0 < eps <= 1.
InclusionReport inclusion_chain_check(const SftSystem& sys, const Point& x, const Point& y, int n, double eps);

// Number of period-n candidates (periodic extensions of admissible n-words)
// inside the given ball around x. Guarded: A^n <= 10^7.
std::uint64_t ball_word_census(const SftSystem& sys, BallKind kind, const Point& x, int n, double eps,
                               const std::optional<MistakeFunction>& g = std::nullopt);

}  // namespace plab
