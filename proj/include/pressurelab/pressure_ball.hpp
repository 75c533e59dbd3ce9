#pragma once

#include "pressurelab/balls.hpp"
#include "pressurelab/covering.hpp"
#include "pressurelab/potential.hpp"
#include "pressurelab/zset.hpp"

namespace plab {

// One ball of the covering: the orbit ball of the given kind around a
// periodic center point.
struct CoverAtom {
    Point center;
    int length;
    BallKind kind = BallKind::Bowen;
    double radius = 0.0;
};

// exp(-n s + S_n phi(center)).
double atom_weight(const SftSystem& sys, const CoverAtom& atom, double s, const Potential& phi);

// The exponent L with delta = theta^L (relative tolerance 1e-9); radii are
// restricted to powers of theta so ball membership is exact word
// combinatorics. Throws UnalignedRadius otherwise.
int radius_exponent(const SftSystem& sys, double delta);

// Covering instance at one scale: atoms are Z-admissible words of lengths
// N..N+span (length N only for Uniform) realized as periodic points;
// witnesses are the Z-admissible words of the maximal atom length.
CoverProblem build_ball_problem(const SftSystem& sys, const ZSet& z, const Potential& phi, int N, double delta,
                                BallKind kind, const std::optional<MistakeFunction>& g, Strategy strategy,
                                int span);

// Upper bound on the covering infimum m(Z,s,phi,N,delta) (resp. m^g),
// attained by the returned strategy's cover.
double m_estimate(const SftSystem& sys, const ZSet& z, double s, const Potential& phi, int N, double delta,
                  BallKind kind, const std::optional<MistakeFunction>& g, Strategy strategy, int span = 4);

// The level-1 crossing of s -> m_estimate, by bisection.
double critical_value(const SftSystem& sys, const ZSet& z, const Potential& phi, int N, double delta,
                      BallKind kind, const std::optional<MistakeFunction>& g, Strategy strategy, int span = 4,
                      double* m_at_critical = nullptr);

struct TracePoint {
    double delta = 0.0;  // for the cover engine: theta^L
    int N = 0;
    double critical_s = 0.0;
    double m_at_critical = 0.0;
    double wall_ms = 0.0;
};

struct PressureEstimate {
    double value = 0.0;  // final critical value
    std::vector<TracePoint> trace;
    double slope = 0.0;  // last-two-deltas difference quotient
};

// Critical values along a (delta, N) schedule, finest scale last. For the
// greedy strategy the cover found at a finer scale is kept as a candidate at
// coarser ones (it stays feasible since balls only grow as delta grows),
// which makes the reported values monotone across the schedule.
PressureEstimate pressure_estimate(const SftSystem& sys, const ZSet& z, const Potential& phi, BallKind kind,
                                   const std::optional<MistakeFunction>& g,
                                   const std::vector<double>& delta_schedule, const std::vector<int>& n_schedule,
                                   Strategy strategy, int span = 4);

}  // namespace plab
