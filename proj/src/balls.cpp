#include "pressurelab/balls.hpp"

#include <cmath>

#include "pressurelab/errors.hpp"
#include "pressurelab/parallel.hpp"

namespace plab {

bool bowen_contains(const SftSystem& sys, const Point& x, const Point& y, int n, double eps) {
    if (n < 1) throw ConfigError("ball length must be >= 1");
    if (!(eps > 0.0)) throw ConfigError("ball radius must be > 0");
    if (x == y) return true;
    OrbitGap gap(sys, x, y);
    for (int j = 0; j < n; ++j)
        if (!(gap.distance_at(j) < eps)) return false;
    return true;
}

bool mistake_contains(const SftSystem& sys, const MistakeFunction& g, const Point& x, const Point& y, int n,
                      double eps) {
    if (n < 1) throw ConfigError("ball length must be >= 1");
    if (!(eps > 0.0)) throw ConfigError("ball radius must be > 0");
    if (x == y) return true;
    const long long budget = eval_budget(g, n, eps);
    OrbitGap gap(sys, x, y);
    long long bad = 0;
    for (int j = 0; j < n; ++j) {
        if (gap.distance_at(j) > eps) {
            if (++bad > budget) return false;
        }
    }
    return true;
}

double avg_distance(const SftSystem& sys, const Point& x, const Point& y, int n) {
    if (n < 1) throw ConfigError("ball length must be >= 1");
    if (x == y) return 0.0;
    OrbitGap gap(sys, x, y);
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += gap.distance_at(j);
    return s / static_cast<double>(n);
}

bool avg_contains(const SftSystem& sys, const Point& x, const Point& y, int n, double eps) {
    return avg_distance(sys, x, y, n) < eps;
}

InclusionReport inclusion_chain_check(const SftSystem& sys, const Point& x, const Point& y, int n, double eps) {
    if (!(eps > 0.0 && eps <= 1.0)) throw ConfigError("inclusion chain needs 0 < eps <= 1");
    InclusionReport rep;
    rep.in_bowen = bowen_contains(sys, x, y, n, eps);
    rep.in_avg = avg_contains(sys, x, y, n, eps);
    rep.in_mistake_sqrt = mistake_contains(sys, MistakeFunction::linear(1.0), x, y, n, std::sqrt(eps));
    rep.chain_ok = (!rep.in_bowen || rep.in_avg) && (!rep.in_avg || rep.in_mistake_sqrt);
    return rep;
}

std::uint64_t ball_word_census(const SftSystem& sys, BallKind kind, const Point& x, int n, double eps,
                               const std::optional<MistakeFunction>& g) {
    if (kind == BallKind::Mistake && !g) throw ConfigError("mistake census needs a mistake function");
    auto words = enumerate_words(sys, n);  // guards A^n <= 10^7
    auto in_ball = [&](const Word& w) -> bool {
        Point y = Point::periodic(w);
        switch (kind) {
            case BallKind::Bowen: return bowen_contains(sys, x, y, n, eps);
            case BallKind::Mistake: return mistake_contains(sys, *g, x, y, n, eps);
            case BallKind::Avg: return avg_contains(sys, x, y, n, eps);
        }
        return false;
    };
    return parallel_count(words.size(), [&](size_t i) { return in_ball(words[i]); });
}

}  // namespace plab
