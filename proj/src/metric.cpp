#include "pressurelab/metric.hpp"

#include <numeric>

namespace plab {

OrbitGap::OrbitGap(const SftSystem& sys, const Point& x, const Point& y) : sys_(&sys) {
    m_ = static_cast<long long>(std::max(x.preperiod().size(), y.preperiod().size()));
    lcm_ = std::lcm(static_cast<long long>(x.period().size()), static_cast<long long>(y.period().size()));
    const long long h = m_ + 2 * lcm_;
    diff_.resize(static_cast<size_t>(h));
    for (long long i = 0; i < h; ++i) diff_[static_cast<size_t>(i)] = (x.symbol_at(i) != y.symbol_at(i)) ? 1 : 0;
}

long long OrbitGap::agreement_from(long long j) const {
    // Reduce j into the window where the diff pattern is explicit; for
    // j >= m_ the pattern is lcm-periodic.
    long long jj = j;
    if (jj > m_ + lcm_) jj = m_ + (jj - m_) % lcm_;
    const long long h = static_cast<long long>(diff_.size());
    for (long long i = jj; i < h; ++i) {
        if (diff_[static_cast<size_t>(i)]) return i - jj;
    }
    // No disagreement within a full joint period past jj: tails coincide.
    return -1;
}

double OrbitGap::distance_at(long long j) const {
    long long k = agreement_from(j);
    if (k < 0) return 0.0;
    return sys_->theta_pow(k);
}

double distance(const SftSystem& sys, const Point& x, const Point& y) {
    if (x == y) return 0.0;
    return OrbitGap(sys, x, y).distance_at(0);
}

std::vector<double> orbit_distances(const SftSystem& sys, const Point& x, const Point& y, int n) {
    std::vector<double> out(static_cast<size_t>(n), 0.0);
    if (x == y) return out;
    OrbitGap gap(sys, x, y);
    for (int j = 0; j < n; ++j) out[static_cast<size_t>(j)] = gap.distance_at(j);
    return out;
}

}  // namespace plab
