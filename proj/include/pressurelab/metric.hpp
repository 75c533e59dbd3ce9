#pragma once

#include <vector>

#include "pressurelab/point.hpp"

namespace plab {

// Orbitwise distances between two eventually periodic points. Agreement
// lengths are decided exactly: past the preperiods the pair of sequences is
// jointly periodic, so scanning one extra joint period settles every tail.
class OrbitGap {
  public:
    OrbitGap(const SftSystem& sys, const Point& x, const Point& y);

    // Length of the common prefix of f^j x and f^j y; -1 encodes infinity.
    long long agreement_from(long long j) const;

    // d(f^j x, f^j y) = theta^agreement, 0 when the tails coincide.
    double distance_at(long long j) const;

  private:
    const SftSystem* sys_;
    long long m_ = 0;    // joint preperiod length
    long long lcm_ = 1;  // joint period
    std::vector<std::uint8_t> diff_;  // flags on [0, m + 2*lcm)
};

double distance(const SftSystem& sys, const Point& x, const Point& y);

// d(f^j x, f^j y) for j = 0..n-1.
std::vector<double> orbit_distances(const SftSystem& sys, const Point& x, const Point& y, int n);

}  // namespace plab
