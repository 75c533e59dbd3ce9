#pragma once

#include <optional>
#include <string>
#include <vector>

namespace plab {

enum class MistakeFamily { Zero, Constant, Linear, Logarithmic };

// Error budget g(n, eps): monotone in n at fixed eps, with per-step density
// g(n,eps)/n vanishing as eps -> 0. Values above epsilon0 are clamped to
// g(n, epsilon0).
class MistakeFunction {
  public:
    static MistakeFunction zero(double epsilon0 = 1.0);
    static MistakeFunction constant(double c, double epsilon0 = 1.0);
    static MistakeFunction linear(double epsilon0 = 1.0);             // g(n,eps) = n*eps
    static MistakeFunction logarithmic(double alpha, double epsilon0 = 1.0);  // g(n,eps) = alpha*ln(n+1)

    MistakeFamily family() const { return family_; }
    double epsilon0() const { return epsilon0_; }
    double parameter() const { return param_; }

    // Clamped real value g(n, min(eps, epsilon0)).
    double value(long long n, double eps) const;

    std::string spec_string() const;  // zero | const:<c> | linear | log:<alpha>

  private:
    MistakeFunction(MistakeFamily f, double param, double epsilon0);
    MistakeFamily family_;
    double param_;
    double epsilon0_;
};

// Integer budget floor(g(n, min(eps, epsilon0))). A tiny absolute tolerance
// absorbs decimal-to-binary parse error in eps (10 * 0.3 must budget 3).
long long eval_budget(const MistakeFunction& g, long long n, double eps);

struct ValidationReport {
    bool passed = true;
    // First monotonicity violation, if any.
    std::optional<long long> violation_n;
    std::optional<double> violation_eps;
    // g(n_max, eps)/n_max per grid entry.
    std::vector<double> densities;
};

ValidationReport validate(const MistakeFunction& g, long long n_max, const std::vector<double>& eps_grid);

}  // namespace plab
