#include "pressurelab/mistake.hpp"

#include <cmath>

#include "pressurelab/errors.hpp"

namespace plab {

MistakeFunction::MistakeFunction(MistakeFamily f, double param, double epsilon0)
    : family_(f), param_(param), epsilon0_(epsilon0) {
    if (!(epsilon0_ > 0.0)) throw ConfigError("mistake function needs epsilon0 > 0");
    if ((f == MistakeFamily::Constant || f == MistakeFamily::Logarithmic) && param_ < 0.0)
        throw ConfigError("mistake function parameter must be nonnegative");
}

MistakeFunction MistakeFunction::zero(double epsilon0) { return MistakeFunction(MistakeFamily::Zero, 0.0, epsilon0); }
MistakeFunction MistakeFunction::constant(double c, double epsilon0) {
    return MistakeFunction(MistakeFamily::Constant, c, epsilon0);
}
MistakeFunction MistakeFunction::linear(double epsilon0) { return MistakeFunction(MistakeFamily::Linear, 0.0, epsilon0); }
MistakeFunction MistakeFunction::logarithmic(double alpha, double epsilon0) {
    return MistakeFunction(MistakeFamily::Logarithmic, alpha, epsilon0);
}

double MistakeFunction::value(long long n, double eps) const {
    const double e = std::min(eps, epsilon0_);
    switch (family_) {
        case MistakeFamily::Zero: return 0.0;
        case MistakeFamily::Constant: return param_;
        case MistakeFamily::Linear: return static_cast<double>(n) * e;
        case MistakeFamily::Logarithmic: return param_ * std::log(static_cast<double>(n) + 1.0);
    }
    return 0.0;
}

std::string MistakeFunction::spec_string() const {
    switch (family_) {
        case MistakeFamily::Zero: return "zero";
        case MistakeFamily::Constant: return "const:" + std::to_string(param_);
        case MistakeFamily::Linear: return "linear";
        case MistakeFamily::Logarithmic: return "log:" + std::to_string(param_);
    }
    return "?";
}

long long eval_budget(const MistakeFunction& g, long long n, double eps) {
    if (n < 1) throw ConfigError("eval_budget needs n >= 1");
    if (!(eps > 0.0)) throw ConfigError("eval_budget needs eps > 0");
    double v = g.value(n, eps);
    long long b = static_cast<long long>(std::floor(v + 1e-9));
    return b < 0 ? 0 : b;
}

ValidationReport validate(const MistakeFunction& g, long long n_max, const std::vector<double>& eps_grid) {
    if (n_max < 2) throw ConfigError("validate needs n_max >= 2");
    if (eps_grid.empty()) throw ConfigError("validate needs a nonempty eps grid");
    ValidationReport rep;
    for (double eps : eps_grid) {
        for (long long n = 1; n + 1 <= n_max; ++n) {
            if (g.value(n, eps) > g.value(n + 1, eps)) {
                rep.passed = false;
                if (!rep.violation_n) {
                    rep.violation_n = n;
                    rep.violation_eps = eps;
                }
            }
        }
        rep.densities.push_back(g.value(n_max, eps) / static_cast<double>(n_max));
    }
    return rep;
}

}  // namespace plab
