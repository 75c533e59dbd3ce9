#include "pressurelab/potential.hpp"

#include <algorithm>
#include <cmath>

#include "pressurelab/errors.hpp"

namespace plab {

namespace {

size_t table_index(const SftSystem& sys, const Word& w, size_t offset, int window) {
    size_t idx = 0;
    for (int k = 0; k < window; ++k) idx = idx * static_cast<size_t>(sys.alphabet_size()) + w[offset + static_cast<size_t>(k)];
    return idx;
}

double pow_size_check(int a, int w) {
    double t = std::pow(static_cast<double>(a), static_cast<double>(w));
    if (t > 1e7) throw ConfigError("locally constant window too large (A^w > 10^7)");
    return t;
}

// phi(f^j x) for a geometric-series potential, closed form.
double geometric_term(const GeometricSeries& g, const Point& x, long long j) {
    const auto& v = g.symbol_values;
    const long long pre = static_cast<long long>(x.preperiod().size());
    const long long p = static_cast<long long>(x.period().size());
    double out = 0.0;
    double rk = 1.0;
    long long k = 0;
    for (; j + k < pre; ++k) {
        out += rk * v[x.symbol_at(j + k)];
        rk *= g.rho;
    }
    // Tail is purely periodic with period p from position max(j, pre).
    double cycle = 0.0;
    double rc = 1.0;
    for (long long t = 0; t < p; ++t) {
        cycle += rc * v[x.symbol_at(j + k + t)];
        rc *= g.rho;
    }
    out += rk * cycle / (1.0 - std::pow(g.rho, static_cast<double>(p)));
    return out;
}

}  // namespace

Potential make_zero_potential(const SftSystem& sys) {
    return LocallyConstant{1, std::vector<double>(static_cast<size_t>(sys.alphabet_size()), 0.0)};
}

void validate_potential(const SftSystem& sys, const Potential& phi) {
    if (const auto* lc = std::get_if<LocallyConstant>(&phi)) {
        if (lc->window < 1) throw ConfigError("locally constant window must be >= 1");
        double want = pow_size_check(sys.alphabet_size(), lc->window);
        if (lc->table.size() != static_cast<size_t>(want))
            throw ConfigError("locally constant table must have exactly A^w entries");
    } else {
        const auto& g = std::get<GeometricSeries>(phi);
        if (!(g.rho > 0.0 && g.rho < 1.0)) throw ConfigError("geometric rho must lie strictly between 0 and 1");
        if (g.symbol_values.size() != static_cast<size_t>(sys.alphabet_size()))
            throw ConfigError("geometric potential needs one value per symbol");
    }
}

double phi_value(const SftSystem& sys, const Potential& phi, const Point& x) {
    if (const auto* lc = std::get_if<LocallyConstant>(&phi)) {
        Word w = x.prefix(lc->window);
        return lc->table[table_index(sys, w, 0, lc->window)];
    }
    return geometric_term(std::get<GeometricSeries>(phi), x, 0);
}

double birkhoff_sum(const SftSystem& sys, const Potential& phi, const Point& x, int n) {
    if (n < 1) throw ConfigError("birkhoff sum needs n >= 1");
    if (const auto* lc = std::get_if<LocallyConstant>(&phi)) {
        Word w = x.prefix(n + lc->window - 1);
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += lc->table[table_index(sys, w, static_cast<size_t>(j), lc->window)];
        return s;
    }
    const auto& g = std::get<GeometricSeries>(phi);
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += geometric_term(g, x, j);
    return s;
}

double birkhoff_sum_periodic_word(const SftSystem& sys, const Potential& phi, const Word& w) {
    const int n = static_cast<int>(w.size());
    if (const auto* lc = std::get_if<LocallyConstant>(&phi)) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) {
            size_t idx = 0;
            for (int k = 0; k < lc->window; ++k)
                idx = idx * static_cast<size_t>(sys.alphabet_size()) + w[static_cast<size_t>((j + k) % n)];
            s += lc->table[idx];
        }
        return s;
    }
    const auto& g = std::get<GeometricSeries>(phi);
    const double denom = 1.0 - std::pow(g.rho, static_cast<double>(n));
    double s = 0.0;
    for (int j = 0; j < n; ++j) {
        double cycle = 0.0;
        double rk = 1.0;
        for (int k = 0; k < n; ++k) {
            cycle += rk * g.symbol_values[w[static_cast<size_t>((j + k) % n)]];
            rk *= g.rho;
        }
        s += cycle / denom;
    }
    return s;
}

double modulus_of_continuity(const SftSystem& sys, const Potential& phi, double delta) {
    if (!(delta > 0.0)) throw ConfigError("modulus needs delta > 0");
    // Forced agreement length: pairs with d < delta share at least K symbols.
    long long K = 0;
    while (K < 4096 && sys.theta_pow(K) >= delta) ++K;

    if (const auto* lc = std::get_if<LocallyConstant>(&phi)) {
        if (K >= lc->window) return 0.0;
        // Exact sup: max table spread over admissible word pairs sharing the
        // forced prefix. Any such word pair is realized by points at
        // distance < delta, so the grouped spread is attained.
        auto words = enumerate_words(sys, lc->window);
        double best = 0.0;
        size_t i = 0;
        while (i < words.size()) {
            size_t j = i;
            double lo = lc->table[table_index(sys, words[i], 0, lc->window)];
            double hi = lo;
            while (j < words.size() &&
                   std::equal(words[j].begin(), words[j].begin() + static_cast<long>(K), words[i].begin())) {
                double v = lc->table[table_index(sys, words[j], 0, lc->window)];
                lo = std::min(lo, v);
                hi = std::max(hi, v);
                ++j;
            }
            best = std::max(best, hi - lo);
            i = j;
        }
        return best;
    }
    const auto& g = std::get<GeometricSeries>(phi);
    auto [mn, mx] = std::minmax_element(g.symbol_values.begin(), g.symbol_values.end());
    return std::pow(g.rho, static_cast<double>(K)) * (*mx - *mn) / (1.0 - g.rho);
}

double sup_norm_bound(const SftSystem& sys, const Potential& phi) {
    if (const auto* lc = std::get_if<LocallyConstant>(&phi)) {
        auto words = enumerate_words(sys, lc->window);
        double best = 0.0;
        for (const auto& w : words) best = std::max(best, std::abs(lc->table[table_index(sys, w, 0, lc->window)]));
        return best;
    }
    const auto& g = std::get<GeometricSeries>(phi);
    double m = 0.0;
    for (double v : g.symbol_values) m = std::max(m, std::abs(v));
    return m / (1.0 - g.rho);
}

Potential add_constant(const SftSystem&, const Potential& phi, double c) {
    if (const auto* lc = std::get_if<LocallyConstant>(&phi)) {
        LocallyConstant out = *lc;
        for (double& v : out.table) v += c;
        return out;
    }
    GeometricSeries out = std::get<GeometricSeries>(phi);
    for (double& v : out.symbol_values) v += c * (1.0 - out.rho);
    return out;
}

}  // namespace plab
