#include "pressurelab/covering.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <queue>

#include "pressurelab/errors.hpp"

namespace plab {

Strategy strategy_from_string(const std::string& s) {
    if (s == "uniform") return Strategy::Uniform;
    if (s == "greedy") return Strategy::Greedy;
    if (s == "exhaustive") return Strategy::Exhaustive;
    throw ConfigError("unknown strategy: " + s);
}

std::string strategy_to_string(Strategy s) {
    switch (s) {
        case Strategy::Uniform: return "uniform";
        case Strategy::Greedy: return "greedy";
        case Strategy::Exhaustive: return "exhaustive";
    }
    return "?";
}

double atom_weight_at(const CoverAtomInfo& a, double s) {
    return std::exp(-static_cast<double>(a.length) * s + a.birkhoff + a.correction);
}

double cover_value_at(const CoverProblem& p, const std::vector<std::uint32_t>& cover, double s) {
    double total = 0.0;
    for (std::uint32_t idx : cover) total += atom_weight_at(p.atoms[idx], s);
    return total;
}

namespace {

struct CoveredSet {
    std::vector<std::uint8_t> flag;
    size_t count = 0;
    explicit CoveredSet(size_t n) : flag(n, 0) {}
    size_t mark(const std::vector<std::uint32_t>& row, std::vector<std::uint32_t>* undo = nullptr) {
        size_t fresh = 0;
        for (std::uint32_t w : row) {
            if (!flag[w]) {
                flag[w] = 1;
                ++fresh;
                if (undo) undo->push_back(w);
            }
        }
        count += fresh;
        return fresh;
    }
    void unmark(const std::vector<std::uint32_t>& undo) {
        for (std::uint32_t w : undo) flag[w] = 0;
        count -= undo.size();
    }
    size_t gain(const std::vector<std::uint32_t>& row) const {
        size_t g = 0;
        for (std::uint32_t w : row)
            if (!flag[w]) ++g;
        return g;
    }
};

}  // namespace

CoverEval greedy_cover(const CoverProblem& p, double s) {
    const size_t na = p.atoms.size();
    if (p.witness_count == 0) return {0.0, {}};
    std::vector<double> w(na);
    for (size_t i = 0; i < na; ++i) w[i] = atom_weight_at(p.atoms[i], s);

    CoveredSet covered(p.witness_count);
    // Lazy greedy: stored ratios are lower bounds because gains only shrink.
    using Key = std::pair<double, std::uint32_t>;  // (weight per new witness, atom)
    std::priority_queue<Key, std::vector<Key>, std::greater<Key>> heap;
    for (size_t i = 0; i < na; ++i) {
        if (!p.rows[i].empty()) heap.push({w[i] / static_cast<double>(p.rows[i].size()), static_cast<std::uint32_t>(i)});
    }
    std::vector<std::uint32_t> chosen;
    while (covered.count < p.witness_count) {
        if (heap.empty()) throw InstanceTooLarge("covering is infeasible: witness with no covering atom");
        auto [ratio, idx] = heap.top();
        heap.pop();
        size_t g = covered.gain(p.rows[idx]);
        if (g == 0) continue;
        double fresh_ratio = w[idx] / static_cast<double>(g);
        if (!heap.empty()) {
            Key top = heap.top();
            if (Key{fresh_ratio, idx} > top) {
                heap.push({fresh_ratio, idx});
                continue;
            }
        }
        covered.mark(p.rows[idx]);
        chosen.push_back(idx);
    }
    std::sort(chosen.begin(), chosen.end());
    double total = 0.0;
    for (std::uint32_t i : chosen) total += w[i];
    return {total, std::move(chosen)};
}

namespace {

struct ExactSearch {
    const CoverProblem& p;
    const std::vector<double>& w;
    std::vector<std::vector<std::uint32_t>> coverers;  // witness -> atoms
    double best;
    std::vector<std::uint32_t> best_cover;
    std::vector<std::uint32_t> current;
    CoveredSet covered;
    double lb_unit;  // min over atoms of weight / row size
    std::uint64_t nodes = 0;
    std::uint64_t node_budget;

    ExactSearch(const CoverProblem& pp, const std::vector<double>& ww, std::uint64_t budget)
        : p(pp), w(ww), covered(pp.witness_count), node_budget(budget) {
        coverers.assign(p.witness_count, {});
        for (size_t a = 0; a < p.atoms.size(); ++a)
            for (std::uint32_t wit : p.rows[a]) coverers[wit].push_back(static_cast<std::uint32_t>(a));
        lb_unit = std::numeric_limits<double>::infinity();
        for (size_t a = 0; a < p.atoms.size(); ++a)
            if (!p.rows[a].empty()) lb_unit = std::min(lb_unit, w[a] / static_cast<double>(p.rows[a].size()));
    }

    void dfs(double cost) {
        if (++nodes > node_budget) throw InstanceTooLarge("exhaustive cover search exceeded its node budget");
        if (covered.count == p.witness_count) {
            if (cost < best) {
                best = cost;
                best_cover = current;
            }
            return;
        }
        // fail-first: branch on the uncovered witness with fewest coverers
        std::uint32_t pick = 0;
        size_t pick_deg = SIZE_MAX;
        for (std::uint32_t wit = 0; wit < p.witness_count; ++wit) {
            if (covered.flag[wit]) continue;
            size_t deg = coverers[wit].size();
            if (deg == 0) return;  // dead branch
            if (deg < pick_deg) {
                pick_deg = deg;
                pick = wit;
            }
        }
        double remaining_lb = static_cast<double>(p.witness_count - covered.count) * lb_unit;
        if (cost + remaining_lb >= best) return;
        // cheapest-first over the atoms covering the picked witness
        std::vector<std::uint32_t> order = coverers[pick];
        std::sort(order.begin(), order.end(),
                  [&](std::uint32_t x, std::uint32_t y) { return w[x] != w[y] ? w[x] < w[y] : x < y; });
        for (std::uint32_t a : order) {
            if (cost + w[a] >= best) break;  // sorted: the rest are no better
            std::vector<std::uint32_t> undo;
            covered.mark(p.rows[a], &undo);
            current.push_back(a);
            dfs(cost + w[a]);
            current.pop_back();
            covered.unmark(undo);
        }
    }
};

}  // namespace

CoverEval exact_cover(const CoverProblem& p, double s, std::uint64_t node_budget) {
    if (p.witness_count == 0) return {0.0, {}};
    std::vector<double> w(p.atoms.size());
    for (size_t i = 0; i < p.atoms.size(); ++i) w[i] = atom_weight_at(p.atoms[i], s);
    CoverEval warm = greedy_cover(p, s);
    ExactSearch search(p, w, node_budget);
    search.best = warm.value * (1.0 + 1e-15) + 1e-300;
    search.best_cover = warm.cover;
    search.dfs(0.0);
    std::sort(search.best_cover.begin(), search.best_cover.end());
    double total = 0.0;
    for (std::uint32_t i : search.best_cover) total += w[i];
    return {total, std::move(search.best_cover)};
}

CoverSolver::CoverSolver(CoverProblem problem, Strategy strategy, std::uint64_t node_budget)
    : problem_(std::move(problem)), strategy_(strategy), node_budget_(node_budget) {
    if (problem_.atoms.empty()) throw ConfigError("covering instance has no atoms");
}

void CoverSolver::add_candidate(std::vector<std::uint32_t> cover) { candidates_.push_back(std::move(cover)); }

CoverEval CoverSolver::evaluate(double s) {
    CoverEval out;
    switch (strategy_) {
        case Strategy::Uniform: {
            out.cover.resize(problem_.atoms.size());
            for (std::uint32_t i = 0; i < problem_.atoms.size(); ++i) out.cover[i] = i;
            out.value = cover_value_at(problem_, out.cover, s);
            break;
        }
        case Strategy::Greedy: {
            if (problem_.uniform_lengths) {
                // ratios share the factor exp(-N s): selection is s-free
                if (!cached_greedy_) cached_greedy_ = greedy_cover(problem_, s).cover;
                out.cover = *cached_greedy_;
                out.value = cover_value_at(problem_, out.cover, s);
            } else {
                out = greedy_cover(problem_, s);
            }
            break;
        }
        case Strategy::Exhaustive: {
            out = exact_cover(problem_, s, node_budget_);
            break;
        }
    }
    for (const auto& cand : candidates_) {
        double v = cover_value_at(problem_, cand, s);
        if (v < out.value) {
            out.value = v;
            out.cover = cand;
        }
    }
    return out;
}

double CoverSolver::m_value(double s) {
    CoverEval e = evaluate(s);
    last_cover_ = e.cover;
    return e.value;
}

double CoverSolver::critical_value(double width_tol, double* m_at_critical) {
    // Initial guess from the all-atom sum: its crossing upper-bounds every
    // cover-based crossing.
    double smax = -std::numeric_limits<double>::infinity();
    int nmin = problem_.atoms[0].length;
    for (const auto& a : problem_.atoms) {
        smax = std::max(smax, (a.birkhoff + a.correction) / a.length);
        nmin = std::min(nmin, a.length);
    }
    double hi = smax + std::log(static_cast<double>(problem_.atoms.size()) + 1.0) / nmin + 1.0;
    double step = 1.0;
    while (m_value(hi) > 1.0) {
        hi += step;
        step *= 2.0;
        if (step > 1e9) throw ConfigError("critical value bracketing failed (upper)");
    }
    double lo = hi - 1.0;
    step = 1.0;
    while (m_value(lo) < 1.0) {
        lo -= step;
        step *= 2.0;
        if (step > 1e9) throw ConfigError("critical value bracketing failed (lower)");
    }
    while (hi - lo > width_tol) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (m_value(mid) >= 1.0)
            lo = mid;
        else
            hi = mid;
    }
    double crit = 0.5 * (lo + hi);
    if (m_at_critical) *m_at_critical = m_value(crit);
    return crit;
}

WitnessIndex build_witness_index(const std::vector<Word>& witnesses) {
    WitnessIndex idx;
    idx.reserve(witnesses.size() * 2);
    for (std::uint32_t i = 0; i < witnesses.size(); ++i) idx.emplace(witnesses[i], i);
    return idx;
}

void enumerate_window_neighbors(const Word& base, int window_len, bool cyclic, int window_count,
                                long long budget, int alphabet,
                                const std::function<void(const Word&)>& emit) {
    const int len = static_cast<int>(base.size());
    if (window_count > 64) throw InstanceTooLarge("window count above 64 in neighbor enumeration");
    if (window_len == 0 || budget >= window_count) {
        // every word qualifies; callers guard against this blowup themselves
        Word cur(base);
        auto all = [&](auto&& self, int p) -> void {
            if (p == len) {
                emit(cur);
                return;
            }
            for (int a = 0; a < alphabet; ++a) {
                cur[static_cast<size_t>(p)] = static_cast<Symbol>(a);
                self(self, p + 1);
            }
        };
        all(all, 0);
        return;
    }
    // windows spoiled by a change at position p
    std::vector<std::uint64_t> wmask(static_cast<size_t>(len), 0);
    for (int p = 0; p < len; ++p) {
        std::uint64_t m = 0;
        if (cyclic) {
            for (int t = 0; t < window_len; ++t) {
                int j = p - t;
                j %= window_count;
                if (j < 0) j += window_count;
                m |= 1ull << j;
            }
        } else {
            int jlo = std::max(0, p - window_len + 1);
            int jhi = std::min(p, window_count - 1);
            for (int j = jlo; j <= jhi; ++j) m |= 1ull << j;
        }
        wmask[static_cast<size_t>(p)] = m;
    }
    Word cur(base);
    auto dfs = [&](auto&& self, int p, std::uint64_t spoiled) -> void {
        if (p == len) {
            emit(cur);
            return;
        }
        self(self, p + 1, spoiled);  // keep base symbol
        const Symbol orig = base[static_cast<size_t>(p)];
        for (int a = 0; a < alphabet; ++a) {
            if (static_cast<Symbol>(a) == orig) continue;
            std::uint64_t ns = spoiled | wmask[static_cast<size_t>(p)];
            if (std::popcount(ns) > budget) continue;
            cur[static_cast<size_t>(p)] = static_cast<Symbol>(a);
            self(self, p + 1, ns);
        }
        cur[static_cast<size_t>(p)] = orig;
    };
    dfs(dfs, 0, 0);
}

int window_mismatch_count_cyclic(const Word& u, const Word& v, int window_len, int window_count) {
    const int n = static_cast<int>(u.size());
    int bad = 0;
    for (int j = 0; j < window_count; ++j) {
        for (int t = 0; t < window_len; ++t) {
            int p = (j + t) % n;
            if (u[static_cast<size_t>(p)] != v[static_cast<size_t>(p)]) {
                ++bad;
                break;
            }
        }
    }
    return bad;
}

int window_mismatch_count_linear(const Word& u, const Word& v, int window_len, int window_count) {
    int bad = 0;
    for (int j = 0; j < window_count; ++j) {
        for (int t = 0; t < window_len; ++t) {
            size_t p = static_cast<size_t>(j + t);
            if (u[p] != v[p]) {
                ++bad;
                break;
            }
        }
    }
    return bad;
}

double word_avg_distance(const SftSystem& sys, const Word& u, const Word& v) {
    const int n = static_cast<int>(u.size());
    if (u == v) return 0.0;
    // next difference position at or after i, scanned over two periods
    std::vector<int> nd(static_cast<size_t>(2 * n + 1), INT32_MAX);
    for (int i = 2 * n - 1; i >= 0; --i)
        nd[static_cast<size_t>(i)] =
            (u[static_cast<size_t>(i % n)] != v[static_cast<size_t>(i % n)]) ? i : nd[static_cast<size_t>(i + 1)];
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += sys.theta_pow(nd[static_cast<size_t>(j)] - j);
    return s / static_cast<double>(n);
}

}  // namespace plab
