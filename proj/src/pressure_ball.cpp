#include "pressurelab/pressure_ball.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "pressurelab/errors.hpp"
#include "pressurelab/parallel.hpp"

namespace plab {

double atom_weight(const SftSystem& sys, const CoverAtom& atom, double s, const Potential& phi) {
    return std::exp(-static_cast<double>(atom.length) * s + birkhoff_sum(sys, phi, atom.center, atom.length));
}

int radius_exponent(const SftSystem& sys, double delta) {
    if (!(delta > 0.0)) throw UnalignedRadius("radius must be positive");
    for (int L = 0; L <= 2048; ++L) {
        double p = sys.theta_pow(L);
        if (std::abs(p - delta) <= 1e-9 * p) return L;
        if (p < delta) break;
    }
    throw UnalignedRadius("radius is not a power of theta");
}

namespace {

constexpr size_t kEntryCap = size_t{1} << 26;
constexpr size_t kPairCap = size_t{1} << 22;
constexpr size_t kAvgWordCap = 4096;

std::vector<std::vector<std::uint32_t>> coverage_same_length(const SftSystem& sys,
                                                             const std::vector<Word>& words, int window_len,
                                                             long long budget) {
    const int n = words.empty() ? 0 : static_cast<int>(words[0].size());
    WitnessIndex index = build_witness_index(words);
    std::vector<std::vector<std::uint32_t>> rows(words.size());
    std::atomic<size_t> entries{0};
    for_each_chunk(words.size(), [&](size_t, size_t b, size_t e) {
        for (size_t i = b; i < e; ++i) {
            auto& row = rows[i];
            enumerate_window_neighbors(words[i], window_len, /*cyclic=*/true, n, budget,
                                       sys.alphabet_size(), [&](const Word& v) {
                                           auto it = index.find(v);
                                           if (it != index.end()) row.push_back(it->second);
                                       });
            std::sort(row.begin(), row.end());
            if (entries.fetch_add(row.size()) + row.size() > kEntryCap)
                throw InstanceTooLarge("ball coverage exceeds the entry guard; reduce N or the budget");
        }
    });
    return rows;
}

std::vector<std::vector<std::uint32_t>> coverage_avg(const SftSystem& sys, const std::vector<Word>& words,
                                                     double delta) {
    if (words.size() > kAvgWordCap)
        throw InstanceTooLarge("average-ball covering is limited to 4096 words; reduce N or use uniform");
    std::vector<std::vector<std::uint32_t>> rows(words.size());
    for_each_chunk(words.size(), [&](size_t, size_t b, size_t e) {
        for (size_t i = b; i < e; ++i) {
            for (std::uint32_t j = 0; j < words.size(); ++j)
                if (word_avg_distance(sys, words[i], words[j]) < delta) rows[i].push_back(j);
        }
    });
    return rows;
}

std::vector<std::vector<std::uint32_t>> coverage_mixed_lengths(const SftSystem& sys,
                                                               const std::vector<CoverAtomInfo>& atoms,
                                                               const std::vector<Word>& witnesses, double delta,
                                                               BallKind kind,
                                                               const std::optional<MistakeFunction>& g) {
    if (atoms.size() * witnesses.size() > kPairCap)
        throw InstanceTooLarge("mixed-length ball coverage exceeds the pair guard; reduce span or N");
    std::vector<Point> wit_points;
    wit_points.reserve(witnesses.size());
    for (const auto& w : witnesses) wit_points.push_back(Point::periodic(w));
    std::vector<std::vector<std::uint32_t>> rows(atoms.size());
    for_each_chunk(atoms.size(), [&](size_t, size_t b, size_t e) {
        for (size_t i = b; i < e; ++i) {
            Point center = Point::periodic(atoms[i].word);
            for (std::uint32_t j = 0; j < witnesses.size(); ++j) {
                bool in = false;
                switch (kind) {
                    case BallKind::Bowen: in = bowen_contains(sys, center, wit_points[j], atoms[i].length, delta); break;
                    case BallKind::Mistake:
                        in = mistake_contains(sys, *g, center, wit_points[j], atoms[i].length, delta);
                        break;
                    case BallKind::Avg: in = avg_contains(sys, center, wit_points[j], atoms[i].length, delta); break;
                }
                if (in) rows[i].push_back(j);
            }
        }
    });
    return rows;
}

}  // namespace

CoverProblem build_ball_problem(const SftSystem& sys, const ZSet& z, const Potential& phi, int N, double delta,
                                BallKind kind, const std::optional<MistakeFunction>& g, Strategy strategy,
                                int span) {
    if (N < 1) throw ConfigError("N must be >= 1");
    if (span < 0) throw ConfigError("span must be >= 0");
    if (kind == BallKind::Mistake && !g) throw ConfigError("mistake pressure needs a mistake function");
    const int L = radius_exponent(sys, delta);
    if (strategy == Strategy::Uniform) span = 0;

    CoverProblem p;
    for (int m = N; m <= N + span; ++m) {
        for (auto& w : z.admissible_words(sys, m)) {
            CoverAtomInfo a;
            a.length = m;
            a.birkhoff = birkhoff_sum_periodic_word(sys, phi, w);
            a.word = std::move(w);
            p.atoms.push_back(std::move(a));
        }
    }
    if (p.atoms.empty()) throw ConfigError("Z has no admissible words at the requested lengths");
    p.uniform_lengths = (span == 0);

    if (strategy == Strategy::Uniform) {
        p.witness_count = p.atoms.size();  // each word covers itself
        return p;
    }

    std::vector<Word> witnesses = z.admissible_words(sys, N + span);
    p.witness_count = witnesses.size();
    if (span == 0) {
        std::vector<Word> words;
        words.reserve(p.atoms.size());
        for (const auto& a : p.atoms) words.push_back(a.word);
        switch (kind) {
            case BallKind::Bowen:
                // strict d < theta^L forces agreement on L+1 symbols
                p.rows = coverage_same_length(sys, words, L + 1, 0);
                break;
            case BallKind::Mistake:
                p.rows = coverage_same_length(sys, words, L, eval_budget(*g, N, delta));
                break;
            case BallKind::Avg:
                p.rows = coverage_avg(sys, words, delta);
                break;
        }
    } else {
        p.rows = coverage_mixed_lengths(sys, p.atoms, witnesses, delta, kind, g);
    }
    if (strategy == Strategy::Exhaustive && p.atoms.size() > 20000)
        throw InstanceTooLarge("exhaustive strategy is limited to 20000 candidate atoms");
    return p;
}

double m_estimate(const SftSystem& sys, const ZSet& z, double s, const Potential& phi, int N, double delta,
                  BallKind kind, const std::optional<MistakeFunction>& g, Strategy strategy, int span) {
    CoverSolver solver(build_ball_problem(sys, z, phi, N, delta, kind, g, strategy, span), strategy);
    return solver.m_value(s);
}

double critical_value(const SftSystem& sys, const ZSet& z, const Potential& phi, int N, double delta,
                      BallKind kind, const std::optional<MistakeFunction>& g, Strategy strategy, int span,
                      double* m_at_critical) {
    CoverSolver solver(build_ball_problem(sys, z, phi, N, delta, kind, g, strategy, span), strategy);
    return solver.critical_value(1e-12, m_at_critical);
}

PressureEstimate pressure_estimate(const SftSystem& sys, const ZSet& z, const Potential& phi, BallKind kind,
                                   const std::optional<MistakeFunction>& g,
                                   const std::vector<double>& delta_schedule, const std::vector<int>& n_schedule,
                                   Strategy strategy, int span) {
    if (delta_schedule.empty() || delta_schedule.size() != n_schedule.size())
        throw ConfigError("delta and N schedules must be nonempty and equally long");
    for (size_t k = 0; k + 1 < delta_schedule.size(); ++k)
        if (!(delta_schedule[k + 1] < delta_schedule[k])) throw ConfigError("delta schedule must be strictly decreasing");

    const size_t K = delta_schedule.size();
    PressureEstimate est;
    est.trace.resize(K);
    std::vector<std::uint32_t> carried;
    bool have_carried = false;
    for (size_t idx = K; idx-- > 0;) {  // finest scale first
        auto t0 = std::chrono::steady_clock::now();
        CoverSolver solver(
            build_ball_problem(sys, z, phi, n_schedule[idx], delta_schedule[idx], kind, g, strategy, span),
            strategy);
        if (strategy == Strategy::Greedy && have_carried && idx + 1 < K && n_schedule[idx] == n_schedule[idx + 1])
            solver.add_candidate(carried);
        TracePoint& tp = est.trace[idx];
        tp.delta = delta_schedule[idx];
        tp.N = n_schedule[idx];
        tp.critical_s = solver.critical_value(1e-12, &tp.m_at_critical);
        carried = solver.last_cover();
        have_carried = true;
        tp.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
    est.value = est.trace.back().critical_s;
    if (K >= 2) {
        const auto& a = est.trace[K - 2];
        const auto& b = est.trace[K - 1];
        est.slope = (b.critical_s - a.critical_s) / (b.delta - a.delta);
    }
    return est;
}

}  // namespace plab
