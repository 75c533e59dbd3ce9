#include "pressurelab/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

namespace plab {

int thread_count() {
    const char* env = std::getenv("PRESSURELAB_THREADS");
    if (!env) return 1;
    int v = std::atoi(env);
    if (v < 1) return 1;
    unsigned hw = std::thread::hardware_concurrency();
    if (hw > 0 && v > static_cast<int>(hw)) v = static_cast<int>(hw);
    return v;
}

void for_each_chunk(size_t n, const std::function<void(size_t, size_t, size_t)>& fn) {
    if (n == 0) return;
    const size_t chunks = (n + kParallelChunk - 1) / kParallelChunk;
    const int workers = thread_count();
    if (workers <= 1 || chunks <= 1) {
        for (size_t c = 0; c < chunks; ++c) fn(c, c * kParallelChunk, std::min(n, (c + 1) * kParallelChunk));
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    auto run = [&]() {
        try {
            for (;;) {
                size_t c = next.fetch_add(1);
                if (c >= chunks) return;
                fn(c, c * kParallelChunk, std::min(n, (c + 1) * kParallelChunk));
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mu);
            if (!error) error = std::current_exception();
            next.store(chunks);  // drain remaining work
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers) - 1);
    for (int t = 1; t < workers; ++t) pool.emplace_back(run);
    run();
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

double parallel_sum(size_t n, const std::function<double(size_t)>& term) {
    const size_t chunks = (n + kParallelChunk - 1) / kParallelChunk;
    std::vector<double> partial(chunks, 0.0);
    for_each_chunk(n, [&](size_t c, size_t b, size_t e) {
        double s = 0.0;
        for (size_t i = b; i < e; ++i) s += term(i);
        partial[c] = s;
    });
    double total = 0.0;
    for (double p : partial) total += p;
    return total;
}

std::uint64_t parallel_count(size_t n, const std::function<bool(size_t)>& pred) {
    const size_t chunks = (n + kParallelChunk - 1) / kParallelChunk;
    std::vector<std::uint64_t> partial(chunks, 0);
    for_each_chunk(n, [&](size_t c, size_t b, size_t e) {
        std::uint64_t s = 0;
        for (size_t i = b; i < e; ++i) s += pred(i) ? 1 : 0;
        partial[c] = s;
    });
    std::uint64_t total = 0;
    for (auto p : partial) total += p;
    return total;
}

}  // namespace plab
