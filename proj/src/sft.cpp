#include "pressurelab/sft.hpp"

#include <cmath>
#include <cstdio>

#include "pressurelab/errors.hpp"

namespace plab {

SftSystem::SftSystem(int alphabet_size, std::vector<std::uint8_t> transitions, double theta)
    : a_(alphabet_size), t_(std::move(transitions)), theta_(theta) {
    if (a_ < 1 || a_ > 64) throw ConfigError("alphabet size must be in [1,64]");
    if (t_.size() != static_cast<size_t>(a_) * a_) throw ConfigError("transition matrix size mismatch");
    if (!(theta_ > 0.0 && theta_ < 1.0)) throw ConfigError("theta must lie strictly between 0 and 1");
    for (int i = 0; i < a_; ++i) {
        bool row = false, col = false;
        for (int j = 0; j < a_; ++j) {
            row = row || t_[static_cast<size_t>(i) * a_ + j] != 0;
            col = col || t_[static_cast<size_t>(j) * a_ + i] != 0;
        }
        if (!row || !col) throw ConfigError("transition matrix has a stranded symbol (empty row or column)");
    }
}

SftSystem SftSystem::full_shift(int alphabet_size, double theta) {
    std::vector<std::uint8_t> t(static_cast<size_t>(alphabet_size) * alphabet_size, 1);
    return SftSystem(alphabet_size, std::move(t), theta);
}

SftSystem SftSystem::golden_mean(double theta) {
    // forbids the word 11
    return SftSystem(2, {1, 1, 1, 0}, theta);
}

bool SftSystem::word_admissible(const Word& w) const {
    for (Symbol s : w)
        if (s >= a_) return false;
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (!allowed(w[i], w[i + 1])) return false;
    return true;
}

double SftSystem::theta_pow(long long k) const { return std::pow(theta_, static_cast<double>(k)); }

std::vector<Word> enumerate_words(const SftSystem& sys, int n) {
    if (n < 1) throw ConfigError("word length must be >= 1");
    double total = std::pow(static_cast<double>(sys.alphabet_size()), static_cast<double>(n));
    if (total > 1e7) throw CensusTooLarge("A^n exceeds the 10^7 enumeration guard");
    std::vector<Word> out;
    Word cur;
    cur.reserve(n);
    // iterative DFS in lexicographic order
    auto extend = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == n) {
            out.push_back(cur);
            return;
        }
        for (int s = 0; s < sys.alphabet_size(); ++s) {
            if (!cur.empty() && !sys.allowed(cur.back(), static_cast<Symbol>(s))) continue;
            cur.push_back(static_cast<Symbol>(s));
            self(self);
            cur.pop_back();
        }
    };
    extend(extend);
    return out;
}

std::uint64_t count_words_matrix_power(const SftSystem& sys, int n) {
    const int a = sys.alphabet_size();
    std::vector<std::uint64_t> v(a, 1);  // column counts, right-multiplied
    for (int step = 0; step < n - 1; ++step) {
        std::vector<std::uint64_t> nv(a, 0);
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < a; ++j)
                if (sys.allowed(static_cast<Symbol>(i), static_cast<Symbol>(j))) nv[i] += v[j];
        v = std::move(nv);
    }
    std::uint64_t total = 0;
    for (auto c : v) total += c;
    return total;
}

namespace {
constexpr char kDigits[] = "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ+/";

int digit_value(char c) {
    for (int i = 0; i < 64; ++i)
        if (kDigits[i] == c) return i;
    return -1;
}
}  // namespace

std::string word_to_string(const Word& w) {
    std::string s;
    s.reserve(w.size());
    for (Symbol x : w) s.push_back(kDigits[x]);
    return s;
}

Word word_from_string(const std::string& s) {
    Word w;
    w.reserve(s.size());
    for (char c : s) {
        int v = digit_value(c);
        if (v < 0) throw ConfigError(std::string("bad symbol character '") + c + "' in word");
        w.push_back(static_cast<Symbol>(v));
    }
    return w;
}

}  // namespace plab
