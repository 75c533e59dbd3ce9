#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace plab {

using Symbol = std::uint8_t;
using Word = std::vector<Symbol>;

// One-sided subshift of finite type over alphabet {0,..,A-1} with the
// theta-metric: d(x,y) = theta^k where k is the length of the longest
// common prefix (0 for equal points). The map is the left shift.
class SftSystem {
  public:
    SftSystem(int alphabet_size, std::vector<std::uint8_t> transitions, double theta = 0.5);

    static SftSystem full_shift(int alphabet_size, double theta = 0.5);
    static SftSystem golden_mean(double theta = 0.5);

    int alphabet_size() const { return a_; }
    double theta() const { return theta_; }
    bool allowed(Symbol from, Symbol to) const { return t_[static_cast<size_t>(from) * a_ + to] != 0; }
    const std::vector<std::uint8_t>& transitions() const { return t_; }

    bool word_admissible(const Word& w) const;

    // d = theta^k rounded the same way everywhere (std::pow).
    double theta_pow(long long k) const;

  private:
    int a_;
    std::vector<std::uint8_t> t_;  // row-major A x A
    double theta_;
};

// All T-admissible words of length n, lexicographically ordered.
// Guarded: throws CensusTooLarge when A^n > 10^7.
std::vector<Word> enumerate_words(const SftSystem& sys, int n);

// Count of admissible n-words via sum of entries of T^(n-1) (exact,
// 64-bit; independent from the enumeration path).
std::uint64_t count_words_matrix_power(const SftSystem& sys, int n);

std::string word_to_string(const Word& w);
Word word_from_string(const std::string& s);

struct WordHash {
    size_t operator()(const Word& w) const {
        size_t h = 1469598103934665603ull;
        for (Symbol s : w) {
            h ^= s;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace plab
