#include "pressurelab/point.hpp"

#include <algorithm>

#include "pressurelab/errors.hpp"

namespace plab {

namespace {

// Smallest primitive root of w: the shortest u with w = u^(|w|/|u|).
Word primitive_root(const Word& w) {
    const size_t n = w.size();
    for (size_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        bool ok = true;
        for (size_t i = d; i < n && ok; ++i) ok = (w[i] == w[i % d]);
        if (ok) return Word(w.begin(), w.begin() + static_cast<long>(d));
    }
    return w;
}

}  // namespace

Point::Point(Word preperiod, Word period) : pre_(std::move(preperiod)), per_(std::move(period)) {
    if (per_.empty()) throw ConfigError("point period must be nonempty");
    per_ = primitive_root(per_);
    // pre.a (w)^inf == pre (a w-minus-last)^inf whenever a equals the last
    // period symbol; absorbing shrinks the preperiod to its minimum.
    while (!pre_.empty() && pre_.back() == per_.back()) {
        pre_.pop_back();
        std::rotate(per_.begin(), per_.end() - 1, per_.end());
    }
}

Word Point::prefix(int n) const {
    Word out;
    out.reserve(static_cast<size_t>(n));
    for (long long i = 0; i < n; ++i) out.push_back(symbol_at(i));
    return out;
}

Point Point::shifted(long long j) const {
    if (j <= 0) return *this;
    if (j < static_cast<long long>(pre_.size()))
        return Point(Word(pre_.begin() + static_cast<long>(j), pre_.end()), per_);
    long long r = (j - static_cast<long long>(pre_.size())) % static_cast<long long>(per_.size());
    Word rot = per_;
    std::rotate(rot.begin(), rot.begin() + static_cast<long>(r), rot.end());
    return Point(Word{}, std::move(rot));
}

bool Point::valid_in(const SftSystem& sys) const {
    for (Symbol s : pre_)
        if (s >= sys.alphabet_size()) return false;
    for (Symbol s : per_)
        if (s >= sys.alphabet_size()) return false;
    for (size_t i = 0; i + 1 < pre_.size(); ++i)
        if (!sys.allowed(pre_[i], pre_[i + 1])) return false;
    if (!pre_.empty() && !sys.allowed(pre_.back(), per_.front())) return false;
    for (size_t i = 0; i + 1 < per_.size(); ++i)
        if (!sys.allowed(per_[i], per_[i + 1])) return false;
    return sys.allowed(per_.back(), per_.front());
}

std::string Point::to_string() const {
    std::string s = word_to_string(pre_);
    s += "(";
    s += word_to_string(per_);
    s += ")*";
    return s;
}

}  // namespace plab
