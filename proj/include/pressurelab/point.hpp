#pragma once

#include "pressurelab/sft.hpp"

namespace plab {

// Eventually periodic one-sided sequence: preperiod followed by an infinite
// repetition of a period word. Stored in canonical form (primitive period,
// minimal preperiod), so operator== decides equality of points.
class Point {
  public:
    // Canonicalizes. period must be nonempty.
    Point(Word preperiod, Word period);

    static Point periodic(Word period) { return Point(Word{}, std::move(period)); }

    const Word& preperiod() const { return pre_; }
    const Word& period() const { return per_; }

    Symbol symbol_at(long long i) const {
        if (i < static_cast<long long>(pre_.size())) return pre_[static_cast<size_t>(i)];
        return per_[static_cast<size_t>((i - pre_.size()) % per_.size())];
    }

    // First n symbols.
    Word prefix(int n) const;

    // The image under f^j (left shift applied j times), canonical.
    Point shifted(long long j) const;

    bool operator==(const Point& o) const { return pre_ == o.pre_ && per_ == o.per_; }
    bool operator!=(const Point& o) const { return !(*this == o); }

    // preperiod . period . period admissible, including the period wrap.
    bool valid_in(const SftSystem& sys) const;

    std::string to_string() const;

  private:
    Word pre_, per_;
};

inline Point shift(const SftSystem&, const Point& x, long long j) { return x.shifted(j); }

}  // namespace plab
