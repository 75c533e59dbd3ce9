#include "pressurelab/zset.hpp"

#include <algorithm>
#include <cmath>

#include "pressurelab/errors.hpp"

namespace plab {

ZSet ZSet::whole_space() { return ZSet{}; }

ZSet ZSet::sub_sft(const SftSystem& ambient, std::vector<std::uint8_t> transitions) {
    const int a = ambient.alphabet_size();
    if (transitions.size() != static_cast<size_t>(a) * a) throw ConfigError("sub-SFT matrix size mismatch");
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < a; ++j)
            if (transitions[static_cast<size_t>(i) * a + j] &&
                !ambient.allowed(static_cast<Symbol>(i), static_cast<Symbol>(j)))
                throw ConfigError("sub-SFT matrix is not entrywise <= the ambient matrix");
    ZSet z;
    z.kind_ = ZKind::SubSft;
    z.sub_ = std::move(transitions);
    // A word is a prefix of a point of Z only if its last symbol starts an
    // infinite sub-path; strip symbols with dead-end out-rows iteratively.
    std::vector<std::uint8_t> alive(static_cast<size_t>(a), 1);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < a; ++i) {
            if (!alive[static_cast<size_t>(i)]) continue;
            bool out = false;
            for (int j = 0; j < a; ++j)
                if (z.sub_[static_cast<size_t>(i) * a + j] && alive[static_cast<size_t>(j)]) out = true;
            if (!out) {
                alive[static_cast<size_t>(i)] = 0;
                changed = true;
            }
        }
    }
    z.sub_extendable_ = std::move(alive);
    bool any = false;
    for (auto v : z.sub_extendable_) any = any || v;
    if (!any) throw ConfigError("sub-SFT is empty (no infinite admissible sequences)");
    return z;
}

ZSet ZSet::cylinder_union(const SftSystem& ambient, std::vector<Word> words) {
    if (words.empty()) throw ConfigError("cylinder union needs at least one word");
    for (const auto& w : words) {
        if (w.empty()) throw ConfigError("cylinder words must be nonempty");
        if (!ambient.word_admissible(w)) throw ConfigError("cylinder word not admissible: " + word_to_string(w));
    }
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    ZSet z;
    z.kind_ = ZKind::CylinderUnion;
    z.words_ = std::move(words);
    return z;
}

bool ZSet::word_admissible(const SftSystem& sys, const Word& w) const {
    if (!sys.word_admissible(w)) return false;
    switch (kind_) {
        case ZKind::WholeSpace:
            return true;
        case ZKind::SubSft: {
            const int a = sys.alphabet_size();
            for (size_t i = 0; i + 1 < w.size(); ++i)
                if (!sub_[static_cast<size_t>(w[i]) * a + w[i + 1]]) return false;
            return sub_extendable_[w.back()] != 0;
        }
        case ZKind::CylinderUnion: {
            for (const auto& c : words_) {
                const size_t k = std::min(c.size(), w.size());
                if (std::equal(c.begin(), c.begin() + static_cast<long>(k), w.begin())) return true;
            }
            return false;
        }
    }
    return false;
}

std::vector<Word> ZSet::admissible_words(const SftSystem& sys, int n) const {
    if (n < 1) throw ConfigError("word length must be >= 1");
    double total = std::pow(static_cast<double>(sys.alphabet_size()), static_cast<double>(n));
    if (total > 1e7) throw CensusTooLarge("A^n exceeds the 10^7 enumeration guard");

    std::vector<Word> out;
    Word cur;
    cur.reserve(static_cast<size_t>(n));
    auto dfs = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == n) {
            if (word_admissible(sys, cur)) out.push_back(cur);
            return;
        }
        for (int s = 0; s < sys.alphabet_size(); ++s) {
            Symbol sym = static_cast<Symbol>(s);
            if (!cur.empty() && !sys.allowed(cur.back(), sym)) continue;
            cur.push_back(sym);
            self(self);
            cur.pop_back();
        }
    };
    dfs(dfs);
    return out;
}

}  // namespace plab
