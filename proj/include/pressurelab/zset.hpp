#pragma once

#include <vector>

#include "pressurelab/sft.hpp"

namespace plab {

enum class ZKind { WholeSpace, SubSft, CylinderUnion };

// The subset Z of X whose pressure is computed. All variants expose their
// admissible n-words (the n-prefixes of points of Z), which is what the
// covering estimators consume.
class ZSet {
  public:
    static ZSet whole_space();
    // transitions entrywise <= the ambient matrix; Z holds the sequences
    // admissible under the submatrix.
    static ZSet sub_sft(const SftSystem& ambient, std::vector<std::uint8_t> transitions);
    // union of the cylinders of the given words (each ambient-admissible).
    static ZSet cylinder_union(const SftSystem& ambient, std::vector<Word> words);

    ZKind kind() const { return kind_; }
    const std::vector<Word>& cylinder_words() const { return words_; }

    // Z-admissible words of length n, lexicographically ordered.
    // Guarded like enumerate_words.
    std::vector<Word> admissible_words(const SftSystem& sys, int n) const;

    bool word_admissible(const SftSystem& sys, const Word& w) const;

  private:
    ZKind kind_ = ZKind::WholeSpace;
    std::vector<std::uint8_t> sub_;             // SubSft matrix
    std::vector<std::uint8_t> sub_extendable_;  // symbols with an infinite sub-path
    std::vector<Word> words_;                   // CylinderUnion
};

}  // namespace plab
