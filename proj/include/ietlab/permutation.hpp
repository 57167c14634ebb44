#pragma once

#include "ietlab/errors.hpp"

#include <string>
#include <vector>

namespace ietlab {

enum class RauzyKind { top, bottom };

inline char kind_char(RauzyKind k) { return k == RauzyKind::top ? 't' : 'b'; }

// Combinatorial datum of a d-letter interval exchange: a pair of bijections
// from letters onto positions {0, ..., d-1}. Letters are integer ids; the
// alphabet stays fixed under Rauzy moves, only the two orders change.
class Permutation {
  public:
    Permutation() = default;
    Permutation(std::vector<int> top, std::vector<int> bottom,
                std::vector<std::string> names = {});

    int d() const { return static_cast<int>(top_.size()); }
    int top(int letter) const { return top_[letter]; }        // letter -> position
    int bottom(int letter) const { return bottom_[letter]; }  // letter -> position
    const std::string& name(int letter) const { return names_[letter]; }

    int letter_at_top(int pos) const { return top_inv_[pos]; }
    int letter_at_bottom(int pos) const { return bottom_inv_[pos]; }

    int alpha_top() const { return top_inv_[d() - 1]; }      // last letter of top row
    int alpha_bottom() const { return bottom_inv_[d() - 1]; }  // last letter of bottom row

    bool irreducible() const;

    // Positions word w[i] = bottom position of the letter at top position i.
    // Identifies the vertex after forgetting letter names.
    std::vector<int> canonical_word() const;
    std::string canonical_string() const;

    // Two whitespace-separated rows of letter names, top then bottom.
    std::string to_string() const;

    bool operator==(const Permutation& o) const {
        return top_ == o.top_ && bottom_ == o.bottom_;
    }

  private:
    std::vector<int> top_, bottom_;       // letter -> position
    std::vector<int> top_inv_, bottom_inv_;  // position -> letter
    std::vector<std::string> names_;
};

// Builds a Permutation from the two rows (sequences of letter names) and
// rejects non-bijections and reducible data.
Permutation validate_permutation(const std::vector<std::string>& top_order,
                                 const std::vector<std::string>& bottom_order);

// Parses "1 2 3 4 / 4 3 2 1" or two whitespace-separated rows.
Permutation parse_permutation(const std::string& text);

// One Rauzy move. Total on irreducible permutations, letters preserved.
Permutation rauzy_move(const Permutation& pi, RauzyKind kind);

// Permutation with top row 0..d-1 and bottom row given as a word of
// positions (0-based), e.g. {3,2,1,0} for (1234 / 4321).
Permutation permutation_from_word(const std::vector<int>& word);

}  // namespace ietlab
