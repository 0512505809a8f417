#pragma once

// Bounded semi-decision procedures over words (or Parikh vectors) of bounded
// size. None of these loops is unbounded: a negative answer is always
// "exhausted up to the radius", never a proof.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "swh/core.hpp"
#include "swh/eval.hpp"

namespace swh {

enum class Predicate { Zero, Negative, NonPositive, NonZero };

bool holds(Predicate p, const BigInt& value);

struct SearchReport {
    /// Set when a witness was found; it has been re-checked by `evaluate`.
    std::optional<Word> witness;
    /// Radius that was fully explored when nothing was found (word length or Parikh total).
    std::size_t exhausted_up_to = 0;
    std::uint64_t nodes_explored = 0;
    std::chrono::nanoseconds elapsed{0};

    bool found() const { return witness.has_value(); }
};

struct SearchOptions {
    /// Worker threads for fanning out over first letters; 1 keeps everything on the caller.
    unsigned threads = 1;
    /// Accept only words containing every alphabet letter, i.e. positive Parikh vectors.
    bool every_letter = false;
};

inline constexpr std::size_t kDefaultMaxLen = 8;
inline constexpr std::size_t kDefaultMaxTotal = 12;

/// Shortlex-least word w over `alphabet` with |w| ≤ max_len and p(|w|_sh).
SearchReport search_words(const SH& sh, const Alphabet& alphabet, Predicate p, std::size_t max_len,
                          const SearchOptions& options = {});

/// Least w with |w|_sh1 = |w|_sh2.
SearchReport search_ses(const SH& sh1, const SH& sh2, const Alphabet& alphabet, std::size_t max_len,
                        const SearchOptions& options = {});

/// Least w with |w|_sh < 0 (≤ 0 when strict).
SearchReport search_sit_counterexample(const SH& sh, const Alphabet& alphabet, std::size_t max_len, bool strict,
                                       const SearchOptions& options = {});

/// Least w with |w|_sh1 ≠ |w|_sh2.
SearchReport search_distinguishing(const SH& sh1, const SH& sh2, const Alphabet& alphabet, std::size_t max_len,
                                   const SearchOptions& options = {});

struct PreimageConstraint {
    SH history;
    BigInt target;
};

struct PreimageReport {
    /// Every solution of length ≤ the radius, shortlex order.
    std::vector<Word> words;
    std::uint64_t nodes_explored = 0;
    std::chrono::nanoseconds elapsed{0};
};

/// All w with |w| ≤ max_len and |w|_{history} = target for every constraint.
/// Depth-first over one shared prefix-count state; subtrees are cut when
/// some constraint's reachable value range excludes its target.
PreimageReport search_preimage(const std::vector<PreimageConstraint>& constraints, const Alphabet& alphabet,
                               std::size_t max_len, bool prune = true, const SearchOptions& options = {});

class NotLetterRestricted : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Search over Parikh vectors with component sum ≤ max_total instead of
/// words. Vectors are visited so that the materialized canonical word is the
/// shortlex-least word having a satisfying Parikh vector. Throws
/// NotLetterRestricted for histories with longer monomials.
SearchReport search_parikh(const SH& sh, const Alphabet& alphabet, Predicate p, std::size_t max_total,
                           const SearchOptions& options = {});

}  // namespace swh
