#pragma once

// Exact evaluation of subword histories.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "swh/core.hpp"

namespace swh {

/// |w|_u: number of embeddings of u into w as a scattered subword. |w|_λ = 1.
BigInt count_scattered(std::string_view w, std::string_view u);

/// Prefix-count table over a prefix-closed set of monomials.
///
/// After pushing the letters of w, count(u) == |w|_u for every tracked u.
/// Extending by a letter c touches only the tracked words ending in c:
/// |wc|_u = |w|_u + [last(u) = c]·|w|_{u without its last letter}.
/// The layout is shared between copies; only the counts are per-state.
class EvalState {
public:
    EvalState() : EvalState(std::span<const Word>{}) {}
    explicit EvalState(std::span<const Word> monomials);

    /// Index of a tracked word, or -1.
    int index_of(std::string_view u) const;
    bool tracks(std::string_view u) const { return index_of(u) >= 0; }

    const BigInt& count(std::size_t index) const { return counts_[index]; }
    const BigInt& count(std::string_view u) const;

    /// Tracked words in order of non-decreasing length; index 0 is λ.
    const std::vector<Word>& words() const { return layout_->words; }
    /// Index of the word minus its last letter (-1 for λ).
    int parent(std::size_t index) const { return layout_->parent[index]; }

    const Word& current_word() const { return word_; }
    std::size_t current_length() const { return word_.size(); }

    void push(char c);
    /// Undoes the last push.
    void pop();

private:
    struct Layout {
        std::vector<Word> words;
        std::vector<int> parent;
        std::unordered_map<std::string, std::size_t> index;
        // ending[c]: indices of words whose last letter is c, longest first.
        std::vector<std::size_t> ending[128];
    };

    std::shared_ptr<const Layout> layout_;
    std::vector<BigInt> counts_;
    Word word_;
};

EvalState new_state(std::span<const Word> monomials);
/// Copying form of EvalState::push.
EvalState extend(EvalState state, char c);

/// A subword history compiled against the slots of an EvalState so it can be
/// re-evaluated cheaply after every push/pop. Shared sub-expressions are
/// evaluated once. Holds scratch registers: give each thread its own copy.
class BoundHistory {
public:
    BoundHistory(const SubwordHistory& sh, const EvalState& state);

    BigInt evaluate(const EvalState& state) const;

private:
    enum class Op : std::uint8_t { Count, Neg, Add, Mul, Scale, Pow };
    struct Instr {
        Op op;
        std::uint32_t lhs = 0, rhs = 0;  // register operands
        std::size_t slot = 0;            // Count: state index
        std::uint32_t exponent = 0;      // Pow
        BigInt factor;                   // Scale
    };

    std::vector<Instr> program_;
    mutable std::vector<BigInt> regs_;

    std::uint32_t emit(const SubwordHistory& node, const EvalState& state,
                       std::unordered_map<const SubwordHistory*, std::uint32_t>& seen);
};

/// Value of `sh` in `w`: one scan of w over the prefix closure of the
/// monomials, then a fold over the tree.
BigInt evaluate(const SubwordHistory& sh, std::string_view w);
inline BigInt evaluate(const SH& sh, std::string_view w) { return evaluate(*sh, w); }

/// Value of a letter-restricted history given only the Parikh vector of the
/// word (letter a_j ↦ counts[j], λ ↦ 1). Throws std::invalid_argument when
/// sh is not letter-restricted.
BigInt evaluate_parikh(const SubwordHistory& sh, const Alphabet& alphabet, std::span<const BigInt> counts);

}  // namespace swh
