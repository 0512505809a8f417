#pragma once

// Alphabets, words, Parikh vectors and the subword-history expression tree.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace swh {

using BigInt = mpz_class;

/// A word is a plain sequence of single-character letters; the empty string is λ.
using Word = std::string;

class AlphabetError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Ordered set of distinct lowercase ASCII letters. The order fixes the
/// coordinate order of Parikh vectors and the letter order of searches.
class Alphabet {
public:
    explicit Alphabet(std::string_view letters);

    /// The first `n` letters of a, b, c, ...
    static Alphabet first(std::size_t n);

    std::size_t size() const { return letters_.size(); }
    const std::string& letters() const { return letters_; }
    char operator[](std::size_t i) const { return letters_[i]; }

    bool contains(char c) const { return index_of(c) >= 0; }
    bool contains_word(std::string_view w) const;

    /// Position of `c` in the alphabet, or -1.
    int index_of(char c) const {
        auto u = static_cast<unsigned char>(c);
        return u < 128 ? index_[u] : -1;
    }

    /// Throws AlphabetError naming the first foreign letter.
    void check_word(std::string_view w) const;

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.letters_ == b.letters_; }

private:
    std::string letters_;
    std::int8_t index_[128];
};

using ParikhVector = std::vector<BigInt>;

ParikhVector parikh(const Alphabet& alphabet, std::string_view w);

/// a1^n1 a2^n2 ... am^nm
Word canonical_word(const Alphabet& alphabet, const std::vector<std::size_t>& counts);

// ---------------------------------------------------------------------------
// Expression tree

class SubwordHistory;

struct Mono {
    Word word;
};
struct Neg {
    std::shared_ptr<const SubwordHistory> arg;
};
struct Add {
    std::shared_ptr<const SubwordHistory> lhs, rhs;
};
struct Mul {
    std::shared_ptr<const SubwordHistory> lhs, rhs;
};
struct Scale {
    BigInt factor;
    std::shared_ptr<const SubwordHistory> arg;
};
struct Pow {
    std::uint32_t exponent;
    std::shared_ptr<const SubwordHistory> arg;
};

/// Immutable expression node. Children are shared, so copies are cheap and
/// sub-expressions may be reused across several parents.
class SubwordHistory {
public:
    using Node = std::variant<Mono, Neg, Add, Mul, Scale, Pow>;
    using Ptr = std::shared_ptr<const SubwordHistory>;

    explicit SubwordHistory(Node node) : node_(std::move(node)) {}

    const Node& node() const { return node_; }

    template <class T>
    const T* as() const { return std::get_if<T>(&node_); }

private:
    Node node_;
};

using SH = SubwordHistory::Ptr;

SH mono(Word w);
inline SH lambda() { return mono(Word{}); }
SH neg(SH x);
SH add(SH x, SH y);
SH sub(SH x, SH y);
SH mul(SH x, SH y);
SH scale(BigInt c, SH x);
SH power(std::uint32_t e, SH x);
/// k·λ, the integer constant k.
SH constant(const BigInt& k);

/// Every monomial has length at most one.
bool is_letter_restricted(const SubwordHistory& sh);

/// Upper bound on the semantic degree read off the tree shape.
std::uint64_t syntactic_degree(const SubwordHistory& sh);

/// All distinct monomial words occurring in the tree, sorted.
std::vector<Word> monomials(const SubwordHistory& sh);

/// True iff every monomial word lies over `alphabet`.
bool uses_alphabet(const SubwordHistory& sh, const Alphabet& alphabet);

/// Rewrites Scale and Pow into Definition-style primitives: Scale(k, x) becomes
/// a left-folded sum of k copies (negated for k < 0; 0 becomes λ + -λ) and
/// Pow(e, x) a left-folded product (e = 0 becomes λ).
SH desugar(const SH& sh);

bool structurally_equal(const SubwordHistory& x, const SubwordHistory& y);
std::size_t structural_hash(const SubwordHistory& sh);

}  // namespace swh
