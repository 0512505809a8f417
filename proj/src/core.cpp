#include "swh/core.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "overloaded.hpp"

namespace swh {

Alphabet::Alphabet(std::string_view letters) : letters_(letters) {
    std::fill(std::begin(index_), std::end(index_), std::int8_t{-1});
    if (letters_.empty()) throw AlphabetError("alphabet must contain at least one letter");
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        char c = letters_[i];
        if (c < 'a' || c > 'z')
            throw AlphabetError(std::string("alphabet letter '") + c + "' is not a lowercase ASCII letter");
        auto u = static_cast<unsigned char>(c);
        if (index_[u] >= 0) throw AlphabetError(std::string("duplicate alphabet letter '") + c + "'");
        index_[u] = static_cast<std::int8_t>(i);
    }
}

Alphabet Alphabet::first(std::size_t n) {
    if (n == 0 || n > 26) throw AlphabetError("alphabet size must be between 1 and 26, got " + std::to_string(n));
    std::string s;
    for (std::size_t i = 0; i < n; ++i) s.push_back(static_cast<char>('a' + i));
    return Alphabet(s);
}

bool Alphabet::contains_word(std::string_view w) const {
    return std::all_of(w.begin(), w.end(), [this](char c) { return contains(c); });
}

void Alphabet::check_word(std::string_view w) const {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (!contains(w[i]))
            throw AlphabetError(std::string("letter '") + w[i] + "' at offset " + std::to_string(i) +
                                " is not in alphabet {" + letters_ + "}");
}

ParikhVector parikh(const Alphabet& alphabet, std::string_view w) {
    alphabet.check_word(w);
    std::vector<std::size_t> n(alphabet.size(), 0);
    for (char c : w) ++n[static_cast<std::size_t>(alphabet.index_of(c))];
    ParikhVector out;
    out.reserve(n.size());
    for (auto k : n) out.emplace_back(static_cast<unsigned long>(k));
    return out;
}

Word canonical_word(const Alphabet& alphabet, const std::vector<std::size_t>& counts) {
    if (counts.size() > alphabet.size()) throw AlphabetError("Parikh vector longer than alphabet");
    Word w;
    for (std::size_t j = 0; j < counts.size(); ++j) w.append(counts[j], alphabet[j]);
    return w;
}

// ---------------------------------------------------------------------------

namespace {
template <class T>
SH make(T node) {
    return std::make_shared<const SubwordHistory>(SubwordHistory::Node(std::move(node)));
}
}  // namespace

SH mono(Word w) { return make(Mono{std::move(w)}); }
SH neg(SH x) { return make(Neg{std::move(x)}); }
SH add(SH x, SH y) { return make(Add{std::move(x), std::move(y)}); }
SH sub(SH x, SH y) { return add(std::move(x), neg(std::move(y))); }
SH mul(SH x, SH y) { return make(Mul{std::move(x), std::move(y)}); }
SH scale(BigInt c, SH x) { return make(Scale{std::move(c), std::move(x)}); }
SH power(std::uint32_t e, SH x) { return make(Pow{e, std::move(x)}); }

SH constant(const BigInt& k) {
    if (k == 1) return lambda();
    if (k < 0) return neg(constant(-k));
    return scale(k, lambda());
}

using detail::overloaded;

bool is_letter_restricted(const SubwordHistory& sh) {
    return std::visit(overloaded{
                          [](const Mono& m) { return m.word.size() <= 1; },
                          [](const Neg& n) { return is_letter_restricted(*n.arg); },
                          [](const Add& a) { return is_letter_restricted(*a.lhs) && is_letter_restricted(*a.rhs); },
                          [](const Mul& m) { return is_letter_restricted(*m.lhs) && is_letter_restricted(*m.rhs); },
                          [](const Scale& s) { return is_letter_restricted(*s.arg); },
                          [](const Pow& p) { return is_letter_restricted(*p.arg); },
                      },
                      sh.node());
}

std::uint64_t syntactic_degree(const SubwordHistory& sh) {
    return std::visit(overloaded{
                          [](const Mono& m) -> std::uint64_t { return m.word.size(); },
                          [](const Neg& n) { return syntactic_degree(*n.arg); },
                          [](const Add& a) { return std::max(syntactic_degree(*a.lhs), syntactic_degree(*a.rhs)); },
                          [](const Mul& m) { return syntactic_degree(*m.lhs) + syntactic_degree(*m.rhs); },
                          [](const Scale& s) { return syntactic_degree(*s.arg); },
                          [](const Pow& p) { return p.exponent * syntactic_degree(*p.arg); },
                      },
                      sh.node());
}

namespace {
void collect(const SubwordHistory& sh, std::set<Word>& out, std::set<const SubwordHistory*>& seen) {
    if (!seen.insert(&sh).second) return;
    std::visit(overloaded{
                   [&](const Mono& m) { out.insert(m.word); },
                   [&](const Neg& n) { collect(*n.arg, out, seen); },
                   [&](const Add& a) { collect(*a.lhs, out, seen), collect(*a.rhs, out, seen); },
                   [&](const Mul& m) { collect(*m.lhs, out, seen), collect(*m.rhs, out, seen); },
                   [&](const Scale& s) { collect(*s.arg, out, seen); },
                   [&](const Pow& p) { collect(*p.arg, out, seen); },
               },
               sh.node());
}
}  // namespace

std::vector<Word> monomials(const SubwordHistory& sh) {
    std::set<Word> s;
    std::set<const SubwordHistory*> seen;
    collect(sh, s, seen);
    return {s.begin(), s.end()};
}

bool uses_alphabet(const SubwordHistory& sh, const Alphabet& alphabet) {
    auto ms = monomials(sh);
    return std::all_of(ms.begin(), ms.end(), [&](const Word& w) { return alphabet.contains_word(w); });
}

SH desugar(const SH& sh) {
    // Repeated-copy expansion; keep constants small.
    constexpr unsigned long kMaxExpansion = 1u << 16;
    return std::visit(overloaded{
                          [&](const Mono&) { return sh; },
                          [](const Neg& n) { return neg(desugar(n.arg)); },
                          [](const Add& a) { return add(desugar(a.lhs), desugar(a.rhs)); },
                          [](const Mul& m) { return mul(desugar(m.lhs), desugar(m.rhs)); },
                          [&](const Scale& s) -> SH {
                              BigInt k = abs(s.factor);
                              if (k > kMaxExpansion) throw std::length_error("desugar: scale factor too large to expand");
                              if (k == 0) return add(lambda(), neg(lambda()));
                              SH x = desugar(s.arg);
                              SH acc = x;
                              for (unsigned long i = 1; i < k.get_ui(); ++i) acc = add(acc, x);
                              return s.factor < 0 ? neg(acc) : acc;
                          },
                          [&](const Pow& p) -> SH {
                              if (p.exponent > kMaxExpansion) throw std::length_error("desugar: exponent too large to expand");
                              if (p.exponent == 0) return lambda();
                              SH x = desugar(p.arg);
                              SH acc = x;
                              for (std::uint32_t i = 1; i < p.exponent; ++i) acc = mul(acc, x);
                              return acc;
                          },
                      },
                      sh->node());
}

bool structurally_equal(const SubwordHistory& x, const SubwordHistory& y) {
    if (&x == &y) return true;
    if (x.node().index() != y.node().index()) return false;
    return std::visit(overloaded{
                          [&](const Mono& m) { return m.word == y.as<Mono>()->word; },
                          [&](const Neg& n) { return structurally_equal(*n.arg, *y.as<Neg>()->arg); },
                          [&](const Add& a) {
                              auto* b = y.as<Add>();
                              return structurally_equal(*a.lhs, *b->lhs) && structurally_equal(*a.rhs, *b->rhs);
                          },
                          [&](const Mul& a) {
                              auto* b = y.as<Mul>();
                              return structurally_equal(*a.lhs, *b->lhs) && structurally_equal(*a.rhs, *b->rhs);
                          },
                          [&](const Scale& s) {
                              auto* t = y.as<Scale>();
                              return s.factor == t->factor && structurally_equal(*s.arg, *t->arg);
                          },
                          [&](const Pow& p) {
                              auto* q = y.as<Pow>();
                              return p.exponent == q->exponent && structurally_equal(*p.arg, *q->arg);
                          },
                      },
                      x.node());
}

namespace {
std::size_t mix(std::size_t seed, std::size_t v) { return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2)); }
}  // namespace

std::size_t structural_hash(const SubwordHistory& sh) {
    std::size_t h = sh.node().index();
    std::visit(overloaded{
                   [&](const Mono& m) { h = mix(h, std::hash<Word>{}(m.word)); },
                   [&](const Neg& n) { h = mix(h, structural_hash(*n.arg)); },
                   [&](const Add& a) { h = mix(mix(h, structural_hash(*a.lhs)), structural_hash(*a.rhs)); },
                   [&](const Mul& m) { h = mix(mix(h, structural_hash(*m.lhs)), structural_hash(*m.rhs)); },
                   [&](const Scale& s) {
                       h = mix(mix(h, std::hash<std::string>{}(s.factor.get_str())), structural_hash(*s.arg));
                   },
                   [&](const Pow& p) { h = mix(mix(h, p.exponent), structural_hash(*p.arg)); },
               },
               sh.node());
    return h;
}

}  // namespace swh
