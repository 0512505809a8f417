#include "swh/eval.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "overloaded.hpp"

namespace swh {

using detail::overloaded;

BigInt count_scattered(std::string_view w, std::string_view u) {
    // dp[k] = |prefix of w read so far|_{u[0..k)}
    std::vector<BigInt> dp(u.size() + 1, 0);
    dp[0] = 1;
    for (char c : w)
        for (std::size_t k = u.size(); k > 0; --k)
            if (u[k - 1] == c) dp[k] += dp[k - 1];
    return dp[u.size()];
}

// ---------------------------------------------------------------------------

EvalState::EvalState(std::span<const Word> monomials) {
    std::set<Word> closure{Word{}};
    for (const Word& m : monomials)
        for (std::size_t k = 1; k <= m.size(); ++k) closure.insert(m.substr(0, k));

    auto layout = std::make_shared<Layout>();
    layout->words.assign(closure.begin(), closure.end());
    std::stable_sort(layout->words.begin(), layout->words.end(),
                     [](const Word& a, const Word& b) { return a.size() < b.size(); });
    for (std::size_t i = 0; i < layout->words.size(); ++i) layout->index.emplace(layout->words[i], i);
    layout->parent.resize(layout->words.size(), -1);
    for (std::size_t i = 1; i < layout->words.size(); ++i) {
        const Word& u = layout->words[i];
        layout->parent[i] = static_cast<int>(layout->index.at(u.substr(0, u.size() - 1)));
        auto last = static_cast<unsigned char>(u.back());
        if (last >= 128) throw std::invalid_argument("monomial letters must be ASCII");
        layout->ending[last].push_back(i);
    }
    for (auto& list : layout->ending) std::reverse(list.begin(), list.end());

    counts_.assign(layout->words.size(), 0);
    counts_[0] = 1;
    layout_ = std::move(layout);
}

int EvalState::index_of(std::string_view u) const {
    auto it = layout_->index.find(std::string(u));
    return it == layout_->index.end() ? -1 : static_cast<int>(it->second);
}

const BigInt& EvalState::count(std::string_view u) const {
    int i = index_of(u);
    if (i < 0) throw std::out_of_range("word '" + std::string(u) + "' is not tracked");
    return counts_[static_cast<std::size_t>(i)];
}

void EvalState::push(char c) {
    auto u = static_cast<unsigned char>(c);
    if (u < 128)
        // Longest first, so each parent still holds its pre-push count.
        for (std::size_t i : layout_->ending[u])
            counts_[i] += counts_[static_cast<std::size_t>(layout_->parent[i])];
    word_.push_back(c);
}

void EvalState::pop() {
    if (word_.empty()) throw std::logic_error("EvalState::pop on the empty word");
    auto u = static_cast<unsigned char>(word_.back());
    word_.pop_back();
    if (u < 128) {
        const auto& list = layout_->ending[u];
        for (auto it = list.rbegin(); it != list.rend(); ++it)
            counts_[*it] -= counts_[static_cast<std::size_t>(layout_->parent[*it])];
    }
}

EvalState new_state(std::span<const Word> monomials) { return EvalState(monomials); }

EvalState extend(EvalState state, char c) {
    state.push(c);
    return state;
}

// ---------------------------------------------------------------------------

BoundHistory::BoundHistory(const SubwordHistory& sh, const EvalState& state) {
    std::unordered_map<const SubwordHistory*, std::uint32_t> seen;
    emit(sh, state, seen);
    regs_.resize(program_.size());
}

std::uint32_t BoundHistory::emit(const SubwordHistory& node, const EvalState& state,
                                 std::unordered_map<const SubwordHistory*, std::uint32_t>& seen) {
    if (auto it = seen.find(&node); it != seen.end()) return it->second;
    Instr in;
    std::visit(overloaded{
                   [&](const Mono& m) {
                       int i = state.index_of(m.word);
                       if (i < 0) throw std::invalid_argument("monomial '" + m.word + "' is not tracked by the state");
                       in.op = Op::Count;
                       in.slot = static_cast<std::size_t>(i);
                   },
                   [&](const Neg& n) {
                       in.op = Op::Neg;
                       in.lhs = emit(*n.arg, state, seen);
                   },
                   [&](const Add& a) {
                       in.op = Op::Add;
                       in.lhs = emit(*a.lhs, state, seen);
                       in.rhs = emit(*a.rhs, state, seen);
                   },
                   [&](const Mul& m) {
                       in.op = Op::Mul;
                       in.lhs = emit(*m.lhs, state, seen);
                       in.rhs = emit(*m.rhs, state, seen);
                   },
                   [&](const Scale& s) {
                       in.op = Op::Scale;
                       in.factor = s.factor;
                       in.lhs = emit(*s.arg, state, seen);
                   },
                   [&](const Pow& p) {
                       in.op = Op::Pow;
                       in.exponent = p.exponent;
                       in.lhs = emit(*p.arg, state, seen);
                   },
               },
               node.node());
    auto reg = static_cast<std::uint32_t>(program_.size());
    program_.push_back(std::move(in));
    seen.emplace(&node, reg);
    return reg;
}

BigInt BoundHistory::evaluate(const EvalState& state) const {
    for (std::size_t r = 0; r < program_.size(); ++r) {
        const Instr& in = program_[r];
        BigInt& out = regs_[r];
        switch (in.op) {
            case Op::Count: out = state.count(in.slot); break;
            case Op::Neg: out = -regs_[in.lhs]; break;
            case Op::Add: out = regs_[in.lhs] + regs_[in.rhs]; break;
            case Op::Mul: out = regs_[in.lhs] * regs_[in.rhs]; break;
            case Op::Scale: out = in.factor * regs_[in.lhs]; break;
            case Op::Pow: mpz_pow_ui(out.get_mpz_t(), regs_[in.lhs].get_mpz_t(), in.exponent); break;
        }
    }
    return regs_.back();
}

BigInt evaluate(const SubwordHistory& sh, std::string_view w) {
    auto ms = monomials(sh);
    EvalState state(ms);
    for (char c : w) state.push(c);
    return BoundHistory(sh, state).evaluate(state);
}

BigInt evaluate_parikh(const SubwordHistory& sh, const Alphabet& alphabet, std::span<const BigInt> counts) {
    if (counts.size() != alphabet.size()) throw std::invalid_argument("Parikh vector length differs from alphabet size");
    return std::visit(overloaded{
                          [&](const Mono& m) -> BigInt {
                              if (m.word.empty()) return 1;
                              int j = m.word.size() == 1 ? alphabet.index_of(m.word[0]) : -1;
                              if (m.word.size() > 1)
                                  throw std::invalid_argument("Parikh evaluation needs a letter-restricted history");
                              if (j < 0) throw AlphabetError("monomial '" + m.word + "' is not over the alphabet");
                              return counts[static_cast<std::size_t>(j)];
                          },
                          [&](const Neg& n) -> BigInt { return -evaluate_parikh(*n.arg, alphabet, counts); },
                          [&](const Add& a) -> BigInt {
                              return evaluate_parikh(*a.lhs, alphabet, counts) + evaluate_parikh(*a.rhs, alphabet, counts);
                          },
                          [&](const Mul& m) -> BigInt {
                              return evaluate_parikh(*m.lhs, alphabet, counts) * evaluate_parikh(*m.rhs, alphabet, counts);
                          },
                          [&](const Scale& s) -> BigInt { return s.factor * evaluate_parikh(*s.arg, alphabet, counts); },
                          [&](const Pow& p) -> BigInt {
                              if (p.exponent == 0) return 1;
                              BigInt r;
                              mpz_pow_ui(r.get_mpz_t(), evaluate_parikh(*p.arg, alphabet, counts).get_mpz_t(), p.exponent);
                              return r;
                          },
                      },
                      sh.node());
}

}  // namespace swh
