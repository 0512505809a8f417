#include "swh/search.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <limits>
#include <stdexcept>

#include "swh/linearize.hpp"

namespace swh {

bool holds(Predicate p, const BigInt& value) {
    switch (p) {
        case Predicate::Zero: return value == 0;
        case Predicate::Negative: return value < 0;
        case Predicate::NonPositive: return value <= 0;
        case Predicate::NonZero: return value != 0;
    }
    return false;
}

namespace {

using Clock = std::chrono::steady_clock;

void require_alphabet(const SH& sh, const Alphabet& alphabet) {
    for (const Word& m : monomials(*sh)) alphabet.check_word(m);
}

bool has_every_letter(const Alphabet& alphabet, std::string_view w) {
    for (char c : alphabet.letters())
        if (w.find(c) == std::string_view::npos) return false;
    return true;
}

// Per-letter occurrence counts along the current DFS path.
struct LetterTally {
    std::vector<std::size_t> counts;
    std::size_t missing;

    explicit LetterTally(std::size_t k) : counts(k, 0), missing(k) {}
    void push(std::size_t i) { missing -= counts[i]++ == 0; }
    void pop(std::size_t i) { missing += --counts[i] == 0; }
};

// Depth-first walk over all words of one exact length, in lexicographic
// order, below a fixed prefix. Stops at the first leaf that satisfies the
// predicate; `stop` lets sibling workers abandon subtrees that can no
// longer win.
struct LeafSearch {
    const Alphabet& alphabet;
    EvalState state;
    BoundHistory bound;
    Predicate predicate;
    bool every_letter;
    LetterTally tally;
    std::uint64_t nodes = 0;

    void push(std::size_t i) {
        state.push(alphabet[i]);
        tally.push(i);
    }

    bool run(std::size_t remaining, const std::atomic<bool>* stop) {
        ++nodes;
        if (every_letter && tally.missing > remaining) return false;
        if (remaining == 0) return holds(predicate, bound.evaluate(state));
        for (std::size_t i = 0; i < alphabet.size(); ++i) {
            if (stop && stop->load(std::memory_order_relaxed)) return false;
            push(i);
            if (run(remaining - 1, stop)) return true;
            state.pop();
            tally.pop(i);
        }
        return false;
    }
};

// Least word of exactly `length` letters, fanning out over the first letter.
std::optional<Word> least_of_length(const LeafSearch& proto, std::size_t length, const SearchOptions& options,
                                    std::uint64_t& nodes) {
    if (length == 0 || options.threads <= 1) {
        LeafSearch s = proto;
        bool hit = s.run(length, nullptr);
        nodes += s.nodes;
        if (hit) return s.state.current_word();
        return std::nullopt;
    }

    const std::size_t k = proto.alphabet.size();
    // stops[i] is raised once some branch j < i has a witness.
    std::vector<std::atomic<bool>> stops(k);
    for (auto& s : stops) s.store(false);
    std::vector<std::future<std::pair<std::optional<Word>, std::uint64_t>>> futures;
    for (std::size_t i = 0; i < k; ++i) {
        futures.push_back(std::async(std::launch::async, [&, i] {
            LeafSearch s = proto;
            s.push(i);
            bool hit = s.run(length - 1, &stops[i]);
            if (hit)
                for (std::size_t j = i + 1; j < k; ++j) stops[j].store(true);
            return std::pair{hit ? std::optional<Word>(s.state.current_word()) : std::nullopt, s.nodes};
        }));
    }
    std::optional<Word> best;
    for (auto& f : futures) {
        auto [w, n] = f.get();
        nodes += n;
        if (w && !best) best = std::move(w);
    }
    return best;
}

}  // namespace

SearchReport search_words(const SH& sh, const Alphabet& alphabet, Predicate p, std::size_t max_len,
                          const SearchOptions& options) {
    const auto start = Clock::now();
    require_alphabet(sh, alphabet);
    const auto ms = monomials(*sh);
    EvalState state(ms);
    LeafSearch proto{alphabet, state, BoundHistory(*sh, state), p, options.every_letter, LetterTally(alphabet.size())};

    SearchReport report;
    for (std::size_t n = 0; n <= max_len; ++n) {
        if (auto w = least_of_length(proto, n, options, report.nodes_explored)) {
            if (!holds(p, evaluate(sh, *w)) || (options.every_letter && !has_every_letter(alphabet, *w)))
                throw std::logic_error("search witness failed re-verification");
            report.witness = std::move(w);
            break;
        }
    }
    if (!report.witness) report.exhausted_up_to = max_len;
    report.elapsed = Clock::now() - start;
    return report;
}

SearchReport search_ses(const SH& sh1, const SH& sh2, const Alphabet& alphabet, std::size_t max_len,
                        const SearchOptions& options) {
    auto report = search_words(sub(sh1, sh2), alphabet, Predicate::Zero, max_len, options);
    if (report.witness && evaluate(sh1, *report.witness) != evaluate(sh2, *report.witness))
        throw std::logic_error("SES witness failed re-verification");
    return report;
}

SearchReport search_sit_counterexample(const SH& sh, const Alphabet& alphabet, std::size_t max_len, bool strict,
                                       const SearchOptions& options) {
    return search_words(sh, alphabet, strict ? Predicate::NonPositive : Predicate::Negative, max_len, options);
}

SearchReport search_distinguishing(const SH& sh1, const SH& sh2, const Alphabet& alphabet, std::size_t max_len,
                                   const SearchOptions& options) {
    auto report = search_words(sub(sh1, sh2), alphabet, Predicate::NonZero, max_len, options);
    if (report.witness && evaluate(sh1, *report.witness) == evaluate(sh2, *report.witness))
        throw std::logic_error("distinguishing witness failed re-verification");
    return report;
}

// ---------------------------------------------------------------------------
// Preimage search

namespace {

struct LinearTerm {
    BigInt coeff;
    // State indices of λ, u[0..1), ..., u; the last one is u itself.
    std::vector<std::size_t> prefixes;
};

struct LinearConstraint {
    std::vector<LinearTerm> terms;
    BigInt target;
};

class PreimageWalker {
public:
    PreimageWalker(const Alphabet& alphabet, EvalState state, const std::vector<LinearConstraint>& constraints,
                   const std::vector<std::vector<BigInt>>& binom, bool prune, bool every_letter)
        : alphabet_(alphabet),
          state_(std::move(state)),
          constraints_(constraints),
          binom_(binom),
          prune_(prune),
          every_letter_(every_letter),
          tally_(alphabet.size()) {}

    void run(std::size_t remaining, std::vector<Word>& out) {
        ++nodes_;
        if (every_letter_ && tally_.missing > remaining) return;
        if (remaining == 0) {
            if (satisfied()) out.push_back(state_.current_word());
            return;
        }
        if (prune_ && !feasible(remaining)) return;
        for (std::size_t i = 0; i < alphabet_.size(); ++i) {
            push(i);
            run(remaining - 1, out);
            state_.pop();
            tally_.pop(i);
        }
    }

    void push(std::size_t i) {
        state_.push(alphabet_[i]);
        tally_.push(i);
    }
    std::uint64_t nodes() const { return nodes_; }

private:
    const Alphabet& alphabet_;
    EvalState state_;
    const std::vector<LinearConstraint>& constraints_;
    const std::vector<std::vector<BigInt>>& binom_;
    bool prune_;
    bool every_letter_;
    LetterTally tally_;
    std::uint64_t nodes_ = 0;

    bool satisfied() const {
        for (const auto& c : constraints_) {
            BigInt v = 0;
            for (const auto& t : c.terms) v += t.coeff * state_.count(t.prefixes.back());
            if (v != c.target) return false;
        }
        return true;
    }

    // With r letters still to append, |wz|_u ranges within
    // [|w|_u, Σ_i |w|_{u[0..i)} · C(r, |u| - i)]: the lower end because
    // counts never decrease, the upper end by splitting each embedding of u
    // at the w|z boundary and bounding |z|_s by C(|z|, |s|) ≤ C(r, |s|).
    bool feasible(std::size_t r) const {
        const auto& row = binom_[r];
        for (const auto& c : constraints_) {
            BigInt lo = 0, hi = 0;
            for (const auto& t : c.terms) {
                const BigInt& now = state_.count(t.prefixes.back());
                const std::size_t len = t.prefixes.size() - 1;
                BigInt reach = 0;
                for (std::size_t i = 0; i <= len; ++i) {
                    const std::size_t rest = len - i;
                    if (rest <= r) reach += state_.count(t.prefixes[i]) * row[rest];
                }
                if (t.coeff > 0) {
                    lo += t.coeff * now;
                    hi += t.coeff * reach;
                } else {
                    lo += t.coeff * reach;
                    hi += t.coeff * now;
                }
            }
            if (c.target < lo || c.target > hi) return false;
        }
        return true;
    }
};

}  // namespace

PreimageReport search_preimage(const std::vector<PreimageConstraint>& constraints, const Alphabet& alphabet,
                               std::size_t max_len, bool prune, const SearchOptions& options) {
    const auto start = Clock::now();
    std::vector<LinearForm> forms;
    std::vector<Word> tracked;
    for (const auto& c : constraints) {
        require_alphabet(c.history, alphabet);
        forms.push_back(linearize(*c.history));
        for (const auto& [u, k] : forms.back().terms()) tracked.push_back(u);
    }
    EvalState state(tracked);

    std::vector<LinearConstraint> linear;
    for (std::size_t i = 0; i < constraints.size(); ++i) {
        LinearConstraint lc{{}, constraints[i].target};
        for (const auto& [u, k] : forms[i].terms()) {
            LinearTerm t{k, {}};
            for (std::size_t len = 0; len <= u.size(); ++len)
                t.prefixes.push_back(static_cast<std::size_t>(state.index_of(std::string_view(u).substr(0, len))));
            lc.terms.push_back(std::move(t));
        }
        linear.push_back(std::move(lc));
    }

    std::size_t max_degree = 0;
    for (const auto& f : forms) max_degree = std::max(max_degree, f.degree());
    std::vector<std::vector<BigInt>> binom(max_len + 1, std::vector<BigInt>(max_degree + 1, 0));
    for (std::size_t r = 0; r <= max_len; ++r)
        for (std::size_t k = 0; k <= max_degree && k <= r; ++k)
            mpz_bin_uiui(binom[r][k].get_mpz_t(), r, k);

    PreimageReport report;
    for (std::size_t n = 0; n <= max_len; ++n) {
        if (n == 0 || options.threads <= 1) {
            PreimageWalker walker(alphabet, state, linear, binom, prune, options.every_letter);
            walker.run(n, report.words);
            report.nodes_explored += walker.nodes();
            continue;
        }
        std::vector<std::future<std::pair<std::vector<Word>, std::uint64_t>>> futures;
        for (std::size_t i = 0; i < alphabet.size(); ++i)
            futures.push_back(std::async(std::launch::async, [&, i] {
                PreimageWalker walker(alphabet, state, linear, binom, prune, options.every_letter);
                walker.push(i);
                std::vector<Word> out;
                walker.run(n - 1, out);
                return std::pair{std::move(out), walker.nodes()};
            }));
        for (auto& f : futures) {
            auto [words, nodes] = f.get();
            report.nodes_explored += nodes;
            report.words.insert(report.words.end(), words.begin(), words.end());
        }
    }

    for (const Word& w : report.words) {
        if (options.every_letter && !has_every_letter(alphabet, w))
            throw std::logic_error("preimage word failed re-verification");
        for (const auto& c : constraints)
            if (evaluate(c.history, w) != c.target) throw std::logic_error("preimage word failed re-verification");
    }
    report.elapsed = Clock::now() - start;
    return report;
}

// ---------------------------------------------------------------------------
// Parikh-space search

SearchReport search_parikh(const SH& sh, const Alphabet& alphabet, Predicate p, std::size_t max_total,
                           const SearchOptions& options) {
    const auto start = Clock::now();
    if (!is_letter_restricted(*sh))
        throw NotLetterRestricted("Parikh search needs a letter-restricted history; use word search instead");
    require_alphabet(sh, alphabet);

    const std::size_t m = alphabet.size();
    std::vector<BigInt> point(m, 0);
    std::vector<std::size_t> counts(m, 0);
    SearchReport report;

    // Within one total, p_1 descending, then p_2 descending, ...: the
    // canonical words then come out in lexicographic order.
    auto visit = [&](auto&& self, std::size_t j, std::size_t left) -> bool {
        if (j + 1 == m) {
            counts[j] = left;
            point[j] = static_cast<unsigned long>(left);
            ++report.nodes_explored;
            if (options.every_letter && std::count(counts.begin(), counts.end(), 0u) > 0) return false;
            return holds(p, evaluate_parikh(*sh, alphabet, point));
        }
        for (std::size_t v = left + 1; v-- > 0;) {
            counts[j] = v;
            point[j] = static_cast<unsigned long>(v);
            if (self(self, j + 1, left - v)) return true;
        }
        return false;
    };

    for (std::size_t total = 0; total <= max_total; ++total) {
        if (visit(visit, 0, total)) {
            Word w = canonical_word(alphabet, counts);
            if (!holds(p, evaluate(sh, w)) || (options.every_letter && !has_every_letter(alphabet, w)))
                throw std::logic_error("Parikh witness failed re-verification");
            report.witness = std::move(w);
            break;
        }
    }
    if (!report.witness) report.exhausted_up_to = max_total;
    report.elapsed = Clock::now() - start;
    return report;
}

}  // namespace swh
