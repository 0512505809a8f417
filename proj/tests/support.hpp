#pragma once

// Test-only oracles and generators. Nothing here calls into the library's
// evaluation, linearization or search code paths, so the oracles stay
// independent of what they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "swh/core.hpp"
#include "swh/dioph.hpp"

namespace swh::testing {

/// |w|_u by enumerating every increasing index sequence of length |u|.
inline BigInt brute_count(const std::string& w, const std::string& u) {
    if (u.empty()) return 1;
    BigInt total = 0;
    std::vector<std::size_t> idx(u.size());
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t k, std::size_t from) {
        if (k == u.size()) {
            ++total;
            return;
        }
        for (std::size_t i = from; i < w.size(); ++i)
            if (w[i] == u[k]) {
                idx[k] = i;
                rec(k + 1, i + 1);
            }
    };
    rec(0, 0);
    return total;
}

/// Tree walk using brute_count at the leaves.
inline BigInt brute_evaluate(const SubwordHistory& sh, const std::string& w) {
    if (auto* m = sh.as<Mono>()) return brute_count(w, m->word);
    if (auto* n = sh.as<Neg>()) return -brute_evaluate(*n->arg, w);
    if (auto* a = sh.as<Add>()) return brute_evaluate(*a->lhs, w) + brute_evaluate(*a->rhs, w);
    if (auto* m = sh.as<Mul>()) return brute_evaluate(*m->lhs, w) * brute_evaluate(*m->rhs, w);
    if (auto* s = sh.as<Scale>()) return s->factor * brute_evaluate(*s->arg, w);
    auto* p = sh.as<Pow>();
    BigInt base = brute_evaluate(*p->arg, w), r = 1;
    for (std::uint32_t i = 0; i < p->exponent; ++i) r *= base;
    return r;
}

/// All words of length ≤ max_len in shortlex order (letter order from `letters`).
inline std::vector<std::string> all_words(const std::string& letters, std::size_t max_len) {
    std::vector<std::string> out{""};
    std::size_t level_begin = 0;
    for (std::size_t n = 1; n <= max_len; ++n) {
        const std::size_t level_end = out.size();
        for (std::size_t i = level_begin; i < level_end; ++i)
            for (char c : letters) out.push_back(out[i] + c);
        level_begin = level_end;
    }
    return out;
}

/// All interleavings of u and v.
inline std::set<std::string> shuffle(const std::string& u, const std::string& v) {
    if (u.empty()) return {v};
    if (v.empty()) return {u};
    std::set<std::string> out;
    for (const auto& s : shuffle(u.substr(1), v)) out.insert(u[0] + s);
    for (const auto& s : shuffle(u, v.substr(1))) out.insert(v[0] + s);
    return out;
}

/// Polynomial value computed term by term with plain integer powers.
inline BigInt brute_polynomial(const DiophantineEquation& eq, const std::vector<long>& point) {
    BigInt total = 0;
    for (const auto& t : eq.terms()) {
        BigInt v = t.coeff;
        for (std::size_t j = 0; j < point.size(); ++j)
            for (std::uint32_t e = 0; e < t.exponents[j]; ++e) v *= point[j];
        total += v;
    }
    return total;
}

// ---------------------------------------------------------------------------
// Generators

struct HistoryGen {
    std::mt19937_64& rng;
    std::string letters = "ab";
    std::size_t max_mono = 2;
    int max_scale = 3;
    std::uint32_t max_exponent = 2;
    bool letter_restricted = false;

    int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

    SH monomial() {
        std::size_t len = static_cast<std::size_t>(pick(0, static_cast<int>(letter_restricted ? 1 : max_mono)));
        std::string w;
        for (std::size_t i = 0; i < len; ++i) w.push_back(letters[static_cast<std::size_t>(pick(0, static_cast<int>(letters.size()) - 1))]);
        return mono(w);
    }

    SH operator()(int depth) {
        if (depth <= 0 || pick(0, 4) == 0) return monomial();
        switch (pick(0, 5)) {
            case 0: return neg((*this)(depth - 1));
            case 1: return add((*this)(depth - 1), (*this)(depth - 1));
            case 2: return sub((*this)(depth - 1), (*this)(depth - 1));
            case 3: return mul((*this)(depth - 1), (*this)(depth - 1));
            case 4: return scale(pick(-max_scale, max_scale), (*this)(depth - 1));
            default: return power(static_cast<std::uint32_t>(pick(0, static_cast<int>(max_exponent))), (*this)(depth - 1));
        }
    }

    /// Redraws until the syntactic degree is at most `max_degree`.
    SH bounded(int depth, std::uint64_t max_degree) {
        for (;;) {
            SH sh = (*this)(depth);
            if (syntactic_degree(*sh) <= max_degree) return sh;
        }
    }
};

inline std::string random_word(std::mt19937_64& rng, const std::string& letters, std::size_t max_len) {
    std::size_t len = std::uniform_int_distribution<std::size_t>(0, max_len)(rng);
    std::string w;
    for (std::size_t i = 0; i < len; ++i)
        w.push_back(letters[std::uniform_int_distribution<std::size_t>(0, letters.size() - 1)(rng)]);
    return w;
}

/// m ≤ max_vars variables, total degree ≤ max_degree, |coeff| ≤ max_coeff.
inline DiophantineEquation random_equation(std::mt19937_64& rng, std::size_t m, std::uint32_t max_degree, int max_coeff,
                                           std::size_t max_terms = 4) {
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    std::vector<Term> terms;
    const int n = pick(1, static_cast<int>(max_terms));
    for (int i = 0; i < n; ++i) {
        Term t{pick(-max_coeff, max_coeff), std::vector<std::uint32_t>(m, 0)};
        std::uint32_t budget = static_cast<std::uint32_t>(pick(0, static_cast<int>(max_degree)));
        while (budget-- > 0) ++t.exponents[static_cast<std::size_t>(pick(0, static_cast<int>(m) - 1))];
        terms.push_back(std::move(t));
    }
    return DiophantineEquation(m, std::move(terms));
}

}  // namespace swh::testing
