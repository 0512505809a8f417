#include "swh/linearize.hpp"

#include <utility>
#include <vector>

#include "overloaded.hpp"
#include "swh/eval.hpp"
#include "swh/parser.hpp"

namespace swh {

using detail::overloaded;

LinearForm::LinearForm(std::initializer_list<std::pair<const Word, BigInt>> terms) {
    for (const auto& [u, c] : terms) add_term(u, c);
}

BigInt LinearForm::coeff(const Word& u) const {
    auto it = terms_.find(u);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void LinearForm::add_term(const Word& u, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(u, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

LinearForm& LinearForm::operator+=(const LinearForm& other) {
    for (const auto& [u, c] : other.terms_) add_term(u, c);
    return *this;
}

LinearForm& LinearForm::operator*=(const BigInt& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [u, k] : terms_) k *= c;
    return *this;
}

LinearForm LinearForm::operator-() const {
    LinearForm r = *this;
    r *= -1;
    return r;
}

// ---------------------------------------------------------------------------

namespace {

LinearForm infiltrate_uncached(std::string_view u, std::string_view v) {
    // table[i][j] = infiltration of u[0..i) and v[0..j).
    const std::size_t n = u.size(), m = v.size();
    std::vector<std::vector<LinearForm>> table(n + 1, std::vector<LinearForm>(m + 1));
    for (std::size_t i = 0; i <= n; ++i) table[i][0] = LinearForm::monomial(Word(u.substr(0, i)));
    for (std::size_t j = 0; j <= m; ++j) table[0][j] = LinearForm::monomial(Word(v.substr(0, j)));

    auto append_into = [](LinearForm& dst, const LinearForm& src, char letter) {
        for (const auto& [t, c] : src.terms()) dst.add_term(t + letter, c);
    };
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= m; ++j) {
            const char a = u[i - 1], b = v[j - 1];
            LinearForm cell;
            append_into(cell, table[i - 1][j], a);
            append_into(cell, table[i][j - 1], b);
            if (a == b) append_into(cell, table[i - 1][j - 1], a);
            table[i][j] = std::move(cell);
        }
        // Row i-1 is no longer needed.
        if (i >= 2) std::vector<LinearForm>().swap(table[i - 2]);
    }
    return std::move(table[n][m]);
}

class InfiltrationCache {
public:
    const LinearForm& get(std::string_view u, std::string_view v) {
        if (v < u) std::swap(u, v);
        Key key{std::string(u), std::string(v)};
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        if (memo_.size() >= kMaxEntries) memo_.clear();
        return memo_.emplace(std::move(key), infiltrate_uncached(u, v)).first->second;
    }

private:
    using Key = std::pair<std::string, std::string>;
    static constexpr std::size_t kMaxEntries = 1u << 15;
    std::map<Key, LinearForm> memo_;
};

// One memo per thread; results are identical to the uncached product.
InfiltrationCache& cache() {
    thread_local InfiltrationCache c;
    return c;
}

}  // namespace

LinearForm infiltrate(std::string_view u, std::string_view v) { return cache().get(u, v); }

LinearForm infiltrate(const LinearForm& x, const LinearForm& y) {
    LinearForm out;
    for (const auto& [u, cu] : x.terms())
        for (const auto& [v, cv] : y.terms()) {
            const BigInt c = cu * cv;
            for (const auto& [t, k] : cache().get(u, v).terms()) out.add_term(t, c * k);
        }
    return out;
}

LinearForm linearize(const SubwordHistory& sh) {
    return std::visit(overloaded{
                          [](const Mono& m) { return LinearForm::monomial(m.word); },
                          [](const Neg& n) { return -linearize(*n.arg); },
                          [](const Add& a) {
                              LinearForm f = linearize(*a.lhs);
                              f += linearize(*a.rhs);
                              return f;
                          },
                          [](const Mul& m) { return infiltrate(linearize(*m.lhs), linearize(*m.rhs)); },
                          [](const Scale& s) {
                              LinearForm f = linearize(*s.arg);
                              f *= s.factor;
                              return f;
                          },
                          [](const Pow& p) {
                              if (p.exponent == 0) return LinearForm::monomial(Word{});
                              const LinearForm base = linearize(*p.arg);
                              LinearForm acc = base;
                              for (std::uint32_t i = 1; i < p.exponent; ++i) acc = infiltrate(acc, base);
                              return acc;
                          },
                      },
                      sh.node());
}

std::size_t semantic_degree(const SubwordHistory& sh) { return linearize(sh).degree(); }

bool equivalent(const SH& sh1, const SH& sh2) { return linearize(*sub(sh1, sh2)).empty(); }

BigInt evaluate(const LinearForm& form, std::string_view w) {
    std::vector<Word> words;
    words.reserve(form.size());
    for (const auto& [u, c] : form.terms()) words.push_back(u);
    EvalState state(words);
    for (char c : w) state.push(c);
    BigInt total = 0;
    for (const auto& [u, c] : form.terms()) total += c * state.count(u);
    return total;
}

SH to_history(const LinearForm& form) {
    if (form.empty()) return scale(0, lambda());
    SH acc;
    for (const auto& [u, c] : form.terms()) {
        const BigInt k = abs(c);
        SH magnitude = k == 1 ? mono(u) : scale(k, mono(u));
        if (!acc)
            acc = c < 0 ? neg(magnitude) : magnitude;
        else
            acc = c < 0 ? sub(acc, magnitude) : add(acc, magnitude);
    }
    return acc;
}

std::string pretty(const LinearForm& form) { return pretty(*to_history(form)); }

}  // namespace swh
