#pragma once

// Product elimination: every subword history equals a unique integer
// combination of monomials. Products of monomials expand through the
// infiltration product, |w|_u · |w|_v = Σ_t mult(t)·|w|_t.

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "swh/core.hpp"

namespace swh {

/// Shortlex: shorter words first, then plain character order.
struct ShortLex {
    bool operator()(const Word& a, const Word& b) const {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    }
};

/// Integer combination of monomials with no zero coefficients stored.
class LinearForm {
public:
    using Terms = std::map<Word, BigInt, ShortLex>;

    LinearForm() = default;
    LinearForm(std::initializer_list<std::pair<const Word, BigInt>> terms);

    static LinearForm monomial(Word u) {
        LinearForm f;
        f.terms_.emplace(std::move(u), 1);
        return f;
    }

    const Terms& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Coefficient of u (0 when absent).
    BigInt coeff(const Word& u) const;

    /// Adds c·u, erasing the entry if it cancels.
    void add_term(const Word& u, const BigInt& c);

    LinearForm& operator+=(const LinearForm& other);
    LinearForm& operator*=(const BigInt& c);
    LinearForm operator-() const;

    /// Longest monomial length; 0 for the zero form.
    std::size_t degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.size(); }

    friend bool operator==(const LinearForm&, const LinearForm&) = default;

private:
    Terms terms_;
};

/// Infiltration product of two words as a multiset of words.
LinearForm infiltrate(std::string_view u, std::string_view v);

/// Bilinear extension of infiltrate.
LinearForm infiltrate(const LinearForm& x, const LinearForm& y);

LinearForm linearize(const SubwordHistory& sh);
inline LinearForm linearize(const SH& sh) { return linearize(*sh); }

std::size_t semantic_degree(const SubwordHistory& sh);
inline std::size_t semantic_degree(const SH& sh) { return semantic_degree(*sh); }

/// Decided algebraically: the linearized difference is the zero form.
bool equivalent(const SH& sh1, const SH& sh2);

BigInt evaluate(const LinearForm& form, std::string_view w);

/// The form as a (product-free) history, terms in shortlex order:
/// "11 + 5*a + 7*b + 10*aa".
SH to_history(const LinearForm& form);

/// pretty(to_history(form)), and "0" for the zero form.
std::string pretty(const LinearForm& form);

}  // namespace swh
