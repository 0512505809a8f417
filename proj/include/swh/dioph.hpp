#pragma once

// Polynomial equations Σ c_i x_1^{e_i1} ⋯ x_m^{e_im} = 0 and their compilation
// into letter-restricted subword histories, with variable x_j read as the
// number of occurrences of the j-th alphabet letter.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "swh/core.hpp"

namespace swh {

class SchemaError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Term {
    BigInt coeff;
    std::vector<std::uint32_t> exponents;

    friend bool operator==(const Term&, const Term&) = default;
};

class DiophantineEquation {
public:
    /// Throws SchemaError if `terms` is empty or an exponent vector has the wrong length.
    DiophantineEquation(std::size_t num_vars, std::vector<Term> terms);

    std::size_t num_vars() const { return num_vars_; }
    const std::vector<Term>& terms() const { return terms_; }

    /// Polynomial value at a point.
    BigInt evaluate(std::span<const BigInt> point) const;

    /// Substitutes x_j ← x_j + 1 for every variable and collects like terms,
    /// so that non-negative counts correspond to positive assignments.
    DiophantineEquation shifted_positive() const;

    friend bool operator==(const DiophantineEquation&, const DiophantineEquation&) = default;

private:
    std::size_t num_vars_;
    std::vector<Term> terms_;
};

class DiophantineSystem {
public:
    /// Throws SchemaError when empty or when the equations disagree on num_vars.
    explicit DiophantineSystem(std::vector<DiophantineEquation> equations);

    std::size_t num_vars() const { return equations_.front().num_vars(); }
    const std::vector<DiophantineEquation>& equations() const { return equations_; }

    DiophantineSystem shifted_positive() const;

private:
    std::vector<DiophantineEquation> equations_;
};

/// Letter-restricted history whose value on w is the polynomial at parikh(w).
/// Uses the first m letters of `alphabet` (or of a, b, c, ... when absent);
/// throws SchemaError when the alphabet is too small.
SH compile_equation(const DiophantineEquation& eq, const std::optional<Alphabet>& alphabet = std::nullopt);

/// The per-equation factors (SH_i × SH_i) + 1, in equation order.
std::vector<SH> system_factors(const DiophantineSystem& sys, const std::optional<Alphabet>& alphabet = std::nullopt);

/// Product of the system factors: value 1 exactly where every equation holds, > 1 elsewhere.
SH compile_system(const DiophantineSystem& sys, const std::optional<Alphabet>& alphabet = std::nullopt);

/// (sh1 − sh2) × (sh1 − sh2): zero exactly on words where sh1 and sh2 agree.
SH ses_to_sit(const SH& sh1, const SH& sh2);

/// sh − λ: turns "always > 0" into "always ≥ 0".
SH strict_to_nonstrict(const SH& sh);

// ---------------------------------------------------------------------------
// JSON ingestion
//
//   { "variables": ["x", "y"],
//     "equations": [ { "terms": [ {"coeff": 1, "exponents": [2, 0]}, ... ] } ],
//     "shift_positive": false }
//
// Coefficients outside the 53-bit safe range travel as decimal strings.

struct DiophantineDocument {
    std::vector<std::string> variables;
    DiophantineSystem system;
    bool shift_positive = false;
};

DiophantineDocument parse_document(const nlohmann::json& j);
DiophantineDocument parse_document(const std::string& text);
nlohmann::json to_json(const DiophantineDocument& doc);

/// A JSON number when |v| < 2^53, otherwise a decimal string.
nlohmann::json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const nlohmann::json& j);

}  // namespace swh
