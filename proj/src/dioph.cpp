#include "swh/dioph.hpp"

#include <functional>
#include <limits>
#include <map>

namespace swh {

DiophantineEquation::DiophantineEquation(std::size_t num_vars, std::vector<Term> terms)
    : num_vars_(num_vars), terms_(std::move(terms)) {
    if (num_vars_ == 0) throw SchemaError("an equation needs at least one variable");
    if (terms_.empty()) throw SchemaError("an equation needs at least one term");
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].exponents.size() != num_vars_)
            throw SchemaError("term " + std::to_string(i) + " has " + std::to_string(terms_[i].exponents.size()) +
                              " exponents, expected " + std::to_string(num_vars_));
}

BigInt DiophantineEquation::evaluate(std::span<const BigInt> point) const {
    if (point.size() != num_vars_) throw std::invalid_argument("point dimension differs from variable count");
    BigInt total = 0;
    for (const Term& t : terms_) {
        BigInt v = t.coeff;
        for (std::size_t j = 0; j < num_vars_ && v != 0; ++j) {
            BigInt p;
            mpz_pow_ui(p.get_mpz_t(), point[j].get_mpz_t(), t.exponents[j]);
            v *= p;
        }
        total += v;
    }
    return total;
}

namespace {
BigInt binomial(std::uint32_t n, std::uint32_t k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}
}  // namespace

DiophantineEquation DiophantineEquation::shifted_positive() const {
    // Graded by exponent vector, highest first.
    std::map<std::vector<std::uint32_t>, BigInt, std::greater<>> collected;
    for (const Term& t : terms_) {
        // Expand ∏_j (x_j + 1)^{e_j} one variable at a time.
        std::map<std::vector<std::uint32_t>, BigInt, std::greater<>> partial{
            {std::vector<std::uint32_t>(num_vars_, 0), t.coeff}};
        for (std::size_t j = 0; j < num_vars_; ++j) {
            const std::uint32_t e = t.exponents[j];
            if (e == 0) continue;
            std::map<std::vector<std::uint32_t>, BigInt, std::greater<>> next;
            for (const auto& [exps, c] : partial)
                for (std::uint32_t k = 0; k <= e; ++k) {
                    auto ex = exps;
                    ex[j] = k;
                    next[ex] += c * binomial(e, k);
                }
            partial = std::move(next);
        }
        for (const auto& [exps, c] : partial) collected[exps] += c;
    }
    std::vector<Term> out;
    for (auto& [exps, c] : collected)
        if (c != 0) out.push_back(Term{c, exps});
    if (out.empty()) out.push_back(Term{0, std::vector<std::uint32_t>(num_vars_, 0)});
    return DiophantineEquation(num_vars_, std::move(out));
}

DiophantineSystem::DiophantineSystem(std::vector<DiophantineEquation> equations) : equations_(std::move(equations)) {
    if (equations_.empty()) throw SchemaError("a system needs at least one equation");
    for (const auto& eq : equations_)
        if (eq.num_vars() != equations_.front().num_vars())
            throw SchemaError("equations of a system must share the variable count");
}

DiophantineSystem DiophantineSystem::shifted_positive() const {
    std::vector<DiophantineEquation> out;
    out.reserve(equations_.size());
    for (const auto& eq : equations_) out.push_back(eq.shifted_positive());
    return DiophantineSystem(std::move(out));
}

// ---------------------------------------------------------------------------

namespace {
Alphabet letters_for(std::size_t m, const std::optional<Alphabet>& alphabet) {
    if (!alphabet) {
        if (m > 26) throw SchemaError("at most 26 variables are supported, got " + std::to_string(m));
        return Alphabet::first(m);
    }
    if (alphabet->size() < m)
        throw SchemaError("alphabet {" + alphabet->letters() + "} has fewer letters than the " + std::to_string(m) +
                          " variables");
    return *alphabet;
}
}  // namespace

SH compile_equation(const DiophantineEquation& eq, const std::optional<Alphabet>& alphabet) {
    const Alphabet sigma = letters_for(eq.num_vars(), alphabet);
    SH sum;
    for (const Term& t : eq.terms()) {
        if (t.coeff == 0) continue;
        // ∏^{e_1} a_1 × ∏^{e_2} a_2 × ⋯, omitting the ∏^0 factors.
        SH body;
        for (std::size_t j = 0; j < eq.num_vars(); ++j) {
            const std::uint32_t e = t.exponents[j];
            if (e == 0) continue;
            SH letter = mono(Word(1, sigma[j]));
            SH factor = e == 1 ? letter : power(e, letter);
            body = body ? mul(body, factor) : factor;
        }
        const BigInt k = abs(t.coeff);
        SH magnitude = !body ? constant(k) : (k == 1 ? body : scale(k, body));
        if (!sum)
            sum = t.coeff < 0 ? neg(magnitude) : magnitude;
        else
            sum = t.coeff < 0 ? sub(sum, magnitude) : add(sum, magnitude);
    }
    return sum ? sum : scale(0, lambda());
}

std::vector<SH> system_factors(const DiophantineSystem& sys, const std::optional<Alphabet>& alphabet) {
    std::vector<SH> out;
    for (const auto& eq : sys.equations()) {
        SH sh = compile_equation(eq, alphabet);
        out.push_back(add(mul(sh, sh), lambda()));
    }
    return out;
}

SH compile_system(const DiophantineSystem& sys, const std::optional<Alphabet>& alphabet) {
    SH product;
    for (SH& f : system_factors(sys, alphabet)) product = product ? mul(product, f) : f;
    return product;
}

SH ses_to_sit(const SH& sh1, const SH& sh2) {
    SH d = sub(sh1, sh2);
    return mul(d, d);
}

SH strict_to_nonstrict(const SH& sh) { return sub(sh, lambda()); }

// ---------------------------------------------------------------------------

namespace {
constexpr std::int64_t kSafeInteger = (std::int64_t{1} << 53) - 1;

const nlohmann::json& field(const nlohmann::json& obj, const char* name, const std::string& where) {
    if (!obj.is_object()) throw SchemaError(where + " must be an object");
    auto it = obj.find(name);
    if (it == obj.end()) throw SchemaError(where + " is missing \"" + name + "\"");
    return *it;
}
}  // namespace

nlohmann::json bigint_to_json(const BigInt& v) {
    if (abs(v) <= kSafeInteger) return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

BigInt bigint_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return BigInt(std::to_string(j.get<std::uint64_t>()));
        return BigInt(std::to_string(j.get<std::int64_t>()));
    }
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        std::size_t start = !s.empty() && (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
            throw SchemaError("coefficient string \"" + s + "\" is not a decimal integer");
        return BigInt(s[0] == '+' ? s.substr(1) : s, 10);
    }
    throw SchemaError("coefficient must be an integer or a decimal string, got " + j.dump());
}

DiophantineDocument parse_document(const nlohmann::json& j) {
    const auto& vars = field(j, "variables", "document");
    if (!vars.is_array() || vars.empty()) throw SchemaError("\"variables\" must be a non-empty array");
    std::vector<std::string> names;
    for (const auto& v : vars) {
        if (!v.is_string()) throw SchemaError("variable names must be strings");
        names.push_back(v.get<std::string>());
    }
    const std::size_t m = names.size();

    const auto& eqs = field(j, "equations", "document");
    if (!eqs.is_array() || eqs.empty()) throw SchemaError("\"equations\" must be a non-empty array");
    std::vector<DiophantineEquation> equations;
    for (std::size_t e = 0; e < eqs.size(); ++e) {
        const std::string where = "equations[" + std::to_string(e) + "]";
        const auto& terms = field(eqs[e], "terms", where);
        if (!terms.is_array() || terms.empty()) throw SchemaError(where + ".terms must be a non-empty array");
        std::vector<Term> out;
        for (std::size_t t = 0; t < terms.size(); ++t) {
            const std::string tw = where + ".terms[" + std::to_string(t) + "]";
            Term term;
            term.coeff = bigint_from_json(field(terms[t], "coeff", tw));
            const auto& ex = field(terms[t], "exponents", tw);
            if (!ex.is_array() || ex.size() != m)
                throw SchemaError(tw + ".exponents must be an array of " + std::to_string(m) + " integers");
            for (const auto& x : ex) {
                if (!x.is_number_integer() || x.get<std::int64_t>() < 0 ||
                    x.get<std::int64_t>() > std::numeric_limits<std::uint32_t>::max())
                    throw SchemaError(tw + ".exponents must hold non-negative integers");
                term.exponents.push_back(static_cast<std::uint32_t>(x.get<std::int64_t>()));
            }
            out.push_back(std::move(term));
        }
        equations.emplace_back(m, std::move(out));
    }

    bool shift = false;
    if (auto it = j.find("shift_positive"); it != j.end()) {
        if (!it->is_boolean()) throw SchemaError("\"shift_positive\" must be a boolean");
        shift = it->get<bool>();
    }
    return DiophantineDocument{std::move(names), DiophantineSystem(std::move(equations)), shift};
}

DiophantineDocument parse_document(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(std::string("malformed JSON: ") + e.what());
    }
    return parse_document(j);
}

nlohmann::json to_json(const DiophantineDocument& doc) {
    nlohmann::json eqs = nlohmann::json::array();
    for (const auto& eq : doc.system.equations()) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& t : eq.terms())
            terms.push_back({{"coeff", bigint_to_json(t.coeff)}, {"exponents", t.exponents}});
        eqs.push_back({{"terms", terms}});
    }
    return {{"variables", doc.variables}, {"equations", eqs}, {"shift_positive", doc.shift_positive}};
}

}  // namespace swh
