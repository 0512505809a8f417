#include "swh/parser.hpp"

#include <cctype>
#include <limits>

#include "overloaded.hpp"

namespace swh {

ParseError::ParseError(Kind kind, std::size_t position, std::string expected, std::string found)
    : std::runtime_error("parse error at offset " + std::to_string(position) + ": expected " + expected +
                         ", found " + found),
      kind_(kind),
      position_(position),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

class Parser {
public:
    Parser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

    SH run() {
        SH e = expr();
        skip_ws();
        if (!at_end()) fail(ParseError::Kind::Syntax, "operator or end of input");
        return e;
    }

private:
    std::string_view text_;
    const Alphabet& alphabet_;
    std::size_t pos_ = 0;

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    std::string found() const {
        if (at_end()) return "end of input";
        return std::string("'") + text_[pos_] + "'";
    }

    [[noreturn]] void fail(ParseError::Kind kind, std::string expected) const {
        throw ParseError(kind, pos_, std::move(expected), found());
    }

    SH expr() {
        SH acc = term();
        for (;;) {
            if (accept('+'))
                acc = add(acc, term());
            else if (accept('-'))
                acc = add(acc, neg(term()));
            else
                return acc;
        }
    }

    SH term() {
        if (accept('-')) return neg(term());
        SH acc = factor();
        while (accept('*')) acc = mul(acc, factor());
        return acc;
    }

    SH factor() {
        SH base = atom();
        if (!accept('^')) return base;
        skip_ws();
        if (peek() == '-') fail(ParseError::Kind::BadExponent, "non-negative exponent");
        if (!is_digit(peek())) fail(ParseError::Kind::BadExponent, "exponent");
        std::size_t start = pos_;
        std::uint64_t e = 0;
        while (is_digit(peek())) {
            e = e * 10 + static_cast<std::uint64_t>(peek() - '0');
            if (e > std::numeric_limits<std::uint32_t>::max()) {
                pos_ = start;
                fail(ParseError::Kind::BadExponent, "exponent below 2^32");
            }
            ++pos_;
        }
        if (e == 0) return lambda();
        return power(static_cast<std::uint32_t>(e), std::move(base));
    }

    SH atom() {
        skip_ws();
        char c = peek();
        if (is_digit(c)) {
            std::size_t start = pos_;
            while (is_digit(peek())) ++pos_;
            if (is_alpha(peek())) fail(ParseError::Kind::BadInteger, "operator after integer literal");
            BigInt k(std::string(text_.substr(start, pos_ - start)), 10);
            if (accept('*')) return scale(std::move(k), factor());
            return k == 1 ? lambda() : scale(std::move(k), lambda());
        }
        if (is_alpha(c)) {
            Word w;
            while (is_alpha(peek())) {
                if (!alphabet_.contains(peek()))
                    fail(ParseError::Kind::UnknownLetter, "letter of alphabet {" + alphabet_.letters() + "}");
                w.push_back(peek());
                ++pos_;
            }
            return mono(std::move(w));
        }
        if (c == '(') {
            ++pos_;
            SH e = expr();
            if (!accept(')')) fail(ParseError::Kind::Syntax, "')'");
            return e;
        }
        fail(ParseError::Kind::Syntax, "integer, monomial or '('");
    }
};

// ---------------------------------------------------------------------------
// Printing. Precedence levels mirror the grammar: a node printed in a slot
// that binds tighter than the node itself gets parentheses.

using detail::overloaded;

bool is_int_literal(const SubwordHistory& sh) {
    if (auto* m = sh.as<Mono>()) return m->word.empty();
    if (auto* s = sh.as<Scale>()) {
        auto* m = s->arg->as<Mono>();
        return m && m->word.empty() && s->factor >= 0 && s->factor != 1;
    }
    return false;
}

bool is_positive_scale(const SubwordHistory& sh) {
    auto* s = sh.as<Scale>();
    return s && s->factor >= 0 && !is_int_literal(sh);
}

// Slots a term may occupy: after unary or binary '-'/'+', or at the start of an expression.
bool fits_term(const SubwordHistory& sh) { return !sh.as<Add>(); }

// Left operand of '*'.
bool fits_product_lhs(const SubwordHistory& sh) {
    if (is_int_literal(sh)) return false;
    return sh.as<Mul>() || sh.as<Pow>() || sh.as<Mono>() || is_positive_scale(sh);
}

// Right operand of '*' and the operand of "k*": the grammar's factor.
bool fits_factor(const SubwordHistory& sh) {
    if (is_int_literal(sh)) return false;
    return sh.as<Pow>() || sh.as<Mono>() || is_positive_scale(sh);
}

bool fits_power_base(const SubwordHistory& sh) { return sh.as<Mono>() || is_int_literal(sh); }

void render(const SubwordHistory& sh, std::string& out);

void wrap(const SubwordHistory& sh, bool fits, std::string& out) {
    if (fits) return render(sh, out);
    out.push_back('(');
    render(sh, out);
    out.push_back(')');
}

void render(const SubwordHistory& sh, std::string& out) {
    std::visit(overloaded{
                   [&](const Mono& m) { out += m.word.empty() ? "1" : m.word; },
                   [&](const Neg& n) {
                       out.push_back('-');
                       wrap(*n.arg, fits_term(*n.arg), out);
                   },
                   [&](const Add& a) {
                       render(*a.lhs, out);
                       if (auto* n = a.rhs->as<Neg>()) {
                           out += " - ";
                           wrap(*n->arg, fits_term(*n->arg), out);
                       } else {
                           out += " + ";
                           wrap(*a.rhs, fits_term(*a.rhs), out);
                       }
                   },
                   [&](const Mul& m) {
                       wrap(*m.lhs, fits_product_lhs(*m.lhs), out);
                       out.push_back('*');
                       wrap(*m.rhs, fits_factor(*m.rhs), out);
                   },
                   [&](const Scale& s) {
                       if (is_int_literal(sh)) {
                           out += s.factor.get_str();
                           return;
                       }
                       if (s.factor < 0) out.push_back('-');
                       out += BigInt(abs(s.factor)).get_str();
                       out.push_back('*');
                       wrap(*s.arg, fits_factor(*s.arg), out);
                   },
                   [&](const Pow& p) {
                       wrap(*p.arg, fits_power_base(*p.arg), out);
                       out.push_back('^');
                       out += std::to_string(p.exponent);
                   },
               },
               sh.node());
}

}  // namespace

SH parse(std::string_view text, const Alphabet& alphabet) { return Parser(text, alphabet).run(); }

std::string pretty(const SubwordHistory& sh) {
    std::string out;
    render(sh, out);
    return out;
}

}  // namespace swh
