#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "swh/dioph.hpp"
#include "swh/eval.hpp"
#include "swh/linearize.hpp"
#include "swh/parser.hpp"
#include "swh/search.hpp"

namespace swh::cli {

namespace {

using nlohmann::json;

struct Config {
    std::string alphabet;
    std::string format = "text";
    std::size_t max_len = kDefaultMaxLen;
    std::size_t max_total = kDefaultMaxTotal;
    bool strict = false;
    bool shift_positive = false;
    unsigned threads = 1;
    bool every_letter = false;

    bool json() const { return format == "json"; }
    SearchOptions search_options() const { return {threads, every_letter}; }
};

// Raised by command bodies; carries the exit code.
struct Failure {
    int code;
    std::string message;
};

std::string display(const Word& w) { return w.empty() ? "λ" : w; }

Alphabet resolve_alphabet(const Config& cfg, const std::vector<std::string>& texts) {
    try {
        if (!cfg.alphabet.empty()) return Alphabet(cfg.alphabet);
    } catch (const AlphabetError& e) {
        throw Failure{kParseError, std::string("bad --alphabet: ") + e.what()};
    }
    std::set<char> seen;
    for (const auto& t : texts)
        for (char c : t)
            if (c >= 'a' && c <= 'z') seen.insert(c);
    if (seen.empty()) return Alphabet("a");
    return Alphabet(std::string(seen.begin(), seen.end()));
}

SH parse_or_fail(const std::string& text, const Alphabet& alphabet, const char* what) {
    try {
        return parse(text, alphabet);
    } catch (const ParseError& e) {
        const int code = e.kind() == ParseError::Kind::UnknownLetter ? kAlphabetMismatch : kParseError;
        throw Failure{code, std::string(what) + ": " + e.what()};
    }
}

void emit_json(std::ostream& out, json j) {
    j["schema_version"] = 1;
    out << j.dump() << '\n';
}

json word_or_null(const std::optional<Word>& w) { return w ? json(*w) : json(nullptr); }

double millis(std::chrono::nanoseconds d) { return std::chrono::duration<double, std::milli>(d).count(); }

// ---------------------------------------------------------------------------

int cmd_eval(const Config& cfg, const std::string& word, const std::string& text, std::ostream& out) {
    const Alphabet sigma = resolve_alphabet(cfg, {word, text});
    try {
        sigma.check_word(word);
    } catch (const AlphabetError& e) {
        throw Failure{kAlphabetMismatch, std::string("--word: ") + e.what()};
    }
    SH sh = parse_or_fail(text, sigma, "--sh");
    const BigInt value = evaluate(sh, word);
    if (cfg.json())
        emit_json(out, {{"command", "eval"}, {"word", word}, {"sh", pretty(sh)}, {"value", bigint_to_json(value)}});
    else
        out << value.get_str() << '\n';
    return kOk;
}

int cmd_linearize(const Config& cfg, const std::string& text, bool degree_only, std::ostream& out) {
    const Alphabet sigma = resolve_alphabet(cfg, {text});
    const LinearForm form = linearize(parse_or_fail(text, sigma, "--sh"));
    if (cfg.json()) {
        json terms = json::array();
        for (const auto& [u, c] : form.terms()) terms.push_back({{"monomial", u}, {"coeff", bigint_to_json(c)}});
        emit_json(out, {{"command", "linearize"}, {"linear_form", pretty(form)}, {"terms", terms}, {"degree", form.degree()}});
    } else if (degree_only) {
        out << form.degree() << '\n';
    } else {
        out << pretty(form) << '\n';
    }
    return kOk;
}

int cmd_equiv(const Config& cfg, const std::string& lhs, const std::string& rhs, std::ostream& out) {
    const Alphabet sigma = resolve_alphabet(cfg, {lhs, rhs});
    SH sh1 = parse_or_fail(lhs, sigma, "first history");
    SH sh2 = parse_or_fail(rhs, sigma, "second history");
    const bool same = equivalent(sh1, sh2);
    std::optional<Word> witness;
    if (!same) witness = search_distinguishing(sh1, sh2, sigma, cfg.max_len, {cfg.threads}).witness;
    if (cfg.json()) {
        emit_json(out, {{"command", "equiv"}, {"equivalent", same}, {"witness", word_or_null(witness)}, {"radius", cfg.max_len}});
    } else if (same) {
        out << "equivalent\n";
    } else {
        out << "not equivalent\n";
        if (witness)
            out << "witness: " << display(*witness) << '\n';
        else
            out << "no distinguishing word up to length " << cfg.max_len << '\n';
    }
    return same ? kOk : kNegative;
}

int cmd_compile(const Config& cfg, const std::string& path, bool system, std::ostream& out) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in) throw Failure{kParseError, "cannot read " + path};
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    DiophantineDocument doc = [&] {
        try {
            return parse_document(text);
        } catch (const SchemaError& e) {
            throw Failure{kParseError, std::string("schema violation: ") + e.what()};
        }
    }();

    const std::size_t m = doc.variables.size();
    std::optional<Alphabet> sigma;
    try {
        sigma = cfg.alphabet.empty() ? Alphabet::first(m) : Alphabet(cfg.alphabet);
    } catch (const AlphabetError& e) {
        throw Failure{kParseError, e.what()};
    }
    if (sigma->size() < m)
        throw Failure{kAlphabetMismatch, "alphabet {" + sigma->letters() + "} is smaller than the variable count"};

    DiophantineSystem sys = doc.system;
    const bool shift = cfg.shift_positive || doc.shift_positive;
    if (shift) sys = sys.shifted_positive();

    std::string rendered;
    if (system) {
        // Each factor (SH_i × SH_i) + 1 in its own parentheses.
        for (const SH& f : system_factors(sys, sigma)) {
            if (!rendered.empty()) rendered += "*";
            rendered += "(" + pretty(f) + ")";
        }
    } else {
        // Several equations without --system compile to one history each.
        for (const auto& eq : sys.equations()) {
            if (!rendered.empty()) rendered += "\n";
            rendered += pretty(compile_equation(eq, sigma));
        }
    }

    if (cfg.json()) {
        json mapping = json::object();
        for (std::size_t j = 0; j < m; ++j) mapping[doc.variables[j]] = std::string(1, (*sigma)[j]);
        json histories = json::array();
        if (system)
            histories.push_back(rendered);
        else
            for (const auto& eq : sys.equations()) histories.push_back(pretty(compile_equation(eq, sigma)));
        emit_json(out, {{"command", "compile"},
                        {"histories", histories},
                        {"mapping", mapping},
                        {"system", system},
                        {"shift_positive", shift}});
    } else {
        out << rendered << '\n';
        for (std::size_t j = 0; j < m; ++j) out << doc.variables[j] << " -> " << (*sigma)[j] << '\n';
    }
    return kOk;
}

int report_search(const Config& cfg, const std::string& mode, const SearchReport& r, std::size_t radius,
                  std::ostream& out) {
    if (cfg.json()) {
        emit_json(out, {{"command", "search"},
                        {"mode", mode},
                        {"outcome", r.found() ? "found" : "exhausted"},
                        {"witness", word_or_null(r.witness)},
                        {"radius", radius},
                        {"nodes_explored", r.nodes_explored},
                        {"elapsed_ms", millis(r.elapsed)}});
    } else if (r.found()) {
        out << display(*r.witness) << '\n';
    } else {
        out << "exhausted up to " << radius << '\n';
    }
    return r.found() ? kOk : kNegative;
}

std::vector<std::pair<std::string, std::string>> split_constraints(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        auto eq = item.rfind('=');
        if (eq == std::string::npos) throw Failure{kParseError, "constraint \"" + item + "\" lacks '=<integer>'"};
        out.emplace_back(item.substr(0, eq), item.substr(eq + 1));
    }
    if (out.empty()) throw Failure{kParseError, "no constraints given"};
    return out;
}

int cmd_preimage(const Config& cfg, const std::string& text, std::ostream& out) {
    auto parts = split_constraints(text);
    std::vector<std::string> texts;
    for (auto& [lhs, rhs] : parts) texts.push_back(lhs);
    const Alphabet sigma = resolve_alphabet(cfg, texts);

    std::vector<PreimageConstraint> constraints;
    for (auto& [lhs, rhs] : parts) {
        auto b = rhs.find_first_not_of(" \t"), e = rhs.find_last_not_of(" \t");
        std::string num = b == std::string::npos ? "" : rhs.substr(b, e - b + 1);
        BigInt target;
        if (num.empty() || target.set_str(num[0] == '+' ? num.substr(1) : num, 10) != 0)
            throw Failure{kParseError, "constraint target \"" + rhs + "\" is not an integer"};
        constraints.push_back({parse_or_fail(lhs, sigma, "constraint"), target});
    }

    const auto r = search_preimage(constraints, sigma, cfg.max_len, true, cfg.search_options());
    if (cfg.json()) {
        emit_json(out, {{"command", "search"},
                        {"mode", "preimage"},
                        {"outcome", r.words.empty() ? "exhausted" : "found"},
                        {"witnesses", r.words},
                        {"radius", cfg.max_len},
                        {"nodes_explored", r.nodes_explored},
                        {"elapsed_ms", millis(r.elapsed)}});
    } else if (r.words.empty()) {
        out << "exhausted up to " << cfg.max_len << '\n';
    } else {
        for (const Word& w : r.words) out << display(w) << '\n';
    }
    return r.words.empty() ? kNegative : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Exact toolkit for subword histories", "swh"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--alphabet", cfg.alphabet, "Alphabet letters in order, e.g. ab");
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--max-len", cfg.max_len, "Word-length radius for searches");
    app.add_option("--max-total", cfg.max_total, "Parikh-total radius for the parikh search");
    app.add_flag("--strict", cfg.strict, "SIT: also count zero values as violations");
    app.add_flag("--shift-positive", cfg.shift_positive, "compile: substitute x <- x + 1");
    app.add_flag("--every-letter", cfg.every_letter, "search: accept only words containing every letter");
    app.add_option("--threads", cfg.threads, "Search worker threads")->check(CLI::Range(1u, 256u));

    std::string word, sh_text, lhs, rhs, path, constraints, predicate = "zero";
    bool degree = false, system = false;

    auto* eval = app.add_subcommand("eval", "Value of a history in a word");
    eval->add_option("--word", word, "The word (empty string for the empty word)")->required();
    eval->add_option("--sh", sh_text, "The subword history")->required();

    auto* lin = app.add_subcommand("linearize", "Equivalent product-free history");
    lin->add_option("--sh", sh_text, "The subword history")->required();
    lin->add_flag("--degree", degree, "Print the degree instead");

    auto* equiv = app.add_subcommand("equiv", "Decide equivalence of two histories");
    equiv->add_option("lhs", lhs, "First history")->required();
    equiv->add_option("rhs", rhs, "Second history")->required();

    auto* compile = app.add_subcommand("compile", "Compile a Diophantine JSON document");
    compile->add_option("path", path, "JSON file ('-' for stdin)")->required();
    compile->add_flag("--system", system, "Combine all equations into one history");

    auto* search = app.add_subcommand("search", "Bounded searches");
    search->require_subcommand(1);
    search->fallthrough();
    auto* ses = search->add_subcommand("ses", "Word where two histories agree");
    ses->add_option("--lhs", lhs)->required();
    ses->add_option("--rhs", rhs)->required();
    auto* sit = search->add_subcommand("sit", "Word where a history is negative (non-positive with --strict)");
    sit->add_option("--sh", sh_text)->required();
    auto* pre = search->add_subcommand("preimage", "All words meeting value constraints");
    pre->add_option("--constraints", constraints, "Semicolon-separated <sh>=<integer>")->required();
    auto* par = search->add_subcommand("parikh", "Parikh-vector search for letter-restricted histories");
    par->add_option("--sh", sh_text)->required();
    par->add_option("--predicate", predicate)->check(CLI::IsMember({"zero", "negative", "nonpositive"}));
    for (auto* sub : {ses, sit, pre, par}) sub->fallthrough();
    for (auto* sub : {eval, lin, equiv, compile}) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    }

    try {
        if (*eval) return cmd_eval(cfg, word, sh_text, out);
        if (*lin) return cmd_linearize(cfg, sh_text, degree, out);
        if (*equiv) return cmd_equiv(cfg, lhs, rhs, out);
        if (*compile) return cmd_compile(cfg, path, system, out);
        if (*ses) {
            const Alphabet sigma = resolve_alphabet(cfg, {lhs, rhs});
            auto r = search_ses(parse_or_fail(lhs, sigma, "--lhs"), parse_or_fail(rhs, sigma, "--rhs"), sigma,
                                cfg.max_len, cfg.search_options());
            return report_search(cfg, "ses", r, cfg.max_len, out);
        }
        if (*sit) {
            const Alphabet sigma = resolve_alphabet(cfg, {sh_text});
            auto r = search_sit_counterexample(parse_or_fail(sh_text, sigma, "--sh"), sigma, cfg.max_len, cfg.strict,
                                               cfg.search_options());
            return report_search(cfg, "sit", r, cfg.max_len, out);
        }
        if (*pre) return cmd_preimage(cfg, constraints, out);
        if (*par) {
            const Alphabet sigma = resolve_alphabet(cfg, {sh_text});
            const Predicate p = predicate == "negative"      ? Predicate::Negative
                                : predicate == "nonpositive" ? Predicate::NonPositive
                                                             : Predicate::Zero;
            try {
                auto r = search_parikh(parse_or_fail(sh_text, sigma, "--sh"), sigma, p, cfg.max_total, cfg.search_options());
                return report_search(cfg, "parikh", r, cfg.max_total, out);
            } catch (const NotLetterRestricted& e) {
                throw Failure{kModeMisuse, e.what()};
            }
        }
    } catch (const Failure& f) {
        err << "error: " << f.message << '\n';
        return f.code;
    } catch (const AlphabetError& e) {
        err << "error: " << e.what() << '\n';
        return kAlphabetMismatch;
    }
    err << "error: no command\n";
    return kParseError;
}

}  // namespace swh::cli
