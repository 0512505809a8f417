#include "doctest.h"
#include "support.hpp"
#include "swh/eval.hpp"
#include "swh/parser.hpp"

using namespace swh;

TEST_CASE("count_scattered examples") {
    CHECK(count_scattered("aab", "ab") == 2);
    CHECK(count_scattered("aab", "a") == 2);
    CHECK(count_scattered("aab", "b") == 1);
    CHECK(count_scattered("", "") == 1);
    CHECK(count_scattered("abba", "") == 1);
    CHECK(count_scattered("abab", "ab") == 3);
    CHECK(count_scattered("aababb", "ab") == 8);
    CHECK(count_scattered("ab", "abc") == 0);
    CHECK(count_scattered("", "a") == 0);
}

TEST_CASE("count_scattered agrees with index enumeration") {
    const auto ws = testing::all_words("ab", 8);
    const auto us = testing::all_words("ab", 4);
    std::size_t mismatches = 0;
    for (const auto& w : ws)
        for (const auto& u : us)
            if (count_scattered(w, u) != testing::brute_count(w, u)) ++mismatches;
    CHECK(mismatches == 0);
}

TEST_CASE("binomial identity on unary words") {
    for (unsigned n = 0; n <= 20; ++n)
        for (unsigned k = 0; k <= n; ++k) {
            BigInt expected;
            mpz_bin_uiui(expected.get_mpz_t(), n, k);
            CHECK(count_scattered(std::string(n, 'a'), std::string(k, 'a')) == expected);
        }
}

TEST_CASE("counts grow past 64 bits exactly") {
    // C(200, 100) needs ~196 bits.
    BigInt expected;
    mpz_bin_uiui(expected.get_mpz_t(), 200, 100);
    CHECK(count_scattered(std::string(200, 'a'), std::string(100, 'a')) == expected);
}

TEST_CASE("new_state computes the prefix closure") {
    std::vector<Word> ab{"ab"};
    auto s = new_state(ab);
    CHECK(s.words() == std::vector<Word>{"", "a", "ab"});
    CHECK(s.count("") == 1);
    CHECK(s.count("a") == 0);
    CHECK(s.count("ab") == 0);

    auto empty = new_state({});
    CHECK(empty.words() == std::vector<Word>{""});
    CHECK(empty.count("") == 1);

    std::vector<Word> aba{"a", "ba"};
    auto t = new_state(aba);
    CHECK(t.words() == std::vector<Word>{"", "a", "b", "ba"});
    CHECK(t.parent(static_cast<std::size_t>(t.index_of("ba"))) == t.index_of("b"));
    CHECK_THROWS_AS(t.count("ab"), std::out_of_range);
}

TEST_CASE("extend follows the scattered-count recurrence") {
    std::vector<Word> ab{"ab"};
    auto s = extend(extend(new_state(ab), 'a'), 'a');
    auto t = extend(s, 'b');
    CHECK(t.count("") == 1);
    CHECK(t.count("a") == 2);
    CHECK(t.count("ab") == 2);
    // s is untouched by extend.
    CHECK(s.count("ab") == 0);

    std::vector<Word> abb{"ab", "b"};
    auto u = extend(new_state(abb), 'b');
    CHECK(u.count("b") == 1);
    CHECK(u.count("a") == 0);
    CHECK(u.count("ab") == 0);

    auto v = new_state(ab);
    for (char c : std::string("aabab")) v = extend(v, c);
    CHECK(v.count("ab") == 5);
    CHECK(v.count("a") == 3);
    v = extend(v, 'b');
    CHECK(v.count("ab") == 8);
}

TEST_CASE("incremental counts match count_scattered, and pop undoes push") {
    std::mt19937_64 rng(5);
    const auto us = testing::all_words("abc", 3);
    EvalState state(us);
    for (int trial = 0; trial < 50; ++trial) {
        auto w = testing::random_word(rng, "abc", 10);
        EvalState s(us);
        for (char c : w) s.push(c);
        for (const auto& u : us) CHECK(s.count(u) == count_scattered(w, u));
        while (s.current_length() > 0) s.pop();
        for (const auto& u : us) CHECK(s.count(u) == (u.empty() ? 1 : 0));
    }
    CHECK_THROWS_AS(state.pop(), std::logic_error);
}

TEST_CASE("evaluate examples") {
    Alphabet ab("ab"), abc("abc");
    CHECK(evaluate(parse("a*b", ab), "ababba") == 9);
    CHECK(evaluate(parse("ab + ba", ab), "ababba") == 9);
    CHECK(evaluate(power(0, mono("a")), "aaaa") == 1);
    CHECK(evaluate(parse("abb + 2*c + 3", abc), "") == 3);
    CHECK(evaluate(parse("(a - b)^3", ab), "b") == -1);
    CHECK(evaluate(parse("-4*ab", ab), "aab") == -8);
}

TEST_CASE("evaluate is a homomorphism and matches the brute-force tree walk") {
    std::mt19937_64 rng(99);
    testing::HistoryGen gen{rng};
    gen.max_mono = 3;
    for (int i = 0; i < 300; ++i) {
        SH x = gen.bounded(3, 8), y = gen.bounded(3, 8);
        auto w = testing::random_word(rng, "ab", 8);
        BigInt vx = evaluate(x, w), vy = evaluate(y, w);
        CHECK(vx == testing::brute_evaluate(*x, w));
        CHECK(evaluate(add(x, y), w) == vx + vy);
        CHECK(evaluate(mul(x, y), w) == vx * vy);
        CHECK(evaluate(neg(x), w) == -vx);
    }
}

TEST_CASE("a*b and ab+ba agree on every word up to length 8") {
    Alphabet ab("ab");
    auto lhs = parse("a*b", ab), rhs = parse("ab + ba", ab);
    for (const auto& w : testing::all_words("ab", 8)) CHECK(evaluate(lhs, w) == evaluate(rhs, w));
}

TEST_CASE("shared subtrees are evaluated once") {
    // 2^40 copies of the leaf if expanded as a tree.
    SH x = add(mono("a"), lambda());
    for (int i = 0; i < 40; ++i) x = add(x, x);
    BigInt expected = BigInt(1) << 40;
    CHECK(evaluate(x, "") == expected);
    CHECK(evaluate(x, "aa") == 3 * expected);
}

TEST_CASE("evaluate_parikh needs letter-restricted input") {
    Alphabet ab("ab");
    std::vector<BigInt> n{3, 2};
    CHECK(evaluate_parikh(*parse("a^2*b - 2*b + 1", ab), ab, n) == 15);
    CHECK_THROWS_AS(evaluate_parikh(*parse("ab", ab), ab, n), std::invalid_argument);
}
