#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "plethyon/shapes.hpp"
#include "plethyon/textio.hpp"

#include <random>

using namespace plethyon;

namespace {

Lambda vec(const std::vector<std::int64_t>& v) { return Lambda::from_vector(v); }

Word word(const std::vector<std::int64_t>& w) {
    Word out;
    for (std::int64_t x : w) out.letters.push_back({0, 0, x});
    return out;
}

Lambda random_lambda(std::mt19937& rng, int max_part, int max_count) {
    std::uniform_int_distribution<int> part(1, max_part);
    std::uniform_int_distribution<int> count(1, max_count);
    Lambda l;
    int n = count(rng);
    for (int i = 0; i < n; ++i) l.add({0, 0, part(rng)}, 1);
    return l;
}

}  // namespace

TEST_CASE("factorial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(4) == 24);
    CHECK(factorial(20) == Int("2432902008176640000"));
    for (int n = 0; n <= 25; ++n) CHECK(factorial(n) == oracles::fact(n));
    CHECK_THROWS_AS(factorial(-1), std::domain_error);
}

TEST_CASE("aut orders on the classical base") {
    auto base = classical_base();
    CHECK(aut_order(*base, vec({1, 2}), AutFlavor::exponential) == 2);
    CHECK(aut_order(*base, vec({1, 2}), AutFlavor::symmetric_inner) == 8);
    CHECK(aut_order(*base, Lambda{}, AutFlavor::exponential) == 1);
    CHECK(aut_order(*base, Lambda{}, AutFlavor::symmetric_inner) == 1);
    CHECK(aut_order(*base, vec({0, 3, 1, 2}), AutFlavor::symmetric_inner) ==
          oracles::autiv({0, 3, 1, 2}));
    CHECK(aut_order(*base, vec({0, 3, 1, 2}), AutFlavor::exponential) ==
          oracles::lambda_factorial({0, 3, 1, 2}));
}

TEST_CASE("symmetric aut orders need sizes") {
    auto z2 = z2_base();
    Lambda l = Lambda::single(z2->identity(0));
    CHECK(aut_order(*z2, l, AutFlavor::exponential) == 1);
    CHECK_THROWS_AS(aut_order(*z2, l, AutFlavor::symmetric_inner), unsupported_flavor_error);
}

TEST_CASE("word aut orders") {
    auto base = classical_base();
    CHECK(word_aut_order(*base, word({3, 2, 4, 2, 2, 4}), AutFlavor::symmetric_inner) == 27648);
    CHECK(word_aut_order(*base, word({3, 2, 4, 2, 2, 4}), AutFlavor::exponential) == 1);
    CHECK(word_aut_order(*base, word({1}), AutFlavor::symmetric_inner) == 1);
    CHECK(word_aut_order(*base, word({3, 2, 4, 2, 2, 4}), AutFlavor::symmetric_inner) ==
          oracles::word_factorial({3, 2, 4, 2, 2, 4}));
}

TEST_CASE("verschiebung on the classical base") {
    auto base = classical_base();
    CHECK(verschiebung(*base, {0, 0, 2}, vec({0, 0, 1})) == vec({0, 0, 0, 0, 0, 1}));
    CHECK(verschiebung(*base, base->identity(0), vec({0, 3, 1, 2})) == vec({0, 3, 1, 2}));

    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Lambda l = random_lambda(rng, 5, 4);
        std::int64_t k = std::uniform_int_distribution<std::int64_t>(1, 4)(rng);
        // oracle: index shift on the vector form
        std::vector<std::int64_t> v;
        for (const auto& [a, m] : l.entries()) {
            if (std::size_t(a.label) > v.size()) v.resize(std::size_t(a.label), 0);
            v[std::size_t(a.label) - 1] = m;
        }
        CHECK(verschiebung(*base, {0, 0, k}, l) == vec(oracles::verschiebung_vec(k, v)));
        CHECK(verschiebung(*base, {0, 0, k}, l).size() == l.size());
    }
}

TEST_CASE("verschiebung over (N,+) shifts the support") {
    auto base = natplus_base();
    Lambda l;
    l.add({0, 0, 1}, 1);
    l.add({0, 0, 3}, 1);
    Lambda shifted = verschiebung(*base, {0, 0, 2}, l);
    Lambda expect;
    expect.add({0, 0, 3}, 1);
    expect.add({0, 0, 5}, 1);
    CHECK(shifted == expect);
    CHECK(verschiebung(*base, base->identity(0), l) == l);
}

TEST_CASE("verschiebung functoriality") {
    std::mt19937 rng(11);
    for (auto base : {classical_base(), natplus_base()}) {
        for (int trial = 0; trial < 100; ++trial) {
            Lambda l = random_lambda(rng, 4, 4);
            if (base->name() == "natplus") {
                Lambda shiftable;  // natplus arrows include 0
                for (const auto& [a, mult] : l.entries())
                    shiftable.add({0, 0, a.label - 1}, mult);
                l = shiftable;
            }
            std::int64_t m = std::uniform_int_distribution<std::int64_t>(1, 3)(rng);
            std::int64_t n = std::uniform_int_distribution<std::int64_t>(1, 3)(rng);
            Arrow am{0, 0, m}, an{0, 0, n};
            CHECK(verschiebung(*base, am, verschiebung(*base, an, l)) ==
                  verschiebung(*base, base->compose(am, an), l));
        }
    }
}

TEST_CASE("verschiebung color mismatch") {
    auto k2 = chaotic_base(2);
    Lambda l = Lambda::single(Arrow{1, 0, 1});
    CHECK_THROWS_AS(verschiebung(*k2, Arrow{0, 0, 1}, l), color_mismatch_error);
}

TEST_CASE("verschiebung on words") {
    auto base = classical_base();
    Word w = word({3, 1});
    CHECK(verschiebung_word(*base, {0, 0, 2}, w) == word({6, 2}));
    CHECK(verschiebung_word(*base, base->identity(0), w) == w);
    CHECK(verschiebung_word(*base, {0, 0, 3}, word({2})) == word({6}));
}

TEST_CASE("lambda_sum") {
    Lambda a = lambda_sum(vec({0, 0, 0, 1}), vec({0, 0, 0, 0, 0, 1}));
    a = lambda_sum(a, vec({0, 0, 0, 0, 0, 1}));
    CHECK(a == vec({0, 0, 0, 1, 0, 2}));
    CHECK(lambda_sum(vec({1}), Lambda{}) == vec({1}));
    CHECK(lambda_sum(vec({1}), vec({1})) == vec({2}));
    CHECK(lambda_sum(vec({1, 2}), vec({2})).size() == vec({1, 2}).size() + vec({2}).size());
}

TEST_CASE("aut multiplicativity on disjoint supports, divisibility in general") {
    auto base = classical_base();
    std::mt19937 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        Lambda a = random_lambda(rng, 6, 3);
        Lambda b = random_lambda(rng, 6, 3);
        for (AutFlavor fl : {AutFlavor::symmetric_inner, AutFlavor::exponential}) {
            Int lhs = aut_order(*base, lambda_sum(a, b), fl);
            Int bound = aut_order(*base, a, fl) * aut_order(*base, b, fl) *
                        factorial(a.size() + b.size());
            CHECK(bound % lhs == 0);
            bool disjoint = true;
            for (const auto& [arrow, m] : a.entries())
                if (b.mult_of(arrow) > 0) disjoint = false;
            if (disjoint)
                CHECK(lhs == aut_order(*base, a, fl) * aut_order(*base, b, fl));
        }
    }
}

TEST_CASE("factorizations contain the trivial pairs") {
    for (auto base : {classical_base(), natplus_base(), z2_base(), chaotic_base(2)}) {
        for (int c = 0; c < base->object_count(); ++c) {
            for (const Arrow& n : base->arrows_from(c, 6)) {
                auto fs = base->factorizations(n);
                bool left = false, right = false;
                for (const auto& [m, k] : fs) {
                    if (base->is_identity(m) && k == n) left = true;
                    if (m == n && base->is_identity(k)) right = true;
                }
                CHECK(left);
                CHECK(right);
            }
        }
    }
}

TEST_CASE("classical factorizations are ordered divisor pairs") {
    auto base = classical_base();
    for (std::int64_t n = 1; n <= 60; ++n) {
        std::int64_t divisors = 0;
        for (std::int64_t d = 1; d <= n; ++d)
            if (n % d == 0) ++divisors;
        CHECK(std::int64_t(base->factorizations({0, 0, n}).size()) == divisors);
    }
}

TEST_CASE("text round-trips on canonical forms") {
    auto base = classical_base();
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        Lambda l = random_lambda(rng, 6, 5);
        CHECK(parse_lambda(*base, lambda_text(*base, l)) == l);
        Word w;
        int len = std::uniform_int_distribution<int>(1, 5)(rng);
        for (int i = 0; i < len; ++i)
            w.letters.push_back({0, 0, std::uniform_int_distribution<std::int64_t>(1, 6)(rng)});
        CHECK(parse_word(*base, word_text(*base, w)) == w);
    }
    // trailing zeros trim away
    CHECK(lambda_text(*base, parse_lambda(*base, "(0,1,0,0)")) == "(0,1)");
    CHECK(parse_lambda(*base, "()") == Lambda{});

    auto k2 = colored_classical_base(2);
    Lambda colored;
    colored.add({0, 1, 4}, 2);
    colored.add({0, 0, 1}, 1);
    CHECK(parse_lambda(*k2, lambda_text(*k2, colored)) == colored);
    Generator g{0, Index::of(colored)};
    CHECK(parse_generator(*k2, IndexKind::lambda, generator_text(*k2, g)) == g);
}

TEST_CASE("unit generators") {
    auto base = classical_base();
    Generator u = unit_generator(*base, 0, IndexKind::lambda);
    CHECK(u.idx.lam == vec({1}));
    Generator uw = unit_generator(*base, 0, IndexKind::word);
    CHECK(uw.idx.word == word({1}));
}
