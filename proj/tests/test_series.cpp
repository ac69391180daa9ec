#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "plethyon/series.hpp"
#include "plethyon/textio.hpp"

#include <nlohmann/json.hpp>

#include <random>

using namespace plethyon;

namespace {

Series rational_series(BasePtr base, std::int64_t D, std::mt19937& rng, int terms) {
    Series s = series_zero(base, 0, IndexKind::lambda, RingKind::rational, D);
    std::vector<Arrow> arrows = base->arrows_from(0, 3);
    std::uniform_int_distribution<std::size_t> pick(0, arrows.size() - 1);
    std::uniform_int_distribution<int> count(1, int(D));
    std::uniform_int_distribution<int> num(-4, 4);
    for (int t = 0; t < terms; ++t) {
        Lambda l;
        int n = count(rng);
        for (int i = 0; i < n; ++i) l.add(arrows[pick(rng)], 1);
        s.add_term(Index::of(l), Rational(num(rng)));
    }
    return s;
}

Series unit_series(BasePtr base, std::int64_t D) {
    return series_variable(base, base->identity(0), IndexKind::lambda, RingKind::rational, D);
}

Rational rat_coeff(const Series& s, const Index& key) {
    auto r = coefficient(s, key).as_rational();
    REQUIRE(r.has_value());
    return *r;
}

}  // namespace

TEST_CASE("ordinary substitution, one variable") {
    auto triv = chaotic_base(1);
    // G = x^2, F = x + x^2, D = 3  ->  x^2 + 2x^3
    Series g = parse_series_expr(triv, IndexKind::lambda, 3, "x1^2");
    Series f = parse_series_expr(triv, IndexKind::lambda, 3, "x1+x1^2");
    Series h = substitute_ordinary(g, {f}, 3);
    Arrow e = triv->identity(0);
    CHECK(rat_coeff(h, Index::of(Lambda::single(e, 2))) == 1);
    CHECK(rat_coeff(h, Index::of(Lambda::single(e, 3))) == 2);
    CHECK(h.terms.size() == 2);
}

TEST_CASE("ordinary substitution, identity tuple and two variables") {
    auto k2 = chaotic_base(2);
    std::mt19937 rng(3);
    // identity substitution: x -> x, y -> y
    Series x = series_variable(k2, {0, 0, 1}, IndexKind::lambda, RingKind::rational, 2);
    Series y = series_variable(k2, {0, 1, 1}, IndexKind::lambda, RingKind::rational, 2);
    Series g = series_zero(k2, 0, IndexKind::lambda, RingKind::rational, 2);
    Lambda xy;
    xy.add({0, 0, 1}, 1);
    xy.add({0, 1, 1}, 1);
    g.add_term(Index::of(xy), Rational(3));
    g.add_term(Index::of(Lambda::single({0, 1, 1}, 2)), Rational(-2));
    CHECK(substitute_ordinary(g, {x, y}, 2).terms == g.terms);

    // G = y with F = (x + y, x): direct replacement gives x
    Series xpy = series_add(x, y);
    Series h = substitute_ordinary(series_variable(k2, {0, 1, 1}, IndexKind::lambda,
                                                   RingKind::rational, 2),
                                   {xpy, x}, 2);
    CHECK(h.terms.size() == 1);
    CHECK(rat_coeff(h, Index::of(Lambda::single({0, 0, 1}))) == 1);

    CHECK_THROWS(substitute_ordinary(g, {x}, 2));  // arity mismatch
}

TEST_CASE("plethystic shift") {
    auto base = classical_base();
    Series f = parse_series_expr(base, IndexKind::lambda, 6, "x1+x3");
    Series shifted = plethystic_shift(f, {0, 0, 2});
    CHECK(rat_coeff(shifted, Index::of(Lambda::from_vector({0, 1}))) == 1);
    CHECK(rat_coeff(shifted, Index::of(Lambda::from_vector({0, 0, 0, 0, 0, 1}))) == 1);
    CHECK(shifted.terms.size() == 2);

    CHECK(plethystic_shift(f, base->identity(0)).terms == f.terms);

    Series m = parse_series_expr(base, IndexKind::lambda, 6, "x1*x2");
    Series ms = plethystic_shift(m, {0, 0, 3});
    Lambda key;
    key.add({0, 0, 3}, 1);
    key.add({0, 0, 6}, 1);
    CHECK(rat_coeff(ms, Index::of(key)) == 1);

    std::mt19937 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        Series s = rational_series(base, 4, rng, 4);
        Arrow a{0, 0, std::uniform_int_distribution<std::int64_t>(1, 3)(rng)};
        Arrow b{0, 0, std::uniform_int_distribution<std::int64_t>(1, 3)(rng)};
        CHECK(plethystic_shift(plethystic_shift(s, b), a).terms ==
              plethystic_shift(s, base->compose(a, b)).terms);
    }
}

TEST_CASE("plethystic substitution basics") {
    auto base = classical_base();
    Series g = parse_series_expr(base, IndexKind::lambda, 6, "x2");
    Series f = parse_series_expr(base, IndexKind::lambda, 6, "x1+x3");
    Series h = substitute_plethystic(g, f, 6);
    CHECK(series_text(h) == "x2 + x6");

    // unit laws
    std::mt19937 rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        Series s = rational_series(base, 4, rng, 5);
        CHECK(substitute_plethystic(s, unit_series(base, 4), 4).terms == s.terms);
        CHECK(substitute_plethystic(unit_series(base, 4), s, 4).terms ==
              series_truncate(s, 4).terms);
    }

    // G = x1^2, F = x1 + x2, D = 2
    Series g2 = parse_series_expr(base, IndexKind::lambda, 2, "x1^2");
    Series f2 = parse_series_expr(base, IndexKind::lambda, 2, "x1+x2");
    Series h2 = substitute_plethystic(g2, f2, 2);
    CHECK(rat_coeff(h2, Index::of(Lambda::from_vector({2}))) == 1);
    Lambda k12;
    k12.add({0, 0, 1}, 1);
    k12.add({0, 0, 2}, 1);
    CHECK(rat_coeff(h2, Index::of(k12)) == 2);
    CHECK(rat_coeff(h2, Index::of(Lambda::from_vector({0, 2}))) == 1);
}

TEST_CASE("plethystic substitution is associative at truncation") {
    std::mt19937 rng(41);
    for (auto base : {classical_base(), natplus_base()}) {
        for (int trial = 0; trial < 12; ++trial) {
            Series f = rational_series(base, 4, rng, 3);
            Series g = rational_series(base, 4, rng, 3);
            Series h = rational_series(base, 4, rng, 3);
            Series lhs = substitute_plethystic(substitute_plethystic(h, g, 4), f, 4);
            Series rhs = substitute_plethystic(h, substitute_plethystic(g, f, 4), 4);
            CHECK(lhs.terms == rhs.terms);
        }
    }
}

TEST_CASE("substitution is linear in the outer series") {
    auto base = classical_base();
    std::mt19937 rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        Series g1 = rational_series(base, 4, rng, 3);
        Series g2 = rational_series(base, 4, rng, 3);
        Series f = rational_series(base, 4, rng, 3);
        Rational a(std::uniform_int_distribution<int>(-3, 3)(rng));
        Rational b(std::uniform_int_distribution<int>(-3, 3)(rng));
        Series lhs = substitute_plethystic(
            series_add(series_scale(g1, a), series_scale(g2, b)), f, 4);
        Series rhs = series_add(series_scale(substitute_plethystic(g1, f, 4), a),
                                series_scale(substitute_plethystic(g2, f, 4), b));
        CHECK(lhs.terms == rhs.terms);
    }
}

TEST_CASE("truncation coherence") {
    auto base = classical_base();
    std::mt19937 rng(47);
    for (int trial = 0; trial < 20; ++trial) {
        Series g = rational_series(base, 6, rng, 4);
        Series f = rational_series(base, 6, rng, 4);
        Series lo = substitute_plethystic(g, f, 3);
        Series hi = substitute_plethystic(g, f, 6);
        for (const auto& [k, c] : lo.terms) CHECK(coefficient(hi, k) == c);
        for (const auto& [k, c] : hi.terms)
            if (k.size() <= 3) CHECK(coefficient(lo, k) == c);
    }
}

TEST_CASE("plethysm over the one-arrow base is ordinary substitution") {
    auto triv = chaotic_base(1);
    std::mt19937 rng(53);
    for (int trial = 0; trial < 20; ++trial) {
        Series g = rational_series(triv, 4, rng, 3);
        Series f = rational_series(triv, 4, rng, 3);
        CHECK(substitute_plethystic(g, f, 4).terms == substitute_ordinary(g, {f}, 4).terms);
    }
}

TEST_CASE("coefficient readback and truncation contract") {
    auto base = classical_base();
    Series s = parse_series_expr(base, IndexKind::lambda, 6, "x2+x6");
    CHECK(rat_coeff(s, Index::of(Lambda::from_vector({0, 1}))) == 1);
    CHECK(rat_coeff(s, Index::of(Lambda::from_vector({1}))) == 0);
    Lambda big;
    big.add({0, 0, 1}, 7);
    CHECK_THROWS_AS(coefficient(s, Index::of(big)), truncation_error);
}

TEST_CASE("generic series enumerates by weight and divides by aut") {
    auto base = classical_base();
    Series f = generic_series('f', base, 0, IndexKind::lambda, AutFlavor::symmetric_inner,
                              RingKind::commutative, 2);
    CHECK(f.terms.size() == 3);
    auto term = [&](const std::vector<std::int64_t>& v) {
        Poly p = coefficient(f, Index::of(Lambda::from_vector(v)));
        REQUIRE(p.terms().size() == 1);
        return p.terms().begin()->second;
    };
    CHECK(term({1}) == 1);
    CHECK(term({2}) == Rational(1, 2));
    CHECK(term({0, 1}) == Rational(1, 2));

    Series e = generic_series('f', base, 0, IndexKind::lambda, AutFlavor::exponential,
                              RingKind::commutative, 2);
    CHECK(coefficient(e, Index::of(Lambda::from_vector({2}))).terms().begin()->second ==
          Rational(1, 2));
    CHECK_THROWS(generic_series('f', base, 0, IndexKind::lambda, AutFlavor::symmetric_inner,
                                RingKind::commutative, 0));
}

TEST_CASE("noncommutative coefficient order follows the factors") {
    auto base = classical_base();
    Series a = series_zero(base, 0, IndexKind::word, RingKind::noncommutative, 4);
    Generator ga{0, Index::of(Word{{Arrow{0, 0, 1}}})};
    Generator gb{0, Index::of(Word{{Arrow{0, 0, 2}}})};
    a.add_term(Index::of(Word{{Arrow{0, 0, 1}}}),
               Poly::symbol(RingKind::noncommutative, {'f', ga}));
    Series b = series_zero(base, 0, IndexKind::word, RingKind::noncommutative, 4);
    b.add_term(Index::of(Word{{Arrow{0, 0, 2}}}),
               Poly::symbol(RingKind::noncommutative, {'f', gb}));
    Series ab = series_mul(a, b);
    Series ba = series_mul(b, a);
    Word wab{{Arrow{0, 0, 1}, Arrow{0, 0, 2}}};
    Word wba{{Arrow{0, 0, 2}, Arrow{0, 0, 1}}};
    Poly pab = coefficient(ab, Index::of(wab));
    Poly pba = coefficient(ba, Index::of(wba));
    CHECK(pab.terms().begin()->first == Monomial{{'f', ga}, {'f', gb}});
    CHECK(pba.terms().begin()->first == Monomial{{'f', gb}, {'f', ga}});
}

TEST_CASE("series JSON round-trip") {
    auto base = classical_base();
    std::mt19937 rng(59);
    for (int trial = 0; trial < 20; ++trial) {
        Series s = rational_series(base, 5, rng, 4);
        Series back = parse_series_json(series_json(s));
        CHECK(back.terms == s.terms);
        CHECK(back.D == s.D);
    }
}
