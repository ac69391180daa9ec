#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "plethyon/operad.hpp"

#include <random>

using namespace plethyon;

namespace {

TupleOperation tup(const std::vector<std::int64_t>& xs) {
    TupleOperation t;
    for (std::int64_t x : xs) t.entries.push_back({0, 0, x});
    return t;
}

}  // namespace

TEST_CASE("giraudo full composition") {
    auto nat = classical_base();
    CHECK(giraudo_full_compose(*nat, tup({5, 9}), {tup({2, 3}), tup({4, 7})}) ==
          tup({10, 15, 36, 63}));

    // identity tuple with singleton inners
    TupleOperation ids = tup({1, 1, 1});
    CHECK(giraudo_full_compose(*nat, ids, {tup({4}), tup({6}), tup({9})}) == tup({4, 6, 9}));

    auto plus = natplus_base();
    CHECK(giraudo_full_compose(*plus, tup({1, 2}), {tup({0, 3}), tup({4})}) == tup({1, 4, 6}));

    CHECK_THROWS(giraudo_full_compose(*nat, tup({5, 9}), {tup({2, 3})}));
}

TEST_CASE("giraudo partial composition") {
    auto nat = classical_base();
    CHECK(giraudo_partial_compose(*nat, tup({2, 3}), 1, tup({5, 9})) == tup({10, 18, 3}));
    CHECK(giraudo_partial_compose(*nat, tup({2, 3}), 2, tup({1})) == tup({2, 3}));
    auto plus = natplus_base();
    CHECK(giraudo_partial_compose(*plus, tup({2, 3}), 2, tup({5, 9})) == tup({2, 8, 12}));
    CHECK_THROWS_AS(giraudo_partial_compose(*nat, tup({2, 3}), 3, tup({5})), std::out_of_range);
    CHECK(giraudo_partial_compose(*nat, tup({2, 3}), 1, tup({5, 9})).arity() == 2 + 2 - 1);
}

TEST_CASE("full composition equals iterated partial composition") {
    auto nat = classical_base();
    std::mt19937 rng(13);
    std::uniform_int_distribution<std::int64_t> el(1, 5);
    std::uniform_int_distribution<int> len(1, 3);
    for (int trial = 0; trial < 100; ++trial) {
        int k = len(rng);
        TupleOperation x;
        std::vector<TupleOperation> inners;
        for (int i = 0; i < k; ++i) {
            x.entries.push_back({0, 0, el(rng)});
            TupleOperation y;
            int m = len(rng);
            for (int j = 0; j < m; ++j) y.entries.push_back({0, 0, el(rng)});
            inners.push_back(y);
        }
        TupleOperation full = giraudo_full_compose(*nat, x, inners);
        // right-to-left partial composition keeps earlier indices valid
        TupleOperation acc = x;
        for (int i = k - 1; i >= 0; --i)
            acc = giraudo_partial_compose(*nat, acc, i + 1, inners[std::size_t(i)]);
        CHECK(full == acc);
        // left-to-right with index shifts
        TupleOperation acc2 = x;
        int shift = 0;
        for (int i = 0; i < k; ++i) {
            acc2 = giraudo_partial_compose(*nat, acc2, i + 1 + shift, inners[std::size_t(i)]);
            shift += inners[std::size_t(i)].arity() - 1;
        }
        CHECK(full == acc2);
    }
}

TEST_CASE("intermediate categories of sym and ass") {
    auto sym = sym_operad(1);
    auto ass = ass_operad(1);
    IntermediateCategory ts = t_intermediate_category(*sym);
    IntermediateCategory ta = t_intermediate_category(*ass);
    CHECK(ts.base->name() == "classical");
    CHECK(ta.base->name() == "classical");
    CHECK(ts.inner == AutFlavor::symmetric_inner);
    CHECK(ta.inner == AutFlavor::exponential);
    // per-arrow automorphism orders: n! for Sym, 1 for Ass
    Arrow four{0, 0, 4};
    CHECK(aut_order(*ts.base, Lambda::single(four), ts.inner) == 24);
    CHECK(aut_order(*ta.base, Lambda::single(four), ta.inner) == 1);

    auto ass2 = ass_operad(2);
    IntermediateCategory t2 = t_intermediate_category(*ass2);
    CHECK(t2.base->object_count() == 2);
    CHECK(t2.base->compose({0, 1, 2}, {1, 0, 3}) == Arrow{0, 0, 6});
}

TEST_CASE("t_operad_compose reproduces the tuple composition") {
    auto nat = classical_base();
    TupleOperation outer = tup({5, 9});
    std::vector<TupleOperation> inners{tup({2, 3}), tup({4, 7})};
    TupleOperation got = t_operad_compose(*nat, true, outer, inners);
    TupleOperation expect = tup({10, 15, 36, 63});
    std::sort(expect.entries.begin(), expect.entries.end());
    CHECK(got == expect);

    // outer identities: disjoint union of the inners
    CHECK(t_operad_compose(*nat, false, tup({1, 1}), {tup({3, 5}), tup({2})}) == tup({3, 5, 2}));

    auto k2 = colored_classical_base(2);
    TupleOperation couter{{Arrow{0, 0, 3}, Arrow{0, 1, 2}}};
    std::vector<TupleOperation> cinners{TupleOperation{{Arrow{0, 1, 1}}},
                                        TupleOperation{{Arrow{1, 1, 4}}}};
    TupleOperation cgot = t_operad_compose(*k2, false, couter, cinners);
    CHECK(cgot == TupleOperation{{Arrow{0, 1, 3}, Arrow{0, 1, 8}}});
    CHECK_THROWS_AS(t_operad_compose(*k2, false, couter,
                                     {TupleOperation{{Arrow{1, 1, 1}}},
                                      TupleOperation{{Arrow{1, 1, 4}}}}),
                    color_mismatch_error);
}

TEST_CASE("seventeen-leaf colored composite") {
    // outer pair (3: b->b, 2: b->r) against inners of sizes (2,1 | 4):
    // composite tuple has 3*2+3*1+2*4 = 17 leaves
    auto k2 = colored_classical_base(2);
    TupleOperation outer{{Arrow{0, 0, 3}, Arrow{0, 1, 2}}};
    std::vector<TupleOperation> inners{TupleOperation{{Arrow{0, 1, 2}, Arrow{0, 0, 1}}},
                                       TupleOperation{{Arrow{1, 1, 4}}}};
    TupleOperation got = t_operad_compose(*k2, true, outer, inners);
    std::int64_t leaves = 0;
    for (const Arrow& a : got.entries) leaves += a.label;
    CHECK(leaves == 17);
    CHECK(got.arity() == 3);
}

TEST_CASE("category_to_operad of chaotic categories gives Ass_n / Sym_n") {
    for (int n : {1, 2, 3}) {
        auto from_cat_ns = category_operad(chaotic_base(n), false);
        auto ass = ass_operad(n);
        CHECK(from_cat_ns->enumerate_ops(3) == ass->enumerate_ops(3));
        auto from_cat_s = category_operad(chaotic_base(n), true);
        auto sym = sym_operad(n);
        CHECK(from_cat_s->enumerate_ops(3) == sym->enumerate_ops(3));
        for (const TupleOperation& op : sym->enumerate_ops(3))
            CHECK(from_cat_s->aut_order(op) == sym->aut_order(op));
    }
}

TEST_CASE("the arrow category gives the expected case split") {
    auto arrow = base_by_name("arrow");
    auto q = category_operad(arrow, true);
    // operations exist out of 0 toward anything; out of 1 only when all
    // inputs are 1
    for (const TupleOperation& op : q->enumerate_ops(3)) {
        int out = q->output(op);
        if (out == 1)
            for (int c : q->inputs(op)) CHECK(c == 1);
    }
    // count: out of 0, inputs are any multiset over {0,1} of size <= 3
    int from0 = 0, from1 = 0;
    for (const TupleOperation& op : q->enumerate_ops(3))
        (q->output(op) == 0 ? from0 : from1)++;
    CHECK(from0 == 2 + 3 + 4);  // multisets of sizes 1..3 over two arrows
    CHECK(from1 == 3);          // all-ones tuples of sizes 1..3
}

TEST_CASE("tuple aut orders match the shape aut orders") {
    // T(Sym)-derived tuples: aut(multiset) = autiv; T(Ass): lambda!;
    // sequences: omega! and 1
    auto sym = sym_operad(1);
    IntermediateCategory ic = t_intermediate_category(*sym);
    std::mt19937 rng(71);
    std::uniform_int_distribution<std::int64_t> el(1, 6);
    for (int trial = 0; trial < 100; ++trial) {
        int n = std::uniform_int_distribution<int>(1, 6)(rng);
        Lambda l;
        for (int i = 0; i < n; ++i) l.add({0, 0, el(rng)}, 1);
        Int inner_factor = 1;
        for (const auto& [a, m] : l.entries())
            for (std::uint32_t i = 0; i < m; ++i) inner_factor *= oracles::fact(a.label);
        CHECK(aut_order(*ic.base, l, AutFlavor::symmetric_inner) ==
              aut_order(*ic.base, l, AutFlavor::exponential) * inner_factor);
    }
}

TEST_CASE("axiom check passes for the stock instances") {
    for (const char* name : {"sym", "ass", "sym2", "ass2", "giraudo:classical",
                             "giraudo:natplus", "cat:chaotic2", "cat:arrow"}) {
        AxiomReport rep = axiom_check(*operad_by_name(name), 3);
        INFO(name);
        CHECK(rep.passed);
        CHECK(rep.checked > 0);
    }
    AxiomReport rep4 = axiom_check(*sym_operad(1), 4);
    CHECK(rep4.passed);
}

TEST_CASE("axiom check reports corruption with a witness") {
    AxiomReport rep = axiom_check(*corrupt_operad(giraudo_operad(classical_base())), 3);
    CHECK(!rep.passed);
    CHECK(!rep.violations.empty());
}
