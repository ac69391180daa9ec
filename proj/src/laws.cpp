#include "plethyon/laws.hpp"

#include "plethyon/textio.hpp"

namespace plethyon {

LawReport check_bialgebra_laws(const Flavor& f, std::int64_t size_bound,
                               const DeltaFn& delta_override) {
    LawReport rep;
    DeltaFn delta_gen = delta_override
                            ? delta_override
                            : [](const Flavor& fl, const Generator& g) {
                                  return delta_combinatorial(fl, g);
                              };
    auto delta_mono = [&](const BasisMonomial& m) {
        TensorElement acc(2);
        acc.add({BasisMonomial{}, BasisMonomial{}}, 1);
        for (const Generator& g : m.factors) acc = tensor_mul(f, acc, delta_gen(f, g));
        return acc;
    };
    auto gen_name = [&](const Generator& g) { return generator_text(*f.base, g); };

    std::vector<Generator> gens = enumerate_generators(f, size_bound);
    for (const Generator& sigma : gens) {
        ++rep.generators_checked;
        TensorElement d = delta_gen(f, sigma);

        // symbolic route agrees
        ++rep.checks;
        if (!(d == delta_symbolic(f, sigma)))
            rep.fail(f.name + ": delta routes disagree at " + gen_name(sigma));

        // counit laws
        TensorElement id_sigma(1);
        id_sigma.add({BasisMonomial{{sigma}}}, 1);
        auto eps = [&](const BasisMonomial& m) { return counit(f, m); };
        ++rep.checks;
        if (!(tensor_contract_leg(d, 0, eps) == id_sigma))
            rep.fail(f.name + ": (counit x id) delta != id at " + gen_name(sigma));
        ++rep.checks;
        if (!(tensor_contract_leg(d, 1, eps) == id_sigma))
            rep.fail(f.name + ": (id x counit) delta != id at " + gen_name(sigma));

        // coassociativity
        auto delta_left = [&](const BasisMonomial& m) { return delta_mono(m); };
        TensorElement lhs = tensor_expand_leg(d, 0, delta_left);
        TensorElement rhs = tensor_expand_leg(d, 1, delta_left);
        ++rep.checks;
        if (!(lhs == rhs)) rep.fail(f.name + ": coassociativity fails at " + gen_name(sigma));
    }

    // multiplicativity on pairs within the bound, against the symbolic
    // route applied to the product functional
    for (const Generator& a : gens) {
        std::int64_t wa = weight(*f.base, a.idx);
        for (const Generator& b : gens) {
            if (wa + weight(*f.base, b.idx) > size_bound) continue;
            BasisMonomial ab = monomial_mul(f, BasisMonomial{{a}}, BasisMonomial{{b}});
            ++rep.checks;
            TensorElement direct = tensor_mul(f, delta_gen(f, a), delta_gen(f, b));
            if (!(delta_symbolic_monomial(f, ab) == direct))
                rep.fail(f.name + ": delta(ab) != delta(a)delta(b) at " + gen_name(a) + ", " +
                         gen_name(b));
        }
    }
    return rep;
}

}  // namespace plethyon
