#include "plethyon/flavor.hpp"

#include <algorithm>
#include <map>

namespace plethyon {

namespace {

std::vector<Flavor> build_registry() {
    const auto L = IndexKind::lambda;
    const auto W = IndexKind::word;
    const auto SYM = AutFlavor::symmetric_inner;
    const auto EXP = AutFlavor::exponential;
    const auto C = RingKind::commutative;
    const auto NC = RingKind::noncommutative;

    std::vector<Flavor> r;
    // Faa di Bruno family: one or two ordinary variables.
    r.push_back({"F", "F (Faa di Bruno)", chaotic_base(1), L, SYM, C});
    r.push_back({"F_ord", "F_ord (ordinary basis)", chaotic_base(1), W, EXP, C});
    r.push_back({"F_nc", "F_nc (noncommutative coefficients)", chaotic_base(1), W, EXP, NC});
    r.push_back({"F2", "F^2 (two variables)", chaotic_base(2), L, SYM, C});
    r.push_back({"Fw2", "F<2> (two noncommuting variables)", chaotic_base(2), W, EXP, C});
    r.push_back({"Fw2_nc", "F<2>,nc", chaotic_base(2), W, EXP, NC});
    // Plethystic family over (N^+, x).
    r.push_back({"P", "P (plethystic)", classical_base(), L, SYM, C});
    r.push_back({"Pw", "P<> (noncommuting variables)", classical_base(), W, SYM, C});
    r.push_back({"Pw_nc", "P<>,nc", classical_base(), W, SYM, NC});
    r.push_back({"P_exp", "P_exp (exponential)", classical_base(), L, EXP, C});
    r.push_back({"Plin_w", "P_lin<>", classical_base(), W, EXP, C});
    r.push_back({"Plin_w_nc", "P_lin<>,nc", classical_base(), W, EXP, NC});
    // Two sets of commuting variables.
    r.push_back({"P2", "P^2 (two variable sets)", colored_classical_base(2), L, SYM, C});
    r.push_back({"P2_exp", "P^2_exp", colored_classical_base(2), L, EXP, C});
    // Plethysm over a locally finite monoid Y.
    r.push_back({"PY_natmul", "P^Y, Y = (N^+, x)", classical_base(), L, EXP, C});
    r.push_back({"PY_natplus", "P^Y, Y = (N, +)", natplus_base(), L, EXP, C});
    r.push_back({"PY_z2", "P^Y, Y = Z/2", z2_base(), L, EXP, C});
    return r;
}

}  // namespace

const std::vector<Flavor>& flavor_registry() {
    static const std::vector<Flavor> reg = build_registry();
    return reg;
}

const Flavor& flavor_by_name(const std::string& name) {
    static const std::map<std::string, std::string> aliases = {
        {"classical", "P"},
        {"plethystic", "P"},
        {"faa-di-bruno", "F"},
        {"exponential", "P_exp"},
    };
    std::string key = name;
    auto al = aliases.find(key);
    if (al != aliases.end()) key = al->second;
    for (const Flavor& f : flavor_registry())
        if (f.name == key) return f;
    throw std::invalid_argument("unknown flavor: " + name);
}

std::vector<Generator> enumerate_generators(const Flavor& f, std::int64_t bound) {
    std::vector<Generator> out;
    for (int c = 0; c < f.base->object_count(); ++c) {
        std::vector<Arrow> arrows = f.base->arrows_from(c, bound);
        if (f.vars == IndexKind::lambda) {
            for (Lambda& l : enumerate_lambdas(*f.base, arrows, bound, bound))
                out.push_back({c, Index::of(std::move(l))});
        } else {
            for (Word& w : enumerate_words(*f.base, arrows, bound, bound))
                out.push_back({c, Index::of(std::move(w))});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace plethyon
