#pragma once

#include "plethyon/base.hpp"
#include "plethyon/poly.hpp"
#include "plethyon/shapes.hpp"

#include <string>
#include <vector>

namespace plethyon {

// A bialgebra flavor: the base category its variables are indexed by,
// whether variables commute (Lambda) or not (Word), the inner automorphism
// convention, and whether coefficients commute. Noncommuting variables
// force Word indexing; commuting variables force commuting coefficients.
struct Flavor {
    std::string name;
    std::string display;
    BasePtr base;
    IndexKind vars = IndexKind::lambda;
    AutFlavor inner = AutFlavor::symmetric_inner;
    RingKind coeffs = RingKind::commutative;

    Int aut(const Index& idx) const { return aut_order(*base, idx, inner); }
    Int aut(const Generator& g) const { return aut_order(*base, g.idx, inner); }
    bool commutative() const { return coeffs == RingKind::commutative; }
};

// Every registered flavor, in registry order.
const std::vector<Flavor>& flavor_registry();

// Lookup by name; "classical" and "faa-di-bruno" style aliases included.
const Flavor& flavor_by_name(const std::string& name);

// All generators of the flavor with weight <= bound and |shape| <= bound,
// over every output color, canonically ordered.
std::vector<Generator> enumerate_generators(const Flavor& f, std::int64_t bound);

}  // namespace plethyon
