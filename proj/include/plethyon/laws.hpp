#pragma once

#include "plethyon/delta.hpp"

#include <functional>
#include <string>
#include <vector>

namespace plethyon {

struct LawReport {
    bool passed = true;
    int generators_checked = 0;
    int checks = 0;
    std::vector<std::string> violations;

    void fail(std::string what) {
        passed = false;
        violations.push_back(std::move(what));
    }
};

using DeltaFn = std::function<TensorElement(const Flavor&, const Generator&)>;

// For every generator of weight <= size_bound: coassociativity, the counit
// laws, agreement of the symbolic and combinatorial routes, and
// multiplicativity of the comultiplication on generator pairs within the
// bound. A delta override stands in for the combinatorial route, so
// corrupted comultiplications are reported with witnesses.
LawReport check_bialgebra_laws(const Flavor& f, std::int64_t size_bound,
                               const DeltaFn& delta_override = {});

}  // namespace plethyon
