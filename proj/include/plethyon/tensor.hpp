#pragma once

#include "plethyon/flavor.hpp"
#include "plethyon/rational.hpp"
#include "plethyon/shapes.hpp"

#include <map>
#include <vector>

namespace plethyon {

// A product of generators. Factors are kept sorted for flavors with
// commuting coefficients and in multiplication order otherwise; the empty
// monomial is the algebra unit.
struct BasisMonomial {
    std::vector<Generator> factors;

    bool is_one() const { return factors.empty(); }
    friend auto operator<=>(const BasisMonomial&, const BasisMonomial&) = default;
};

BasisMonomial monomial_of(const Flavor& f, std::vector<Generator> factors);
BasisMonomial monomial_mul(const Flavor& f, const BasisMonomial& a, const BasisMonomial& b);

// A finite linear combination of leg tuples (monomial (x) ... (x) monomial)
// with exact rational coefficients. Most values have two legs; the
// coassociativity checks use three.
struct TensorElement {
    int legs = 2;
    std::map<std::vector<BasisMonomial>, Rational> terms;

    explicit TensorElement(int n = 2) : legs(n) {}

    void add(std::vector<BasisMonomial> key, const Rational& c);

    TensorElement& operator+=(const TensorElement& o);
    friend bool operator==(const TensorElement& a, const TensorElement& b) {
        return a.legs == b.legs && a.terms == b.terms;
    }
};

TensorElement tensor_scale(const TensorElement& t, const Rational& c);

// Legwise product: (a1 (x) a2) * (b1 (x) b2) = a1 b1 (x) a2 b2.
TensorElement tensor_mul(const Flavor& f, const TensorElement& a, const TensorElement& b);

// Replace leg `leg` of every term by the expansion produced by `expand`
// applied to that leg's monomial; expansions may have several legs, which
// get spliced in place.
TensorElement tensor_expand_leg(const TensorElement& t, int leg,
                                const std::function<TensorElement(const BasisMonomial&)>& expand);

// Contract leg `leg` with a scalar functional.
TensorElement tensor_contract_leg(const TensorElement& t, int leg,
                                  const std::function<Rational(const BasisMonomial&)>& functional);

}  // namespace plethyon
