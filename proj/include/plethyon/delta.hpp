#pragma once

#include "plethyon/flavor.hpp"
#include "plethyon/series.hpp"
#include "plethyon/tensor.hpp"

#include <optional>

namespace plethyon {

// One class of two-step decompositions of sigma: an outer class together
// with the multiset (or ordered list, for word flavors with noncommuting
// coefficients) of inner classes.
//   placements: number of ways to assign the inner classes to the cells of
//     the outer grid (word flavors: always 1 per listed split).
//   t_count: the cardinality of the decomposition set itself, i.e.
//     placements times the number of list representatives of the multiset.
struct DecompositionClass {
    Generator outer;
    std::vector<Generator> inners;
    Int placements;
    Int t_count;

    friend bool operator<(const DecompositionClass& a, const DecompositionClass& b) {
        return std::tie(a.outer, a.inners) < std::tie(b.outer, b.inners);
    }
};

// Exhaustive enumeration of the decompositions of sigma, optionally
// restricted to one outer class. Terminates because every inner class
// shifts to a nonempty part of sigma.
std::vector<DecompositionClass> enumerate_decompositions(
    const Flavor& f, const Generator& sigma, const std::optional<Index>& restrict_outer = {});

// The comultiplication by automorphism-weighted decomposition counting.
// Terms are (inner monomial) (x) (outer generator); exact rationals.
TensorElement delta_combinatorial(const Flavor& f, const Generator& sigma);

// The comultiplication by substitution of generic series: build generic F
// and G, compute G (*) F truncated at D (default |sigma|), extract the
// sigma coefficient, multiply by aut(sigma) and reinterpret the symbols.
TensorElement delta_symbolic(const Flavor& f, const Generator& sigma, std::int64_t D = -1);

// Symbolic route for a product of generators: the extracted polynomial of
// a monomial is the product of the factors' polynomials.
TensorElement delta_symbolic_monomial(const Flavor& f, const BasisMonomial& m,
                                      std::int64_t D = -1);

// Multiplicative extension of delta_combinatorial to monomials.
TensorElement delta_monomial(const Flavor& f, const BasisMonomial& m);

// 1 on products of unit generators (single identity arrows), else 0.
Rational counit(const Flavor& f, const BasisMonomial& m);

// Algebra product: multiset union resp. concatenation.
BasisMonomial product(const Flavor& f, const BasisMonomial& a, const BasisMonomial& b);

}  // namespace plethyon
