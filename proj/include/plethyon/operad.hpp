#pragma once

#include "plethyon/base.hpp"
#include "plethyon/rational.hpp"
#include "plethyon/shapes.hpp"

#include <memory>
#include <string>
#include <vector>

namespace plethyon {

// An operation of a tuple operad: arrows of a base category with a common
// source (opposite convention) or a common target (covariant convention).
// Symmetric instances canonicalize the tuple by sorting; the full orbit is
// never materialized, only its automorphism order.
struct TupleOperation {
    std::vector<Arrow> entries;

    int arity() const { return int(entries.size()); }
    friend auto operator<=>(const TupleOperation&, const TupleOperation&) = default;
};

// A concrete operad presented by enumerable operation tables.
class OperadInstance {
public:
    virtual ~OperadInstance() = default;

    virtual std::string name() const = 0;
    virtual int color_count() const = 0;
    virtual bool symmetric() const = 0;

    // Operations with arity <= bound and internal labels <= bound, one
    // canonical representative per isomorphism class.
    virtual std::vector<TupleOperation> enumerate_ops(std::int64_t bound) const = 0;

    // Input colors (in tuple order for nonsymmetric instances) and output.
    virtual std::vector<int> inputs(const TupleOperation& op) const = 0;
    virtual int output(const TupleOperation& op) const = 0;

    virtual TupleOperation identity_op(int color) const = 0;

    // Composition on the chosen representatives, slot order preserved (the
    // j-th inner expands the j-th entry); no canonicalization.
    virtual TupleOperation compose_planar(const TupleOperation& op,
                                          const std::vector<TupleOperation>& inners) const = 0;

    // Full operadic composition as isomorphism classes.
    TupleOperation compose(const TupleOperation& op,
                           const std::vector<TupleOperation>& inners) const {
        return canonical(compose_planar(op, inners));
    }

    virtual Int aut_order(const TupleOperation& op) const = 0;

    // Canonical form of a raw tuple (sorting for symmetric instances).
    virtual TupleOperation canonical(TupleOperation op) const = 0;
};

using OperadPtr = std::shared_ptr<const OperadInstance>;

// The k-colored symmetric/associative reduced operads.
OperadPtr sym_operad(int colors = 1);
OperadPtr ass_operad(int colors = 1);

// Giraudo's construction on a one-object base (a monoid): n-ary operations
// are n-tuples of monoid elements.
OperadPtr giraudo_operad(BasePtr monoid);

// Tuples of arrows of a finite-ish category with a common source (opposite
// convention, the default) or common target.
OperadPtr category_operad(BasePtr category, bool symmetric, bool opposite = true);

// Resolve "sym", "ass", "sym2", "ass2", "giraudo:classical",
// "giraudo:natplus", "cat:chaotic2", ... as used by the CLI.
OperadPtr operad_by_name(const std::string& name);

// Giraudo full composition over a one-object base:
//   x o (y^1,...,y^k) = (x_1 y^1_1, ..., x_1 y^1_{n_1}, ..., x_k y^k_{n_k}).
TupleOperation giraudo_full_compose(const BaseCategory& monoid, const TupleOperation& x,
                                    const std::vector<TupleOperation>& inners);

// x o_i y = (x_1, ..., x_{i-1}, x_i y_1, ..., x_i y_m, x_{i+1}, ..., x_n),
// with 1-based position i.
TupleOperation giraudo_partial_compose(const BaseCategory& monoid, const TupleOperation& x, int i,
                                       const TupleOperation& y);

// The category of tuple levels under an operad: objects are the colors and
// an arrow (n: i->j) for every n >= 1, composed by multiplying labels. The
// per-arrow automorphism order is n! for symmetric inputs and 1 otherwise.
struct IntermediateCategory {
    BasePtr base;
    AutFlavor inner;
};
IntermediateCategory t_intermediate_category(const OperadInstance& q);

// Composition of tuple operations under the opposite convention: outer
// arrow j (from the common source) is extended by every letter of the j-th
// inner tuple. Symmetric instances re-canonicalize the result.
TupleOperation t_operad_compose(const BaseCategory& base, bool symmetric,
                                const TupleOperation& outer,
                                const std::vector<TupleOperation>& inners);

// Finite-instance check of the operad axioms: associativity, left/right
// units, and source/target coherence over all composable configurations
// within the bound. Violations are reported with witnesses, not thrown.
struct AxiomReport {
    bool passed = true;
    int checked = 0;
    std::vector<std::string> violations;
};
AxiomReport axiom_check(const OperadInstance& q, std::int64_t bound);

// Test hook: a wrapper whose composition is corrupted on one configuration.
OperadPtr corrupt_operad(OperadPtr inner);

}  // namespace plethyon
