#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace plethyon {

// An arrow of a base category. `label` is the numeric part for the formula
// bases (the n of x_n) and the declaration index for table-defined bases.
// The canonical sort key is (label, src, tgt), which matches declaration
// order for tables because their labels are declaration indices.
struct Arrow {
    int src = 0;
    int tgt = 0;
    std::int64_t label = 0;

    friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

struct color_mismatch_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct unsupported_flavor_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A locally finite base category: finitely many objects, a (possibly
// countable) family of arrows, composition, identities, and for every
// arrow the finite list of its two-step factorizations.
//
// compose(m, k) is diagrammatic: m first, then k; requires tgt(m) == src(k).
class BaseCategory {
public:
    virtual ~BaseCategory() = default;

    virtual std::string name() const = 0;
    virtual int object_count() const = 0;
    virtual Arrow identity(int obj) const = 0;
    virtual Arrow compose(const Arrow& m, const Arrow& k) const = 0;

    // All ordered pairs (m, k) with compose(m, k) == n. Always finite and
    // always contains (id, n) and (n, id).
    virtual std::vector<std::pair<Arrow, Arrow>> factorizations(const Arrow& n) const = 0;

    // Arrow sizes feed the symmetric automorphism counts (size(m)! per slot).
    virtual bool has_size() const = 0;
    virtual std::int64_t size(const Arrow& a) const = 0;

    // Arrows out of `obj`, lazily bounded: arrows with size <= bound for
    // sized bases, everything for finite bases.
    virtual std::vector<Arrow> arrows_from(int obj, std::int64_t bound) const = 0;

    // Whether the "(a1,...,ak)" vector text form applies (arrow i <-> label i).
    virtual bool vector_text() const { return false; }

    bool is_identity(const Arrow& a) const {
        return a.src == a.tgt && a == identity(a.src);
    }

    void check_object(int obj) const {
        if (obj < 0 || obj >= object_count())
            throw std::out_of_range("base '" + name() + "': no object " + std::to_string(obj));
    }

    void check_composable(const Arrow& m, const Arrow& k) const {
        if (m.tgt != k.src)
            throw color_mismatch_error("base '" + name() + "': arrows not composable");
    }
};

using BasePtr = std::shared_ptr<const BaseCategory>;

// (N^+, x): the classical one-object base of ordinary plethysm.
BasePtr classical_base();
// (N, +).
BasePtr natplus_base();
// Chaotic category on k objects: exactly one arrow between any ordered pair.
// k = 1 is the trivial monoid.
BasePtr chaotic_base(int k);
// k objects, an arrow (n, i->j) for every n >= 1; composition multiplies n's.
BasePtr colored_classical_base(int k);

// A finite category given by explicit tables. Validates the category
// axioms (associativity, identities, source/target coherence) on
// construction and throws std::invalid_argument with a witness otherwise.
struct CategoryTable {
    int objects = 1;
    // arrow i: (src, tgt); identities listed among them
    std::vector<std::pair<int, int>> arrows;
    std::vector<int> identities;                       // identities[obj] = arrow index
    std::map<std::pair<int, int>, int> composition;    // (first, then) -> result
    std::vector<std::int64_t> sizes;                   // optional, empty = sizeless
};
BasePtr table_base(std::string name, CategoryTable table);

// (Z/2, +) as a table monoid.
BasePtr z2_base();

// Lookup by the names used in the CLI: classical, natplus, z2, trivial,
// chaotic2, classical2, ...
BasePtr base_by_name(const std::string& name);

}  // namespace plethyon
