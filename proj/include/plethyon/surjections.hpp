#pragma once

#include "plethyon/flavor.hpp"
#include "plethyon/tensor.hpp"

#include <string>
#include <vector>

namespace plethyon {

// A map of finite ordinals as an explicit value table, 0-based.
struct FinMap {
    int dom = 0;
    int cod = 0;
    std::vector<int> map;

    int operator()(int i) const { return map.at(std::size_t(i)); }
    bool surjective() const;
    bool monotone() const;
    std::vector<std::vector<int>> fibers() const;

    friend auto operator<=>(const FinMap&, const FinMap&) = default;
};

FinMap fin_identity(int n);
// f then g.
FinMap fin_compose(const FinMap& f, const FinMap& g);

// A pullback square over [l] --g--> [k] <--f-- [n] with g monotone:
//   P --q--> [n]
//   |p       |f
//   [l] -g-> [k]
// p is monotone and q is monotone on each p-fiber; the apex order is the
// lexicographic one, which makes the square unique.
struct MonotoneSquare {
    FinMap p;  // P ->> [l]
    FinMap q;  // P ->> [n]
};
MonotoneSquare monotone_pullback(const FinMap& g, const FinMap& f);

// Per-direction markings of the simplicial groupoid of surjection
// pyramids: plain sets, linear (fiber orders frozen) or monotone (globally
// ordered) surjections.
enum class Marking { plain, linear, monotone };
Marking marking_by_name(const std::string& name);

struct TSOptions {
    Marking left = Marking::plain;   // left-down surjections
    Marking right = Marking::plain;  // right/bottom surjections
    int colors = 1;

    bool word_classes() const { return right != Marking::plain; }
    bool ordered_product() const { return right == Marking::monotone; }
    IndexKind kind() const { return word_classes() ? IndexKind::word : IndexKind::lambda; }
};

// Classes live over the same bases as the plethystic flavors.
BasePtr ts_base(const TSOptions& o);

// A connected 1-simplex: upper: T01 ->> T00 together with the collapse of
// T00 to a colored point.
struct TSLevel1 {
    FinMap upper;                // T01 ->> T00
    std::vector<int> t00_color;  // one color per T00 element
    int out_color = 0;
};

struct IsoClass {
    std::string key;   // canonical text form
    Generator cls;     // the class itself, for level-1 listings
    Int aut;

    friend bool operator<(const IsoClass& a, const IsoClass& b) {
        return std::tie(a.key, a.cls) < std::tie(b.key, b.cls);
    }
};

// The class of a diagram once the non-marked orders are forgotten.
Generator ts_class_of(const TSOptions& o, const TSLevel1& d);
// Automorphisms: levelwise marking- and color-preserving bijections,
// counted on the value tables.
Int ts_aut_order(const TSOptions& o, const TSLevel1& d);
// Monotone representative of a class.
TSLevel1 ts_canonical_diagram(const TSOptions& o, const Generator& cls);

// Connected level-1 classes with |T01| <= max_bottom, or level-2 classes
// with |T02| <= max_bottom, each with its automorphism order.
std::vector<IsoClass> enumerate_ts(int level, std::int64_t max_bottom, const TSOptions& o,
                                   std::int64_t hard_limit = 12);

// Comultiplication by 2-simplex counting: enumerate arrangements of inner
// diagrams over the cells of an outer diagram, glue by monotone pullback,
// keep those whose long face is sigma, and weight by automorphism orders.
TensorElement ts_delta(const TSOptions& o, const Generator& sigma);

// The flavor whose comultiplication a decorated TS matches.
const Flavor& ts_flavor(const TSOptions& o);

// Leveled forests of operations; a node's children live one level up and
// leaves carry colors. Used for bar-construction automorphism counts.
struct ForestNode {
    std::vector<ForestNode> children;
    std::string color;
};
// sym_ops: nodes may permute equal child subtrees (symmetric operations);
// sym_bar: trees of the forest may be permuted. All leaves must sit at the
// same depth.
Int forest_aut_order(const std::vector<ForestNode>& forest, bool sym_ops, bool sym_bar);

}  // namespace plethyon
