#include "plethyon/operad.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace plethyon {

namespace {

std::string op_text(const TupleOperation& op) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < op.entries.size(); ++i) {
        if (i) os << ",";
        const Arrow& a = op.entries[i];
        if (a.src || a.tgt) os << a.src << "->" << a.tgt << ":";
        os << a.label;
    }
    os << ")";
    return os.str();
}

// Tuples of arrows of a base category sharing a common source (opposite
// convention) or target. Covers Sym/Ass and their colored versions
// (chaotic bases), the Giraudo construction (one-object bases) and the
// T-construction of Sym/Ass via intermediate categories with arrow
// automorphisms.
class TupleOperad final : public OperadInstance {
public:
    TupleOperad(std::string name, BasePtr base, bool symmetric, bool opposite,
                AutFlavor arrow_auts)
        : name_(std::move(name)),
          base_(std::move(base)),
          symmetric_(symmetric),
          opposite_(opposite),
          arrow_auts_(arrow_auts) {}

    std::string name() const override { return name_; }
    int color_count() const override { return base_->object_count(); }
    bool symmetric() const override { return symmetric_; }

    std::vector<TupleOperation> enumerate_ops(std::int64_t bound) const override {
        std::vector<TupleOperation> out;
        for (int c = 0; c < base_->object_count(); ++c) {
            std::vector<Arrow> arrows = arrows_at(c, bound);
            TupleOperation cur;
            auto rec = [&](auto&& self, std::size_t start) -> void {
                if (!cur.entries.empty()) out.push_back(cur);
                if (std::int64_t(cur.entries.size()) >= bound) return;
                for (std::size_t i = symmetric_ ? start : 0; i < arrows.size(); ++i) {
                    cur.entries.push_back(arrows[i]);
                    self(self, i);
                    cur.entries.pop_back();
                }
            };
            rec(rec, 0);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    std::vector<int> inputs(const TupleOperation& op) const override {
        std::vector<int> in;
        in.reserve(op.entries.size());
        for (const Arrow& a : op.entries) in.push_back(opposite_ ? a.tgt : a.src);
        return in;
    }

    int output(const TupleOperation& op) const override {
        if (op.entries.empty()) throw std::invalid_argument("empty operation");
        int c = opposite_ ? op.entries.front().src : op.entries.front().tgt;
        for (const Arrow& a : op.entries)
            if ((opposite_ ? a.src : a.tgt) != c)
                throw color_mismatch_error("tuple entries disagree on the output color");
        return c;
    }

    TupleOperation identity_op(int color) const override {
        return {{base_->identity(color)}};
    }

    TupleOperation compose_planar(const TupleOperation& op,
                                  const std::vector<TupleOperation>& inners) const override {
        return t_operad_compose_impl(op, inners);
    }

    Int aut_order(const TupleOperation& op) const override {
        Int r = 1;
        if (arrow_auts_ == AutFlavor::symmetric_inner)
            for (const Arrow& a : op.entries) r *= factorial(base_->size(a));
        if (symmetric_) {
            TupleOperation c = canonical(op);
            std::size_t i = 0;
            while (i < c.entries.size()) {
                std::size_t j = i;
                while (j < c.entries.size() && c.entries[j] == c.entries[i]) ++j;
                r *= factorial(std::int64_t(j - i));
                i = j;
            }
        }
        return r;
    }

    TupleOperation canonical(TupleOperation op) const override {
        if (symmetric_) std::sort(op.entries.begin(), op.entries.end());
        return op;
    }

    const BaseCategory& base() const { return *base_; }
    bool opposite() const { return opposite_; }

private:
    std::vector<Arrow> arrows_at(int c, std::int64_t bound) const {
        if (opposite_) return base_->arrows_from(c, bound);
        // covariant: arrows with target c
        std::vector<Arrow> out;
        for (int s = 0; s < base_->object_count(); ++s)
            for (const Arrow& a : base_->arrows_from(s, bound))
                if (a.tgt == c) out.push_back(a);
        std::sort(out.begin(), out.end());
        return out;
    }

    TupleOperation t_operad_compose_impl(const TupleOperation& op,
                                         const std::vector<TupleOperation>& inners) const {
        if (inners.size() != op.entries.size())
            throw std::invalid_argument("compose: arity mismatch");
        TupleOperation out;
        for (std::size_t j = 0; j < op.entries.size(); ++j) {
            const Arrow& m = op.entries[j];
            int slot_color = opposite_ ? m.tgt : m.src;
            if (output(inners[j]) != slot_color)
                throw color_mismatch_error("compose: inner output does not match slot color");
            for (const Arrow& k : inners[j].entries)
                out.entries.push_back(opposite_ ? base_->compose(m, k) : base_->compose(k, m));
        }
        return out;
    }

    std::string name_;
    BasePtr base_;
    bool symmetric_;
    bool opposite_;
    AutFlavor arrow_auts_;
};

class CorruptOperad final : public OperadInstance {
public:
    explicit CorruptOperad(OperadPtr inner) : q_(std::move(inner)) {}
    std::string name() const override { return q_->name() + "(corrupted)"; }
    int color_count() const override { return q_->color_count(); }
    bool symmetric() const override { return q_->symmetric(); }
    std::vector<TupleOperation> enumerate_ops(std::int64_t bound) const override {
        return q_->enumerate_ops(bound);
    }
    std::vector<int> inputs(const TupleOperation& op) const override { return q_->inputs(op); }
    int output(const TupleOperation& op) const override { return q_->output(op); }
    TupleOperation identity_op(int color) const override { return q_->identity_op(color); }
    TupleOperation compose_planar(const TupleOperation& op,
                                  const std::vector<TupleOperation>& inners) const override {
        TupleOperation r = q_->compose_planar(op, inners);
        if (r.entries.size() >= 2) r.entries.pop_back();
        return r;
    }
    Int aut_order(const TupleOperation& op) const override { return q_->aut_order(op); }
    TupleOperation canonical(TupleOperation op) const override {
        return q_->canonical(std::move(op));
    }

private:
    OperadPtr q_;
};

}  // namespace

OperadPtr sym_operad(int colors) {
    return std::make_shared<TupleOperad>(colors == 1 ? "sym" : "sym" + std::to_string(colors),
                                         chaotic_base(colors), true, true,
                                         AutFlavor::exponential);
}

OperadPtr ass_operad(int colors) {
    return std::make_shared<TupleOperad>(colors == 1 ? "ass" : "ass" + std::to_string(colors),
                                         chaotic_base(colors), false, true,
                                         AutFlavor::exponential);
}

OperadPtr giraudo_operad(BasePtr monoid) {
    if (monoid->object_count() != 1)
        throw std::invalid_argument("giraudo construction needs a one-object base");
    return std::make_shared<TupleOperad>("giraudo:" + monoid->name(), std::move(monoid), false,
                                         true, AutFlavor::exponential);
}

OperadPtr category_operad(BasePtr category, bool symmetric, bool opposite) {
    std::string n = std::string("cat:") + category->name() + (symmetric ? ":sym" : ":ass");
    return std::make_shared<TupleOperad>(std::move(n), std::move(category), symmetric, opposite,
                                         AutFlavor::exponential);
}

OperadPtr operad_by_name(const std::string& name) {
    if (name == "sym") return sym_operad(1);
    if (name == "ass") return ass_operad(1);
    if (name.rfind("sym", 0) == 0) return sym_operad(std::stoi(name.substr(3)));
    if (name.rfind("ass", 0) == 0) return ass_operad(std::stoi(name.substr(3)));
    if (name.rfind("giraudo:", 0) == 0) return giraudo_operad(base_by_name(name.substr(8)));
    if (name.rfind("cat:", 0) == 0) return category_operad(base_by_name(name.substr(4)), false);
    if (name.rfind("catsym:", 0) == 0) return category_operad(base_by_name(name.substr(7)), true);
    throw std::invalid_argument("unknown operad: " + name);
}

TupleOperation giraudo_full_compose(const BaseCategory& monoid, const TupleOperation& x,
                                    const std::vector<TupleOperation>& inners) {
    if (inners.size() != x.entries.size())
        throw std::invalid_argument("giraudo_full_compose: length mismatch");
    TupleOperation out;
    for (std::size_t j = 0; j < x.entries.size(); ++j)
        for (const Arrow& y : inners[j].entries)
            out.entries.push_back(monoid.compose(x.entries[j], y));
    return out;
}

TupleOperation giraudo_partial_compose(const BaseCategory& monoid, const TupleOperation& x, int i,
                                       const TupleOperation& y) {
    if (i < 1 || i > x.arity())
        throw std::out_of_range("giraudo_partial_compose: position out of range");
    TupleOperation out;
    for (int j = 0; j < x.arity(); ++j) {
        if (j + 1 == i)
            for (const Arrow& k : y.entries)
                out.entries.push_back(monoid.compose(x.entries[std::size_t(j)], k));
        else
            out.entries.push_back(x.entries[std::size_t(j)]);
    }
    return out;
}

IntermediateCategory t_intermediate_category(const OperadInstance& q) {
    int k = q.color_count();
    BasePtr base = k == 1 ? classical_base() : colored_classical_base(k);
    return {base, q.symmetric() ? AutFlavor::symmetric_inner : AutFlavor::exponential};
}

TupleOperation t_operad_compose(const BaseCategory& base, bool symmetric,
                                const TupleOperation& outer,
                                const std::vector<TupleOperation>& inners) {
    if (inners.size() != outer.entries.size())
        throw std::invalid_argument("t_operad_compose: arity mismatch");
    TupleOperation out;
    for (std::size_t j = 0; j < outer.entries.size(); ++j) {
        const Arrow& m = outer.entries[j];
        for (const Arrow& k : inners[j].entries) {
            if (k.src != m.tgt)
                throw color_mismatch_error("t_operad_compose: inner arrows start at wrong color");
            out.entries.push_back(base.compose(m, k));
        }
    }
    if (symmetric) std::sort(out.entries.begin(), out.entries.end());
    return out;
}

AxiomReport axiom_check(const OperadInstance& q, std::int64_t bound) {
    AxiomReport rep;
    std::vector<TupleOperation> ops = q.enumerate_ops(bound);

    auto fail = [&](const std::string& what, const TupleOperation& witness) {
        rep.passed = false;
        rep.violations.push_back(what + " at " + op_text(witness));
    };

    // ops with the given output color, indexed for inner enumeration
    auto ops_at = [&](int color) {
        std::vector<TupleOperation> r;
        for (const TupleOperation& op : ops)
            if (q.output(op) == color) r.push_back(op);
        return r;
    };
    std::vector<std::vector<TupleOperation>> by_color;
    for (int c = 0; c < q.color_count(); ++c) by_color.push_back(ops_at(c));

    // All ways to pick one inner per input slot with total arity <= bound.
    auto inner_lists = [&](const TupleOperation& op, std::int64_t arity_cap) {
        std::vector<std::vector<TupleOperation>> lists;
        std::vector<int> in = q.inputs(op);
        std::vector<TupleOperation> cur;
        auto rec = [&](auto&& self, std::size_t slot, std::int64_t total) -> void {
            if (slot == in.size()) {
                lists.push_back(cur);
                return;
            }
            for (const TupleOperation& y : by_color[std::size_t(in[slot])]) {
                if (total + y.arity() > arity_cap) continue;
                cur.push_back(y);
                self(self, slot + 1, total + y.arity());
                cur.pop_back();
            }
        };
        rec(rec, 0, 0);
        return lists;
    };

    // Either the composite or a violation witness: a composition that
    // throws on a profile-correct configuration is itself a violation.
    auto try_compose = [&](const TupleOperation& op, const std::vector<TupleOperation>& inners,
                           const char* where) -> std::optional<TupleOperation> {
        try {
            return q.compose_planar(op, inners);
        } catch (const std::exception& e) {
            fail(std::string(where) + " threw (" + e.what() + ")", op);
            return std::nullopt;
        }
    };

    for (const TupleOperation& x : ops) {
        // unit laws
        std::vector<TupleOperation> ids;
        for (int c : q.inputs(x)) ids.push_back(q.identity_op(c));
        ++rep.checked;
        if (auto r = try_compose(x, ids, "right unit"))
            if (q.canonical(*r) != q.canonical(x)) fail("right unit law fails", x);
        ++rep.checked;
        if (auto r = try_compose(q.identity_op(q.output(x)), {x}, "left unit"))
            if (q.canonical(*r) != q.canonical(x)) fail("left unit law fails", x);

        for (const auto& ys : inner_lists(x, bound)) {
            auto xy_opt = try_compose(x, ys, "composition");
            if (!xy_opt) continue;
            TupleOperation xy = q.canonical(*xy_opt);
            // source/target coherence
            std::vector<int> expect_in;
            for (const TupleOperation& y : ys)
                for (int c : q.inputs(y)) expect_in.push_back(c);
            ++rep.checked;
            if (q.output(xy) != q.output(x)) fail("output color broken by composition", x);
            std::vector<int> got_in = q.inputs(xy);
            if (q.symmetric()) {
                std::sort(expect_in.begin(), expect_in.end());
                std::sort(got_in.begin(), got_in.end());
            }
            ++rep.checked;
            if (got_in != expect_in) fail("input profile broken by composition", x);
            if (q.symmetric() && int(got_in.size()) != xy.arity())
                fail("arity broken by composition", x);

            // associativity on planar representatives, compared as classes
            std::vector<std::vector<std::vector<TupleOperation>>> per_slot;
            bool feasible = true;
            for (const TupleOperation& y : ys) {
                per_slot.push_back(inner_lists(y, bound));
                if (per_slot.back().empty()) feasible = false;
            }
            if (!feasible) continue;
            std::int64_t combos = 1;
            for (const auto& ls : per_slot) {
                combos *= std::int64_t(ls.size());
                if (combos > 2000) break;  // keep the exhaustive pass bounded
            }
            if (combos > 2000) continue;
            std::vector<std::size_t> pick(ys.size(), 0);
            auto advance = [&]() {
                for (std::size_t i = 0; i < pick.size(); ++i) {
                    if (++pick[i] < per_slot[i].size()) return true;
                    pick[i] = 0;
                }
                return false;
            };
            TupleOperation xy_planar = *xy_opt;
            do {
                std::vector<TupleOperation> zs_flat;
                std::vector<TupleOperation> yz;
                bool built = true;
                for (std::size_t j = 0; j < ys.size() && built; ++j) {
                    const auto& zs = per_slot[j][pick[j]];
                    zs_flat.insert(zs_flat.end(), zs.begin(), zs.end());
                    if (auto c = try_compose(ys[j], zs, "composition"))
                        yz.push_back(*c);
                    else
                        built = false;
                }
                if (!built) continue;
                ++rep.checked;
                auto lhs = try_compose(xy_planar, zs_flat, "two-step composition");
                auto rhs = try_compose(x, yz, "two-step composition");
                if (!lhs || !rhs) continue;
                if (q.canonical(*lhs) != q.canonical(*rhs)) fail("associativity fails", x);
            } while (advance());
        }
    }
    return rep;
}

OperadPtr corrupt_operad(OperadPtr inner) {
    return std::make_shared<CorruptOperad>(std::move(inner));
}

}  // namespace plethyon
