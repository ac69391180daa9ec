#include "plethyon/surjections.hpp"

#include "plethyon/textio.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace plethyon {

bool FinMap::surjective() const {
    std::vector<bool> hit(std::size_t(cod), false);
    for (int v : map) {
        if (v < 0 || v >= cod) return false;
        hit[std::size_t(v)] = true;
    }
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool FinMap::monotone() const { return std::is_sorted(map.begin(), map.end()); }

std::vector<std::vector<int>> FinMap::fibers() const {
    std::vector<std::vector<int>> f(static_cast<std::size_t>(cod));
    for (int i = 0; i < dom; ++i) f[std::size_t(map[std::size_t(i)])].push_back(i);
    return f;
}

FinMap fin_identity(int n) {
    FinMap f{n, n, {}};
    f.map.resize(std::size_t(n));
    std::iota(f.map.begin(), f.map.end(), 0);
    return f;
}

FinMap fin_compose(const FinMap& f, const FinMap& g) {
    if (f.cod != g.dom) throw std::invalid_argument("fin_compose: domain mismatch");
    FinMap out{f.dom, g.cod, {}};
    out.map.reserve(std::size_t(f.dom));
    for (int v : f.map) out.map.push_back(g(v));
    return out;
}

MonotoneSquare monotone_pullback(const FinMap& g, const FinMap& f) {
    if (g.cod != f.cod) throw std::invalid_argument("monotone_pullback: cospan mismatch");
    if (!g.surjective() || !f.surjective())
        throw std::invalid_argument("monotone_pullback: maps must be surjective");
    if (!g.monotone()) throw std::invalid_argument("monotone_pullback: g must be monotone");
    MonotoneSquare sq;
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < g.dom; ++x)
        for (int y = 0; y < f.dom; ++y)
            if (g(x) == f(y)) pairs.push_back({x, y});
    std::sort(pairs.begin(), pairs.end());
    sq.p = {int(pairs.size()), g.dom, {}};
    sq.q = {int(pairs.size()), f.dom, {}};
    for (const auto& [x, y] : pairs) {
        sq.p.map.push_back(x);
        sq.q.map.push_back(y);
    }
    return sq;
}

Marking marking_by_name(const std::string& name) {
    if (name == "plain") return Marking::plain;
    if (name == "linear") return Marking::linear;
    if (name == "monotone") return Marking::monotone;
    throw std::invalid_argument("unknown marking: " + name);
}

BasePtr ts_base(const TSOptions& o) {
    return o.colors == 1 ? classical_base() : colored_classical_base(o.colors);
}

const Flavor& ts_flavor(const TSOptions& o) {
    auto pick = [](const char* n) -> const Flavor& { return flavor_by_name(n); };
    if (o.colors == 2) {
        if (o.left == Marking::plain && o.right == Marking::plain) return pick("P2");
        throw std::invalid_argument("decorated colored TS variants are not registered");
    }
    if (o.colors != 1) throw std::invalid_argument("ts_flavor: unsupported color count");
    if (o.right == Marking::plain) return o.left == Marking::plain ? pick("P") : pick("P_exp");
    if (o.right == Marking::linear) return o.left == Marking::plain ? pick("Pw") : pick("Plin_w");
    return o.left == Marking::plain ? pick("Pw_nc") : pick("Plin_w_nc");
}

Generator ts_class_of(const TSOptions& o, const TSLevel1& d) {
    if (!d.upper.surjective()) throw std::invalid_argument("ts diagram: upper map not surjective");
    auto fibers = d.upper.fibers();
    auto arrow_at = [&](int j) -> Arrow {
        int color = o.colors == 1 ? 0 : d.t00_color.at(std::size_t(j));
        return Arrow{d.out_color, color, std::int64_t(fibers[std::size_t(j)].size())};
    };
    if (o.word_classes()) {
        Word w;
        for (int j = 0; j < d.upper.cod; ++j) w.letters.push_back(arrow_at(j));
        return {d.out_color, Index::of(std::move(w))};
    }
    Lambda l;
    for (int j = 0; j < d.upper.cod; ++j) l.add(arrow_at(j), 1);
    return {d.out_color, Index::of(std::move(l))};
}

Int ts_aut_order(const TSOptions& o, const TSLevel1& d) {
    auto fibers = d.upper.fibers();
    const int p = d.upper.cod;
    auto color_of = [&](int j) { return o.colors == 1 ? 0 : d.t00_color.at(std::size_t(j)); };

    Int total = 0;
    std::vector<int> perm(static_cast<std::size_t>(p));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        Int fiber_ways = 1;
        for (int j = 0; j < p && ok; ++j) {
            int k = perm[std::size_t(j)];
            if (o.right != Marking::plain && k != j) ok = false;  // T00 order frozen
            if (ok && (color_of(j) != color_of(k) ||
                       fibers[std::size_t(j)].size() != fibers[std::size_t(k)].size()))
                ok = false;
            if (ok && o.left == Marking::plain)
                fiber_ways *= factorial(std::int64_t(fibers[std::size_t(j)].size()));
        }
        if (ok) total += fiber_ways;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

TSLevel1 ts_canonical_diagram(const TSOptions& o, const Generator& cls) {
    BasePtr base = ts_base(o);
    check_generator(*base, cls);
    TSLevel1 d;
    d.out_color = cls.color;
    std::vector<Arrow> parts;
    if (cls.idx.kind == IndexKind::word) {
        parts = cls.idx.word.letters;
    } else {
        for (const auto& [a, m] : cls.idx.lam.entries())
            for (std::uint32_t i = 0; i < m; ++i) parts.push_back(a);
    }
    int total = 0;
    for (const Arrow& a : parts) total += int(a.label);
    d.upper = {total, int(parts.size()), {}};
    for (int j = 0; j < int(parts.size()); ++j) {
        d.t00_color.push_back(parts[std::size_t(j)].tgt);
        for (std::int64_t i = 0; i < parts[std::size_t(j)].label; ++i) d.upper.map.push_back(j);
    }
    return d;
}

namespace {

// Arrangements of inner diagrams over the cells of an outer diagram.
// Arithmetic on classes only prunes the search; acceptance of an
// arrangement is decided by gluing explicit value tables through the
// monotone pullback and reading the long face back off.
class Gluer {
public:
    Gluer(const TSOptions& opts, const Generator& s)
        : o_(opts), base_(ts_base(opts)), sigma_(s), out_(2) {}

    TensorElement run() {
        if (o_.word_classes())
            run_word();
        else
            run_lambda();
        return std::move(out_);
    }

private:
    Int aut_of(const Generator& cls) {
        auto it = aut_memo_.find(cls);
        if (it != aut_memo_.end()) return it->second;
        Int a = ts_aut_order(o_, ts_canonical_diagram(o_, cls));
        aut_memo_.emplace(cls, a);
        return a;
    }

    Generator glue(const std::vector<Arrow>& outer_arrows,
                   const std::vector<Generator>& contents) const {
        const int k = int(outer_arrows.size());
        FinMap outer_upper{0, k, {}};
        for (int j = 0; j < k; ++j)
            for (std::int64_t i = 0; i < outer_arrows[std::size_t(j)].label; ++i)
                outer_upper.map.push_back(j);
        outer_upper.dom = int(outer_upper.map.size());

        FinMap upper{0, 0, {}};
        FinMap comp{0, k, {}};
        std::vector<int> t00_color;
        for (int j = 0; j < k; ++j) {
            TSLevel1 dj = ts_canonical_diagram(o_, contents[std::size_t(j)]);
            int t00_off = upper.cod;
            for (int v : dj.upper.map) upper.map.push_back(v + t00_off);
            upper.cod += dj.upper.cod;
            for (int c : dj.t00_color) t00_color.push_back(c);
            for (int i = 0; i < dj.upper.dom; ++i) comp.map.push_back(j);
        }
        upper.dom = int(upper.map.size());
        comp.dom = int(comp.map.size());

        MonotoneSquare sq = monotone_pullback(outer_upper, comp);
        FinMap long_left = fin_compose(sq.q, upper);
        return ts_class_of(o_, TSLevel1{long_left, t00_color, sigma_.color});
    }

    void emit(const std::vector<Arrow>& slots, const std::vector<Generator>& contents) {
        if (!(glue(slots, contents) == sigma_)) return;
        Generator outer_gen{sigma_.color, {}};
        if (o_.word_classes()) {
            outer_gen.idx = Index::of(Word{slots});
        } else {
            Lambda l;
            for (const Arrow& m : slots) l.add(m, 1);
            outer_gen.idx = Index::of(std::move(l));
        }
        Int denom = aut_of(outer_gen);
        for (const Generator& g : contents) denom *= aut_of(g);
        std::vector<Generator> left = contents;
        if (!o_.ordered_product()) std::sort(left.begin(), left.end());
        out_.add({BasisMonomial{std::move(left)}, BasisMonomial{{outer_gen}}},
                 Rational(aut_of(sigma_), denom));
    }

    void run_lambda() {
        const Lambda& target = sigma_.idx.lam;
        const std::int64_t target_weight = weight(*base_, target);
        std::set<Arrow> outer_set;
        for (const auto& [a, mult] : target.entries())
            for (const auto& [m, k] : base_->factorizations(a)) {
                (void)k;
                if (m.src == sigma_.color) outer_set.insert(m);
            }
        std::vector<Arrow> outer_arrows(outer_set.begin(), outer_set.end());

        std::map<Arrow, std::vector<std::pair<Generator, Lambda>>> contents;
        for (const Arrow& m : outer_arrows) {
            std::vector<Arrow> quots;
            for (const auto& [a, mult] : target.entries())
                for (const auto& [m2, kq] : base_->factorizations(a))
                    if (m2 == m) quots.push_back(kq);
            std::vector<std::pair<Generator, Lambda>> cands;
            for (Lambda& mu : enumerate_lambdas(*base_, quots, target.size(),
                                                std::max<std::int64_t>(target_weight, 1))) {
                Lambda shift = verschiebung(*base_, m, mu);
                if (!shift.dominated_by(target)) continue;
                cands.push_back({Generator{m.tgt, Index::of(std::move(mu))}, std::move(shift)});
            }
            contents.emplace(m, std::move(cands));
        }

        std::vector<Arrow> slots;
        std::vector<Generator> chosen;
        Lambda remaining;

        std::function<void()> fill_slots = [&]() {
            if (chosen.size() == slots.size()) {
                if (remaining.empty()) emit(slots, chosen);
                return;
            }
            const Arrow& m = slots[chosen.size()];
            for (const auto& [g, shift] : contents.at(m)) {
                if (!shift.dominated_by(remaining)) continue;
                Lambda saved = remaining;
                for (const auto& [a, mult] : shift.entries()) remaining.add(a, -std::int64_t(mult));
                chosen.push_back(g);
                fill_slots();
                chosen.pop_back();
                remaining = std::move(saved);
            }
        };

        std::function<void(std::size_t, std::int64_t)> build_outer = [&](std::size_t i,
                                                                         std::int64_t wt) {
            if (i == outer_arrows.size()) {
                if (!slots.empty()) {
                    remaining = target;
                    fill_slots();
                }
                return;
            }
            build_outer(i + 1, wt);
            const Arrow& m = outer_arrows[i];
            std::int64_t sz = base_->size(m);
            std::size_t added = 0;
            while (std::int64_t(slots.size()) < target.size() &&
                   wt + std::int64_t(added + 1) * sz <= target_weight) {
                slots.push_back(m);
                ++added;
                build_outer(i + 1, wt + std::int64_t(added) * sz);
            }
            while (added--) slots.pop_back();
        };
        build_outer(0, 0);
    }

    void run_word() {
        const std::vector<Arrow>& nu = sigma_.idx.word.letters;
        std::vector<Arrow> slots;
        std::vector<Generator> chosen;

        std::function<void(std::size_t)> rec = [&](std::size_t pos) {
            if (pos == nu.size()) {
                if (!slots.empty()) emit(slots, chosen);
                return;
            }
            for (std::size_t len = 1; pos + len <= nu.size(); ++len) {
                std::set<Arrow> ms;
                for (const auto& [m, k] : base_->factorizations(nu[pos])) {
                    (void)k;
                    if (m.src == sigma_.color) ms.insert(m);
                }
                for (const Arrow& m : ms) {
                    Word kappa;
                    bool ok = true;
                    for (std::size_t i = 0; i < len && ok; ++i) {
                        bool found = false;
                        for (const auto& [m2, k] : base_->factorizations(nu[pos + i]))
                            if (m2 == m) {
                                kappa.letters.push_back(k);
                                found = true;
                                break;  // quotients are unique over TS bases
                            }
                        if (!found) ok = false;
                    }
                    if (!ok) continue;
                    slots.push_back(m);
                    chosen.push_back(Generator{m.tgt, Index::of(kappa)});
                    rec(pos + len);
                    chosen.pop_back();
                    slots.pop_back();
                }
            }
        };
        rec(0);
    }

    TSOptions o_;
    BasePtr base_;
    Generator sigma_;
    std::map<Generator, Int> aut_memo_;
    TensorElement out_;
};

}  // namespace

std::vector<IsoClass> enumerate_ts(int level, std::int64_t max_bottom, const TSOptions& o,
                                   std::int64_t hard_limit) {
    if (max_bottom > hard_limit)
        throw std::out_of_range("enumerate_ts: bound exceeds the configured limit");
    if (level != 1 && level != 2)
        throw std::invalid_argument("enumerate_ts: level must be 1 or 2");
    BasePtr base = ts_base(o);
    const Flavor& fl = ts_flavor(o);

    std::vector<IsoClass> out;
    if (level == 1) {
        for (const Generator& g : enumerate_generators(fl, max_bottom)) {
            if (weight(*base, g.idx) > max_bottom) continue;
            out.push_back({generator_text(*base, g), g,
                           ts_aut_order(o, ts_canonical_diagram(o, g))});
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    // Level 2: a connected 2-simplex is an outer cell row with one inner
    // diagram per cell; its class is the multiset (resp. sequence) of
    // (cell arrow, content class) pairs and |T02| = sum size(m) * weight.
    for (int c = 0; c < base->object_count(); ++c) {
        std::vector<std::pair<Arrow, Generator>> cells;
        for (const Arrow& m : base->arrows_from(c, max_bottom)) {
            for (const Generator& g : enumerate_generators(fl, max_bottom)) {
                if (g.color != m.tgt) continue;
                if (base->size(m) * weight(*base, g.idx) > max_bottom) continue;
                cells.push_back({m, g});
            }
        }
        std::sort(cells.begin(), cells.end());

        std::vector<std::size_t> chosen;
        auto record = [&]() {
            Int aut = 1;
            // permutations of equal cells, when the cell row is unordered
            if (o.right == Marking::plain) {
                std::size_t i = 0;
                while (i < chosen.size()) {
                    std::size_t j = i;
                    while (j < chosen.size() && chosen[j] == chosen[i]) ++j;
                    aut *= factorial(std::int64_t(j - i));
                    i = j;
                }
            }
            std::string key = "[";
            for (std::size_t idx : chosen) {
                const auto& [m, g] = cells[idx];
                aut *= ts_aut_order(o, ts_canonical_diagram(o, g));
                if (o.left == Marking::plain) aut *= factorial(base->size(m));
                if (key.size() > 1) key += ", ";
                key += arrow_text(*base, m) + ":" + generator_text(*base, g);
            }
            key += "]";
            out.push_back({key, Generator{}, aut});
        };
        // iterative driver: multisets for plain rows, sequences otherwise
        std::function<void(std::size_t, std::int64_t)> drive = [&](std::size_t start,
                                                                   std::int64_t tot) {
            if (!chosen.empty()) record();
            std::size_t begin = o.right == Marking::plain ? start : 0;
            for (std::size_t j = begin; j < cells.size(); ++j) {
                const auto& [m, g] = cells[j];
                std::int64_t sz = base->size(m) * weight(*base, g.idx);
                if (tot + sz > max_bottom) continue;
                chosen.push_back(j);
                drive(j, tot + sz);
                chosen.pop_back();
            }
        };
        chosen.clear();
        drive(0, 0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

TensorElement ts_delta(const TSOptions& o, const Generator& sigma) {
    BasePtr base = ts_base(o);
    check_generator(*base, sigma);
    return Gluer(o, sigma).run();
}

Int forest_aut_order(const std::vector<ForestNode>& forest, bool sym_ops, bool sym_bar) {
    std::function<int(const ForestNode&)> depth = [&](const ForestNode& n) -> int {
        if (n.children.empty()) return 0;
        int d = depth(n.children.front());
        for (const ForestNode& c : n.children)
            if (depth(c) != d) throw std::invalid_argument("forest: leaves at unequal depths");
        return d + 1;
    };
    if (!forest.empty()) {
        int d0 = depth(forest.front());
        for (const ForestNode& t : forest)
            if (depth(t) != d0) throw std::invalid_argument("forest: trees of unequal depths");
    }

    std::function<std::string(const ForestNode&)> key = [&](const ForestNode& n) -> std::string {
        std::vector<std::string> ks;
        for (const ForestNode& c : n.children) ks.push_back(key(c));
        if (sym_ops) std::sort(ks.begin(), ks.end());
        std::string s = "(" + n.color;
        for (const std::string& k : ks) s += k;
        return s + ")";
    };
    std::function<Int(const ForestNode&)> aut = [&](const ForestNode& n) -> Int {
        Int r = 1;
        for (const ForestNode& c : n.children) r *= aut(c);
        if (sym_ops) {
            std::map<std::string, int> groups;
            for (const ForestNode& c : n.children) ++groups[key(c)];
            for (const auto& [k, cnt] : groups) {
                (void)k;
                r *= factorial(cnt);
            }
        }
        return r;
    };

    Int r = 1;
    for (const ForestNode& t : forest) r *= aut(t);
    if (sym_bar) {
        std::map<std::string, int> groups;
        for (const ForestNode& t : forest) ++groups[key(t)];
        for (const auto& [k, cnt] : groups) {
            (void)k;
            r *= factorial(cnt);
        }
    }
    return r;
}

}  // namespace plethyon
