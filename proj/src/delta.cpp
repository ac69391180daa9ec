#include "plethyon/delta.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace plethyon {

// --- tensor machinery ---

BasisMonomial monomial_of(const Flavor& f, std::vector<Generator> factors) {
    if (f.commutative()) std::sort(factors.begin(), factors.end());
    return {std::move(factors)};
}

BasisMonomial monomial_mul(const Flavor& f, const BasisMonomial& a, const BasisMonomial& b) {
    std::vector<Generator> factors = a.factors;
    factors.insert(factors.end(), b.factors.begin(), b.factors.end());
    return monomial_of(f, std::move(factors));
}

void TensorElement::add(std::vector<BasisMonomial> key, const Rational& c) {
    if (c == 0) return;
    if (int(key.size()) != legs) throw std::invalid_argument("tensor term with wrong leg count");
    auto [it, fresh] = terms.try_emplace(std::move(key), c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
    if (legs != o.legs) throw std::invalid_argument("tensor leg mismatch");
    for (const auto& [k, c] : o.terms) add(k, c);
    return *this;
}

TensorElement tensor_scale(const TensorElement& t, const Rational& c) {
    TensorElement out(t.legs);
    for (const auto& [k, v] : t.terms) out.add(k, v * c);
    return out;
}

TensorElement tensor_mul(const Flavor& f, const TensorElement& a, const TensorElement& b) {
    if (a.legs != b.legs) throw std::invalid_argument("tensor leg mismatch");
    TensorElement out(a.legs);
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms) {
            std::vector<BasisMonomial> key;
            key.reserve(std::size_t(a.legs));
            for (int i = 0; i < a.legs; ++i) key.push_back(monomial_mul(f, ka[std::size_t(i)], kb[std::size_t(i)]));
            out.add(std::move(key), ca * cb);
        }
    return out;
}

TensorElement tensor_expand_leg(const TensorElement& t, int leg,
                                const std::function<TensorElement(const BasisMonomial&)>& expand) {
    int out_legs = -1;
    TensorElement out(t.legs + 1);  // provisional; fixed below on first expansion
    bool first = true;
    for (const auto& [k, c] : t.terms) {
        TensorElement e = expand(k[std::size_t(leg)]);
        if (first) {
            out_legs = t.legs - 1 + e.legs;
            out = TensorElement(out_legs);
            first = false;
        }
        for (const auto& [ek, ec] : e.terms) {
            std::vector<BasisMonomial> key;
            for (int i = 0; i < leg; ++i) key.push_back(k[std::size_t(i)]);
            key.insert(key.end(), ek.begin(), ek.end());
            for (int i = leg + 1; i < t.legs; ++i) key.push_back(k[std::size_t(i)]);
            out.add(std::move(key), c * ec);
        }
    }
    return out;
}

TensorElement tensor_contract_leg(const TensorElement& t, int leg,
                                  const std::function<Rational(const BasisMonomial&)>& functional) {
    TensorElement out(t.legs - 1);
    for (const auto& [k, c] : t.terms) {
        Rational v = functional(k[std::size_t(leg)]);
        if (v == 0) continue;
        std::vector<BasisMonomial> key;
        for (int i = 0; i < t.legs; ++i)
            if (i != leg) key.push_back(k[std::size_t(i)]);
        out.add(std::move(key), c * v);
    }
    return out;
}

// --- shared decomposition enumeration ---

namespace {

Lambda lambda_sub(const Lambda& a, const Lambda& b) {
    Lambda out = a;
    for (const auto& [arrow, m] : b.entries()) out.add(arrow, -std::int64_t(m));
    return out;
}

// A candidate cell of the outer grid: an outer arrow m together with an
// inner class whose m-shift sits inside sigma.
struct Cell {
    Arrow m;
    Generator mu;
    Lambda shift;

    friend auto operator<=>(const Cell& x, const Cell& y) {
        return std::tie(x.m, x.mu) <=> std::tie(y.m, y.mu);
    }
};

std::vector<Cell> candidate_cells(const Flavor& f, const Generator& sigma) {
    const BaseCategory& base = *f.base;
    std::set<Arrow> outer;
    for (const auto& [a, mult] : sigma.idx.lam.entries())
        for (const auto& [m, k] : base.factorizations(a)) {
            (void)k;
            outer.insert(m);
        }

    std::vector<Cell> cells;
    for (const Arrow& m : outer) {
        std::vector<Arrow> quotients;
        for (const auto& [a, mult] : sigma.idx.lam.entries())
            for (const auto& [m2, k] : base.factorizations(a))
                if (m2 == m) quotients.push_back(k);
        std::int64_t wt = weight(base, sigma.idx.lam);
        for (Lambda& mu : enumerate_lambdas(base, quotients, sigma.idx.lam.size(),
                                            std::max<std::int64_t>(wt, 1))) {
            Lambda shift = verschiebung(base, m, mu);
            if (!shift.dominated_by(sigma.idx.lam)) continue;
            cells.push_back({m, Generator{m.tgt, Index::of(std::move(mu))}, std::move(shift)});
        }
    }
    std::sort(cells.begin(), cells.end());
    return cells;
}

// Multisets of cells whose shifts sum to sigma, reported as (cell, count)
// runs in canonical order.
void for_each_placement(const Flavor& f, const Generator& sigma,
                        const std::function<void(const std::vector<std::pair<const Cell*, int>>&)>& emit) {
    std::vector<Cell> cells = candidate_cells(f, sigma);
    std::vector<std::pair<const Cell*, int>> chosen;
    auto rec = [&](auto&& self, std::size_t i, const Lambda& remaining) -> void {
        if (remaining.empty()) {
            emit(chosen);
            return;
        }
        if (i >= cells.size()) return;
        self(self, i + 1, remaining);  // skip candidate i
        Lambda rest = remaining;
        int count = 0;
        while (cells[i].shift.dominated_by(rest)) {
            rest = lambda_sub(rest, cells[i].shift);
            ++count;
            chosen.push_back({&cells[i], count});
            chosen.back().second = count;
            // keep only one entry per candidate with the current count
            if (count > 1) chosen.erase(chosen.end() - 2);
            self(self, i + 1, rest);
        }
        if (count > 0) chosen.pop_back();
    };
    rec(rec, 0, sigma.idx.lam);
}

struct LambdaPlacement {
    Lambda outer;                         // multiset of outer arrows
    std::vector<Generator> inners;        // sorted class list, with repeats
    Rational coefficient;                 // contribution weight of this placement
    Int assignments;                      // #cell assignments realizing it
};

void for_each_lambda_placement(const Flavor& f, const Generator& sigma,
                               const std::function<void(LambdaPlacement)>& emit) {
    Int aut_sigma = f.aut(sigma);
    for_each_placement(f, sigma, [&](const std::vector<std::pair<const Cell*, int>>& runs) {
        Lambda outer;
        std::vector<Generator> inners;
        Int denom_cells = 1;   // prod over (m, mu) classes of mult!
        Int denom_inner = 1;   // prod of aut(mu)
        for (const auto& [cell, count] : runs) {
            outer.add(cell->m, count);
            denom_cells *= factorial(count);
            for (int i = 0; i < count; ++i) {
                inners.push_back(cell->mu);
                denom_inner *= f.aut(cell->mu);
            }
        }
        Int outer_cells_perm = 1;  // prod over columns of lambda_m!
        Int aut_outer = aut_order(*f.base, outer, f.inner);
        for (const auto& [m, mult] : outer.entries()) outer_cells_perm *= factorial(mult);

        Int assignments = outer_cells_perm / denom_cells;
        Rational coeff = Rational(aut_sigma * assignments, aut_outer * denom_inner);
        std::sort(inners.begin(), inners.end());
        emit({std::move(outer), std::move(inners), std::move(coeff), std::move(assignments)});
    });
}

struct WordSplit {
    Word outer;
    std::vector<Generator> inners;  // slot order
};

void for_each_word_split(const Flavor& f, const Generator& sigma,
                         const std::function<void(const WordSplit&)>& emit) {
    const BaseCategory& base = *f.base;
    const std::vector<Arrow>& nu = sigma.idx.word.letters;
    WordSplit cur;
    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == nu.size()) {
            emit(cur);
            return;
        }
        for (std::size_t len = 1; pos + len <= nu.size(); ++len) {
            // candidate outer arrows: left halves of factorizations of the
            // block's first letter
            std::set<Arrow> ms;
            for (const auto& [m, k] : base.factorizations(nu[pos])) {
                (void)k;
                ms.insert(m);
            }
            for (const Arrow& m : ms) {
                // per-letter quotient arrows k with m;k = letter
                std::vector<std::vector<Arrow>> quots(len);
                bool ok = true;
                for (std::size_t i = 0; i < len && ok; ++i) {
                    for (const auto& [m2, k] : base.factorizations(nu[pos + i]))
                        if (m2 == m) quots[i].push_back(k);
                    if (quots[i].empty()) ok = false;
                }
                if (!ok) continue;
                // cartesian product of quotient choices
                Word kappa;
                kappa.letters.resize(len);
                auto pick = [&](auto&& pickself, std::size_t i) -> void {
                    if (i == len) {
                        cur.outer.letters.push_back(m);
                        cur.inners.push_back(Generator{m.tgt, Index::of(kappa)});
                        self(self, pos + len);
                        cur.outer.letters.pop_back();
                        cur.inners.pop_back();
                        return;
                    }
                    for (const Arrow& k : quots[i]) {
                        kappa.letters[i] = k;
                        pickself(pickself, i + 1);
                    }
                };
                pick(pick, 0);
            }
        }
    };
    rec(rec, 0);
}

}  // namespace

std::vector<DecompositionClass> enumerate_decompositions(const Flavor& f, const Generator& sigma,
                                                         const std::optional<Index>& restrict_outer) {
    check_generator(*f.base, sigma);
    std::map<std::pair<Generator, std::vector<Generator>>, Int> placements;
    if (f.vars == IndexKind::lambda) {
        for_each_lambda_placement(f, sigma, [&](LambdaPlacement p) {
            if (restrict_outer && !(Index::of(p.outer) == *restrict_outer)) return;
            Generator outer_gen{sigma.color, Index::of(p.outer)};
            placements[{outer_gen, p.inners}] += p.assignments;
        });
    } else {
        for_each_word_split(f, sigma, [&](const WordSplit& s) {
            if (restrict_outer && !(Index::of(s.outer) == *restrict_outer)) return;
            Generator outer_gen{sigma.color, Index::of(s.outer)};
            std::vector<Generator> inners = s.inners;
            if (f.commutative()) std::sort(inners.begin(), inners.end());
            placements[{outer_gen, inners}] += 1;
        });
    }
    std::vector<DecompositionClass> out;
    for (const auto& [key, count] : placements) {
        Int rep = 1;
        if (f.vars == IndexKind::lambda) {
            const auto& inners = key.second;
            std::size_t i = 0;
            while (i < inners.size()) {
                std::size_t j = i;
                while (j < inners.size() && inners[j] == inners[i]) ++j;
                rep *= factorial(std::int64_t(j - i));
                i = j;
            }
        }
        out.push_back({key.first, key.second, count, count * rep});
    }
    std::sort(out.begin(), out.end());
    return out;
}

TensorElement delta_combinatorial(const Flavor& f, const Generator& sigma) {
    check_generator(*f.base, sigma);
    TensorElement out(2);
    if (f.vars == IndexKind::lambda) {
        for_each_lambda_placement(f, sigma, [&](LambdaPlacement p) {
            BasisMonomial left = monomial_of(f, std::move(p.inners));
            BasisMonomial right{{Generator{sigma.color, Index::of(p.outer)}}};
            out.add({std::move(left), std::move(right)}, p.coefficient);
        });
    } else {
        Int aut_sigma = f.aut(sigma);
        for_each_word_split(f, sigma, [&](const WordSplit& s) {
            Int denom = word_aut_order(*f.base, s.outer, f.inner);
            for (const Generator& g : s.inners) denom *= f.aut(g);
            BasisMonomial left = monomial_of(f, s.inners);
            BasisMonomial right{{Generator{sigma.color, Index::of(s.outer)}}};
            out.add({std::move(left), std::move(right)}, Rational(aut_sigma, denom));
        });
    }
    return out;
}

// --- symbolic route ---

namespace {

// Polynomial in the generic coefficients whose parsed form is the
// comultiplication: extract the sigma coefficient of G (*) F.
Poly extract_poly(const Flavor& f, const Generator& sigma, std::int64_t D) {
    const BaseCategory& base = *f.base;
    if (D < 0) D = std::max<std::int64_t>(sigma.size(), 1);
    if (D < sigma.size())
        throw truncation_error("delta_symbolic: truncation below |sigma|");

    std::set<Arrow> universe;
    auto visit_part = [&](const Arrow& a) {
        for (const auto& [m, k] : base.factorizations(a)) {
            universe.insert(m);
            universe.insert(k);
        }
    };
    if (sigma.idx.kind == IndexKind::lambda)
        for (const auto& [a, mult] : sigma.idx.lam.entries()) visit_part(a);
    else
        for (const Arrow& a : sigma.idx.word.letters) visit_part(a);
    std::vector<Arrow> arrows(universe.begin(), universe.end());

    RingKind ring = f.coeffs;
    std::int64_t max_weight = std::max<std::int64_t>(weight(base, sigma.idx), 1);

    Series g = generic_series_over('g', f.base, sigma.color, f.vars, f.inner, ring, arrows, D,
                                   max_weight);
    SeriesTuple ft;
    for (int c = 0; c < base.object_count(); ++c)
        ft.emplace(c, generic_series_over('f', f.base, c, f.vars, f.inner, ring, arrows, D,
                                          max_weight));

    KeyFilter filter;
    if (sigma.idx.kind == IndexKind::lambda) {
        Lambda target = sigma.idx.lam;
        filter = [target](const Index& k) { return k.lam.dominated_by(target); };
    } else {
        Word target = sigma.idx.word;
        filter = [target](const Index& k) {
            if (k.word.letters.size() > target.letters.size()) return false;
            return std::equal(k.word.letters.begin(), k.word.letters.end(),
                              target.letters.begin());
        };
    }

    Series h = substitute_plethystic(g, ft, D, filter);
    Poly p = coefficient(h, sigma.idx);
    Poly scaled(ring);
    for (const auto& [m, c] : p.terms()) scaled.add_term(m, c * Rational(f.aut(sigma)));
    return scaled;
}

TensorElement parse_poly(const Flavor& f, const Poly& p, bool expect_single_right) {
    TensorElement out(2);
    for (const auto& [mono, coeff] : p.terms()) {
        std::vector<Generator> left, right;
        for (const Symbol& s : mono) {
            if (s.prefix == 'g')
                right.push_back(s.gen);
            else
                left.push_back(s.gen);
        }
        if (expect_single_right && right.size() != 1)
            throw std::logic_error("symbolic route produced a non-linear right leg");
        out.add({monomial_of(f, std::move(left)), monomial_of(f, std::move(right))}, coeff);
    }
    return out;
}

}  // namespace

TensorElement delta_symbolic(const Flavor& f, const Generator& sigma, std::int64_t D) {
    check_generator(*f.base, sigma);
    return parse_poly(f, extract_poly(f, sigma, D), true);
}

TensorElement delta_symbolic_monomial(const Flavor& f, const BasisMonomial& m, std::int64_t D) {
    Poly acc = Poly::constant(f.coeffs, 1);
    for (const Generator& g : m.factors) acc = acc * extract_poly(f, g, D);
    return parse_poly(f, acc, false);
}

TensorElement delta_monomial(const Flavor& f, const BasisMonomial& m) {
    TensorElement acc(2);
    acc.add({BasisMonomial{}, BasisMonomial{}}, 1);
    for (const Generator& g : m.factors) acc = tensor_mul(f, acc, delta_combinatorial(f, g));
    return acc;
}

Rational counit(const Flavor& f, const BasisMonomial& m) {
    for (const Generator& g : m.factors)
        if (!(g == unit_generator(*f.base, g.color, f.vars))) return 0;
    return 1;
}

BasisMonomial product(const Flavor& f, const BasisMonomial& a, const BasisMonomial& b) {
    return monomial_mul(f, a, b);
}

}  // namespace plethyon
