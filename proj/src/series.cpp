#include "plethyon/series.hpp"

#include <algorithm>

namespace plethyon {

namespace {

void require_compatible(const Series& a, const Series& b) {
    if (a.base->name() != b.base->name())
        throw std::invalid_argument("series over different bases");
    if (a.kind != b.kind) throw std::invalid_argument("series of different variable kinds");
    if (a.ring != b.ring) throw std::invalid_argument("series over different coefficient rings");
}

Index combine_keys(const Series& s, const Index& a, const Index& b) {
    if (s.kind == IndexKind::lambda) return Index::of(lambda_sum(a.lam, b.lam));
    Word w = a.word;
    w.letters.insert(w.letters.end(), b.word.letters.begin(), b.word.letters.end());
    return Index::of(std::move(w));
}

void check_no_constant_term(const Series& f) {
    for (const auto& [k, c] : f.terms)
        if (k.size() == 0) throw std::invalid_argument("substitution operand has a constant term");
}

}  // namespace

void Series::add_term(const Index& key, const Poly& c) {
    if (c.is_zero()) return;
    if (key.size() == 0) throw std::invalid_argument("series cannot store a constant term");
    if (key.size() > D) return;
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

Series series_zero(BasePtr base, int color, IndexKind kind, RingKind ring, std::int64_t D) {
    Series s;
    s.base = std::move(base);
    s.color = color;
    s.kind = kind;
    s.ring = ring;
    s.D = D;
    return s;
}

Series series_variable(BasePtr base, const Arrow& a, IndexKind kind, RingKind ring,
                       std::int64_t D) {
    Series s = series_zero(std::move(base), a.src, kind, ring, D);
    Index key = kind == IndexKind::lambda ? Index::of(Lambda::single(a)) : Index::of(Word{{a}});
    s.add_term(key, Rational(1));
    return s;
}

Series series_add(const Series& a, const Series& b) {
    require_compatible(a, b);
    Series out = a;
    out.D = std::min(a.D, b.D);
    if (out.D < a.D) out = series_truncate(a, out.D);
    for (const auto& [k, c] : b.terms) out.add_term(k, c);
    return out;
}

Series series_scale(const Series& a, const Rational& c) {
    Series out = series_zero(a.base, a.color, a.kind, a.ring, a.D);
    for (const auto& [k, v] : a.terms) {
        Poly p = v;
        p *= c;
        out.add_term(k, p);
    }
    return out;
}

Series series_truncate(const Series& a, std::int64_t D) {
    Series out = series_zero(a.base, a.color, a.kind, a.ring, D);
    for (const auto& [k, v] : a.terms) out.add_term(k, v);
    return out;
}

Series series_mul(const Series& a, const Series& b, const KeyFilter& filter) {
    require_compatible(a, b);
    Series out = series_zero(a.base, a.color, a.kind, a.ring, std::min(a.D, b.D));
    for (const auto& [ka, ca] : a.terms) {
        for (const auto& [kb, cb] : b.terms) {
            if (ka.size() + kb.size() > out.D) continue;
            Index key = combine_keys(out, ka, kb);
            if (filter && !filter(key)) continue;
            out.add_term(key, ca * cb);
        }
    }
    return out;
}

Series plethystic_shift(const Series& f, const Arrow& m, const KeyFilter& filter) {
    Series out = series_zero(f.base, m.src, f.kind, f.ring, f.D);
    for (const auto& [k, c] : f.terms) {
        Index key = f.kind == IndexKind::lambda
                        ? Index::of(verschiebung(*f.base, m, k.lam))
                        : Index::of(verschiebung_word(*f.base, m, k.word));
        if (filter && !filter(key)) continue;
        out.add_term(key, c);
    }
    return out;
}

Series substitute_plethystic(const Series& g, const SeriesTuple& f, std::int64_t D,
                             const KeyFilter& filter) {
    for (const auto& [c, fc] : f) {
        if (fc.D < D) throw std::invalid_argument("inner series truncated below target degree");
        check_no_constant_term(fc);
        if (fc.color != c) throw std::invalid_argument("series tuple component color mismatch");
    }
    Series out = series_zero(g.base, g.color, g.kind, g.ring, D);

    // Shifts are shared between keys of g. The key filter only applies to
    // accumulated products: individual factors may contribute mid-word
    // pieces that the filter would reject.
    std::map<Arrow, Series> shifts;
    auto shift_of = [&](const Arrow& m) -> const Series& {
        auto it = shifts.find(m);
        if (it != shifts.end()) return it->second;
        auto fit = f.find(m.tgt);
        if (fit == f.end())
            throw std::invalid_argument("substitution needs a series component at every color");
        require_compatible(g, fit->second);
        return shifts.emplace(m, plethystic_shift(series_truncate(fit->second, D), m))
            .first->second;
    };

    for (const auto& [key, coeff] : g.terms) {
        Series acc;
        bool first = true;
        auto mul_into = [&](const Series& s) {
            if (first) {
                acc = series_truncate(s, D);
                if (filter) {
                    Series filtered = series_zero(acc.base, acc.color, acc.kind, acc.ring, acc.D);
                    for (const auto& [k, c] : acc.terms)
                        if (filter(k)) filtered.add_term(k, c);
                    acc = std::move(filtered);
                }
                first = false;
            } else {
                acc = series_mul(acc, s, filter);
            }
        };
        if (key.kind == IndexKind::lambda) {
            for (const auto& [m, mult] : key.lam.entries())
                for (std::uint32_t i = 0; i < mult; ++i) mul_into(shift_of(m));
        } else {
            for (const Arrow& m : key.word.letters) mul_into(shift_of(m));
        }
        if (first) throw std::invalid_argument("outer series has a constant term");
        for (const auto& [k, c] : acc.terms) out.add_term(k, coeff * c);
    }
    return out;
}

Series substitute_plethystic(const Series& g, const Series& f, std::int64_t D) {
    SeriesTuple t;
    for (int c = 0; c < g.base->object_count(); ++c) {
        if (c == f.color)
            t.emplace(c, f);
        else
            t.emplace(c, series_zero(f.base, c, f.kind, f.ring, f.D));
    }
    return substitute_plethystic(g, t, D);
}

SeriesTuple substitute_plethystic_tuple(const SeriesTuple& g, const SeriesTuple& f,
                                        std::int64_t D) {
    SeriesTuple out;
    for (const auto& [c, gc] : g) out.emplace(c, substitute_plethystic(gc, f, D));
    return out;
}

Series substitute_ordinary(const Series& g, const std::vector<Series>& fs, std::int64_t D) {
    std::vector<Arrow> vars = g.base->arrows_from(g.color, D + 1);
    if (vars.size() != fs.size())
        throw std::invalid_argument("substitute_ordinary: arity mismatch (" +
                                    std::to_string(vars.size()) + " variables, " +
                                    std::to_string(fs.size()) + " series)");
    for (const Series& f : fs) {
        check_no_constant_term(f);
        if (f.D < D) throw std::invalid_argument("inner series truncated below target degree");
    }
    auto var_index = [&](const Arrow& a) {
        auto it = std::find(vars.begin(), vars.end(), a);
        if (it == vars.end()) throw std::invalid_argument("key uses an unknown variable");
        return std::size_t(it - vars.begin());
    };

    Series out = series_zero(g.base, g.color, g.kind, g.ring, D);
    for (const auto& [key, coeff] : g.terms) {
        Series acc;
        bool first = true;
        auto mul_into = [&](const Series& s) {
            if (first) {
                acc = series_truncate(s, D);
                first = false;
            } else {
                acc = series_mul(acc, s);
            }
        };
        if (key.kind == IndexKind::lambda) {
            for (const auto& [a, mult] : key.lam.entries())
                for (std::uint32_t i = 0; i < mult; ++i) mul_into(fs[var_index(a)]);
        } else {
            for (const Arrow& a : key.word.letters) mul_into(fs[var_index(a)]);
        }
        if (first) throw std::invalid_argument("outer series has a constant term");
        for (const auto& [k, c] : acc.terms) out.add_term(k, coeff * c);
    }
    return out;
}

Poly coefficient(const Series& f, const Index& key) {
    if (key.size() > f.D)
        throw truncation_error("coefficient: key of size " + std::to_string(key.size()) +
                               " beyond truncation degree " + std::to_string(f.D));
    auto it = f.terms.find(key);
    if (it == f.terms.end()) return Poly(f.ring);
    return it->second;
}

Series generic_series_over(char prefix, BasePtr base, int color, IndexKind kind, AutFlavor inner,
                           RingKind ring, const std::vector<Arrow>& arrows, std::int64_t max_count,
                           std::int64_t max_weight) {
    Series out = series_zero(base, color, kind, ring, max_count);
    std::vector<Arrow> from_color;
    for (const Arrow& a : arrows)
        if (a.src == color) from_color.push_back(a);

    auto add_key = [&](Index idx) {
        Generator gen{color, idx};
        Rational inv_aut(1, aut_order(*base, idx, inner));
        Poly p = Poly::symbol(ring, Symbol{prefix, std::move(gen)});
        p *= inv_aut;
        out.add_term(idx, p);
    };
    if (kind == IndexKind::lambda) {
        for (Lambda& l : enumerate_lambdas(*base, from_color, max_count, max_weight))
            add_key(Index::of(std::move(l)));
    } else {
        for (Word& w : enumerate_words(*base, from_color, max_count, max_weight))
            add_key(Index::of(std::move(w)));
    }
    return out;
}

Series generic_series(char prefix, BasePtr base, int color, IndexKind kind, AutFlavor inner,
                      RingKind ring, std::int64_t D) {
    if (D < 1) throw std::invalid_argument("generic_series: D must be >= 1");
    std::vector<Arrow> arrows = base->arrows_from(color, D);
    return generic_series_over(prefix, base, color, kind, inner, ring, arrows, D, D);
}

}  // namespace plethyon
