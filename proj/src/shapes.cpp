#include "plethyon/shapes.hpp"

#include <algorithm>

namespace plethyon {

void Lambda::add(const Arrow& a, std::int64_t delta) {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), a,
                               [](const auto& e, const Arrow& x) { return e.first < x; });
    if (it != entries_.end() && it->first == a) {
        std::int64_t m = std::int64_t(it->second) + delta;
        if (m < 0) throw std::invalid_argument("Lambda: multiplicity below zero");
        if (m == 0)
            entries_.erase(it);
        else
            it->second = std::uint32_t(m);
        return;
    }
    if (delta < 0) throw std::invalid_argument("Lambda: multiplicity below zero");
    if (delta > 0) entries_.insert(it, {a, std::uint32_t(delta)});
}

std::uint32_t Lambda::mult_of(const Arrow& a) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), a,
                               [](const auto& e, const Arrow& x) { return e.first < x; });
    if (it != entries_.end() && it->first == a) return it->second;
    return 0;
}

bool Lambda::dominated_by(const Lambda& other) const {
    for (const auto& [a, m] : entries_)
        if (m > other.mult_of(a)) return false;
    return true;
}

Int aut_order(const BaseCategory& base, const Lambda& l, AutFlavor flavor) {
    Int r = 1;
    for (const auto& [a, m] : l.entries()) {
        if (flavor == AutFlavor::symmetric_inner) {
            if (!base.has_size())
                throw unsupported_flavor_error("symmetric automorphisms need arrow sizes on base '" +
                                               base.name() + "'");
            r *= int_pow(factorial(base.size(a)), m);
        }
        r *= factorial(m);
    }
    return r;
}

Int word_aut_order(const BaseCategory& base, const Word& w, AutFlavor flavor) {
    if (flavor == AutFlavor::exponential) return 1;
    if (!base.has_size())
        throw unsupported_flavor_error("symmetric automorphisms need arrow sizes on base '" +
                                       base.name() + "'");
    Int r = 1;
    for (const Arrow& a : w.letters) r *= factorial(base.size(a));
    return r;
}

Int aut_order(const BaseCategory& base, const Index& idx, AutFlavor flavor) {
    return idx.kind == IndexKind::lambda ? aut_order(base, idx.lam, flavor)
                                         : word_aut_order(base, idx.word, flavor);
}

Int aut_order(const BaseCategory& base, const Generator& g, AutFlavor flavor) {
    return aut_order(base, g.idx, flavor);
}

Lambda verschiebung(const BaseCategory& base, const Arrow& m, const Lambda& l) {
    Lambda out;
    for (const auto& [k, mult] : l.entries()) {
        base.check_composable(m, k);
        out.add(base.compose(m, k), mult);
    }
    return out;
}

Word verschiebung_word(const BaseCategory& base, const Arrow& m, const Word& w) {
    Word out;
    out.letters.reserve(w.letters.size());
    for (const Arrow& k : w.letters) {
        base.check_composable(m, k);
        out.letters.push_back(base.compose(m, k));
    }
    return out;
}

Lambda lambda_sum(const Lambda& a, const Lambda& b) {
    Lambda out = a;
    for (const auto& [arrow, m] : b.entries()) out.add(arrow, m);
    return out;
}

std::int64_t weight(const BaseCategory& base, const Lambda& l) {
    std::int64_t w = 0;
    for (const auto& [a, m] : l.entries()) w += (base.has_size() ? base.size(a) : 1) * m;
    return w;
}

std::int64_t weight(const BaseCategory& base, const Word& w) {
    std::int64_t r = 0;
    for (const Arrow& a : w.letters) r += base.has_size() ? base.size(a) : 1;
    return r;
}

std::int64_t weight(const BaseCategory& base, const Index& idx) {
    return idx.kind == IndexKind::lambda ? weight(base, idx.lam) : weight(base, idx.word);
}

void check_generator(const BaseCategory& base, const Generator& g) {
    base.check_object(g.color);
    if (g.idx.empty()) throw std::invalid_argument("generator shape must be nonempty");
    if (g.idx.kind == IndexKind::lambda) {
        for (const auto& [a, m] : g.idx.lam.entries())
            if (a.src != g.color)
                throw color_mismatch_error("generator arrows must start at its output color");
    } else {
        for (const Arrow& a : g.idx.word.letters)
            if (a.src != g.color)
                throw color_mismatch_error("generator arrows must start at its output color");
    }
}

Generator unit_generator(const BaseCategory& base, int color, IndexKind kind) {
    Arrow id = base.identity(color);
    if (kind == IndexKind::lambda) return {color, Index::of(Lambda::single(id))};
    return {color, Index::of(Word{{id}})};
}

std::vector<Lambda> enumerate_lambdas(const BaseCategory& base, const std::vector<Arrow>& arrows,
                                      std::int64_t max_count, std::int64_t max_weight) {
    std::vector<Arrow> alpha = arrows;
    std::sort(alpha.begin(), alpha.end());
    alpha.erase(std::unique(alpha.begin(), alpha.end()), alpha.end());

    std::vector<Lambda> out;
    Lambda cur;
    auto rec = [&](auto&& self, std::size_t i, std::int64_t count, std::int64_t wt) -> void {
        if (i == alpha.size()) {
            if (!cur.empty()) out.push_back(cur);
            return;
        }
        const Arrow& a = alpha[i];
        std::int64_t sz = base.has_size() ? base.size(a) : 1;
        std::int64_t added = 0;
        for (std::int64_t m = 0; count + m <= max_count && wt + m * sz <= max_weight; ++m) {
            if (m > 0) {
                cur.add(a, 1);
                added = m;
            }
            self(self, i + 1, count + m, wt + m * sz);
        }
        if (added > 0) cur.add(a, -added);
    };
    rec(rec, 0, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Word> enumerate_words(const BaseCategory& base, const std::vector<Arrow>& arrows,
                                  std::int64_t max_len, std::int64_t max_weight) {
    std::vector<Word> out;
    Word cur;
    auto rec = [&](auto&& self, std::int64_t wt) -> void {
        if (!cur.letters.empty()) out.push_back(cur);
        if (std::int64_t(cur.letters.size()) >= max_len) return;
        for (const Arrow& a : arrows) {
            std::int64_t sz = base.has_size() ? base.size(a) : 1;
            if (wt + sz > max_weight) continue;
            cur.letters.push_back(a);
            self(self, wt + sz);
            cur.letters.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace plethyon
