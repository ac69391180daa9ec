#pragma once

#include "plethyon/rational.hpp"
#include "plethyon/shapes.hpp"

#include <map>
#include <optional>
#include <vector>

namespace plethyon {

enum class RingKind { rational, commutative, noncommutative };

// An opaque indeterminate: a prefix letter ('f', 'g', ...) tagging which
// generic series it came from, plus the generator it is attached to.
struct Symbol {
    char prefix = 'f';
    Generator gen;

    friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

// Monomials are sorted multisets of symbols in the commutative ring and
// ordered sequences in the noncommutative one. The empty monomial is 1.
using Monomial = std::vector<Symbol>;

// Exact polynomial ring on generic symbols with rational coefficients.
class Poly {
public:
    Poly() : kind_(RingKind::rational) {}
    explicit Poly(RingKind kind) : kind_(kind) {}

    static Poly constant(RingKind kind, Rational c) {
        Poly p(kind);
        if (c != 0) p.terms_[{}] = std::move(c);
        return p;
    }
    static Poly symbol(RingKind kind, Symbol s) {
        if (kind == RingKind::rational)
            throw std::invalid_argument("rational ring has no symbols");
        Poly p(kind);
        p.terms_[{std::move(s)}] = 1;
        return p;
    }

    RingKind kind() const { return kind_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    std::optional<Rational> as_rational() const {
        if (terms_.empty()) return Rational(0);
        if (terms_.size() == 1 && terms_.begin()->first.empty()) return terms_.begin()->second;
        return std::nullopt;
    }

    void add_term(Monomial m, const Rational& c) {
        if (c == 0) return;
        if (kind_ == RingKind::commutative) std::sort(m.begin(), m.end());
        auto [it, fresh] = terms_.try_emplace(std::move(m), c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    Poly& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, v] : terms_) v *= c;
        return *this;
    }

    // Product; in the noncommutative ring the left factor's symbols come
    // first, matching coefficient order of series products.
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly out(a.kind_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m = ma;
                m.insert(m.end(), mb.begin(), mb.end());
                out.add_term(std::move(m), ca * cb);
            }
        return out;
    }

    friend Poly operator+(Poly a, const Poly& b) {
        a += b;
        return a;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

private:
    RingKind kind_;
    std::map<Monomial, Rational> terms_;
};

}  // namespace plethyon
