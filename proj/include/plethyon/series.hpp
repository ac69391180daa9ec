#pragma once

#include "plethyon/base.hpp"
#include "plethyon/poly.hpp"
#include "plethyon/shapes.hpp"

#include <functional>
#include <map>

namespace plethyon {

struct truncation_error : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Truncated formal power series without constant term. Keys are Lambdas or
// Words over the arrows leaving `color`; coefficients live in an exact
// rational or generic polynomial ring. Keys of size > D are dropped, zero
// coefficients are never stored.
struct Series {
    BasePtr base;
    int color = 0;
    IndexKind kind = IndexKind::lambda;
    RingKind ring = RingKind::rational;
    std::int64_t D = 0;

    std::map<Index, Poly> terms;

    void add_term(const Index& key, const Poly& c);
    void add_term(const Index& key, const Rational& c) {
        add_term(key, Poly::constant(ring, c));
    }
};

// Optional key predicate; keys failing it are dropped eagerly. Used to
// restrict a computation to the cone below a fixed target index.
using KeyFilter = std::function<bool(const Index&)>;

Series series_zero(BasePtr base, int color, IndexKind kind, RingKind ring, std::int64_t D);

// x_a for a single arrow a.
Series series_variable(BasePtr base, const Arrow& a, IndexKind kind, RingKind ring, std::int64_t D);

Series series_add(const Series& a, const Series& b);
Series series_scale(const Series& a, const Rational& c);
Series series_mul(const Series& a, const Series& b, const KeyFilter& filter = {});

// Retruncate to a smaller degree.
Series series_truncate(const Series& a, std::int64_t D);

// Keywise Verschiebung: every key kappa becomes V^m kappa, coefficients
// untouched.
Series plethystic_shift(const Series& f, const Arrow& m, const KeyFilter& filter = {});

// One series per color; the shape of a multi-colored substitution operand.
using SeriesTuple = std::map<int, Series>;

// The `color` component of G (*) F: every variable-arrow a of G is replaced
// by the a-shift of F's component at the target color of a. Inputs must be
// constant-term free; result truncated at D.
Series substitute_plethystic(const Series& g, const SeriesTuple& f, std::int64_t D,
                             const KeyFilter& filter = {});

// One-object convenience overload.
Series substitute_plethystic(const Series& g, const Series& f, std::int64_t D);

SeriesTuple substitute_plethystic_tuple(const SeriesTuple& g, const SeriesTuple& f, std::int64_t D);

// Ordinary multivariate substitution x_i -> f_i. The variable list is the
// set of arrows leaving g's color, which must be finite; fs matches it in
// canonical arrow order.
Series substitute_ordinary(const Series& g, const std::vector<Series>& fs, std::int64_t D);

// Stored coefficient or zero; keys beyond the truncation degree are an
// error rather than zero.
Poly coefficient(const Series& f, const Index& key);

// Sum over keys kappa of  symbol(prefix, kappa) / aut(kappa) * x^kappa,
// with kappa running over the arrows out of `color` of size <= D, bounded
// by weight(kappa) <= D and |kappa| <= D.
Series generic_series(char prefix, BasePtr base, int color, IndexKind kind, AutFlavor inner,
                      RingKind ring, std::int64_t D);

// Same, over an explicit arrow universe and explicit bounds.
Series generic_series_over(char prefix, BasePtr base, int color, IndexKind kind, AutFlavor inner,
                           RingKind ring, const std::vector<Arrow>& arrows, std::int64_t max_count,
                           std::int64_t max_weight);

}  // namespace plethyon
