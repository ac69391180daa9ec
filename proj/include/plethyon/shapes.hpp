#pragma once

#include "plethyon/base.hpp"
#include "plethyon/rational.hpp"

#include <compare>
#include <cstdint>
#include <vector>

namespace plethyon {

// Finite-support multiplicity map arrow -> positive natural. Entries are
// kept sorted by the arrow sort key and zeros are never stored, so equality
// of canonical forms is plain vector equality.
class Lambda {
public:
    Lambda() = default;

    static Lambda single(const Arrow& a, std::uint32_t mult = 1) {
        Lambda l;
        if (mult > 0) l.entries_.push_back({a, mult});
        return l;
    }

    // Classical vector notation (l1, l2, ...): position i = arrow with
    // label i; trailing/interior zeros are trimmed away.
    static Lambda from_vector(const std::vector<std::int64_t>& v) {
        Lambda l;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] < 0) throw std::invalid_argument("Lambda: negative multiplicity");
            if (v[i] > 0) l.entries_.push_back({Arrow{0, 0, std::int64_t(i) + 1}, std::uint32_t(v[i])});
        }
        return l;
    }

    void add(const Arrow& a, std::int64_t delta);

    const std::vector<std::pair<Arrow, std::uint32_t>>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::uint32_t mult_of(const Arrow& a) const;

    // Total multiplicity |lambda|.
    std::int64_t size() const {
        std::int64_t s = 0;
        for (const auto& [a, m] : entries_) s += m;
        return s;
    }

    // Pointwise <=.
    bool dominated_by(const Lambda& other) const;

    friend auto operator<=>(const Lambda&, const Lambda&) = default;

private:
    std::vector<std::pair<Arrow, std::uint32_t>> entries_;
};

// Nonempty finite sequence of arrows sharing a common source (reduced
// setting: the empty word is excluded).
struct Word {
    std::vector<Arrow> letters;

    std::int64_t size() const { return std::int64_t(letters.size()); }
    friend auto operator<=>(const Word&, const Word&) = default;
};

enum class IndexKind { lambda, word };

// A series/generator index: either a Lambda (commuting variables) or a
// Word (noncommuting variables).
struct Index {
    IndexKind kind = IndexKind::lambda;
    Lambda lam;
    Word word;

    static Index of(Lambda l) { return {IndexKind::lambda, std::move(l), {}}; }
    static Index of(Word w) { return {IndexKind::word, {}, std::move(w)}; }

    std::int64_t size() const { return kind == IndexKind::lambda ? lam.size() : word.size(); }
    bool empty() const { return size() == 0; }
    friend auto operator<=>(const Index&, const Index&) = default;
};

// The isomorphism class of a connected bar element: an output color plus a
// Lambda or Word whose arrows all emanate from that color (opposite
// convention).
struct Generator {
    int color = 0;
    Index idx;

    std::int64_t size() const { return idx.size(); }
    friend auto operator<=>(const Generator&, const Generator&) = default;
};

enum class AutFlavor { symmetric_inner, exponential };

// Automorphism order of a Lambda class:
//   symmetric_inner: prod size(m)!^lambda_m * lambda_m!
//   exponential:     prod lambda_m!
Int aut_order(const BaseCategory& base, const Lambda& l, AutFlavor flavor);

// Word analogue: prod size(w_i)! resp. 1.
Int word_aut_order(const BaseCategory& base, const Word& w, AutFlavor flavor);

Int aut_order(const BaseCategory& base, const Index& idx, AutFlavor flavor);
Int aut_order(const BaseCategory& base, const Generator& g, AutFlavor flavor);

// V^m on multiplicity maps: result(n) = sum over m;k = n of lambda_k.
// Every arrow in supp(lambda) must start where m ends.
Lambda verschiebung(const BaseCategory& base, const Arrow& m, const Lambda& l);

// Letterwise composition m;w_i, length preserved.
Word verschiebung_word(const BaseCategory& base, const Arrow& m, const Word& w);

// Pointwise sum of multiplicities.
Lambda lambda_sum(const Lambda& a, const Lambda& b);

// Weighted degree sum size(m) * lambda_m (count when the base is sizeless);
// the grading additive under composition of bar levels.
std::int64_t weight(const BaseCategory& base, const Lambda& l);
std::int64_t weight(const BaseCategory& base, const Word& w);
std::int64_t weight(const BaseCategory& base, const Index& idx);

// Checks that all arrows of g start at g.color; throws color_mismatch_error.
void check_generator(const BaseCategory& base, const Generator& g);

// Unit generator at a color: the class of a single identity arrow.
Generator unit_generator(const BaseCategory& base, int color, IndexKind kind);

// All Lambdas over the given arrows with size() <= max_count and
// weight <= max_weight, the empty one excluded.
std::vector<Lambda> enumerate_lambdas(const BaseCategory& base, const std::vector<Arrow>& arrows,
                                      std::int64_t max_count, std::int64_t max_weight);

// All nonempty words over the given arrows with length <= max_len and
// weight <= max_weight.
std::vector<Word> enumerate_words(const BaseCategory& base, const std::vector<Arrow>& arrows,
                                  std::int64_t max_len, std::int64_t max_weight);

}  // namespace plethyon
