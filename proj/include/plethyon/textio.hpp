#pragma once

#include "plethyon/delta.hpp"
#include "plethyon/flavor.hpp"
#include "plethyon/series.hpp"

#include <nlohmann/json_fwd.hpp>
#include <string>

namespace plethyon {

// Arrow grammar: "n" over a one-object base, "src->tgt:n" otherwise.
std::string arrow_text(const BaseCategory& base, const Arrow& a);
Arrow parse_arrow(const BaseCategory& base, const std::string& s);

// Lambda grammar: "(a1,a2,...,ak)" over bases with numeric arrows 1,2,...
// (trailing zeros trimmed), "{arrow:mult, ...}" in general.
// Word grammar: "w1.w2.w3".
std::string lambda_text(const BaseCategory& base, const Lambda& l);
std::string word_text(const BaseCategory& base, const Word& w);
std::string index_text(const BaseCategory& base, const Index& idx);
Lambda parse_lambda(const BaseCategory& base, const std::string& s);
Word parse_word(const BaseCategory& base, const std::string& s);
Index parse_index(const BaseCategory& base, IndexKind kind, const std::string& s);

// Generator grammar: the shape alone over one-object bases, "color|shape"
// otherwise ("color|" accepted everywhere).
std::string generator_text(const BaseCategory& base, const Generator& g);
Generator parse_generator(const BaseCategory& base, IndexKind kind, const std::string& s);

std::string monomial_text(const BaseCategory& base, const BasisMonomial& m);

// Tensor terms one per line, "coeff * left (x) right", sorted by
// (right leg, left leg).
std::string tensor_text(const Flavor& f, const TensorElement& t);

// Small expression parser for CLI series input: sums of optionally
// signed/multiplied monomials in the variables x1, x2, ... e.g.
// "x1 + 2*x2^3 - 1/2*x1*x4".
Series parse_series_expr(BasePtr base, IndexKind kind, std::int64_t D, const std::string& s);
std::string series_text(const Series& s);

nlohmann::json series_json(const Series& s);
Series parse_series_json(const nlohmann::json& j);

nlohmann::json tensor_json(const Flavor& f, const Generator& sigma, const TensorElement& t);
nlohmann::json decompositions_json(const Flavor& f, const Generator& sigma,
                                   const std::vector<DecompositionClass>& classes);

// Category tables as JSON: {"objects": k, "arrows": [[src,tgt],...],
//  "identities": [...], "composition": [[f,g,fg],...], "sizes": [...]}.
CategoryTable parse_category_table(const nlohmann::json& j);

}  // namespace plethyon
