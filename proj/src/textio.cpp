#include "plethyon/textio.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace plethyon {

namespace {

std::string strip(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

[[noreturn]] void bad(const std::string& what, const std::string& s) {
    throw std::invalid_argument(what + ": '" + s + "'");
}

}  // namespace

std::string arrow_text(const BaseCategory& base, const Arrow& a) {
    if (base.object_count() == 1) return std::to_string(a.label);
    return std::to_string(a.src) + "->" + std::to_string(a.tgt) + ":" + std::to_string(a.label);
}

Arrow parse_arrow(const BaseCategory& base, const std::string& raw) {
    std::string s = strip(raw);
    auto pos = s.find("->");
    if (pos == std::string::npos) {
        if (base.object_count() != 1) bad("arrow over a colored base needs src->tgt:n", raw);
        return {0, 0, std::stoll(s)};
    }
    int src = std::stoi(s.substr(0, pos));
    std::string rest = s.substr(pos + 2);
    auto colon = rest.find(':');
    if (colon == std::string::npos) bad("arrow needs a label after src->tgt", raw);
    int tgt = std::stoi(rest.substr(0, colon));
    Arrow a{src, tgt, std::stoll(rest.substr(colon + 1))};
    base.check_object(src);
    base.check_object(tgt);
    return a;
}

std::string lambda_text(const BaseCategory& base, const Lambda& l) {
    std::ostringstream os;
    if (base.vector_text()) {
        std::int64_t top = 0;
        for (const auto& [a, m] : l.entries()) top = std::max(top, a.label);
        os << "(";
        for (std::int64_t i = 1; i <= top; ++i) {
            if (i > 1) os << ",";
            os << l.mult_of({0, 0, i});
        }
        os << ")";
        return os.str();
    }
    os << "{";
    bool first = true;
    for (const auto& [a, m] : l.entries()) {
        if (!first) os << ", ";
        first = false;
        os << arrow_text(base, a) << ":" << m;
    }
    os << "}";
    return os.str();
}

Lambda parse_lambda(const BaseCategory& base, const std::string& raw) {
    std::string s = strip(raw);
    if (s.empty()) bad("empty lambda", raw);
    if (s.front() == '(') {
        if (s.back() != ')') bad("unbalanced lambda vector", raw);
        if (!base.vector_text()) bad("vector form not defined over base " + base.name(), raw);
        std::string body = strip(s.substr(1, s.size() - 2));
        std::vector<std::int64_t> v;
        if (!body.empty())
            for (const std::string& p : split(body, ',')) v.push_back(std::stoll(strip(p)));
        return Lambda::from_vector(v);
    }
    if (s.front() == '{') {
        if (s.back() != '}') bad("unbalanced lambda map", raw);
        std::string body = strip(s.substr(1, s.size() - 2));
        Lambda l;
        if (body.empty()) return l;
        for (const std::string& entry : split(body, ',')) {
            std::string e = strip(entry);
            auto colon = e.rfind(':');
            if (colon == std::string::npos) bad("lambda entry needs arrow:mult", entry);
            Arrow a = parse_arrow(base, e.substr(0, colon));
            l.add(a, std::stoll(e.substr(colon + 1)));
        }
        return l;
    }
    bad("lambda must be (v1,...) or {arrow:mult,...}", raw);
}

std::string word_text(const BaseCategory& base, const Word& w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i) os << ".";
        os << arrow_text(base, w.letters[i]);
    }
    return os.str();
}

Word parse_word(const BaseCategory& base, const std::string& raw) {
    std::string s = strip(raw);
    if (s.empty()) bad("empty word", raw);
    Word w;
    for (const std::string& p : split(s, '.')) w.letters.push_back(parse_arrow(base, p));
    return w;
}

std::string index_text(const BaseCategory& base, const Index& idx) {
    return idx.kind == IndexKind::lambda ? lambda_text(base, idx.lam) : word_text(base, idx.word);
}

Index parse_index(const BaseCategory& base, IndexKind kind, const std::string& s) {
    return kind == IndexKind::lambda ? Index::of(parse_lambda(base, s))
                                     : Index::of(parse_word(base, s));
}

std::string generator_text(const BaseCategory& base, const Generator& g) {
    std::string shape = index_text(base, g.idx);
    if (base.object_count() == 1) return shape;
    return std::to_string(g.color) + "|" + shape;
}

Generator parse_generator(const BaseCategory& base, IndexKind kind, const std::string& raw) {
    std::string s = strip(raw);
    int color = 0;
    auto bar = s.find('|');
    if (bar != std::string::npos) {
        color = std::stoi(s.substr(0, bar));
        s = s.substr(bar + 1);
    } else if (base.object_count() != 1) {
        bad("generator over a colored base needs color|shape", raw);
    }
    Generator g{color, parse_index(base, kind, s)};
    check_generator(base, g);
    return g;
}

std::string monomial_text(const BaseCategory& base, const BasisMonomial& m) {
    if (m.is_one()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < m.factors.size(); ++i) {
        if (i) os << " ";
        os << "A[" << generator_text(base, m.factors[i]) << "]";
    }
    return os.str();
}

std::string tensor_text(const Flavor& f, const TensorElement& t) {
    // sort by legs right-to-left; terms print as coeff * left (x) right
    std::vector<const std::pair<const std::vector<BasisMonomial>, Rational>*> rows;
    for (const auto& term : t.terms) rows.push_back(&term);
    std::sort(rows.begin(), rows.end(), [](auto* a, auto* b) {
        const auto& ka = a->first;
        const auto& kb = b->first;
        return std::lexicographical_compare(ka.rbegin(), ka.rend(), kb.rbegin(), kb.rend());
    });
    std::ostringstream os;
    for (auto* row : rows) {
        os << to_text(row->second);
        for (const BasisMonomial& leg : row->first) os << " * " << monomial_text(*f.base, leg);
        os << "\n";
    }
    if (rows.empty()) os << "0\n";
    return os.str();
}

// --- series expressions ---

namespace {

struct ExprParser {
    const std::string& s;
    std::size_t pos = 0;

    explicit ExprParser(const std::string& str) : s(str) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::int64_t number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw std::invalid_argument("series expr: number expected at '" +
                                                      s.substr(start) + "'");
        return std::stoll(s.substr(start, pos - start));
    }
};

}  // namespace

Series parse_series_expr(BasePtr base, IndexKind kind, std::int64_t D, const std::string& str) {
    Series out = series_zero(base, 0, kind, RingKind::rational, D);
    ExprParser p(str);
    bool first = true;
    while (true) {
        p.skip_ws();
        if (p.pos >= p.s.size()) break;
        Rational sign = 1;
        if (p.eat('+')) {
        } else if (p.eat('-')) {
            sign = -1;
        } else if (!first) {
            throw std::invalid_argument("series expr: expected + or - at '" +
                                        p.s.substr(p.pos) + "'");
        }
        first = false;

        Rational coeff = sign;
        bool saw_var = false;
        Lambda key_l;
        Word key_w;
        while (true) {
            p.skip_ws();
            if (p.pos < p.s.size() && (p.s[p.pos] == 'x' || p.s[p.pos] == 'X')) {
                ++p.pos;
                std::int64_t n = p.number();
                std::int64_t e = 1;
                if (p.eat('^')) e = p.number();
                Arrow a{0, 0, n};
                for (std::int64_t i = 0; i < e; ++i) {
                    if (kind == IndexKind::lambda)
                        key_l.add(a, 1);
                    else
                        key_w.letters.push_back(a);
                }
                saw_var = true;
            } else if (p.pos < p.s.size() && std::isdigit(static_cast<unsigned char>(p.s[p.pos]))) {
                std::int64_t num = p.number();
                std::int64_t den = 1;
                if (p.eat('/')) den = p.number();
                coeff *= Rational(num, den);
            } else {
                throw std::invalid_argument("series expr: variable or number expected at '" +
                                            p.s.substr(p.pos) + "'");
            }
            if (!p.eat('*')) break;
        }
        if (!saw_var) throw std::invalid_argument("series expr: constant terms are not allowed");
        Index key = kind == IndexKind::lambda ? Index::of(key_l) : Index::of(key_w);
        out.add_term(key, coeff);
    }
    return out;
}

std::string series_text(const Series& s) {
    if (s.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, poly] : s.terms) {
        std::string c;
        if (auto r = poly.as_rational()) {
            if (*r == 1)
                c = "";
            else
                c = to_text(*r) + "*";
        } else {
            std::ostringstream ps;
            ps << "(";
            bool pf = true;
            for (const auto& [mono, coeff] : poly.terms()) {
                if (!pf) ps << " + ";
                pf = false;
                ps << to_text(coeff);
                for (const Symbol& sym : mono)
                    ps << "*" << sym.prefix << "[" << generator_text(*s.base, sym.gen) << "]";
            }
            ps << ")*";
            c = ps.str();
        }
        if (!first) os << " + ";
        first = false;
        os << c;
        // keys render as monomials in x
        if (key.kind == IndexKind::lambda) {
            bool kf = true;
            for (const auto& [a, m] : key.lam.entries()) {
                if (!kf) os << "*";
                kf = false;
                os << "x" << arrow_text(*s.base, a);
                if (m > 1) os << "^" << m;
            }
        } else {
            bool kf = true;
            for (const Arrow& a : key.word.letters) {
                if (!kf) os << "*";
                kf = false;
                os << "x" << arrow_text(*s.base, a);
            }
        }
    }
    return os.str();
}

// --- JSON ---

namespace {

nlohmann::json rational_json(const Rational& r) {
    return nlohmann::json{{"num", numerator(r).str()}, {"den", denominator(r).str()}};
}

Rational parse_rational_json(const nlohmann::json& j) {
    return Rational(Int(j.at("num").get<std::string>()), Int(j.at("den").get<std::string>()));
}

nlohmann::json poly_json(const BaseCategory& base, const Poly& p) {
    if (auto r = p.as_rational()) return rational_json(*r);
    nlohmann::json monos = nlohmann::json::array();
    for (const auto& [mono, coeff] : p.terms()) {
        nlohmann::json syms = nlohmann::json::array();
        for (const Symbol& s : mono)
            syms.push_back(std::string(1, s.prefix) + "[" + generator_text(base, s.gen) + "]");
        monos.push_back({{"num", numerator(coeff).str()},
                         {"den", denominator(coeff).str()},
                         {"symbols", syms}});
    }
    return nlohmann::json{{"monomials", monos}};
}

}  // namespace

nlohmann::json series_json(const Series& s) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [key, poly] : s.terms)
        terms.push_back({{"key", index_text(*s.base, key)}, {"coeff", poly_json(*s.base, poly)}});
    return nlohmann::json{{"base", s.base->name()},
                          {"color", s.color},
                          {"kind", s.kind == IndexKind::lambda ? "commutative" : "noncommutative"},
                          {"D", s.D},
                          {"terms", terms}};
}

Series parse_series_json(const nlohmann::json& j) {
    BasePtr base = base_by_name(j.at("base").get<std::string>());
    IndexKind kind =
        j.at("kind").get<std::string>() == "commutative" ? IndexKind::lambda : IndexKind::word;
    Series s = series_zero(base, j.value("color", 0), kind, RingKind::rational,
                           j.at("D").get<std::int64_t>());
    for (const auto& t : j.at("terms")) {
        if (t.at("coeff").contains("monomials"))
            throw std::invalid_argument("generic-coefficient series JSON cannot be re-imported");
        s.add_term(parse_index(*base, kind, t.at("key").get<std::string>()),
                   parse_rational_json(t.at("coeff")));
    }
    return s;
}

nlohmann::json tensor_json(const Flavor& f, const Generator& sigma, const TensorElement& t) {
    std::vector<const std::pair<const std::vector<BasisMonomial>, Rational>*> rows;
    for (const auto& term : t.terms) rows.push_back(&term);
    std::sort(rows.begin(), rows.end(), [](auto* a, auto* b) {
        return std::lexicographical_compare(a->first.rbegin(), a->first.rend(),
                                            b->first.rbegin(), b->first.rend());
    });
    nlohmann::json terms = nlohmann::json::array();
    for (auto* row : rows) {
        nlohmann::json legs = nlohmann::json::array();
        for (const BasisMonomial& leg : row->first) {
            nlohmann::json gens = nlohmann::json::array();
            for (const Generator& g : leg.factors) gens.push_back(generator_text(*f.base, g));
            legs.push_back(gens);
        }
        nlohmann::json term{{"coeff", rational_json(row->second)}};
        if (row->first.size() == 2) {
            term["left"] = legs[0];
            term["right"] = legs[1];
        } else {
            term["legs"] = legs;
        }
        terms.push_back(term);
    }
    return nlohmann::json{{"flavor", f.name},
                          {"sigma", generator_text(*f.base, sigma)},
                          {"terms", terms}};
}

nlohmann::json decompositions_json(const Flavor& f, const Generator& sigma,
                                   const std::vector<DecompositionClass>& classes) {
    nlohmann::json rows = nlohmann::json::array();
    for (const DecompositionClass& d : classes) {
        nlohmann::json inners = nlohmann::json::array();
        for (const Generator& g : d.inners) inners.push_back(generator_text(*f.base, g));
        rows.push_back({{"outer", generator_text(*f.base, d.outer)},
                        {"inners", inners},
                        {"placements", d.placements.str()},
                        {"t_count", d.t_count.str()}});
    }
    return nlohmann::json{
        {"flavor", f.name}, {"sigma", generator_text(*f.base, sigma)}, {"classes", rows}};
}

CategoryTable parse_category_table(const nlohmann::json& j) {
    CategoryTable t;
    t.objects = j.at("objects").get<int>();
    for (const auto& a : j.at("arrows"))
        t.arrows.push_back({a.at(0).get<int>(), a.at(1).get<int>()});
    t.identities = j.at("identities").get<std::vector<int>>();
    for (const auto& c : j.at("composition"))
        t.composition[{c.at(0).get<int>(), c.at(1).get<int>()}] = c.at(2).get<int>();
    if (j.contains("sizes")) t.sizes = j.at("sizes").get<std::vector<std::int64_t>>();
    return t;
}

}  // namespace plethyon
