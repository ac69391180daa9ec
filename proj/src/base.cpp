#include "plethyon/base.hpp"

#include <algorithm>

namespace plethyon {

namespace {

class ClassicalBase final : public BaseCategory {
public:
    std::string name() const override { return "classical"; }
    int object_count() const override { return 1; }
    Arrow identity(int obj) const override {
        check_object(obj);
        return {0, 0, 1};
    }
    Arrow compose(const Arrow& m, const Arrow& k) const override {
        check_composable(m, k);
        return {0, 0, m.label * k.label};
    }
    std::vector<std::pair<Arrow, Arrow>> factorizations(const Arrow& n) const override {
        std::vector<std::pair<Arrow, Arrow>> out;
        for (std::int64_t d = 1; d * d <= n.label; ++d) {
            if (n.label % d != 0) continue;
            out.push_back({{0, 0, d}, {0, 0, n.label / d}});
            if (d != n.label / d) out.push_back({{0, 0, n.label / d}, {0, 0, d}});
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    bool has_size() const override { return true; }
    std::int64_t size(const Arrow& a) const override { return a.label; }
    std::vector<Arrow> arrows_from(int obj, std::int64_t bound) const override {
        check_object(obj);
        std::vector<Arrow> out;
        for (std::int64_t n = 1; n <= bound; ++n) out.push_back({0, 0, n});
        return out;
    }
    bool vector_text() const override { return true; }
};

class NatPlusBase final : public BaseCategory {
public:
    std::string name() const override { return "natplus"; }
    int object_count() const override { return 1; }
    Arrow identity(int obj) const override {
        check_object(obj);
        return {0, 0, 0};
    }
    Arrow compose(const Arrow& m, const Arrow& k) const override {
        check_composable(m, k);
        return {0, 0, m.label + k.label};
    }
    std::vector<std::pair<Arrow, Arrow>> factorizations(const Arrow& n) const override {
        std::vector<std::pair<Arrow, Arrow>> out;
        for (std::int64_t m = 0; m <= n.label; ++m)
            out.push_back({{0, 0, m}, {0, 0, n.label - m}});
        return out;
    }
    bool has_size() const override { return true; }
    std::int64_t size(const Arrow& a) const override { return a.label; }
    std::vector<Arrow> arrows_from(int obj, std::int64_t bound) const override {
        check_object(obj);
        std::vector<Arrow> out;
        for (std::int64_t n = 0; n <= bound; ++n) out.push_back({0, 0, n});
        return out;
    }
};

class ChaoticBase final : public BaseCategory {
    int k_;

public:
    explicit ChaoticBase(int k) : k_(k) {
        if (k < 1) throw std::invalid_argument("chaotic base needs >= 1 object");
    }
    std::string name() const override {
        return k_ == 1 ? "trivial" : "chaotic" + std::to_string(k_);
    }
    int object_count() const override { return k_; }
    Arrow identity(int obj) const override {
        check_object(obj);
        return {obj, obj, 1};
    }
    Arrow compose(const Arrow& m, const Arrow& k) const override {
        check_composable(m, k);
        return {m.src, k.tgt, 1};
    }
    std::vector<std::pair<Arrow, Arrow>> factorizations(const Arrow& n) const override {
        std::vector<std::pair<Arrow, Arrow>> out;
        for (int d = 0; d < k_; ++d)
            out.push_back({{n.src, d, 1}, {d, n.tgt, 1}});
        return out;
    }
    bool has_size() const override { return true; }
    std::int64_t size(const Arrow&) const override { return 1; }
    std::vector<Arrow> arrows_from(int obj, std::int64_t) const override {
        check_object(obj);
        std::vector<Arrow> out;
        for (int t = 0; t < k_; ++t) out.push_back({obj, t, 1});
        return out;
    }
    bool vector_text() const override { return k_ == 1; }
};

class ColoredClassicalBase final : public BaseCategory {
    int k_;

public:
    explicit ColoredClassicalBase(int k) : k_(k) {
        if (k < 1) throw std::invalid_argument("colored classical base needs >= 1 object");
    }
    std::string name() const override { return "classical" + std::to_string(k_); }
    int object_count() const override { return k_; }
    Arrow identity(int obj) const override {
        check_object(obj);
        return {obj, obj, 1};
    }
    Arrow compose(const Arrow& m, const Arrow& k) const override {
        check_composable(m, k);
        return {m.src, k.tgt, m.label * k.label};
    }
    std::vector<std::pair<Arrow, Arrow>> factorizations(const Arrow& n) const override {
        std::vector<std::pair<Arrow, Arrow>> out;
        for (std::int64_t d = 1; d <= n.label; ++d) {
            if (n.label % d != 0) continue;
            for (int c = 0; c < k_; ++c)
                out.push_back({{n.src, c, d}, {c, n.tgt, n.label / d}});
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    bool has_size() const override { return true; }
    std::int64_t size(const Arrow& a) const override { return a.label; }
    std::vector<Arrow> arrows_from(int obj, std::int64_t bound) const override {
        check_object(obj);
        std::vector<Arrow> out;
        for (std::int64_t n = 1; n <= bound; ++n)
            for (int t = 0; t < k_; ++t) out.push_back({obj, t, n});
        std::sort(out.begin(), out.end());
        return out;
    }
};

class TableBase final : public BaseCategory {
    std::string name_;
    CategoryTable t_;

public:
    TableBase(std::string name, CategoryTable t) : name_(std::move(name)), t_(std::move(t)) {
        validate();
    }
    std::string name() const override { return name_; }
    int object_count() const override { return t_.objects; }
    Arrow identity(int obj) const override {
        check_object(obj);
        return arrow_at(t_.identities.at(obj));
    }
    Arrow compose(const Arrow& m, const Arrow& k) const override {
        check_composable(m, k);
        auto it = t_.composition.find({int(m.label), int(k.label)});
        if (it == t_.composition.end())
            throw std::invalid_argument("table base '" + name_ + "': missing composite");
        return arrow_at(it->second);
    }
    std::vector<std::pair<Arrow, Arrow>> factorizations(const Arrow& n) const override {
        std::vector<std::pair<Arrow, Arrow>> out;
        for (const auto& [pair, res] : t_.composition)
            if (res == int(n.label)) out.push_back({arrow_at(pair.first), arrow_at(pair.second)});
        return out;
    }
    bool has_size() const override { return !t_.sizes.empty(); }
    std::int64_t size(const Arrow& a) const override {
        if (t_.sizes.empty())
            throw unsupported_flavor_error("base '" + name_ + "' has no arrow sizes");
        return t_.sizes.at(std::size_t(a.label));
    }
    std::vector<Arrow> arrows_from(int obj, std::int64_t) const override {
        check_object(obj);
        std::vector<Arrow> out;
        for (std::size_t i = 0; i < t_.arrows.size(); ++i)
            if (t_.arrows[i].first == obj) out.push_back(arrow_at(int(i)));
        return out;
    }

private:
    Arrow arrow_at(int i) const {
        const auto& [s, t] = t_.arrows.at(std::size_t(i));
        return {s, t, i};
    }

    // Appendix-style category axioms, checked exhaustively over the tables.
    void validate() const {
        if (int(t_.identities.size()) != t_.objects)
            throw std::invalid_argument("table base: need one identity per object");
        auto src = [&](int i) { return t_.arrows.at(std::size_t(i)).first; };
        auto tgt = [&](int i) { return t_.arrows.at(std::size_t(i)).second; };
        const int n = int(t_.arrows.size());
        for (int obj = 0; obj < t_.objects; ++obj) {
            int e = t_.identities[obj];
            if (src(e) != obj || tgt(e) != obj)
                throw std::invalid_argument("table base: identity has wrong endpoints");
        }
        for (const auto& [pair, res] : t_.composition) {
            if (tgt(pair.first) != src(pair.second))
                throw std::invalid_argument("table base: composite of non-composable pair");
            if (src(res) != src(pair.first) || tgt(res) != tgt(pair.second))
                throw std::invalid_argument("table base: composite endpoints broken");
        }
        for (int f = 0; f < n; ++f)
            for (int g = 0; g < n; ++g) {
                if (tgt(f) != src(g)) continue;
                if (!t_.composition.count({f, g}))
                    throw std::invalid_argument("table base: composition not total");
            }
        auto comp = [&](int f, int g) { return t_.composition.at({f, g}); };
        for (int f = 0; f < n; ++f) {
            if (comp(t_.identities[src(f)], f) != f || comp(f, t_.identities[tgt(f)]) != f)
                throw std::invalid_argument("table base: identity law fails at arrow " +
                                            std::to_string(f));
            for (int g = 0; g < n; ++g) {
                if (tgt(f) != src(g)) continue;
                for (int h = 0; h < n; ++h) {
                    if (tgt(g) != src(h)) continue;
                    if (comp(comp(f, g), h) != comp(f, comp(g, h)))
                        throw std::invalid_argument("table base: associativity fails at (" +
                                                    std::to_string(f) + "," + std::to_string(g) +
                                                    "," + std::to_string(h) + ")");
                }
            }
        }
    }
};

}  // namespace

BasePtr classical_base() {
    static BasePtr b = std::make_shared<ClassicalBase>();
    return b;
}

BasePtr natplus_base() {
    static BasePtr b = std::make_shared<NatPlusBase>();
    return b;
}

BasePtr chaotic_base(int k) { return std::make_shared<ChaoticBase>(k); }

BasePtr colored_classical_base(int k) { return std::make_shared<ColoredClassicalBase>(k); }

BasePtr table_base(std::string name, CategoryTable table) {
    return std::make_shared<TableBase>(std::move(name), std::move(table));
}

BasePtr z2_base() {
    static BasePtr b = [] {
        CategoryTable t;
        t.objects = 1;
        t.arrows = {{0, 0}, {0, 0}};  // arrow i represents residue i
        t.identities = {0};
        t.composition[{0, 0}] = 0;
        t.composition[{0, 1}] = 1;
        t.composition[{1, 0}] = 1;
        t.composition[{1, 1}] = 0;
        return table_base("z2", std::move(t));
    }();
    return b;
}

// The category {0 -> 1}: identities plus a single non-identity arrow.
static BasePtr arrow_base() {
    static BasePtr b = [] {
        CategoryTable t;
        t.objects = 2;
        t.arrows = {{0, 0}, {1, 1}, {0, 1}};
        t.identities = {0, 1};
        t.composition[{0, 0}] = 0;
        t.composition[{1, 1}] = 1;
        t.composition[{0, 2}] = 2;
        t.composition[{2, 1}] = 2;
        return table_base("arrow", std::move(t));
    }();
    return b;
}

BasePtr base_by_name(const std::string& name) {
    if (name == "classical") return classical_base();
    if (name == "natplus") return natplus_base();
    if (name == "z2") return z2_base();
    if (name == "arrow") return arrow_base();
    if (name == "trivial") return chaotic_base(1);
    if (name.rfind("chaotic", 0) == 0) return chaotic_base(std::stoi(name.substr(7)));
    if (name.rfind("classical", 0) == 0) return colored_classical_base(std::stoi(name.substr(9)));
    throw std::invalid_argument("unknown base: " + name);
}

}  // namespace plethyon
