#include "ramseycat/structures.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace ramseycat {

void Signature::check() const {
    std::set<std::string> names;
    auto add = [&](const std::string& n) {
        if (!names.insert(n).second)
            throw std::invalid_argument("duplicate symbol name in signature: " + n);
    };
    for (const auto& [n, ar] : functions) {
        if (ar < 1) throw std::invalid_argument("function arity must be >= 1: " + n);
        add(n);
    }
    for (const auto& [n, ar] : relations) {
        if (ar < 1) throw std::invalid_argument("relation arity must be >= 1: " + n);
        add(n);
    }
    for (const auto& n : constants) add(n);
}

bool Signature::disjoint_from(const Signature& other) const {
    std::set<std::string> names;
    for (const auto& [n, _] : functions) names.insert(n);
    for (const auto& [n, _] : relations) names.insert(n);
    for (const auto& n : constants) names.insert(n);
    for (const auto& [n, _] : other.functions)
        if (names.count(n)) return false;
    for (const auto& [n, _] : other.relations)
        if (names.count(n)) return false;
    for (const auto& n : other.constants)
        if (names.count(n)) return false;
    return true;
}

namespace {

std::size_t power(std::size_t base, int exp) {
    std::size_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

std::size_t table_index(const std::vector<int>& args, int n) {
    std::size_t idx = 0;
    for (int a : args) idx = idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(a);
    return idx;
}

// Iterates all tuples over {0..n-1}^arity in lexicographic order.
bool next_tuple(std::vector<int>& t, int n) {
    for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) {
        if (++t[i] < n) return true;
        t[i] = 0;
    }
    return false;
}

} // namespace

void Structure::check() const {
    signature.check();
    if (size < 0) throw std::invalid_argument("negative universe size");
    if (functions.size() != signature.functions.size() ||
        relations.size() != signature.relations.size() ||
        constants.size() != signature.constants.size())
        throw std::invalid_argument("interpretation arity mismatch with signature");
    for (std::size_t i = 0; i < functions.size(); ++i) {
        if (functions[i].size() != power(size, signature.functions[i].second))
            throw std::invalid_argument("function table has wrong size: " + signature.functions[i].first);
        for (int v : functions[i])
            if (v < 0 || v >= size)
                throw std::invalid_argument("function value out of universe: " + signature.functions[i].first);
    }
    for (std::size_t i = 0; i < relations.size(); ++i) {
        const int ar = signature.relations[i].second;
        for (const auto& t : relations[i]) {
            if (static_cast<int>(t.size()) != ar)
                throw std::invalid_argument("relation tuple has wrong arity: " + signature.relations[i].first);
            for (int v : t)
                if (v < 0 || v >= size)
                    throw std::invalid_argument("relation tuple out of universe: " + signature.relations[i].first);
        }
        if (!std::is_sorted(relations[i].begin(), relations[i].end()))
            throw std::invalid_argument("relation tuples not sorted: " + signature.relations[i].first);
    }
    for (int c : constants)
        if (c < 0 || c >= size) throw std::invalid_argument("constant out of universe");
}

int Structure::fn_value(std::size_t fn, const std::vector<int>& args) const {
    return functions[fn][table_index(args, size)];
}

bool Structure::in_relation(std::size_t rel, const std::vector<int>& tuple) const {
    return std::binary_search(relations[rel].begin(), relations[rel].end(), tuple);
}

bool is_embedding(const Structure& a, const Structure& b, const std::vector<int>& map) {
    if (a.signature != b.signature) return false;
    if (static_cast<int>(map.size()) != a.size) return false;
    std::vector<bool> used(b.size, false);
    for (int v : map) {
        if (v < 0 || v >= b.size || used[v]) return false;
        used[v] = true;
    }
    for (std::size_t c = 0; c < a.constants.size(); ++c)
        if (map[a.constants[c]] != b.constants[c]) return false;
    for (std::size_t f = 0; f < a.functions.size(); ++f) {
        const int ar = a.signature.functions[f].second;
        std::vector<int> args(ar, 0);
        do {
            std::vector<int> image(ar);
            for (int i = 0; i < ar; ++i) image[i] = map[args[i]];
            if (map[a.fn_value(f, args)] != b.fn_value(f, image)) return false;
        } while (next_tuple(args, a.size));
    }
    for (std::size_t r = 0; r < a.relations.size(); ++r) {
        const int ar = a.signature.relations[r].second;
        std::vector<int> args(ar, 0);
        if (a.size == 0) continue;
        do {
            std::vector<int> image(ar);
            for (int i = 0; i < ar; ++i) image[i] = map[args[i]];
            if (a.in_relation(r, args) != b.in_relation(r, image)) return false;
        } while (next_tuple(args, a.size));
    }
    return true;
}

namespace {

// Backtracking state for embedding search. Forced assignments (constants,
// function closure) go through assign() so they unwind with the trail.
struct EmbSearch {
    const Structure& a;
    const Structure& b;
    std::vector<int> map;        // -1 = unassigned
    std::vector<int> inverse;    // -1 = free target point
    std::vector<int> trail;
    std::vector<Embedding> out;

    EmbSearch(const Structure& a_, const Structure& b_)
        : a(a_), b(b_), map(a_.size, -1), inverse(b_.size, -1) {}

    bool assign(int p, int q) {
        if (map[p] != -1) return map[p] == q;
        if (inverse[q] != -1) return false;
        map[p] = q;
        inverse[q] = p;
        trail.push_back(p);
        return true;
    }

    void rewind(std::size_t mark) {
        while (trail.size() > mark) {
            int p = trail.back();
            trail.pop_back();
            inverse[map[p]] = -1;
            map[p] = -1;
        }
    }

    // Closes assigned points under function symbols; false on conflict.
    bool propagate() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t f = 0; f < a.functions.size(); ++f) {
                const int ar = a.signature.functions[f].second;
                std::vector<int> args(ar, 0);
                if (a.size == 0) continue;
                do {
                    bool all = true;
                    for (int i = 0; i < ar && all; ++i) all = map[args[i]] != -1;
                    if (!all) continue;
                    std::vector<int> image(ar);
                    for (int i = 0; i < ar; ++i) image[i] = map[args[i]];
                    int src = a.fn_value(f, args);
                    int dst = b.fn_value(f, image);
                    if (map[src] == -1) {
                        if (!assign(src, dst)) return false;
                        changed = true;
                    } else if (map[src] != dst) {
                        return false;
                    }
                } while (next_tuple(args, a.size));
            }
        }
        return true;
    }

    // Respect and reflect on fully assigned tuples; pure pruning, the final
    // is_embedding filter stays authoritative.
    bool relations_consistent() {
        for (std::size_t r = 0; r < a.relations.size(); ++r) {
            for (const auto& t : a.relations[r]) {
                bool all = true;
                for (int v : t)
                    if (map[v] == -1) { all = false; break; }
                if (!all) continue;
                std::vector<int> image(t.size());
                for (std::size_t i = 0; i < t.size(); ++i) image[i] = map[t[i]];
                if (!b.in_relation(r, image)) return false;
            }
            for (const auto& t : b.relations[r]) {
                bool all = true;
                std::vector<int> pre(t.size());
                for (std::size_t i = 0; i < t.size(); ++i) {
                    if (inverse[t[i]] == -1) { all = false; break; }
                    pre[i] = inverse[t[i]];
                }
                if (!all) continue;
                if (!a.in_relation(r, pre)) return false;
            }
        }
        return true;
    }

    void search(int point) {
        while (point < a.size && map[point] != -1) ++point;
        if (point == a.size) {
            if (is_embedding(a, b, map)) out.push_back({map});
            return;
        }
        for (int q = 0; q < b.size; ++q) {
            if (inverse[q] != -1) continue;
            std::size_t mark = trail.size();
            if (assign(point, q) && propagate() && relations_consistent())
                search(point + 1);
            rewind(mark);
        }
    }
};

} // namespace

std::vector<Embedding> enumerate_embeddings(const Structure& a, const Structure& b) {
    if (a.signature != b.signature)
        throw std::invalid_argument("enumerate_embeddings: signature mismatch");
    if (a.size > b.size) return {};
    EmbSearch s(a, b);
    for (std::size_t c = 0; c < a.constants.size(); ++c)
        if (!s.assign(a.constants[c], b.constants[c])) return {};
    if (!s.propagate() || !s.relations_consistent()) return {};
    s.search(0);
    return std::move(s.out);
}

Structure reduct(const Structure& a, const std::vector<std::string>& symbols) {
    std::set<std::string> keep(symbols.begin(), symbols.end());
    Structure r;
    r.size = a.size;
    for (std::size_t f = 0; f < a.signature.functions.size(); ++f) {
        if (keep.count(a.signature.functions[f].first)) {
            keep.erase(a.signature.functions[f].first);
            r.signature.functions.push_back(a.signature.functions[f]);
            r.functions.push_back(a.functions[f]);
        }
    }
    for (std::size_t rel = 0; rel < a.signature.relations.size(); ++rel) {
        if (keep.count(a.signature.relations[rel].first)) {
            keep.erase(a.signature.relations[rel].first);
            r.signature.relations.push_back(a.signature.relations[rel]);
            r.relations.push_back(a.relations[rel]);
        }
    }
    for (std::size_t c = 0; c < a.signature.constants.size(); ++c) {
        if (keep.count(a.signature.constants[c])) {
            keep.erase(a.signature.constants[c]);
            r.signature.constants.push_back(a.signature.constants[c]);
            r.constants.push_back(a.constants[c]);
        }
    }
    if (!keep.empty())
        throw std::invalid_argument("reduct: symbol not in signature: " + *keep.begin());
    return r;
}

GeneratedSubstructure generated_substructure(const Structure& a, const std::vector<int>& seed) {
    if (seed.empty()) throw std::invalid_argument("generated_substructure: empty seed");
    std::set<int> pts(seed.begin(), seed.end());
    for (int p : pts)
        if (p < 0 || p >= a.size) throw std::invalid_argument("seed point out of universe");
    for (int c : a.constants) pts.insert(c);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> current(pts.begin(), pts.end());
        for (std::size_t f = 0; f < a.functions.size(); ++f) {
            const int ar = a.signature.functions[f].second;
            std::vector<int> idx(ar, 0);
            const int m = static_cast<int>(current.size());
            std::vector<int> args(ar);
            do {
                for (int i = 0; i < ar; ++i) args[i] = current[idx[i]];
                if (pts.insert(a.fn_value(f, args)).second) grew = true;
            } while (next_tuple(idx, m));
        }
    }
    std::vector<int> universe(pts.begin(), pts.end());
    std::vector<int> position(a.size, -1);
    for (std::size_t i = 0; i < universe.size(); ++i) position[universe[i]] = static_cast<int>(i);

    Structure sub;
    sub.signature = a.signature;
    sub.size = static_cast<int>(universe.size());
    for (std::size_t f = 0; f < a.functions.size(); ++f) {
        const int ar = a.signature.functions[f].second;
        std::vector<int> tbl(power(sub.size, ar));
        std::vector<int> idx(ar, 0);
        std::vector<int> args(ar);
        if (sub.size > 0) {
            do {
                for (int i = 0; i < ar; ++i) args[i] = universe[idx[i]];
                tbl[table_index(idx, sub.size)] = position[a.fn_value(f, args)];
            } while (next_tuple(idx, sub.size));
        }
        sub.functions.push_back(std::move(tbl));
    }
    for (std::size_t r = 0; r < a.relations.size(); ++r) {
        std::vector<std::vector<int>> tuples;
        for (const auto& t : a.relations[r]) {
            bool inside = true;
            for (int v : t)
                if (position[v] == -1) { inside = false; break; }
            if (!inside) continue;
            std::vector<int> mapped(t.size());
            for (std::size_t i = 0; i < t.size(); ++i) mapped[i] = position[t[i]];
            tuples.push_back(std::move(mapped));
        }
        std::sort(tuples.begin(), tuples.end());
        sub.relations.push_back(std::move(tuples));
    }
    for (int c : a.constants) sub.constants.push_back(position[c]);

    GeneratedSubstructure out;
    out.structure = std::move(sub);
    out.inclusion.map = universe;
    std::set<int> seed_set(seed.begin(), seed.end());
    out.closure_added_points = pts.size() != seed_set.size();
    return out;
}

Structure chain(int n, const std::string& rel_name) {
    if (n < 1) throw std::invalid_argument("chain size must be >= 1");
    Structure s;
    s.signature.relations.push_back({rel_name, 2});
    s.size = n;
    std::vector<std::vector<int>> tuples;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) tuples.push_back({i, j});
    std::sort(tuples.begin(), tuples.end());
    s.relations.push_back(std::move(tuples));
    return s;
}

bool is_rigid_surjection(const std::vector<int>& f, int n, int m) {
    if (static_cast<int>(f.size()) != n) return false;
    std::vector<int> first(m, -1);
    for (int i = 0; i < n; ++i) {
        if (f[i] < 0 || f[i] >= m) return false;
        if (first[f[i]] == -1) first[f[i]] = i;
    }
    for (int b = 0; b < m; ++b)
        if (first[b] == -1) return false;
    for (int b = 0; b + 1 < m; ++b)
        if (first[b] >= first[b + 1]) return false;
    return true;
}

std::vector<std::vector<int>> rigid_surjections(int n, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("chain sizes must be >= 1");
    std::vector<std::vector<int>> out;
    if (m > n) return out;
    std::vector<int> f(n, 0);
    do {
        if (is_rigid_surjection(f, n, m)) out.push_back(f);
    } while (next_tuple(f, m));
    return out;
}

Category rigid_surjection_category(int max_size) {
    if (max_size < 1) throw std::invalid_argument("max_size must be >= 1");
    CategoryBuilder builder;
    std::vector<ObjId> objs;
    for (int s = 1; s <= max_size; ++s)
        objs.push_back(builder.add_object("chain" + std::to_string(s)));
    std::map<std::pair<std::pair<int, int>, std::vector<int>>, MorId> lookup;
    std::vector<std::vector<int>> maps;
    std::vector<std::pair<int, int>> shapes; // (dom size, cod size)
    for (int a = 1; a <= max_size; ++a) {
        for (int b = 1; b <= a; ++b) {
            auto surjections = rigid_surjections(a, b);
            for (std::size_t k = 0; k < surjections.size(); ++k) {
                std::string name = "rs" + std::to_string(a) + "to" + std::to_string(b) + "_" +
                                   std::to_string(k);
                MorId id = builder.add_morphism(name, objs[a - 1], objs[b - 1]);
                lookup[{{a, b}, surjections[k]}] = id;
                maps.push_back(surjections[k]);
                shapes.push_back({a, b});
            }
        }
    }
    for (int s = 1; s <= max_size; ++s) {
        std::vector<int> ident(s);
        std::iota(ident.begin(), ident.end(), 0);
        builder.set_identity(objs[s - 1], lookup.at({{s, s}, ident}));
    }
    for (MorId g = 0; g < maps.size(); ++g) {
        for (MorId f = 0; f < maps.size(); ++f) {
            if (shapes[f].second != shapes[g].first) continue;
            std::vector<int> comp(shapes[f].first);
            for (int x = 0; x < shapes[f].first; ++x) comp[x] = maps[g][maps[f][x]];
            auto it = lookup.find({{shapes[f].first, shapes[g].second}, comp});
            if (it == lookup.end())
                throw std::logic_error("rigid surjections not closed under composition");
            builder.set_compose(g, f, it->second);
        }
    }
    return builder.build();
}

Structure superpose_structures(const Structure& a1, const Structure& a2) {
    if (!a1.signature.disjoint_from(a2.signature))
        throw std::invalid_argument("superpose: signatures not disjoint");
    if (a1.size != a2.size)
        throw std::invalid_argument("superpose: universe sizes differ");
    Structure s;
    s.size = a1.size;
    s.signature.functions = a1.signature.functions;
    s.signature.functions.insert(s.signature.functions.end(), a2.signature.functions.begin(),
                                 a2.signature.functions.end());
    s.signature.relations = a1.signature.relations;
    s.signature.relations.insert(s.signature.relations.end(), a2.signature.relations.begin(),
                                 a2.signature.relations.end());
    s.signature.constants = a1.signature.constants;
    s.signature.constants.insert(s.signature.constants.end(), a2.signature.constants.begin(),
                                 a2.signature.constants.end());
    s.functions = a1.functions;
    s.functions.insert(s.functions.end(), a2.functions.begin(), a2.functions.end());
    s.relations = a1.relations;
    s.relations.insert(s.relations.end(), a2.relations.begin(), a2.relations.end());
    s.constants = a1.constants;
    s.constants.insert(s.constants.end(), a2.constants.begin(), a2.constants.end());
    return s;
}

Structure expand_with_constants(const Structure& a, const std::vector<int>& points,
                                const std::string& prefix) {
    for (int p : points)
        if (p < 0 || p >= a.size) throw std::invalid_argument("constant point out of universe");
    std::set<std::string> names;
    for (const auto& [n, _] : a.signature.functions) names.insert(n);
    for (const auto& [n, _] : a.signature.relations) names.insert(n);
    for (const auto& n : a.signature.constants) names.insert(n);
    std::string pre = prefix;
    auto collides = [&](const std::string& p) {
        for (std::size_t i = 1; i <= points.size(); ++i)
            if (names.count(p + std::to_string(i))) return true;
        return false;
    };
    while (collides(pre)) pre += "_";
    Structure s = a;
    for (std::size_t i = 0; i < points.size(); ++i) {
        s.signature.constants.push_back(pre + std::to_string(i + 1));
        s.constants.push_back(points[i]);
    }
    return s;
}

Structure apply_permutation(const Structure& a, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != a.size)
        throw std::invalid_argument("permutation size mismatch");
    std::vector<int> inv(a.size);
    for (int i = 0; i < a.size; ++i) inv[perm[i]] = i;
    Structure s;
    s.signature = a.signature;
    s.size = a.size;
    for (std::size_t f = 0; f < a.functions.size(); ++f) {
        const int ar = a.signature.functions[f].second;
        std::vector<int> tbl(a.functions[f].size());
        std::vector<int> idx(ar, 0);
        std::vector<int> old_args(ar);
        if (a.size > 0) {
            do {
                for (int i = 0; i < ar; ++i) old_args[i] = inv[idx[i]];
                tbl[table_index(idx, a.size)] = perm[a.fn_value(f, old_args)];
            } while (next_tuple(idx, a.size));
        }
        s.functions.push_back(std::move(tbl));
    }
    for (std::size_t r = 0; r < a.relations.size(); ++r) {
        std::vector<std::vector<int>> tuples;
        tuples.reserve(a.relations[r].size());
        for (const auto& t : a.relations[r]) {
            std::vector<int> mapped(t.size());
            for (std::size_t i = 0; i < t.size(); ++i) mapped[i] = perm[t[i]];
            tuples.push_back(std::move(mapped));
        }
        std::sort(tuples.begin(), tuples.end());
        s.relations.push_back(std::move(tuples));
    }
    for (int c : a.constants) s.constants.push_back(perm[c]);
    return s;
}

std::string structure_key(const Structure& a) {
    std::ostringstream os;
    os << a.size << '|';
    for (const auto& tbl : a.functions) {
        for (int v : tbl) os << v << ',';
        os << ';';
    }
    for (const auto& rel : a.relations) {
        for (const auto& t : rel) {
            for (int v : t) os << v << ',';
            os << '/';
        }
        os << ';';
    }
    for (int c : a.constants) os << c << ',';
    return os.str();
}

Structure canonical_form(const Structure& a) {
    std::vector<int> perm(a.size);
    std::iota(perm.begin(), perm.end(), 0);
    Structure best = a;
    std::string best_key = structure_key(a);
    while (std::next_permutation(perm.begin(), perm.end())) {
        Structure candidate = apply_permutation(a, perm);
        std::string key = structure_key(candidate);
        if (key < best_key) {
            best_key = std::move(key);
            best = std::move(candidate);
        }
    }
    return best;
}

bool isomorphic(const Structure& a, const Structure& b) {
    if (a.signature != b.signature || a.size != b.size) return false;
    return structure_key(canonical_form(a)) == structure_key(canonical_form(b));
}

StructureClassSpec StructureClassSpec::chains_spec(int max_size, std::string rel) {
    StructureClassSpec s;
    s.kind = Kind::chains;
    s.max_size = max_size;
    s.chain_rel = std::move(rel);
    return s;
}

StructureClassSpec StructureClassSpec::explicit_spec(std::vector<Structure> members) {
    StructureClassSpec s;
    s.kind = Kind::explicit_list;
    s.members = std::move(members);
    return s;
}

StructureClassSpec StructureClassSpec::all_structures_spec(Signature sig, int max_size,
                                                           std::string predicate_name) {
    StructureClassSpec s;
    s.kind = Kind::all_structures;
    s.signature = std::move(sig);
    s.max_size = max_size;
    s.predicate_name = std::move(predicate_name);
    return s;
}

StructureClassSpec StructureClassSpec::superpose_spec(StructureClassSpec a, StructureClassSpec b) {
    StructureClassSpec s;
    s.kind = Kind::superpose;
    s.left = std::make_shared<StructureClassSpec>(std::move(a));
    s.right = std::make_shared<StructureClassSpec>(std::move(b));
    return s;
}

StructureClassSpec StructureClassSpec::add_constants_spec(StructureClassSpec base, int k) {
    StructureClassSpec s;
    s.kind = Kind::add_constants;
    s.left = std::make_shared<StructureClassSpec>(std::move(base));
    s.num_constants = k;
    return s;
}

namespace {

bool is_linear_order(const Structure& s) {
    if (s.signature.relations.size() != 1 || s.signature.relations[0].second != 2 ||
        !s.signature.functions.empty() || !s.signature.constants.empty())
        return false;
    for (int i = 0; i < s.size; ++i) {
        if (s.in_relation(0, {i, i})) return false;
        for (int j = 0; j < s.size; ++j) {
            if (i == j) continue;
            if (s.in_relation(0, {i, j}) == s.in_relation(0, {j, i})) return false;
            for (int k = 0; k < s.size; ++k)
                if (s.in_relation(0, {i, j}) && s.in_relation(0, {j, k}) && !s.in_relation(0, {i, k}))
                    return false;
        }
    }
    return true;
}

std::function<bool(const Structure&)> resolve_predicate(const StructureClassSpec& spec) {
    if (spec.predicate) return spec.predicate;
    if (spec.predicate_name == "true" || spec.predicate_name.empty())
        return [](const Structure&) { return true; };
    if (spec.predicate_name == "linear_order") return is_linear_order;
    throw std::invalid_argument("unknown predicate: " + spec.predicate_name);
}

// All interpretations of sig on universe size n, canonicalized. Guarded by
// an explicit work cap since the space is exponential in table sizes.
std::vector<Structure> all_structures_of_size(const Signature& sig, int n,
                                              const std::function<bool(const Structure&)>& pred) {
    constexpr std::size_t kWorkCap = 1u << 24;
    std::size_t total = 1;
    for (const auto& [_, ar] : sig.functions) {
        std::size_t cells = power(n, ar);
        for (std::size_t i = 0; i < cells; ++i) {
            total *= static_cast<std::size_t>(n);
            if (total > kWorkCap) throw std::runtime_error("all_structures enumeration too large");
        }
    }
    std::size_t rel_cells = 0;
    for (const auto& [_, ar] : sig.relations) rel_cells += power(n, ar);
    if (rel_cells >= 24 || total > (kWorkCap >> rel_cells))
        throw std::runtime_error("all_structures enumeration too large");
    total <<= rel_cells;
    for (std::size_t c = 0; c < sig.constants.size(); ++c) {
        total *= static_cast<std::size_t>(n);
        if (total > kWorkCap) throw std::runtime_error("all_structures enumeration too large");
    }

    std::vector<Structure> reps;
    std::set<std::string> seen;
    // Odometer over the full interpretation space.
    std::vector<int> fn_flat;
    std::vector<std::size_t> fn_sizes;
    for (const auto& [_, ar] : sig.functions) fn_sizes.push_back(power(n, ar));
    std::size_t fn_total = 0;
    for (auto s : fn_sizes) fn_total += s;
    fn_flat.assign(fn_total, 0);
    std::vector<int> rel_bits(rel_cells, 0);
    std::vector<int> const_vals(sig.constants.size(), 0);

    auto emit = [&]() {
        Structure s;
        s.signature = sig;
        s.size = n;
        std::size_t off = 0;
        for (std::size_t f = 0; f < sig.functions.size(); ++f) {
            s.functions.emplace_back(fn_flat.begin() + off, fn_flat.begin() + off + fn_sizes[f]);
            off += fn_sizes[f];
        }
        std::size_t bit = 0;
        for (std::size_t r = 0; r < sig.relations.size(); ++r) {
            const int ar = sig.relations[r].second;
            std::vector<std::vector<int>> tuples;
            std::vector<int> t(ar, 0);
            do {
                if (rel_bits[bit++]) tuples.push_back(t);
            } while (next_tuple(t, n));
            std::sort(tuples.begin(), tuples.end());
            s.relations.push_back(std::move(tuples));
        }
        s.constants = const_vals;
        if (!pred(s)) return;
        Structure canon = canonical_form(s);
        if (seen.insert(structure_key(canon)).second) reps.push_back(std::move(canon));
    };

    // Nested odometers: function cells over n, relation cells over 2,
    // constants over n.
    std::function<void(std::size_t)> rec_const = [&](std::size_t i) {
        if (i == const_vals.size()) { emit(); return; }
        for (int v = 0; v < n; ++v) { const_vals[i] = v; rec_const(i + 1); }
    };
    std::function<void(std::size_t)> rec_rel = [&](std::size_t i) {
        if (i == rel_bits.size()) { rec_const(0); return; }
        for (int v = 0; v < 2; ++v) { rel_bits[i] = v; rec_rel(i + 1); }
    };
    std::function<void(std::size_t)> rec_fn = [&](std::size_t i) {
        if (i == fn_flat.size()) { rec_rel(0); return; }
        for (int v = 0; v < n; ++v) { fn_flat[i] = v; rec_fn(i + 1); }
    };
    rec_fn(0);
    return reps;
}

// Linear orders have exactly one isomorphism type per size; skip the
// exponential sweep for them.
std::vector<Structure> linear_orders_of_size(const Signature& sig, int n) {
    Structure c = chain(n, sig.relations[0].first);
    return {canonical_form(c)};
}

void sort_members(std::vector<Structure>& members) {
    std::sort(members.begin(), members.end(), [](const Structure& x, const Structure& y) {
        if (x.size != y.size) return x.size < y.size;
        return structure_key(x) < structure_key(y);
    });
}

} // namespace

GeneratedClass generate_class(const StructureClassSpec& spec, int size_budget) {
    GeneratedClass out;
    switch (spec.kind) {
        case StructureClassSpec::Kind::chains: {
            int limit = spec.max_size > 0 ? std::min(spec.max_size, size_budget) : size_budget;
            for (int s = 1; s <= limit; ++s) out.members.push_back(chain(s, spec.chain_rel));
            out.complete = spec.max_size > 0 && spec.max_size <= size_budget;
            break;
        }
        case StructureClassSpec::Kind::explicit_list: {
            std::set<std::string> seen;
            bool truncated = false;
            std::vector<Structure> canon;
            for (const auto& m : spec.members) {
                m.check();
                if (m.signature != spec.members.front().signature)
                    throw std::invalid_argument("explicit class members must share one signature");
                if (m.size > size_budget) { truncated = true; continue; }
                Structure c = canonical_form(m);
                if (seen.insert(structure_key(c)).second) canon.push_back(std::move(c));
            }
            sort_members(canon);
            out.members = std::move(canon);
            out.complete = !truncated;
            break;
        }
        case StructureClassSpec::Kind::all_structures: {
            spec.signature.check();
            auto pred = resolve_predicate(spec);
            int limit = spec.max_size > 0 ? std::min(spec.max_size, size_budget) : size_budget;
            for (int s = 1; s <= limit; ++s) {
                std::vector<Structure> reps;
                if (!spec.predicate && spec.predicate_name == "linear_order" &&
                    spec.signature.relations.size() == 1 && spec.signature.functions.empty() &&
                    spec.signature.constants.empty())
                    reps = linear_orders_of_size(spec.signature, s);
                else
                    reps = all_structures_of_size(spec.signature, s, pred);
                sort_members(reps);
                for (auto& r : reps) out.members.push_back(std::move(r));
            }
            out.complete = spec.max_size > 0 && spec.max_size <= size_budget;
            break;
        }
        case StructureClassSpec::Kind::superpose: {
            GeneratedClass left = generate_class(*spec.left, size_budget);
            GeneratedClass right = generate_class(*spec.right, size_budget);
            std::set<std::string> seen;
            std::vector<Structure> members;
            for (const auto& l : left.members) {
                for (const auto& r : right.members) {
                    if (l.size != r.size) continue;
                    std::vector<int> perm(r.size);
                    std::iota(perm.begin(), perm.end(), 0);
                    do {
                        Structure s = superpose_structures(l, apply_permutation(r, perm));
                        Structure c = canonical_form(s);
                        if (seen.insert(structure_key(c)).second) members.push_back(std::move(c));
                    } while (std::next_permutation(perm.begin(), perm.end()));
                }
            }
            sort_members(members);
            out.members = std::move(members);
            out.complete = left.complete && right.complete;
            break;
        }
        case StructureClassSpec::Kind::add_constants: {
            GeneratedClass base = generate_class(*spec.left, size_budget);
            std::set<std::string> seen;
            std::vector<Structure> members;
            for (const auto& b : base.members) {
                std::vector<int> tuple(spec.num_constants, 0);
                if (b.size == 0) continue;
                bool more = true;
                while (more) {
                    Structure e = expand_with_constants(b, tuple);
                    Structure c = canonical_form(e);
                    if (seen.insert(structure_key(c)).second) members.push_back(std::move(c));
                    more = spec.num_constants > 0 && next_tuple(tuple, b.size);
                    if (spec.num_constants == 0) more = false;
                }
            }
            sort_members(members);
            out.members = std::move(members);
            out.complete = base.complete;
            break;
        }
    }
    return out;
}

StrongAmalgamResult find_strong_amalgam(const Structure& a, const Structure& b1,
                                        const Structure& b2, const Embedding& f1,
                                        const Embedding& f2, const StructureClassSpec& spec,
                                        int size_budget) {
    if (!a.signature.functions.empty() || !a.signature.constants.empty())
        throw std::invalid_argument("find_strong_amalgam: relational signature required");
    if (!is_embedding(a, b1, f1.map) || !is_embedding(a, b2, f2.map))
        throw std::invalid_argument("find_strong_amalgam: span maps are not embeddings");
    GeneratedClass cls = generate_class(spec, size_budget);
    StrongAmalgamResult result;
    for (const auto& c : cls.members) {
        for (const auto& g1 : enumerate_embeddings(b1, c)) {
            for (const auto& g2 : enumerate_embeddings(b2, c)) {
                bool commutes = true;
                for (int p = 0; p < a.size && commutes; ++p)
                    commutes = g1.map[f1.map[p]] == g2.map[f2.map[p]];
                if (!commutes) continue;
                std::set<int> im1(g1.map.begin(), g1.map.end());
                std::set<int> im2(g2.map.begin(), g2.map.end());
                std::set<int> overlap;
                std::set_intersection(im1.begin(), im1.end(), im2.begin(), im2.end(),
                                      std::inserter(overlap, overlap.begin()));
                std::set<int> core;
                for (int p = 0; p < a.size; ++p) core.insert(g1.map[f1.map[p]]);
                if (overlap == core) {
                    result.answer = TriBool::yes;
                    result.tip = c;
                    result.g1 = g1;
                    result.g2 = g2;
                    return result;
                }
            }
        }
    }
    result.answer = cls.complete ? TriBool::no : TriBool::unknown;
    return result;
}

ReasonableClassReport is_reasonable_class(const StructureClassSpec& spec, int size_budget) {
    ReasonableClassReport report;
    GeneratedClass cls = generate_class(spec, size_budget);
    if (cls.members.empty()) {
        report.answer = TriBool::unknown;
        return report;
    }
    bool tested_any = false;
    for (const auto& a : cls.members) {
        for (int s = a.size + 1; s <= size_budget; ++s) {
            tested_any = true;
            // Every injection into [s); witness built by relabeling a member
            // of size s that a embeds into.
            std::vector<const Structure*> targets;
            for (const auto& b : cls.members)
                if (b.size == s) targets.push_back(&b);
            std::vector<int> inj(a.size);
            std::vector<bool> used(s, false);
            std::function<bool(int)> rec = [&](int p) -> bool {
                if (p == a.size) {
                    for (const Structure* b : targets) {
                        auto embs = enumerate_embeddings(a, *b);
                        if (embs.empty()) continue;
                        // Relabel b so the chosen embedding becomes inj.
                        std::vector<int> perm(s, -1);
                        std::vector<bool> taken(s, false);
                        for (int q = 0; q < a.size; ++q) {
                            perm[embs[0].map[q]] = inj[q];
                            taken[inj[q]] = true;
                        }
                        int next = 0;
                        for (int v = 0; v < s; ++v) {
                            if (perm[v] != -1) continue;
                            while (taken[next]) ++next;
                            perm[v] = next;
                            taken[next] = true;
                        }
                        Structure witness = apply_permutation(*b, perm);
                        if (!is_embedding(a, witness, inj))
                            throw std::logic_error("reasonable-class witness relabeling failed");
                        return true;
                    }
                    return false;
                }
                for (int v = 0; v < s; ++v) {
                    if (used[v]) continue;
                    used[v] = true;
                    inj[p] = v;
                    bool ok = rec(p + 1);
                    used[v] = false;
                    if (!ok) return false;
                }
                return true;
            };
            if (!rec(0)) {
                report.answer = TriBool::no;
                report.scope_complete = true;
                report.refutation = "member of size " + std::to_string(a.size) +
                                    " has an injection into a set of size " + std::to_string(s) +
                                    " that extends to no class member";
                return report;
            }
        }
    }
    report.answer = tested_any ? TriBool::yes : TriBool::unknown;
    report.scope_complete = cls.complete;
    return report;
}

StructureCategory as_category(const StructureClassSpec& spec, int size_budget) {
    GeneratedClass cls = generate_class(spec, size_budget);
    StructureCategory out;
    out.objects = cls.members;
    CategoryBuilder builder;
    std::vector<ObjId> objs;
    for (std::size_t i = 0; i < out.objects.size(); ++i) {
        std::string name;
        if (spec.kind == StructureClassSpec::Kind::chains)
            name = "chain" + std::to_string(out.objects[i].size);
        else
            name = "s" + std::to_string(out.objects[i].size) + "n" + std::to_string(i);
        objs.push_back(builder.add_object(name));
    }
    std::map<std::tuple<std::size_t, std::size_t, std::vector<int>>, MorId> lookup;
    std::vector<std::pair<std::size_t, std::size_t>> shapes;
    for (std::size_t i = 0; i < out.objects.size(); ++i) {
        for (std::size_t j = 0; j < out.objects.size(); ++j) {
            auto embs = enumerate_embeddings(out.objects[i], out.objects[j]);
            for (std::size_t k = 0; k < embs.size(); ++k) {
                std::string name = "e" + std::to_string(i) + "." + std::to_string(j) + "." +
                                   std::to_string(k);
                MorId id = builder.add_morphism(name, objs[i], objs[j]);
                lookup[{i, j, embs[k].map}] = id;
                out.embeddings.push_back(embs[k]);
                shapes.push_back({i, j});
            }
        }
    }
    for (std::size_t i = 0; i < out.objects.size(); ++i) {
        std::vector<int> ident(out.objects[i].size);
        std::iota(ident.begin(), ident.end(), 0);
        builder.set_identity(objs[i], lookup.at({i, i, ident}));
    }
    for (MorId g = 0; g < out.embeddings.size(); ++g) {
        for (MorId f = 0; f < out.embeddings.size(); ++f) {
            if (shapes[f].second != shapes[g].first) continue;
            std::vector<int> comp(out.embeddings[f].map.size());
            for (std::size_t x = 0; x < comp.size(); ++x)
                comp[x] = out.embeddings[g].map[out.embeddings[f].map[x]];
            auto it = lookup.find({shapes[f].first, shapes[g].second, comp});
            if (it == lookup.end())
                throw std::logic_error("embeddings not closed under composition");
            builder.set_compose(g, f, it->second);
        }
    }
    out.category = builder.build();
    if (!cls.complete) out.category.mark_truncated();
    return out;
}

StructureCategory chains_category(int max_size) {
    return as_category(StructureClassSpec::chains_spec(max_size), max_size);
}

} // namespace ramseycat
