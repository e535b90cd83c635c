#include "ramseycat/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ramseycat {

std::uint64_t Rng::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) { return next() % n; }

namespace examples {

Category one_object() {
    CategoryBuilder b;
    ObjId a = b.add_object("A");
    MorId id = b.add_morphism("id_A", a, a);
    b.set_identity(a, id);
    b.set_compose(id, id, id);
    return b.build();
}

Category two_object_pair() {
    CategoryBuilder b;
    ObjId a = b.add_object("A");
    ObjId bb = b.add_object("B");
    MorId ida = b.add_morphism("id_A", a, a);
    MorId idb = b.add_morphism("id_B", bb, bb);
    MorId f = b.add_morphism("f", a, bb);
    MorId g = b.add_morphism("g", a, bb);
    b.set_identity(a, ida);
    b.set_identity(bb, idb);
    b.set_compose(ida, ida, ida);
    b.set_compose(idb, idb, idb);
    b.set_compose(f, ida, f);
    b.set_compose(g, ida, g);
    b.set_compose(idb, f, f);
    b.set_compose(idb, g, g);
    return b.build();
}

Category aut2_category() {
    CategoryBuilder b;
    ObjId a = b.add_object("A");
    ObjId bb = b.add_object("B");
    MorId ida = b.add_morphism("id_A", a, a);
    MorId s = b.add_morphism("s", a, a);
    MorId idb = b.add_morphism("id_B", bb, bb);
    MorId f = b.add_morphism("f", a, bb);
    MorId fs = b.add_morphism("fs", a, bb);
    b.set_identity(a, ida);
    b.set_identity(bb, idb);
    b.set_compose(ida, ida, ida);
    b.set_compose(ida, s, s);
    b.set_compose(s, ida, s);
    b.set_compose(s, s, ida);
    b.set_compose(idb, idb, idb);
    b.set_compose(f, ida, f);
    b.set_compose(f, s, fs);
    b.set_compose(fs, ida, fs);
    b.set_compose(fs, s, f);
    b.set_compose(idb, f, f);
    b.set_compose(idb, fs, fs);
    return b.build();
}

Category arrow_category() {
    CategoryBuilder b;
    ObjId a = b.add_object("A");
    ObjId bb = b.add_object("B");
    MorId ida = b.add_morphism("id_A", a, a);
    MorId idb = b.add_morphism("id_B", bb, bb);
    MorId f = b.add_morphism("f", a, bb);
    b.set_identity(a, ida);
    b.set_identity(bb, idb);
    b.set_compose(ida, ida, ida);
    b.set_compose(idb, idb, idb);
    b.set_compose(f, ida, f);
    b.set_compose(idb, f, f);
    return b.build();
}

namespace {

std::vector<int> compose_perm(const std::vector<int>& g, const std::vector<int>& f) {
    std::vector<int> r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = g[f[i]];
    return r;
}

std::vector<std::vector<int>> close_under_composition(const std::vector<std::vector<int>>& gens,
                                                      int n) {
    std::set<std::vector<int>> closed;
    std::vector<int> ident(n);
    std::iota(ident.begin(), ident.end(), 0);
    closed.insert(ident);
    for (const auto& g : gens) closed.insert(g);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> current(closed.begin(), closed.end());
        for (const auto& g : current)
            for (const auto& f : current)
                if (closed.insert(compose_perm(g, f)).second) grew = true;
    }
    return {closed.begin(), closed.end()};
}

std::string perm_name(const std::vector<int>& p) {
    std::string s = "p";
    for (int v : p) s += std::to_string(v);
    return s;
}

} // namespace

Category group_category(const std::vector<std::vector<int>>& generators, int n) {
    auto elements = close_under_composition(generators, n);
    CategoryBuilder b;
    ObjId a = b.add_object("A");
    std::map<std::vector<int>, MorId> index;
    for (const auto& p : elements) index[p] = b.add_morphism(perm_name(p), a, a);
    std::vector<int> ident(n);
    std::iota(ident.begin(), ident.end(), 0);
    b.set_identity(a, index.at(ident));
    for (const auto& g : elements)
        for (const auto& f : elements)
            b.set_compose(index.at(g), index.at(f), index.at(compose_perm(g, f)));
    return b.build();
}

Category cyclic_group_category(int n) {
    std::vector<int> cycle(n);
    for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    return group_category({cycle}, n);
}

Category symmetric_group_category(int n) {
    if (n < 1 || n > 4) throw std::invalid_argument("symmetric_group_category supports n in 1..4");
    std::vector<int> cycle(n), swap(n);
    for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    std::iota(swap.begin(), swap.end(), 0);
    if (n >= 2) std::swap(swap[0], swap[1]);
    return group_category({cycle, swap}, n);
}

StructureCategory cycle_substructure_category(int n) {
    Structure cycle;
    cycle.signature.relations.push_back({"E", 2});
    cycle.size = n;
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    std::sort(edges.begin(), edges.end());
    cycle.relations.push_back(std::move(edges));

    // All induced substructures on nonempty point sets, up to isomorphism.
    std::vector<Structure> members;
    for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<int> pts;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) pts.push_back(i);
        members.push_back(generated_substructure(cycle, pts).structure);
    }
    return as_category(StructureClassSpec::explicit_spec(std::move(members)), n);
}

SetValuedFunctor coset_functor(const Category& group_cat,
                               const std::vector<std::vector<int>>& subgroup_perms,
                               const std::vector<std::vector<int>>& element_perms) {
    if (group_cat.object_count() != 1)
        throw std::invalid_argument("coset_functor expects a one-object group category");
    if (element_perms.size() != group_cat.morphism_count())
        throw std::invalid_argument("element_perms must list the permutation of every morphism");
    const int n = static_cast<int>(element_perms.front().size());
    auto subgroup = close_under_composition(subgroup_perms, n);
    std::set<std::vector<int>> subgroup_set(subgroup.begin(), subgroup.end());
    // Left cosets gK, keyed by their sorted element list.
    std::vector<std::vector<std::vector<int>>> cosets;
    std::map<std::vector<int>, int> coset_of; // element perm -> coset index
    for (MorId m = 0; m < group_cat.morphism_count(); ++m) {
        const auto& g = element_perms[m];
        if (coset_of.count(g)) continue;
        std::vector<std::vector<int>> coset;
        for (const auto& k : subgroup) coset.push_back(compose_perm(g, k));
        std::sort(coset.begin(), coset.end());
        int idx = static_cast<int>(cosets.size());
        for (const auto& e : coset) coset_of[e] = idx;
        cosets.push_back(std::move(coset));
    }
    SetValuedFunctor h;
    h.sets.resize(1);
    for (std::size_t i = 0; i < cosets.size(); ++i)
        h.sets[0].push_back("K" + std::to_string(i));
    for (MorId m = 0; m < group_cat.morphism_count(); ++m) {
        std::vector<int> mapped(cosets.size());
        for (std::size_t x = 0; x < cosets.size(); ++x)
            mapped[x] = coset_of.at(compose_perm(element_perms[m], cosets[x].front()));
        h.maps.push_back(std::move(mapped));
    }
    return h;
}

SetValuedFunctor constant_singleton_functor(const Category& c) {
    SetValuedFunctor h;
    h.sets.assign(c.object_count(), {"pt"});
    h.maps.assign(c.morphism_count(), {0});
    return h;
}

} // namespace examples

Signature random_signature(Rng& rng) {
    Signature sig;
    // One or two unary relations ("colors"), sometimes a binary relation.
    int unary = 1 + static_cast<int>(rng.below(2));
    for (int u = 0; u < unary; ++u) sig.relations.push_back({"P" + std::to_string(u), 1});
    if (rng.coin()) sig.relations.push_back({"R", 2});
    return sig;
}

Structure random_structure_over(Rng& rng, const Signature& sig, int max_size) {
    Structure s;
    s.signature = sig;
    s.size = 1 + static_cast<int>(rng.below(max_size));
    for (const auto& [name, arity] : sig.relations) {
        std::vector<std::vector<int>> tuples;
        if (arity == 1) {
            for (int p = 0; p < s.size; ++p)
                if (rng.coin()) tuples.push_back({p});
        } else {
            for (int p = 0; p < s.size; ++p)
                for (int q = 0; q < s.size; ++q)
                    if (rng.below(3) == 0) tuples.push_back({p, q});
        }
        std::sort(tuples.begin(), tuples.end());
        s.relations.push_back(std::move(tuples));
    }
    return s;
}

Structure random_structure(Rng& rng, int max_size) {
    return random_structure_over(rng, random_signature(rng), max_size);
}

namespace {

Category random_embedding_category(Rng& rng, const RandomCategoryParams& params) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        Signature sig = random_signature(rng);
        std::size_t count = 2 + rng.below(params.max_objects - 1);
        std::vector<Structure> members;
        for (std::size_t i = 0; i < count; ++i)
            members.push_back(random_structure_over(rng, sig, 3));
        StructureCategory sc = as_category(StructureClassSpec::explicit_spec(members), 3);
        if (sc.category.object_count() >= 2 && sc.category.object_count() <= params.max_objects &&
            sc.category.morphism_count() <= params.max_morphisms)
            return sc.category;
    }
    return examples::two_object_pair();
}

Category random_group_category(Rng& rng, const RandomCategoryParams& params) {
    for (int attempt = 0; attempt < 16; ++attempt) {
        int n = 2 + static_cast<int>(rng.below(2));
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = n - 1; i > 0; --i)
            std::swap(perm[i], perm[rng.below(i + 1)]);
        Category cat = examples::group_category({perm}, n);
        if (cat.morphism_count() <= params.max_morphisms) return cat;
    }
    return examples::one_object();
}

Category random_poset_category(Rng& rng, const RandomCategoryParams& params) {
    std::size_t n = 2 + rng.below(params.max_objects - 1);
    // Random DAG on 0 < 1 < ... then reachability closure makes it a poset
    // category (thin, all mono).
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) le[i][i] = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng.coin()) le[i][j] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (le[i][k] && le[k][j]) le[i][j] = true;
    CategoryBuilder b;
    std::vector<ObjId> objs;
    for (std::size_t i = 0; i < n; ++i) objs.push_back(b.add_object("P" + std::to_string(i)));
    std::map<std::pair<std::size_t, std::size_t>, MorId> arrow;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (le[i][j])
                arrow[{i, j}] = b.add_morphism("a" + std::to_string(i) + "_" + std::to_string(j),
                                               objs[i], objs[j]);
    for (std::size_t i = 0; i < n; ++i) b.set_identity(objs[i], arrow.at({i, i}));
    for (const auto& [gp, g] : arrow)
        for (const auto& [fp, f] : arrow)
            if (fp.second == gp.first) b.set_compose(g, f, arrow.at({fp.first, gp.second}));
    Category cat = b.build();
    if (cat.morphism_count() > params.max_morphisms) return examples::arrow_category();
    return cat;
}

} // namespace

Category random_mono_category(Rng& rng, const RandomCategoryParams& params) {
    switch (rng.below(6)) {
        case 0: return random_group_category(rng, params);
        case 1:
        case 2: return random_poset_category(rng, params);
        case 3: {
            switch (rng.below(4)) {
                case 0: return examples::one_object();
                case 1: return examples::two_object_pair();
                case 2: return examples::aut2_category();
                default: return examples::arrow_category();
            }
        }
        default: return random_embedding_category(rng, params);
    }
}

} // namespace ramseycat
