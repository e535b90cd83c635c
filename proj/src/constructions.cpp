#include "ramseycat/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ramseycat {

FunctorCheck validate_functor(const Category& src, const Category& dst, const FunctorData& f) {
    FunctorCheck check;
    if (f.object_map.size() != src.object_count() || f.morphism_map.size() != src.morphism_count()) {
        check.problems.push_back("functor maps have wrong size");
        return check;
    }
    for (ObjId o : f.object_map)
        if (o >= dst.object_count()) {
            check.problems.push_back("object map out of range");
            return check;
        }
    for (MorId m : f.morphism_map)
        if (m >= dst.morphism_count()) {
            check.problems.push_back("morphism map out of range");
            return check;
        }
    check.is_functor = true;
    for (MorId m = 0; m < src.morphism_count(); ++m) {
        MorId fm = f.morphism_map[m];
        if (dst.dom(fm) != f.object_map[src.dom(m)] || dst.cod(fm) != f.object_map[src.cod(m)]) {
            check.problems.push_back("morphism " + src.morphism_name(m) + " maps outside its hom-set");
            check.is_functor = false;
        }
    }
    for (ObjId o = 0; o < src.object_count(); ++o) {
        if (f.morphism_map[src.identity(o)] != dst.identity(f.object_map[o])) {
            check.problems.push_back("identity of " + src.object_name(o) + " not preserved");
            check.is_functor = false;
        }
    }
    for (MorId g = 0; g < src.morphism_count(); ++g) {
        for (MorId h = 0; h < src.morphism_count(); ++h) {
            if (src.dom(g) != src.cod(h)) continue;
            MorId gh = src.compose(g, h);
            if (f.morphism_map[gh] != dst.compose(f.morphism_map[g], f.morphism_map[h])) {
                check.problems.push_back("composition not preserved at (" + src.morphism_name(g) +
                                          ", " + src.morphism_name(h) + ")");
                check.is_functor = false;
            }
        }
    }
    return check;
}

FunctorData identity_functor(const Category& c) {
    FunctorData f;
    f.object_map.resize(c.object_count());
    f.morphism_map.resize(c.morphism_count());
    std::iota(f.object_map.begin(), f.object_map.end(), 0);
    std::iota(f.morphism_map.begin(), f.morphism_map.end(), 0);
    return f;
}

std::optional<ObjId> ProductCategory::object_of(ObjId a1, ObjId a2) const {
    for (std::size_t i = 0; i < object_pairs.size(); ++i)
        if (object_pairs[i].first == a1 && object_pairs[i].second == a2)
            return static_cast<ObjId>(i);
    return std::nullopt;
}

ProductCategory product(const Category& c1, const Category& c2) {
    ProductCategory out;
    CategoryBuilder builder;
    std::map<std::pair<ObjId, ObjId>, ObjId> obj_index;
    for (ObjId a = 0; a < c1.object_count(); ++a) {
        for (ObjId b = 0; b < c2.object_count(); ++b) {
            ObjId o = builder.add_object("(" + c1.object_name(a) + "," + c2.object_name(b) + ")");
            out.object_pairs.push_back({a, b});
            obj_index[{a, b}] = o;
        }
    }
    std::map<std::pair<MorId, MorId>, MorId> mor_index;
    for (MorId f = 0; f < c1.morphism_count(); ++f) {
        for (MorId g = 0; g < c2.morphism_count(); ++g) {
            MorId m = builder.add_morphism(
                "(" + c1.morphism_name(f) + "," + c2.morphism_name(g) + ")",
                obj_index.at({c1.dom(f), c2.dom(g)}), obj_index.at({c1.cod(f), c2.cod(g)}));
            out.morphism_pairs.push_back({f, g});
            mor_index[{f, g}] = m;
        }
    }
    for (ObjId a = 0; a < c1.object_count(); ++a)
        for (ObjId b = 0; b < c2.object_count(); ++b)
            builder.set_identity(obj_index.at({a, b}), mor_index.at({c1.identity(a), c2.identity(b)}));
    for (std::size_t g = 0; g < out.morphism_pairs.size(); ++g) {
        for (std::size_t f = 0; f < out.morphism_pairs.size(); ++f) {
            auto [g1, g2] = out.morphism_pairs[g];
            auto [f1, f2] = out.morphism_pairs[f];
            if (c1.dom(g1) != c1.cod(f1) || c2.dom(g2) != c2.cod(f2)) continue;
            builder.set_compose(static_cast<MorId>(g), static_cast<MorId>(f),
                                mor_index.at({c1.compose(g1, f1), c2.compose(g2, f2)}));
        }
    }
    out.category = builder.build();
    if (!c1.complete() || !c2.complete()) out.category.mark_truncated();
    for (std::size_t i = 0; i < out.object_pairs.size(); ++i) {
        out.proj1.object_map.push_back(out.object_pairs[i].first);
        out.proj2.object_map.push_back(out.object_pairs[i].second);
    }
    for (std::size_t i = 0; i < out.morphism_pairs.size(); ++i) {
        out.proj1.morphism_map.push_back(out.morphism_pairs[i].first);
        out.proj2.morphism_map.push_back(out.morphism_pairs[i].second);
    }
    return out;
}

PullbackCategory pullback(const Category& c1, const Category& c2, const Category& target,
                          const FunctorData& f1, const FunctorData& f2) {
    FunctorCheck ck1 = validate_functor(c1, target, f1);
    FunctorCheck ck2 = validate_functor(c2, target, f2);
    if (!ck1.is_functor || !ck2.is_functor)
        throw std::invalid_argument("pullback: inputs are not functors into the common target");
    ProductCategory prod = product(c1, c2);
    std::vector<ObjId> keep;
    for (ObjId o = 0; o < prod.category.object_count(); ++o) {
        auto [a, b] = prod.object_pairs[o];
        if (f1.object_map[a] == f2.object_map[b]) keep.push_back(o);
    }
    FullSubcategory sub = full_subcategory(prod.category, keep);
    PullbackCategory out;
    out.category = std::move(sub.category);
    for (ObjId o : sub.object_map) out.object_pairs.push_back(prod.object_pairs[o]);
    for (MorId m : sub.morphism_map) out.morphism_pairs.push_back(prod.morphism_pairs[m]);
    out.inclusion_into_product = sub.inclusion;
    if (!prod.category.complete()) out.category.mark_truncated();
    return out;
}

FunctorCheck validate_set_functor(const Category& c, const SetValuedFunctor& h) {
    FunctorCheck check;
    if (h.sets.size() != c.object_count() || h.maps.size() != c.morphism_count()) {
        check.problems.push_back("set functor tables have wrong size");
        return check;
    }
    check.is_functor = true;
    for (ObjId o = 0; o < c.object_count(); ++o) {
        std::set<std::string> labels(h.sets[o].begin(), h.sets[o].end());
        if (labels.size() != h.sets[o].size()) {
            check.problems.push_back("duplicate element labels at " + c.object_name(o));
            check.is_functor = false;
        }
    }
    for (MorId m = 0; m < c.morphism_count(); ++m) {
        const auto& dom_set = h.sets[c.dom(m)];
        const auto& cod_set = h.sets[c.cod(m)];
        if (h.maps[m].size() != dom_set.size()) {
            check.problems.push_back("map of " + c.morphism_name(m) + " has wrong domain size");
            check.is_functor = false;
            continue;
        }
        for (int v : h.maps[m])
            if (v < 0 || v >= static_cast<int>(cod_set.size())) {
                check.problems.push_back("map of " + c.morphism_name(m) + " lands outside its codomain");
                check.is_functor = false;
            }
    }
    if (!check.is_functor) return check;
    for (ObjId o = 0; o < c.object_count(); ++o) {
        const auto& id_map = h.maps[c.identity(o)];
        for (std::size_t i = 0; i < id_map.size(); ++i)
            if (id_map[i] != static_cast<int>(i)) {
                check.problems.push_back("identity of " + c.object_name(o) + " is not the identity map");
                check.is_functor = false;
            }
    }
    for (MorId g = 0; g < c.morphism_count(); ++g) {
        for (MorId f = 0; f < c.morphism_count(); ++f) {
            if (c.dom(g) != c.cod(f)) continue;
            const auto& gf = h.maps[c.compose(g, f)];
            for (std::size_t x = 0; x < h.maps[f].size(); ++x) {
                if (gf[x] != h.maps[g][h.maps[f][x]]) {
                    check.problems.push_back("H(g.f) != H(g)H(f) at (" + c.morphism_name(g) + ", " +
                                              c.morphism_name(f) + ")");
                    check.is_functor = false;
                    break;
                }
            }
        }
    }
    return check;
}

SetValuedFunctor hom_functor(const Category& c, ObjId x) {
    SetValuedFunctor h;
    h.sets.resize(c.object_count());
    std::vector<std::map<MorId, int>> index(c.object_count());
    for (ObjId a = 0; a < c.object_count(); ++a) {
        const auto& hom_xa = c.hom(x, a);
        for (std::size_t i = 0; i < hom_xa.size(); ++i) {
            h.sets[a].push_back(c.morphism_name(hom_xa[i]));
            index[a][hom_xa[i]] = static_cast<int>(i);
        }
    }
    for (MorId f = 0; f < c.morphism_count(); ++f) {
        std::vector<int> mapped;
        for (MorId m : c.hom(x, c.dom(f))) mapped.push_back(index[c.cod(f)].at(c.compose(f, m)));
        h.maps.push_back(std::move(mapped));
    }
    return h;
}

GrothendieckCategory grothendieck(const Category& c, const SetValuedFunctor& h) {
    FunctorCheck check = validate_set_functor(c, h);
    if (!check.is_functor)
        throw std::invalid_argument("grothendieck: H does not validate as a functor");
    GrothendieckCategory out;
    CategoryBuilder builder;
    std::map<std::pair<ObjId, int>, ObjId> obj_index;
    for (ObjId o = 0; o < c.object_count(); ++o) {
        for (int x = 0; x < static_cast<int>(h.sets[o].size()); ++x) {
            ObjId g = builder.add_object("(" + c.object_name(o) + "," + h.sets[o][x] + ")");
            out.object_pairs.push_back({o, x});
            obj_index[{o, x}] = g;
        }
    }
    std::map<std::pair<MorId, int>, MorId> mor_index;
    std::vector<int> dom_elem; // element carried at the domain, per morphism
    for (MorId f = 0; f < c.morphism_count(); ++f) {
        for (int x = 0; x < static_cast<int>(h.sets[c.dom(f)].size()); ++x) {
            int y = h.maps[f][x];
            MorId m = builder.add_morphism(
                c.morphism_name(f) + "@" + h.sets[c.dom(f)][x],
                obj_index.at({c.dom(f), x}), obj_index.at({c.cod(f), y}));
            out.morphism_base.push_back(f);
            dom_elem.push_back(x);
            mor_index[{f, x}] = m;
        }
    }
    for (const auto& [pair, g] : obj_index)
        builder.set_identity(g, mor_index.at({c.identity(pair.first), pair.second}));
    for (std::size_t gi = 0; gi < out.morphism_base.size(); ++gi) {
        for (std::size_t fi = 0; fi < out.morphism_base.size(); ++fi) {
            // g : (B,y) -> (C,z), f : (A,x) -> (B,y) composable iff the base
            // morphisms compose and the tracked elements agree.
            MorId gb = out.morphism_base[gi];
            MorId fb = out.morphism_base[fi];
            if (c.dom(gb) != c.cod(fb)) continue;
            if (h.maps[fb][dom_elem[fi]] != dom_elem[gi]) continue;
            builder.set_compose(static_cast<MorId>(gi), static_cast<MorId>(fi),
                                mor_index.at({c.compose(gb, fb), dom_elem[fi]}));
        }
    }
    out.category = builder.build();
    if (!c.complete()) out.category.mark_truncated();
    out.forgetful.object_map.resize(out.object_pairs.size());
    for (std::size_t i = 0; i < out.object_pairs.size(); ++i)
        out.forgetful.object_map[i] = out.object_pairs[i].first;
    out.forgetful.morphism_map = out.morphism_base;
    return out;
}

SliceCategory slice(const Category& c, ObjId x) {
    if (x >= c.object_count()) throw std::invalid_argument("slice: unknown object");
    SliceCategory out;
    CategoryBuilder builder;
    std::map<std::pair<MorId, ObjId>, ObjId> obj_index;
    for (ObjId a = 0; a < c.object_count(); ++a) {
        for (MorId fa : c.hom(x, a)) {
            ObjId o = builder.add_object("(" + c.morphism_name(fa) + "," + c.object_name(a) + ")");
            out.object_pairs.push_back({fa, a});
            obj_index[{fa, a}] = o;
        }
    }
    std::map<std::pair<MorId, MorId>, MorId> mor_index; // (h, f_dom) -> id
    for (MorId h = 0; h < c.morphism_count(); ++h) {
        for (MorId fa : c.hom(x, c.dom(h))) {
            MorId fb = c.compose(h, fa);
            MorId m = builder.add_morphism(c.morphism_name(h) + "@" + c.morphism_name(fa),
                                           obj_index.at({fa, c.dom(h)}),
                                           obj_index.at({fb, c.cod(h)}));
            out.morphism_base.push_back(h);
            mor_index[{h, fa}] = m;
        }
    }
    for (const auto& [pair, o] : obj_index)
        builder.set_identity(o, mor_index.at({c.identity(pair.second), pair.first}));
    std::vector<MorId> pointing; // slice morphism -> the f_A at its domain
    pointing.resize(out.morphism_base.size());
    for (const auto& [key, id] : mor_index) pointing[id] = key.second;
    for (MorId g = 0; g < out.morphism_base.size(); ++g) {
        for (MorId f = 0; f < out.morphism_base.size(); ++f) {
            MorId gb = out.morphism_base[g];
            MorId fb = out.morphism_base[f];
            if (c.dom(gb) != c.cod(fb)) continue;
            // f : (f_A, A) -> (f_B, B); g must start at that same pointing.
            if (pointing[g] != c.compose(fb, pointing[f])) continue;
            builder.set_compose(g, f, mor_index.at({c.compose(gb, fb), pointing[f]}));
        }
    }
    out.category = builder.build();
    if (!c.complete()) out.category.mark_truncated();
    out.forgetful.object_map.resize(out.object_pairs.size());
    for (std::size_t i = 0; i < out.object_pairs.size(); ++i)
        out.forgetful.object_map[i] = out.object_pairs[i].second;
    out.forgetful.morphism_map = out.morphism_base;
    return out;
}

FunctorProps functor_props(const Category& src, const Category& dst, const FunctorData& f) {
    FunctorProps props;
    FunctorCheck check = validate_functor(src, dst, f);
    props.is_functor = check.is_functor;
    if (!props.is_functor) return props;

    props.is_full = true;
    props.is_faithful = true;
    for (ObjId a = 0; a < src.object_count(); ++a) {
        for (ObjId b = 0; b < src.object_count(); ++b) {
            const auto& hom_ab = src.hom(a, b);
            std::set<MorId> image;
            for (MorId m : hom_ab) image.insert(f.morphism_map[m]);
            if (image.size() != hom_ab.size()) props.is_faithful = false;
            // Fullness is per hom-set of the image: every target morphism
            // F(a) -> F(b) must be hit.
            for (MorId t : dst.hom(f.object_map[a], f.object_map[b]))
                if (!image.count(t)) props.is_full = false;
        }
    }

    props.preserves_aut_groups = true;
    for (ObjId a = 0; a < src.object_count(); ++a) {
        std::set<MorId> fauts;
        for (MorId m : aut(src, a)) fauts.insert(f.morphism_map[m]);
        std::set<MorId> dauts;
        for (MorId m : aut(dst, f.object_map[a])) dauts.insert(m);
        if (fauts != dauts) props.preserves_aut_groups = false;
    }

    props.is_reasonable = true;
    for (ObjId cobj = 0; cobj < src.object_count() && props.is_reasonable; ++cobj) {
        for (ObjId b = 0; b < dst.object_count() && props.is_reasonable; ++b) {
            for (MorId h : dst.hom(f.object_map[cobj], b)) {
                bool lifted = false;
                for (MorId g = 0; g < src.morphism_count() && !lifted; ++g)
                    lifted = src.dom(g) == cobj && f.object_map[src.cod(g)] == b &&
                             f.morphism_map[g] == h;
                if (!lifted) {
                    props.is_reasonable = false;
                    break;
                }
            }
        }
    }

    props.image_is_cofinal = true;
    for (ObjId d = 0; d < dst.object_count(); ++d) {
        bool reached = false;
        for (ObjId cobj = 0; cobj < src.object_count() && !reached; ++cobj)
            reached = !dst.hom(d, f.object_map[cobj]).empty();
        if (!reached) props.image_is_cofinal = false;
    }
    return props;
}

FullSubcategory full_subcategory(const Category& c, const std::vector<ObjId>& objects) {
    FullSubcategory out;
    CategoryBuilder builder;
    std::vector<std::optional<ObjId>> to_sub(c.object_count());
    for (ObjId o : objects) {
        to_sub[o] = builder.add_object(c.object_name(o));
        out.object_map.push_back(o);
    }
    std::vector<std::optional<MorId>> mor_to_sub(c.morphism_count());
    for (MorId m = 0; m < c.morphism_count(); ++m) {
        if (!to_sub[c.dom(m)] || !to_sub[c.cod(m)]) continue;
        MorId sm = builder.add_morphism(c.morphism_name(m), *to_sub[c.dom(m)], *to_sub[c.cod(m)]);
        mor_to_sub[m] = sm;
        out.morphism_map.push_back(m);
    }
    for (std::size_t i = 0; i < objects.size(); ++i)
        builder.set_identity(static_cast<ObjId>(i), *mor_to_sub[c.identity(objects[i])]);
    for (MorId g = 0; g < c.morphism_count(); ++g) {
        if (!mor_to_sub[g]) continue;
        for (MorId f = 0; f < c.morphism_count(); ++f) {
            if (!mor_to_sub[f] || c.dom(g) != c.cod(f)) continue;
            builder.set_compose(*mor_to_sub[g], *mor_to_sub[f], *mor_to_sub[c.compose(g, f)]);
        }
    }
    out.category = builder.build();
    if (!c.complete()) out.category.mark_truncated();
    out.inclusion.object_map = out.object_map;
    out.inclusion.morphism_map = out.morphism_map;
    return out;
}

bool is_cofinal_object_set(const Category& c, const std::vector<ObjId>& objects) {
    for (ObjId d = 0; d < c.object_count(); ++d) {
        bool reached = false;
        for (ObjId s : objects)
            if (!c.hom(d, s).empty()) { reached = true; break; }
        if (!reached) return false;
    }
    return true;
}

void validate_diagram(const Category& c, const BinaryDiagram& d) {
    if (d.bottom >= c.object_count() || d.top >= c.object_count())
        throw std::invalid_argument("diagram references unknown object");
    if (d.top_count < 0) throw std::invalid_argument("negative top count");
    for (const auto& node : d.bottoms) {
        if (node.i < 0 || node.i >= d.top_count || node.j < 0 || node.j >= d.top_count)
            throw std::invalid_argument("diagram bottom node aims at a missing top node");
        for (MorId m : {node.u, node.v}) {
            if (m >= c.morphism_count() || c.dom(m) != d.bottom || c.cod(m) != d.top)
                throw std::invalid_argument("diagram arrow is not a morphism bottom -> top");
        }
    }
}

std::vector<std::vector<int>> connected_components(const BinaryDiagram& d) {
    std::vector<int> parent(d.top_count);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& node : d.bottoms) parent[find(node.i)] = find(node.j);
    std::map<int, std::vector<int>> groups;
    for (int t = 0; t < d.top_count; ++t) groups[find(t)].push_back(t);
    std::vector<std::vector<int>> out;
    for (auto& [_, g] : groups) {
        std::sort(g.begin(), g.end());
        out.push_back(g);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool cocone_compatible(const Category& c, const BinaryDiagram& d, const Cocone& cocone) {
    if (static_cast<int>(cocone.legs.size()) != d.top_count) return false;
    for (MorId leg : cocone.legs)
        if (c.dom(leg) != d.top || c.cod(leg) != cocone.tip) return false;
    for (const auto& node : d.bottoms)
        if (c.compose(cocone.legs[node.i], node.u) != c.compose(cocone.legs[node.j], node.v))
            return false;
    return true;
}

CoconeResult find_compatible_cocone(const Category& c, const BinaryDiagram& d) {
    validate_diagram(c, d);
    CoconeResult result;
    // Constraints grouped per top index for forward checking.
    std::vector<std::vector<std::size_t>> touching(d.top_count);
    for (std::size_t n = 0; n < d.bottoms.size(); ++n) {
        touching[d.bottoms[n].i].push_back(n);
        touching[d.bottoms[n].j].push_back(n);
    }
    for (ObjId tip = 0; tip < c.object_count(); ++tip) {
        const auto& candidates = c.hom(d.top, tip);
        if (candidates.empty() && d.top_count > 0) continue;
        std::vector<MorId> legs(d.top_count, kNoMor);
        std::function<bool(int)> assign = [&](int t) -> bool {
            if (t == d.top_count) return true;
            for (MorId leg : candidates) {
                legs[t] = leg;
                bool ok = true;
                for (std::size_t n : touching[t]) {
                    const auto& node = d.bottoms[n];
                    if (legs[node.i] == kNoMor || legs[node.j] == kNoMor) continue;
                    if (c.compose(legs[node.i], node.u) != c.compose(legs[node.j], node.v)) {
                        ok = false;
                        break;
                    }
                }
                if (ok && assign(t + 1)) return true;
                legs[t] = kNoMor;
            }
            return false;
        };
        if (assign(0)) {
            result.answer = TriBool::yes;
            result.cocone = Cocone{tip, legs};
            return result;
        }
    }
    result.answer = c.complete() ? TriBool::no : TriBool::unknown;
    return result;
}

BinaryAmalgamationReport has_binary_amalgamation(const Category& c, int max_tops, int max_bottoms,
                                                 std::size_t object_limit, bool bridges_only) {
    BinaryAmalgamationReport report;
    bool any_unknown = false;
    const std::size_t foot_limit = std::min<std::size_t>(c.object_count(), object_limit);
    for (ObjId a = 0; a < foot_limit; ++a) {
        for (ObjId b = 0; b < foot_limit; ++b) {
            const auto& hom_ab = c.hom(a, b);
            if (hom_ab.empty()) continue;
            // All bottom node shapes over this (A, B).
            std::vector<BinaryDiagramNode> shapes;
            for (int tops = 1; tops <= max_tops; ++tops) {
                shapes.clear();
                for (MorId u : hom_ab)
                    for (MorId v : hom_ab)
                        for (int i = 0; i < tops; ++i)
                            for (int j = 0; j < tops; ++j) {
                                if (bridges_only && i == j) continue;
                                shapes.push_back({u, i, v, j});
                            }
                // Choose up to max_bottoms nodes (with repetition pointless,
                // so strictly increasing index tuples).
                std::vector<std::size_t> pick;
                std::function<bool(std::size_t, int)> choose = [&](std::size_t start, int left) -> bool {
                    BinaryDiagram d;
                    d.bottom = a;
                    d.top = b;
                    d.top_count = tops;
                    for (std::size_t p : pick) d.bottoms.push_back(shapes[p]);
                    if (!d.bottoms.empty() || tops == 1) {
                        ++report.diagrams_checked;
                        CoconeResult r = find_compatible_cocone(c, d);
                        if (r.answer == TriBool::no) {
                            report.answer = TriBool::no;
                            report.refutation = d;
                            return true;
                        }
                        if (r.answer == TriBool::unknown) any_unknown = true;
                    }
                    if (left == 0) return false;
                    for (std::size_t s = start; s < shapes.size(); ++s) {
                        pick.push_back(s);
                        if (choose(s + 1, left - 1)) return true;
                        pick.pop_back();
                    }
                    return false;
                };
                if (choose(0, max_bottoms)) return report;
            }
        }
    }
    report.answer = any_unknown ? TriBool::unknown : TriBool::yes;
    return report;
}

bool categories_isomorphic_via(const Category& a, const Category& b,
                               const std::vector<ObjId>& object_bij,
                               const std::vector<MorId>& morphism_bij) {
    if (object_bij.size() != a.object_count() || a.object_count() != b.object_count()) return false;
    if (morphism_bij.size() != a.morphism_count() || a.morphism_count() != b.morphism_count())
        return false;
    std::vector<bool> oseen(b.object_count(), false), mseen(b.morphism_count(), false);
    for (ObjId o : object_bij) {
        if (o >= b.object_count() || oseen[o]) return false;
        oseen[o] = true;
    }
    for (MorId m : morphism_bij) {
        if (m >= b.morphism_count() || mseen[m]) return false;
        mseen[m] = true;
    }
    FunctorData f{object_bij, morphism_bij};
    return validate_functor(a, b, f).is_functor;
}

} // namespace ramseycat
