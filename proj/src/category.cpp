#include "ramseycat/category.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ramseycat {

std::string to_string(TriBool t) {
    switch (t) {
        case TriBool::yes: return "yes";
        case TriBool::no: return "no";
        default: return "unknown";
    }
}

namespace {

struct Indexed {
    std::map<std::string, ObjId> obj;
    std::map<std::string, MorId> mor;
    std::vector<ObjId> dom, cod;
    std::vector<MorId> identity;            // per object, kNoMor if missing
    std::vector<MorId> table;               // m x m, kNoMor = undefined
    bool ok = true;
};

// Resolves names and fills index tables; reference problems land in report.
Indexed index_data(const FiniteCategoryData& data, LawReport& report) {
    Indexed ix;
    for (std::size_t i = 0; i < data.objects.size(); ++i) {
        if (!ix.obj.emplace(data.objects[i], static_cast<ObjId>(i)).second) {
            report.problems.push_back("duplicate object name: " + data.objects[i]);
            ix.ok = false;
        }
    }
    for (std::size_t i = 0; i < data.morphisms.size(); ++i) {
        const auto& m = data.morphisms[i];
        if (!ix.mor.emplace(m.name, static_cast<MorId>(i)).second) {
            report.problems.push_back("duplicate morphism name: " + m.name);
            ix.ok = false;
        }
    }
    ix.dom.resize(data.morphisms.size());
    ix.cod.resize(data.morphisms.size());
    for (std::size_t i = 0; i < data.morphisms.size(); ++i) {
        const auto& m = data.morphisms[i];
        auto d = ix.obj.find(m.dom);
        auto c = ix.obj.find(m.cod);
        if (d == ix.obj.end() || c == ix.obj.end()) {
            report.problems.push_back("morphism " + m.name + " references unknown object");
            ix.ok = false;
            continue;
        }
        ix.dom[i] = d->second;
        ix.cod[i] = c->second;
    }
    ix.identity.assign(data.objects.size(), kNoMor);
    for (const auto& [obj, mor] : data.identities) {
        auto o = ix.obj.find(obj);
        auto m = ix.mor.find(mor);
        if (o == ix.obj.end() || m == ix.mor.end()) {
            report.problems.push_back("identity entry references unknown name: " + obj + " -> " + mor);
            ix.ok = false;
            continue;
        }
        ix.identity[o->second] = m->second;
    }
    const std::size_t mc = data.morphisms.size();
    ix.table.assign(mc * mc, kNoMor);
    for (const auto& triple : data.compose) {
        auto g = ix.mor.find(triple[0]);
        auto f = ix.mor.find(triple[1]);
        auto r = ix.mor.find(triple[2]);
        if (g == ix.mor.end() || f == ix.mor.end() || r == ix.mor.end()) {
            report.problems.push_back("compose entry references unknown morphism");
            ix.ok = false;
            continue;
        }
        MorId& slot = ix.table[g->second * mc + f->second];
        if (slot != kNoMor && slot != r->second) {
            report.problems.push_back("conflicting compose entries for (" + triple[0] + ", " + triple[1] + ")");
            ix.ok = false;
        }
        slot = r->second;
    }
    return ix;
}

} // namespace

LawReport validate_category(const FiniteCategoryData& data) {
    LawReport report;
    Indexed ix = index_data(data, report);
    report.references_ok = ix.ok;
    if (!ix.ok) return report;

    const std::size_t oc = data.objects.size();
    const std::size_t mc = data.morphisms.size();
    auto comp = [&](MorId g, MorId f) { return ix.table[g * mc + f]; };

    report.identity_ok = true;
    for (std::size_t o = 0; o < oc; ++o) {
        MorId id = ix.identity[o];
        if (id == kNoMor) {
            report.problems.push_back("object " + data.objects[o] + " has no identity");
            report.identity_ok = false;
            continue;
        }
        if (ix.dom[id] != o || ix.cod[id] != o) {
            report.problems.push_back("identity of " + data.objects[o] + " is not an endomorphism of it");
            report.identity_ok = false;
        }
    }

    report.composability_ok = true;
    for (MorId g = 0; g < mc; ++g) {
        for (MorId f = 0; f < mc; ++f) {
            const bool composable = (ix.dom[g] == ix.cod[f]);
            MorId r = comp(g, f);
            if (composable && r == kNoMor) {
                report.problems.push_back("compose(" + data.morphisms[g].name + ", " +
                                          data.morphisms[f].name + ") is composable but undefined");
                report.composability_ok = false;
            } else if (!composable && r != kNoMor) {
                report.problems.push_back("compose(" + data.morphisms[g].name + ", " +
                                          data.morphisms[f].name + ") defined on non-composable pair");
                report.composability_ok = false;
            } else if (r != kNoMor) {
                if (ix.dom[r] != ix.dom[f] || ix.cod[r] != ix.cod[g]) {
                    report.problems.push_back("compose(" + data.morphisms[g].name + ", " +
                                              data.morphisms[f].name + ") has wrong dom/cod");
                    report.composability_ok = false;
                }
            }
        }
    }
    if (!report.composability_ok) return report;

    if (report.identity_ok) {
        for (MorId f = 0; f < mc && report.identity_ok; ++f) {
            MorId left = comp(ix.identity[ix.cod[f]], f);
            MorId right = comp(f, ix.identity[ix.dom[f]]);
            if (left != f) {
                report.problems.push_back("left identity law fails at (" +
                                          data.morphisms[ix.identity[ix.cod[f]]].name + ", " +
                                          data.morphisms[f].name + ")");
                report.identity_ok = false;
            }
            if (right != f) {
                report.problems.push_back("right identity law fails at (" + data.morphisms[f].name +
                                          ", " + data.morphisms[ix.identity[ix.dom[f]]].name + ")");
                report.identity_ok = false;
            }
        }
    }

    report.associativity_ok = true;
    for (MorId h = 0; h < mc && report.associativity_ok; ++h) {
        for (MorId g = 0; g < mc && report.associativity_ok; ++g) {
            if (ix.dom[h] != ix.cod[g]) continue;
            MorId hg = comp(h, g);
            for (MorId f = 0; f < mc; ++f) {
                if (ix.dom[g] != ix.cod[f]) continue;
                MorId gf = comp(g, f);
                if (comp(hg, f) != comp(h, gf)) {
                    report.problems.push_back("associativity fails at (" + data.morphisms[h].name +
                                              ", " + data.morphisms[g].name + ", " +
                                              data.morphisms[f].name + ")");
                    report.associativity_ok = false;
                    break;
                }
            }
        }
    }

    // Mono: f.g = f.h defined implies g = h. O(m^3) but recorded once.
    report.all_mono = TriBool::yes;
    for (MorId f = 0; f < mc && report.all_mono == TriBool::yes; ++f) {
        for (MorId g = 0; g < mc && report.all_mono == TriBool::yes; ++g) {
            if (ix.cod[g] != ix.dom[f]) continue;
            for (MorId h = static_cast<MorId>(g + 1); h < mc; ++h) {
                if (ix.cod[h] != ix.dom[f] || ix.dom[h] != ix.dom[g]) continue;
                if (comp(f, g) == comp(f, h)) {
                    report.problems.push_back("not mono: " + data.morphisms[f].name +
                                              " does not left-cancel " + data.morphisms[g].name +
                                              " vs " + data.morphisms[h].name);
                    report.all_mono = TriBool::no;
                    break;
                }
            }
        }
    }
    return report;
}

Category Category::from_data(const FiniteCategoryData& data) {
    LawReport report = validate_category(data);
    if (!report.accepted()) {
        std::string msg = "category rejected by validation";
        for (const auto& p : report.problems) msg += "; " + p;
        throw std::invalid_argument(msg);
    }
    Category cat;
    LawReport dummy;
    Indexed ix = index_data(data, dummy);
    cat.obj_names_ = data.objects;
    cat.mor_names_.reserve(data.morphisms.size());
    for (const auto& m : data.morphisms) cat.mor_names_.push_back(m.name);
    cat.dom_ = std::move(ix.dom);
    cat.cod_ = std::move(ix.cod);
    cat.identity_ = std::move(ix.identity);
    cat.table_ = std::move(ix.table);
    cat.obj_index_ = std::move(ix.obj);
    cat.mor_index_ = std::move(ix.mor);
    const std::size_t oc = cat.obj_names_.size();
    cat.hom_.assign(oc * oc, {});
    for (MorId m = 0; m < cat.mor_names_.size(); ++m)
        cat.hom_[cat.dom_[m] * oc + cat.cod_[m]].push_back(m);
    cat.all_mono_ = (report.all_mono == TriBool::yes);
    return cat;
}

std::optional<ObjId> Category::object_by_name(const std::string& name) const {
    auto it = obj_index_.find(name);
    if (it == obj_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<MorId> Category::morphism_by_name(const std::string& name) const {
    auto it = mor_index_.find(name);
    if (it == mor_index_.end()) return std::nullopt;
    return it->second;
}

FiniteCategoryData Category::to_data() const {
    FiniteCategoryData data;
    data.objects = obj_names_;
    for (std::size_t m = 0; m < mor_names_.size(); ++m)
        data.morphisms.push_back({mor_names_[m], obj_names_[dom_[m]], obj_names_[cod_[m]]});
    for (std::size_t o = 0; o < obj_names_.size(); ++o)
        data.identities[obj_names_[o]] = mor_names_[identity_[o]];
    const std::size_t mc = mor_names_.size();
    for (MorId g = 0; g < mc; ++g)
        for (MorId f = 0; f < mc; ++f)
            if (table_[g * mc + f] != kNoMor)
                data.compose.push_back({mor_names_[g], mor_names_[f], mor_names_[table_[g * mc + f]]});
    return data;
}

ObjId CategoryBuilder::add_object(std::string name) {
    data_.objects.push_back(std::move(name));
    return static_cast<ObjId>(data_.objects.size() - 1);
}

MorId CategoryBuilder::add_morphism(std::string name, ObjId dom, ObjId cod) {
    data_.morphisms.push_back({std::move(name), data_.objects.at(dom), data_.objects.at(cod)});
    dom_.push_back(dom);
    cod_.push_back(cod);
    return static_cast<MorId>(data_.morphisms.size() - 1);
}

void CategoryBuilder::set_identity(ObjId obj, MorId m) {
    data_.identities[data_.objects.at(obj)] = data_.morphisms.at(m).name;
}

void CategoryBuilder::set_compose(MorId g, MorId f, MorId gf) {
    data_.compose.push_back({data_.morphisms.at(g).name, data_.morphisms.at(f).name,
                             data_.morphisms.at(gf).name});
}

FiniteCategoryData CategoryBuilder::data() const { return data_; }

Category CategoryBuilder::build() const { return Category::from_data(data_); }

std::vector<MorId> iso(const Category& cat, ObjId a, ObjId b) {
    std::vector<MorId> result;
    for (MorId f : cat.hom(a, b)) {
        for (MorId g : cat.hom(b, a)) {
            if (cat.compose(g, f) == cat.identity(a) && cat.compose(f, g) == cat.identity(b)) {
                result.push_back(f);
                break;
            }
        }
    }
    return result;
}

std::vector<MorId> aut(const Category& cat, ObjId a) { return iso(cat, a, a); }

bool is_rigid(const Category& cat, ObjId a) { return aut(cat, a).size() == 1; }

std::vector<SubobjectClass> subobjects(const Category& cat, ObjId a, ObjId b) {
    const auto& homset = cat.hom(a, b);
    const auto auts = aut(cat, a);
    std::vector<SubobjectClass> classes;
    std::set<MorId> seen;
    for (MorId f : homset) {
        if (seen.count(f)) continue;
        SubobjectClass cls;
        cls.a = a;
        cls.b = b;
        for (MorId alpha : auts) {
            MorId g = cat.compose(f, alpha);
            if (seen.insert(g).second) cls.members.push_back(g);
        }
        std::sort(cls.members.begin(), cls.members.end());
        classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end(), [](const SubobjectClass& x, const SubobjectClass& y) {
        return x.representative() < y.representative();
    });
    return classes;
}

SubobjectClass act_on_subobject(const Category& cat, MorId w, const SubobjectClass& cls) {
    if (cat.dom(w) != cls.b) throw std::invalid_argument("act_on_subobject: w not composable with class");
    MorId image = cat.compose(w, cls.representative());
    ObjId c = cat.cod(w);
    for (const auto& candidate : subobjects(cat, cls.a, c)) {
        if (std::binary_search(candidate.members.begin(), candidate.members.end(), image))
            return candidate;
    }
    throw std::logic_error("act_on_subobject: image class not found");
}

Category opposite(const Category& cat) {
    FiniteCategoryData data = cat.to_data();
    FiniteCategoryData op;
    op.objects = data.objects;
    for (auto& m : data.morphisms) op.morphisms.push_back({m.name, m.cod, m.dom});
    op.identities = data.identities;
    for (auto& triple : data.compose) op.compose.push_back({triple[1], triple[0], triple[2]});
    Category result = Category::from_data(op);
    if (!cat.complete()) result.mark_truncated();
    return result;
}

DirectednessReport is_directed(const Category& cat, std::size_t span_object_limit) {
    DirectednessReport report;
    const std::size_t oc = cat.object_count();
    const std::size_t foot_limit = std::min(oc, span_object_limit);
    for (ObjId a = 0; a < foot_limit; ++a) {
        for (ObjId b = a; b < foot_limit; ++b) {
            bool found = false;
            for (ObjId c = 0; c < oc && !found; ++c)
                found = !cat.hom(a, c).empty() && !cat.hom(b, c).empty();
            if (!found) {
                if (cat.complete()) {
                    report.answer = TriBool::no;
                    report.counterexample = {a, b};
                } else {
                    report.answer = TriBool::unknown;
                    report.counterexample = {a, b};
                }
                return report;
            }
        }
    }
    report.answer = TriBool::yes;
    return report;
}

AmalgamationReport has_amalgamation(const Category& cat, bool collect_witnesses,
                                    std::size_t span_object_limit) {
    AmalgamationReport report;
    const std::size_t oc = cat.object_count();
    const std::size_t foot_limit = std::min(oc, span_object_limit);
    bool any_unresolved = false;
    for (ObjId a = 0; a < foot_limit; ++a) {
        for (ObjId b1 = 0; b1 < foot_limit; ++b1) {
            for (ObjId b2 = 0; b2 < foot_limit; ++b2) {
                for (MorId f1 : cat.hom(a, b1)) {
                    for (MorId f2 : cat.hom(a, b2)) {
                        bool found = false;
                        for (ObjId c = 0; c < oc && !found; ++c) {
                            for (MorId g1 : cat.hom(b1, c)) {
                                for (MorId g2 : cat.hom(b2, c)) {
                                    if (cat.compose(g1, f1) == cat.compose(g2, f2)) {
                                        found = true;
                                        if (collect_witnesses)
                                            report.witnesses.push_back({c, g1, g2});
                                        break;
                                    }
                                }
                                if (found) break;
                            }
                        }
                        if (!found) {
                            if (cat.complete()) {
                                report.answer = TriBool::no;
                                report.counterexample = {a, f1, f2};
                                return report;
                            }
                            any_unresolved = true;
                        }
                    }
                }
            }
        }
    }
    report.answer = any_unresolved ? TriBool::unknown : TriBool::yes;
    return report;
}

bool structurally_equal(const FiniteCategoryData& a, const FiniteCategoryData& b) {
    if (a.objects != b.objects || a.identities != b.identities) return false;
    if (a.morphisms.size() != b.morphisms.size()) return false;
    for (std::size_t i = 0; i < a.morphisms.size(); ++i) {
        if (a.morphisms[i].name != b.morphisms[i].name || a.morphisms[i].dom != b.morphisms[i].dom ||
            a.morphisms[i].cod != b.morphisms[i].cod)
            return false;
    }
    auto key = [](const FiniteCategoryData& d) {
        std::set<std::array<std::string, 3>> s(d.compose.begin(), d.compose.end());
        return s;
    };
    return key(a) == key(b);
}

} // namespace ramseycat
