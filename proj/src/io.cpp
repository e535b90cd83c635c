#include "ramseycat/io.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace ramseycat::io {

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
    throw std::runtime_error("parse error: " + what);
}

const Json& field(const Json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) parse_fail(std::string("missing field \"") + name + "\"");
    return *it;
}

ObjId object_or_fail(const Category& c, const std::string& name) {
    auto o = c.object_by_name(name);
    if (!o) parse_fail("unknown object \"" + name + "\"");
    return *o;
}

MorId morphism_or_fail(const Category& c, const std::string& name) {
    auto m = c.morphism_by_name(name);
    if (!m) parse_fail("unknown morphism \"" + name + "\"");
    return *m;
}

} // namespace

FiniteCategoryData parse_category(const Json& j) {
    FiniteCategoryData data;
    for (const auto& o : field(j, "objects")) data.objects.push_back(o.get<std::string>());
    for (const auto& m : field(j, "morphisms"))
        data.morphisms.push_back({field(m, "id").get<std::string>(),
                                  field(m, "dom").get<std::string>(),
                                  field(m, "cod").get<std::string>()});
    for (const auto& [obj, mor] : field(j, "identities").items())
        data.identities[obj] = mor.get<std::string>();
    for (const auto& triple : field(j, "compose")) {
        if (!triple.is_array() || triple.size() != 3) parse_fail("compose entries must be triples");
        data.compose.push_back(
            {triple[0].get<std::string>(), triple[1].get<std::string>(), triple[2].get<std::string>()});
    }
    return data;
}

Json category_json(const FiniteCategoryData& data) {
    Json j;
    j["objects"] = data.objects;
    Json morphisms = Json::array();
    for (const auto& m : data.morphisms)
        morphisms.push_back({{"id", m.name}, {"dom", m.dom}, {"cod", m.cod}});
    j["morphisms"] = morphisms;
    Json identities = Json::object();
    for (const auto& [obj, mor] : data.identities) identities[obj] = mor;
    j["identities"] = identities;
    Json compose = Json::array();
    for (const auto& triple : data.compose) compose.push_back({triple[0], triple[1], triple[2]});
    j["compose"] = compose;
    return j;
}

FunctorFile parse_functor_file(const Json& j) {
    FunctorFile f;
    f.source_path = field(j, "source").get<std::string>();
    f.target_path = field(j, "target").get<std::string>();
    for (const auto& [from, to] : field(j, "objects").items()) f.objects[from] = to.get<std::string>();
    for (const auto& [from, to] : field(j, "morphisms").items())
        f.morphisms[from] = to.get<std::string>();
    return f;
}

FunctorData resolve_functor(const FunctorFile& file, const Category& src, const Category& dst) {
    FunctorData f;
    f.object_map.resize(src.object_count());
    f.morphism_map.resize(src.morphism_count());
    for (ObjId o = 0; o < src.object_count(); ++o) {
        auto it = file.objects.find(src.object_name(o));
        if (it == file.objects.end()) parse_fail("functor misses object " + src.object_name(o));
        f.object_map[o] = object_or_fail(dst, it->second);
    }
    for (MorId m = 0; m < src.morphism_count(); ++m) {
        auto it = file.morphisms.find(src.morphism_name(m));
        if (it == file.morphisms.end()) parse_fail("functor misses morphism " + src.morphism_name(m));
        f.morphism_map[m] = morphism_or_fail(dst, it->second);
    }
    return f;
}

SetValuedFunctor parse_set_functor(const Json& j, const Category& c) {
    SetValuedFunctor h;
    h.sets.resize(c.object_count());
    for (const auto& [obj, elems] : field(j, "sets").items()) {
        ObjId o = object_or_fail(c, obj);
        for (const auto& e : elems) h.sets[o].push_back(e.get<std::string>());
    }
    h.maps.resize(c.morphism_count());
    for (const auto& [mor, mapping] : field(j, "maps").items()) {
        MorId m = morphism_or_fail(c, mor);
        const auto& dom_set = h.sets[c.dom(m)];
        const auto& cod_set = h.sets[c.cod(m)];
        h.maps[m].assign(dom_set.size(), -1);
        for (const auto& [from, to] : mapping.items()) {
            auto fi = std::find(dom_set.begin(), dom_set.end(), from);
            auto ti = std::find(cod_set.begin(), cod_set.end(), to.get<std::string>());
            if (fi == dom_set.end() || ti == cod_set.end())
                parse_fail("set functor map of " + mor + " uses unknown elements");
            h.maps[m][fi - dom_set.begin()] = static_cast<int>(ti - cod_set.begin());
        }
        for (int v : h.maps[m])
            if (v < 0) parse_fail("set functor map of " + mor + " is not total");
    }
    return h;
}

Json set_functor_json(const Category& c, const SetValuedFunctor& h) {
    Json j;
    Json sets = Json::object();
    for (ObjId o = 0; o < c.object_count(); ++o) sets[c.object_name(o)] = h.sets[o];
    j["sets"] = sets;
    Json maps = Json::object();
    for (MorId m = 0; m < c.morphism_count(); ++m) {
        Json mapping = Json::object();
        for (std::size_t x = 0; x < h.maps[m].size(); ++x)
            mapping[h.sets[c.dom(m)][x]] = h.sets[c.cod(m)][h.maps[m][x]];
        maps[c.morphism_name(m)] = mapping;
    }
    j["maps"] = maps;
    return j;
}

BinaryDiagram parse_diagram(const Json& j, const Category& c) {
    BinaryDiagram d;
    d.bottom = object_or_fail(c, field(j, "A").get<std::string>());
    d.top = object_or_fail(c, field(j, "B").get<std::string>());
    d.top_count = field(j, "tops").get<int>();
    for (const auto& n : field(j, "bottoms"))
        d.bottoms.push_back({morphism_or_fail(c, field(n, "u").get<std::string>()),
                             field(n, "i").get<int>(),
                             morphism_or_fail(c, field(n, "v").get<std::string>()),
                             field(n, "j").get<int>()});
    validate_diagram(c, d);
    return d;
}

Json diagram_json(const Category& c, const BinaryDiagram& d) {
    Json j;
    j["A"] = c.object_name(d.bottom);
    j["B"] = c.object_name(d.top);
    j["tops"] = d.top_count;
    Json bottoms = Json::array();
    for (const auto& n : d.bottoms)
        bottoms.push_back({{"u", c.morphism_name(n.u)},
                           {"i", n.i},
                           {"v", c.morphism_name(n.v)},
                           {"j", n.j}});
    j["bottoms"] = bottoms;
    return j;
}

Structure parse_structure(const Json& j) {
    Structure s;
    const Json& sig = field(j, "signature");
    for (const auto& [name, arity] : field(sig, "functions").items())
        s.signature.functions.push_back({name, arity.get<int>()});
    for (const auto& [name, arity] : field(sig, "relations").items())
        s.signature.relations.push_back({name, arity.get<int>()});
    for (const auto& name : field(sig, "constants"))
        s.signature.constants.push_back(name.get<std::string>());
    s.size = field(j, "size").get<int>();
    const Json& interp = field(j, "interp");
    Json fns = interp.contains("functions") ? interp["functions"] : Json::object();
    for (const auto& [name, _] : s.signature.functions) {
        if (!fns.contains(name)) parse_fail("missing function table for " + name);
        s.functions.push_back(fns[name].get<std::vector<int>>());
    }
    Json rels = interp.contains("relations") ? interp["relations"] : Json::object();
    for (const auto& [name, _] : s.signature.relations) {
        if (!rels.contains(name)) parse_fail("missing relation for " + name);
        auto tuples = rels[name].get<std::vector<std::vector<int>>>();
        std::sort(tuples.begin(), tuples.end());
        s.relations.push_back(std::move(tuples));
    }
    Json consts = interp.contains("constants") ? interp["constants"] : Json::object();
    for (const auto& name : s.signature.constants) {
        if (!consts.contains(name)) parse_fail("missing constant " + name);
        s.constants.push_back(consts[name].get<int>());
    }
    s.check();
    return s;
}

Json structure_json(const Structure& s) {
    Json j;
    Json sig;
    Json fns = Json::object();
    for (const auto& [name, arity] : s.signature.functions) fns[name] = arity;
    sig["functions"] = fns;
    Json rels = Json::object();
    for (const auto& [name, arity] : s.signature.relations) rels[name] = arity;
    sig["relations"] = rels;
    sig["constants"] = s.signature.constants;
    j["signature"] = sig;
    j["size"] = s.size;
    Json interp;
    Json ifns = Json::object();
    for (std::size_t f = 0; f < s.functions.size(); ++f)
        ifns[s.signature.functions[f].first] = s.functions[f];
    interp["functions"] = ifns;
    Json irels = Json::object();
    for (std::size_t r = 0; r < s.relations.size(); ++r)
        irels[s.signature.relations[r].first] = s.relations[r];
    interp["relations"] = irels;
    Json iconsts = Json::object();
    for (std::size_t c = 0; c < s.constants.size(); ++c)
        iconsts[s.signature.constants[c]] = s.constants[c];
    interp["constants"] = iconsts;
    j["interp"] = interp;
    return j;
}

StructureClassSpec parse_class_spec(const Json& j) {
    std::string kind = field(j, "kind").get<std::string>();
    if (kind == "chains") {
        int max = j.contains("max") ? j["max"].get<int>() : 0;
        std::string rel = j.contains("rel") ? j["rel"].get<std::string>() : "<";
        return StructureClassSpec::chains_spec(max, rel);
    }
    if (kind == "explicit") {
        std::vector<Structure> members;
        for (const auto& m : field(j, "members")) members.push_back(parse_structure(m));
        return StructureClassSpec::explicit_spec(std::move(members));
    }
    if (kind == "all-structures") {
        Signature sig;
        for (const auto& [name, arity] : field(field(j, "signature"), "functions").items())
            sig.functions.push_back({name, arity.get<int>()});
        for (const auto& [name, arity] : field(field(j, "signature"), "relations").items())
            sig.relations.push_back({name, arity.get<int>()});
        for (const auto& name : field(field(j, "signature"), "constants"))
            sig.constants.push_back(name.get<std::string>());
        int max = j.contains("max") ? j["max"].get<int>() : 0;
        std::string pred = j.contains("predicate") ? j["predicate"].get<std::string>() : "true";
        return StructureClassSpec::all_structures_spec(std::move(sig), max, pred);
    }
    if (kind == "superpose")
        return StructureClassSpec::superpose_spec(parse_class_spec(field(j, "left")),
                                                  parse_class_spec(field(j, "right")));
    if (kind == "add-constants")
        return StructureClassSpec::add_constants_spec(parse_class_spec(field(j, "base")),
                                                      field(j, "constants").get<int>());
    parse_fail("unknown class spec kind \"" + kind + "\"");
}

Json class_spec_json(const StructureClassSpec& spec) {
    Json j;
    switch (spec.kind) {
        case StructureClassSpec::Kind::chains:
            j["kind"] = "chains";
            j["max"] = spec.max_size;
            j["rel"] = spec.chain_rel;
            break;
        case StructureClassSpec::Kind::explicit_list: {
            j["kind"] = "explicit";
            Json members = Json::array();
            for (const auto& m : spec.members) members.push_back(structure_json(m));
            j["members"] = members;
            break;
        }
        case StructureClassSpec::Kind::all_structures: {
            j["kind"] = "all-structures";
            Json sig;
            Json fns = Json::object();
            for (const auto& [name, arity] : spec.signature.functions) fns[name] = arity;
            sig["functions"] = fns;
            Json rels = Json::object();
            for (const auto& [name, arity] : spec.signature.relations) rels[name] = arity;
            sig["relations"] = rels;
            sig["constants"] = spec.signature.constants;
            j["signature"] = sig;
            j["max"] = spec.max_size;
            j["predicate"] = spec.predicate_name;
            break;
        }
        case StructureClassSpec::Kind::superpose:
            j["kind"] = "superpose";
            j["left"] = class_spec_json(*spec.left);
            j["right"] = class_spec_json(*spec.right);
            break;
        case StructureClassSpec::Kind::add_constants:
            j["kind"] = "add-constants";
            j["base"] = class_spec_json(*spec.left);
            j["constants"] = spec.num_constants;
            break;
    }
    return j;
}

Json law_report_json(const LawReport& report) {
    Json j;
    j["accepted"] = report.accepted();
    j["references"] = report.references_ok;
    j["identity"] = report.identity_ok;
    j["composability"] = report.composability_ok;
    j["associativity"] = report.associativity_ok;
    j["all_mono"] = to_string(report.all_mono);
    j["problems"] = report.problems;
    return j;
}

Json arrow_verdict_json(const Category& cat, const ArrowVerdict& v) {
    Json j;
    Json q;
    q["variant"] = to_string(v.query.variant);
    q["A"] = cat.object_name(v.query.a);
    q["B"] = cat.object_name(v.query.b);
    q["C"] = cat.object_name(v.query.c);
    q["k"] = v.query.k;
    q["t"] = v.query.t;
    j["query"] = q;
    j["holds"] = v.holds;
    j["reason"] = v.reason;
    j["k_effective"] = v.k_effective;
    j["domain_size"] = v.domain_size;
    if (v.holds) {
        // Exhaustion statement; node counts stay out of the report so the
        // bytes do not depend on the worker count.
        Json ex;
        ex["search_space_covered"] = true;
        ex["symmetry_mode"] = v.symmetry_used;
        j["exhaustion"] = ex;
    } else {
        ArrowDomain d = build_arrow_domain(cat, v.query);
        Json cert;
        Json colors = Json::object();
        for (std::size_t i = 0; i < v.coloring.size(); ++i) colors[d.labels[i]] = v.coloring[i];
        cert["coloring"] = colors;
        j["certificate"] = cert;
        j["symmetry_mode"] = v.symmetry_used;
    }
    return j;
}

Json degree_report_json(const Category& cat, const DegreeReport& r) {
    Json j;
    j["variant"] = to_string(r.variant);
    j["status"] = r.exact ? "exact" : "budgeted";
    if (r.exact) {
        j["value"] = r.value().str();
    } else {
        j["lower"] = r.lower.str();
        j["upper"] = r.upper.str();
    }
    j["lower_certified"] = r.lower_certified;
    j["k_star"] = r.k_star;
    Json upper = Json::array();
    for (const auto& w : r.upper_witnesses)
        upper.push_back(
            {{"k", w.k}, {"B", cat.object_name(w.b)}, {"C", cat.object_name(w.c)}});
    j["upper_witnesses"] = upper;
    if (r.lower_cert) {
        Json cert;
        cert["k"] = r.lower_cert->k;
        cert["B"] = cat.object_name(r.lower_cert->b);
        Json colorings = Json::object();
        for (const auto& [c, coloring] : r.lower_cert->colorings) {
            Json arr = Json::array();
            for (auto v : coloring) arr.push_back(v);
            colorings[cat.object_name(c)] = arr;
        }
        cert["colorings"] = colorings;
        j["lower_certificate"] = cert;
    }
    return j;
}

Json suite_report_json(const SuiteReport& r) {
    Json j;
    j["ok"] = r.ok;
    j["hypothesis_ok"] = r.hypothesis_ok;
    j["checks"] = r.checks;
    j["notes"] = r.notes;
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("parse error in " + path + ": " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

} // namespace ramseycat::io
