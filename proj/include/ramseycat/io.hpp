#pragma once

#include "ramseycat/category.hpp"
#include "ramseycat/constructions.hpp"
#include "ramseycat/engine.hpp"
#include "ramseycat/structures.hpp"

#include <json.hpp>

#include <string>

namespace ramseycat::io {

// All serializers emit ordered JSON so identical inputs produce
// byte-identical files.
using Json = nlohmann::ordered_json;

// {"objects":[...], "morphisms":[{"id","dom","cod"}],
//  "identities":{object:morphism}, "compose":[[g,f,result]]}
FiniteCategoryData parse_category(const Json& j);
Json category_json(const FiniteCategoryData& data);

// {"source":path, "target":path, "objects":{...}, "morphisms":{...}}
struct FunctorFile {
    std::string source_path;
    std::string target_path;
    std::map<std::string, std::string> objects;
    std::map<std::string, std::string> morphisms;
};
FunctorFile parse_functor_file(const Json& j);
FunctorData resolve_functor(const FunctorFile& file, const Category& src, const Category& dst);

// {"sets":{object:[labels]}, "maps":{morphism:{label:label}}}
SetValuedFunctor parse_set_functor(const Json& j, const Category& c);
Json set_functor_json(const Category& c, const SetValuedFunctor& h);

// {"A":obj, "B":obj, "tops":n, "bottoms":[{"u":m,"i":k,"v":m,"j":k}]}
BinaryDiagram parse_diagram(const Json& j, const Category& c);
Json diagram_json(const Category& c, const BinaryDiagram& d);

// {"signature":{"functions":{name:arity},"relations":{name:arity},
//  "constants":[name]}, "size":n, "interp":{"functions":{name:[flat]},
//  "relations":{name:[[tuple]]}, "constants":{name:point}}}
Structure parse_structure(const Json& j);
Json structure_json(const Structure& s);

// Mirrors the StructureClassSpec constructors:
//  {"kind":"chains","max":n,"rel":"<"}
//  {"kind":"explicit","members":[structure...]}
//  {"kind":"all-structures","signature":{...},"max":n,"predicate":name}
//  {"kind":"superpose","left":spec,"right":spec}
//  {"kind":"add-constants","base":spec,"constants":k}
StructureClassSpec parse_class_spec(const Json& j);
Json class_spec_json(const StructureClassSpec& spec);

Json law_report_json(const LawReport& report);
Json arrow_verdict_json(const Category& cat, const ArrowVerdict& v);
Json degree_report_json(const Category& cat, const DegreeReport& r);
Json suite_report_json(const SuiteReport& r);

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

} // namespace ramseycat::io
