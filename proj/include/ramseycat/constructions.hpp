#pragma once

#include "ramseycat/category.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ramseycat {

// Object and morphism maps of a functor between two given categories.
struct FunctorData {
    std::vector<ObjId> object_map;   // source object -> target object
    std::vector<MorId> morphism_map; // source morphism -> target morphism
};

struct FunctorCheck {
    bool is_functor = false;
    std::vector<std::string> problems;
};

FunctorCheck validate_functor(const Category& src, const Category& dst, const FunctorData& f);

FunctorData identity_functor(const Category& c);

// A product category together with the index maps back to its factors.
struct ProductCategory {
    Category category;
    std::vector<std::pair<ObjId, ObjId>> object_pairs;   // product object -> factors
    std::vector<std::pair<MorId, MorId>> morphism_pairs; // product morphism -> factors
    FunctorData proj1, proj2;

    std::optional<ObjId> object_of(ObjId a1, ObjId a2) const;
};

ProductCategory product(const Category& c1, const Category& c2);

// Full subcategory of the product spanned by pairs with F1(X) = F2(Y).
struct PullbackCategory {
    Category category;
    std::vector<std::pair<ObjId, ObjId>> object_pairs;
    std::vector<std::pair<MorId, MorId>> morphism_pairs;
    // Inclusion into the product of the two sources.
    FunctorData inclusion_into_product;
};

PullbackCategory pullback(const Category& c1, const Category& c2, const Category& target,
                          const FunctorData& f1, const FunctorData& f2);

// Functor into finite sets: element labels per object and a total map per
// morphism (element index -> element index).
struct SetValuedFunctor {
    std::vector<std::vector<std::string>> sets; // per object
    std::vector<std::vector<int>> maps;         // per morphism
};

FunctorCheck validate_set_functor(const Category& c, const SetValuedFunctor& h);

// H^X(A) = hom(X, A), H^X(f) = f . -
SetValuedFunctor hom_functor(const Category& c, ObjId x);

struct GrothendieckCategory {
    Category category;
    std::vector<std::pair<ObjId, int>> object_pairs; // (base object, element index)
    std::vector<MorId> morphism_base;                // underlying base morphism
    FunctorData forgetful;                           // projection to the base
};

GrothendieckCategory grothendieck(const Category& c, const SetValuedFunctor& h);

struct SliceCategory {
    Category category;
    std::vector<std::pair<MorId, ObjId>> object_pairs; // (f_A : X -> A, A)
    std::vector<MorId> morphism_base;
    FunctorData forgetful;
};

SliceCategory slice(const Category& c, ObjId x);

struct FunctorProps {
    bool is_functor = false;
    bool is_full = false;
    bool is_faithful = false;
    bool preserves_aut_groups = false;
    bool is_reasonable = false;
    bool image_is_cofinal = false;
};

FunctorProps functor_props(const Category& src, const Category& dst, const FunctorData& f);

// Full subcategory on the given objects, with the inclusion functor.
struct FullSubcategory {
    Category category;
    std::vector<ObjId> object_map;  // subcategory object -> ambient object
    std::vector<MorId> morphism_map;
    FunctorData inclusion;
};

FullSubcategory full_subcategory(const Category& c, const std::vector<ObjId>& objects);

// Is every ambient object mapped into some object of the given set?
bool is_cofinal_object_set(const Category& c, const std::vector<ObjId>& objects);

// Two-row diagram: constant bottom object A, constant top object B, tops
// indexed 0..top_count-1, each bottom node carrying two morphisms A -> B
// aimed at (possibly equal) top indices.
struct BinaryDiagramNode {
    MorId u;
    int i;
    MorId v;
    int j;
};

struct BinaryDiagram {
    ObjId bottom; // A
    ObjId top;    // B
    int top_count = 0;
    std::vector<BinaryDiagramNode> bottoms;
};

// Throws std::invalid_argument on shape violations.
void validate_diagram(const Category& c, const BinaryDiagram& d);

// Partition of {0..top_count-1} under the walk relation, classes sorted.
std::vector<std::vector<int>> connected_components(const BinaryDiagram& d);

struct Cocone {
    ObjId tip;
    std::vector<MorId> legs; // per top index, B -> tip
};

bool cocone_compatible(const Category& c, const BinaryDiagram& d, const Cocone& cocone);

struct CoconeResult {
    TriBool answer = TriBool::unknown;
    std::optional<Cocone> cocone;
};

// Searches tips in enumeration order, legs by backtracking with forward
// checking; first solution wins (deterministic).
CoconeResult find_compatible_cocone(const Category& c, const BinaryDiagram& d);

struct BinaryAmalgamationReport {
    TriBool answer = TriBool::unknown;
    std::optional<BinaryDiagram> refutation;
    std::size_t diagrams_checked = 0;
};

// Quantifies find_compatible_cocone over all diagrams with at most
// max_tops top nodes and max_bottoms bottom nodes. object_limit restricts
// the diagram objects A, B to the first N objects while cocone tips range
// over the whole view. bridges_only skips bottom nodes aiming both arrows
// at one top node (those refute instantly in any mono category whenever
// u != v, since e.u = e.v forces u = v).
BinaryAmalgamationReport has_binary_amalgamation(const Category& c, int max_tops, int max_bottoms,
                                                 std::size_t object_limit = SIZE_MAX,
                                                 bool bridges_only = false);

// Explicit isomorphism check used to compare constructions (e.g. the slice
// against the Grothendieck category of the hom-functor).
bool categories_isomorphic_via(const Category& a, const Category& b,
                               const std::vector<ObjId>& object_bij,
                               const std::vector<MorId>& morphism_bij);

} // namespace ramseycat
