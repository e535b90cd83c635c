#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ramseycat {

using ObjId = std::uint32_t;
using MorId = std::uint32_t;

inline constexpr MorId kNoMor = static_cast<MorId>(-1);

enum class TriBool { yes, no, unknown };

std::string to_string(TriBool t);

// Raw category data as it appears in files: object names, morphism records,
// identity assignment and an explicit composition table. Nothing is assumed
// valid until validate_category has passed.
struct MorphismData {
    std::string name;
    std::string dom;
    std::string cod;
};

struct FiniteCategoryData {
    std::vector<std::string> objects;
    std::vector<MorphismData> morphisms;
    std::map<std::string, std::string> identities;              // object -> morphism
    std::vector<std::array<std::string, 3>> compose;            // (g, f, g.f)
};

// Per-law validation outcome. A counterexample names the offending morphisms.
struct LawReport {
    bool references_ok = false;   // all names resolve, no duplicates
    bool identity_ok = false;     // id_A : A -> A, left/right unit laws
    bool composability_ok = false; // compose defined exactly on composable pairs
    bool associativity_ok = false;
    TriBool all_mono = TriBool::unknown;
    std::vector<std::string> problems; // human-readable, one per failure found

    bool accepted() const {
        return references_ok && identity_ok && composability_ok && associativity_ok;
    }
};

LawReport validate_category(const FiniteCategoryData& data);

// A validated finite category with precomputed hom-sets and an indexed
// composition table. Immutable after construction; queries are safe to run
// concurrently. Hom-set order is the order morphisms appear in the input,
// which keeps certificates stable across runs.
class Category {
  public:
    Category() = default; // empty; populate via from_data

    // Throws std::invalid_argument when validation fails.
    static Category from_data(const FiniteCategoryData& data);

    std::size_t object_count() const { return obj_names_.size(); }
    std::size_t morphism_count() const { return mor_names_.size(); }

    const std::string& object_name(ObjId o) const { return obj_names_[o]; }
    const std::string& morphism_name(MorId m) const { return mor_names_[m]; }
    std::optional<ObjId> object_by_name(const std::string& name) const;
    std::optional<MorId> morphism_by_name(const std::string& name) const;

    ObjId dom(MorId m) const { return dom_[m]; }
    ObjId cod(MorId m) const { return cod_[m]; }
    MorId identity(ObjId o) const { return identity_[o]; }

    // Defined exactly when dom(g) == cod(f).
    MorId compose(MorId g, MorId f) const { return table_[g * mor_names_.size() + f]; }

    const std::vector<MorId>& hom(ObjId a, ObjId b) const {
        return hom_[a * obj_names_.size() + b];
    }

    bool all_mono() const { return all_mono_; }

    // True when the category is an exhaustive enumeration (not a truncation
    // of a larger class). Affects what degree computations may certify.
    bool complete() const { return complete_; }
    void mark_truncated() { complete_ = false; }

    FiniteCategoryData to_data() const;

  private:
    friend class CategoryBuilder;

    std::vector<std::string> obj_names_;
    std::vector<std::string> mor_names_;
    std::vector<ObjId> dom_, cod_;
    std::vector<MorId> identity_;
    std::vector<MorId> table_;               // mor_count x mor_count, kNoMor = undefined
    std::vector<std::vector<MorId>> hom_;    // obj_count x obj_count
    std::map<std::string, ObjId> obj_index_;
    std::map<std::string, MorId> mor_index_;
    bool all_mono_ = false;
    bool complete_ = true;
};

// Convenience builder used by constructions and class materialization.
// Names must be unique; compose entries are added explicitly.
class CategoryBuilder {
  public:
    ObjId add_object(std::string name);
    MorId add_morphism(std::string name, ObjId dom, ObjId cod);
    void set_identity(ObjId obj, MorId m);
    void set_compose(MorId g, MorId f, MorId gf);
    FiniteCategoryData data() const;
    // Validates and indexes. Throws on law failure.
    Category build() const;

  private:
    FiniteCategoryData data_;
    std::vector<ObjId> dom_, cod_;
};

std::vector<MorId> aut(const Category& cat, ObjId a);
std::vector<MorId> iso(const Category& cat, ObjId a, ObjId b);
bool is_rigid(const Category& cat, ObjId a);

// One ~_A equivalence class inside hom(A, B): member ids sorted ascending,
// canonical representative = least member.
struct SubobjectClass {
    ObjId a = 0;
    ObjId b = 0;
    std::vector<MorId> members;
    MorId representative() const { return members.front(); }
};

// hom(A,B) / ~_A in deterministic order (classes sorted by representative).
std::vector<SubobjectClass> subobjects(const Category& cat, ObjId a, ObjId b);

// w . (f/~_A) = (w . f)/~_A for w : B -> C. Representative independent.
SubobjectClass act_on_subobject(const Category& cat, MorId w, const SubobjectClass& cls);

Category opposite(const Category& cat);

struct SpanCounterexample {
    ObjId apex;
    MorId f1, f2;
};

struct AmalgamWitness {
    ObjId tip;
    MorId g1, g2;
};

struct DirectednessReport {
    TriBool answer = TriBool::unknown;
    std::optional<std::pair<ObjId, ObjId>> counterexample; // pair with no common target
};

struct AmalgamationReport {
    TriBool answer = TriBool::unknown;
    std::optional<SpanCounterexample> counterexample;
    // One witness per span, in span enumeration order, when answer == yes.
    std::vector<AmalgamWitness> witnesses;
};

// Exact on complete categories; on truncations a negative turns into
// "unknown" because a larger member might still work. span_object_limit
// restricts the quantified span feet (A, B1, B2) to the first N objects in
// enumeration order while cocone tips range over the whole view; on class
// truncations this bounds the question honestly instead of refuting spans
// whose amalgam merely fell outside the budget.
DirectednessReport is_directed(const Category& cat, std::size_t span_object_limit = SIZE_MAX);
AmalgamationReport has_amalgamation(const Category& cat, bool collect_witnesses = false,
                                    std::size_t span_object_limit = SIZE_MAX);

// Structural equality of raw data (same names, same tables, same order).
bool structurally_equal(const FiniteCategoryData& a, const FiniteCategoryData& b);

} // namespace ramseycat
