#pragma once

#include "ramseycat/category.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ramseycat {

// Function and relation symbols with arity >= 1, plus constant symbols.
// Symbol names are unique across the three sorts.
struct Signature {
    std::vector<std::pair<std::string, int>> functions;
    std::vector<std::pair<std::string, int>> relations;
    std::vector<std::string> constants;

    bool operator==(const Signature&) const = default;
    // Throws on duplicate names or nonpositive arity.
    void check() const;
    bool disjoint_from(const Signature& other) const;
};

// Finite first-order structure over universe {0, ..., n-1}. Function tables
// are flat, row-major in argument order; relations are sorted tuple sets.
struct Structure {
    Signature signature;
    int size = 0;
    std::vector<std::vector<int>> functions;       // per symbol, n^arity entries
    std::vector<std::vector<std::vector<int>>> relations; // per symbol, sorted tuples
    std::vector<int> constants;                    // per constant symbol

    bool operator==(const Structure&) const = default;
    void check() const;

    int fn_value(std::size_t fn, const std::vector<int>& args) const;
    bool in_relation(std::size_t rel, const std::vector<int>& tuple) const;
};

// Injective point map that preserves functions and constants, and respects
// and reflects relations.
struct Embedding {
    std::vector<int> map; // source point -> target point
};

bool is_embedding(const Structure& a, const Structure& b, const std::vector<int>& map);

// All embeddings A -> B in lexicographic order of the point map, found by
// backtracking with constants pinned first and function closure propagated.
std::vector<Embedding> enumerate_embeddings(const Structure& a, const Structure& b);

// Restriction to the named symbols (which must exist in a's signature).
Structure reduct(const Structure& a, const std::vector<std::string>& symbols);

struct GeneratedSubstructure {
    Structure structure;
    Embedding inclusion;      // into the ambient structure
    bool closure_added_points = false;
};

// Least function- and constant-closed superset of seed, restricted.
GeneratedSubstructure generated_substructure(const Structure& a, const std::vector<int>& seed);

// {0..n-1} with the natural strict order over signature {"<": 2}.
Structure chain(int n, const std::string& rel_name = "<");

// Surjections f with min f^{-1}(0) < min f^{-1}(1) < ... in lexicographic
// order of the value vector.
std::vector<std::vector<int>> rigid_surjections(int n, int m);
bool is_rigid_surjection(const std::vector<int>& f, int n, int m);

// Chains 1..max_size with rigid surjections as morphisms.
Category rigid_surjection_category(int max_size);

// Merge over disjoint signatures; equal universe sizes required.
Structure superpose_structures(const Structure& a1, const Structure& a2);

// Appends fresh constant symbols pinned to the given points.
Structure expand_with_constants(const Structure& a, const std::vector<int>& points,
                                const std::string& prefix = "c");

Structure apply_permutation(const Structure& a, const std::vector<int>& perm);
bool isomorphic(const Structure& a, const Structure& b);
// Lexicographically least permuted copy; the canonical representative of
// the isomorphism class. Exhaustive over permutations (desk scale).
Structure canonical_form(const Structure& a);
std::string structure_key(const Structure& a);

// Class descriptions mirroring the class spec file constructors.
struct StructureClassSpec {
    enum class Kind { explicit_list, chains, all_structures, superpose, add_constants };
    Kind kind = Kind::chains;
    std::vector<Structure> members;                 // explicit_list
    int max_size = 0;                               // 0 = unbounded (truncated by budget)
    std::string chain_rel = "<";
    Signature signature;                            // all_structures
    std::string predicate_name = "true";            // all_structures: "true" | "linear_order"
    std::function<bool(const Structure&)> predicate; // optional override of predicate_name
    std::shared_ptr<StructureClassSpec> left, right; // superpose; left = base for add_constants
    int num_constants = 0;                          // add_constants

    static StructureClassSpec chains_spec(int max_size, std::string rel = "<");
    static StructureClassSpec explicit_spec(std::vector<Structure> members);
    static StructureClassSpec all_structures_spec(Signature sig, int max_size,
                                                  std::string predicate_name);
    static StructureClassSpec superpose_spec(StructureClassSpec a, StructureClassSpec b);
    static StructureClassSpec add_constants_spec(StructureClassSpec base, int k);
};

struct GeneratedClass {
    std::vector<Structure> members;  // canonical representatives, by (size, key)
    bool complete = false;           // true when the budget exhausted the class
};

// One canonical representative per isomorphism type, universe size <= budget.
GeneratedClass generate_class(const StructureClassSpec& spec, int size_budget);

struct StrongAmalgamResult {
    TriBool answer = TriBool::unknown;
    std::optional<Structure> tip;
    std::optional<Embedding> g1, g2;
};

// Searches class members in enumeration order for a strong amalgam of the
// span (f1 : A -> B1, f2 : A -> B2): commuting square whose images overlap
// exactly in the image of A. Relational signatures only.
StrongAmalgamResult find_strong_amalgam(const Structure& a, const Structure& b1,
                                        const Structure& b2, const Embedding& f1,
                                        const Embedding& f2, const StructureClassSpec& spec,
                                        int size_budget);

struct ReasonableClassReport {
    TriBool answer = TriBool::unknown;
    bool scope_complete = false;      // verified range covered the whole class
    std::string refutation;           // set when answer == no
};

// Every injection of a member into a strictly larger set must extend to a
// class member. Checked for all members and target sizes within budget.
ReasonableClassReport is_reasonable_class(const StructureClassSpec& spec, int size_budget);

// A structure class materialized as a finite category: objects are the
// canonical representatives, morphisms all embeddings between them.
struct StructureCategory {
    Category category;
    std::vector<Structure> objects;
    std::vector<Embedding> embeddings; // indexed by MorId
};

StructureCategory as_category(const StructureClassSpec& spec, int size_budget);

// Shorthand used throughout the tests: chains 1..n with embeddings.
StructureCategory chains_category(int max_size);

} // namespace ramseycat
