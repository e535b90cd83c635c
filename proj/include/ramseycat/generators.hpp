#pragma once

#include "ramseycat/category.hpp"
#include "ramseycat/constructions.hpp"
#include "ramseycat/structures.hpp"

#include <cstdint>
#include <vector>

namespace ramseycat {

// Deterministic 64-bit generator so sweeps reproduce across platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    std::uint64_t below(std::uint64_t n); // n >= 1
    bool coin() { return (next() & 1) != 0; }

  private:
    std::uint64_t state_;
};

// Hand-built instances used across the test and verification suites.
namespace examples {

// Single object, identity only.
Category one_object();

// Objects A, B with hom(A,B) = {f, g}; embedding degree of A is 2.
Category two_object_pair();

// Aut(A) = {id, s}, hom(A,B) = {f, f.s}; t(A) = 2, structural degree 1.
Category aut2_category();

// Objects A, B with hom(A,B) = {f}; thin, directed, Ramsey.
Category arrow_category();

// A permutation group on {0..n-1} as a one-object category.
Category group_category(const std::vector<std::vector<int>>& generators, int n);
Category cyclic_group_category(int n);
Category symmetric_group_category(int n); // n <= 4

// Full embedding category of all substructures of the directed n-cycle
// (relation E(i, i+1 mod n)), sizes 1..n.
StructureCategory cycle_substructure_category(int n);

// Coset action of a subgroup: H(A) = G/K with H(g) left multiplication.
// Group elements and the subgroup are given as permutations.
SetValuedFunctor coset_functor(const Category& group_cat,
                               const std::vector<std::vector<int>>& subgroup_perms,
                               const std::vector<std::vector<int>>& element_perms);

SetValuedFunctor constant_singleton_functor(const Category& c);

} // namespace examples

struct RandomCategoryParams {
    std::size_t max_objects = 4;
    std::size_t max_morphisms = 12;
};

// Random finite mono categories, correct by construction: embedding
// categories of small random structures, permutation-group categories,
// thin poset categories and the hand-built library, mixed by seed.
Category random_mono_category(Rng& rng, const RandomCategoryParams& params = {});

// Random structures over a small random relational signature, or over a
// caller-provided one.
Structure random_structure(Rng& rng, int max_size);
Structure random_structure_over(Rng& rng, const Signature& sig, int max_size);
Signature random_signature(Rng& rng);

} // namespace ramseycat
