#pragma once

#include "ramseycat/category.hpp"
#include "ramseycat/constructions.hpp"
#include "ramseycat/extended_nat.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ramseycat {

enum class ArrowVariant { embedding, structural };

std::string to_string(ArrowVariant v);

// One arrow-relation instance C -> (B)^A_{k,t} (or its ~-variant, where the
// domain is subobjects instead of hom-sets).
struct ArrowQuery {
    ArrowVariant variant = ArrowVariant::embedding;
    ObjId a = 0;
    ObjId b = 0;
    ObjId c = 0;
    unsigned k = 1;
    unsigned t = 1;
};

struct ArrowOptions {
    bool symmetry = false; // Aut(C)-orbit pruning; off by default, cross-checked
    unsigned workers = 1;
};

using BadColoring = std::vector<std::uint16_t>; // per domain index

struct ArrowVerdict {
    ArrowQuery query;
    bool holds = false;
    // "exhausted" | "trivial" | "empty-domain" | "bad-coloring" | "no-w" | "oracle"
    std::string reason;
    unsigned k_effective = 0;
    std::size_t domain_size = 0;
    BadColoring coloring; // canonical (lexicographically least) bad coloring on fails
    std::uint64_t nodes = 0;
    bool symmetry_used = false;
};

// The coloring domain of a query: hom(A,C) or subobjects(A,C), with the
// translate set of every w in hom(B,C). Built once, shared by the solver,
// the oracle and certificate revalidation.
struct ArrowDomain {
    std::size_t size = 0;
    std::vector<std::string> labels;             // morphism or class-representative names
    bool any_w = false;
    std::vector<std::vector<std::uint32_t>> translates; // per w, sorted unique domain indices
};

ArrowDomain build_arrow_domain(const Category& cat, const ArrowQuery& q);

// Definitional check of a bad coloring: every w sees at least t+1 colors.
bool revalidate_bad_coloring(const Category& cat, const ArrowQuery& q, const BadColoring& coloring);

// Backtracking search with pruning; certificate recomputed canonically so
// reports are identical for any worker count.
ArrowVerdict check_arrow(const Category& cat, const ArrowQuery& q, const ArrowOptions& options = {});

// Exhaustive enumeration of all k^|domain| colorings. Ground truth for
// CI-sized instances; throws when the work cap is exceeded.
struct OracleCaps {
    std::size_t max_domain = 20;
    std::uint64_t max_work = std::uint64_t{1} << 28;
};

ArrowVerdict check_arrow_oracle(const Category& cat, const ArrowQuery& q, const OracleCaps& caps = {});

struct DegreeUpperWitness {
    unsigned k;
    ObjId b;
    ObjId c;
};

struct DegreeLowerCert {
    unsigned k;
    ObjId b;
    std::map<ObjId, BadColoring> colorings; // one refutation per candidate C
};

struct DegreeReport {
    ArrowVariant variant = ArrowVariant::embedding;
    bool exact = false;
    ExtendedNat lower;
    ExtendedNat upper;
    bool lower_certified = false;
    unsigned k_star = 0;
    std::vector<DegreeUpperWitness> upper_witnesses;
    std::optional<DegreeLowerCert> lower_cert;

    ExtendedNat value() const { return upper; } // in exact mode lower == upper
};

// Exact Ramsey degree inside a finite category. The "for all k" quantifier
// collapses to k* = max_C |domain(A,C)| because the arrow condition only
// depends on the induced partition of the domain; cross-checked against the
// oracle for k up to k*+2 in the tests.
DegreeReport degree_exact_finite(const Category& cat, ObjId a, ArrowVariant variant,
                                 const ArrowOptions& options = {});

struct DegreeBudget {
    unsigned max_k = 2;
    ObjId max_b_index = 0;
    ObjId max_c_index = 0;
};

// Budgeted bounds over an enumerated class view. Lower bounds are certified
// only on complete views with the C-budget covering every object; otherwise
// they are labeled non-certified evidence.
DegreeReport degree_bounds(const Category& view, ObjId a, ArrowVariant variant,
                           const DegreeBudget& budget, const ArrowOptions& options = {});

struct MultiplicativityReport {
    ExtendedNat t1, t2, t_product;
    ExtendedNat st1, st2, st_product;
    std::size_t aut1 = 0, aut2 = 0, aut_product = 0;
    bool ok = false;
};

MultiplicativityReport verify_multiplicativity(const Category& c1, const Category& c2, ObjId a1,
                                               ObjId a2, const ArrowOptions& options = {});

struct AutFactorReport {
    ExtendedNat t, t_structural;
    std::size_t aut_size = 0;
    bool ok = false;
};

AutFactorReport verify_aut_factor(const Category& cat, ObjId a, const ArrowOptions& options = {});

struct SuiteReport {
    bool ok = true;
    bool hypothesis_ok = true;    // e.g. directedness / amalgamation prerequisites
    std::size_t checks = 0;
    std::vector<std::string> notes;

    void fail(std::string note) {
        ok = false;
        notes.push_back(std::move(note));
    }
};

// All four clauses of the monotonicity lemma on sampled arrow instances.
SuiteReport verify_monotonicity(const Category& cat, std::size_t samples, std::uint64_t seed,
                                const ArrowOptions& options = {});

// Full cofinal inclusions give equal exact degrees (both variants).
SuiteReport verify_full_cofinal_inclusion(const Category& cat, const std::vector<ObjId>& sub_objects,
                                          const ArrowOptions& options = {});

// Arrow transport along a full (and faithful) functor on sampled instances.
SuiteReport verify_functor_arrow_transport(const Category& src, const Category& dst,
                                           const FunctorData& f, std::size_t samples,
                                           std::uint64_t seed, const ArrowOptions& options = {});

// t_{G(C,H)}(C,x) <= t_C(C) for directed G(C,H); also verifies the
// cocone-transport hypothesis on generated diagrams and the per-component
// element agreement of returned cocones.
SuiteReport verify_grothendieck_transport(const Category& cat, const SetValuedFunctor& h,
                                          const ArrowOptions& options = {});

// t_{X\C}(x_C, C) <= t_C(C) over an amalgamating ambient category.
SuiteReport verify_slice_transport(const Category& cat, ObjId x, const ArrowOptions& options = {});

// Directed + embedding degree 1 everywhere must imply amalgamation.
SuiteReport verify_rp_implies_ap(const std::vector<Category>& cats, const ArrowOptions& options = {});

} // namespace ramseycat
