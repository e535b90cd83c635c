#include "ramseycat/generators.hpp"
#include "ramseycat/structures.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace ramseycat;

namespace {

// Independent oracle: filter every injective point map through the
// embedding definition. The backtracking enumerator must match it exactly.
std::vector<std::vector<int>> all_embeddings_naive(const Structure& a, const Structure& b) {
    std::vector<std::vector<int>> out;
    if (a.size > b.size) return out;
    std::vector<int> map(a.size, -1);
    std::vector<bool> used(b.size, false);
    std::function<void(int)> rec = [&](int p) {
        if (p == a.size) {
            if (is_embedding(a, b, map)) out.push_back(map);
            return;
        }
        for (int q = 0; q < b.size; ++q) {
            if (used[q]) continue;
            used[q] = true;
            map[p] = q;
            rec(p + 1);
            used[q] = false;
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

Structure one_point_with_constant() {
    Structure s;
    s.signature.constants.push_back("c1");
    s.size = 1;
    s.constants = {0};
    return s;
}

Structure unary_loop() {
    Structure s;
    s.signature.functions.push_back({"f", 1});
    s.size = 1;
    s.functions = {{0}};
    return s;
}

Structure unary_two_cycle() {
    Structure s;
    s.signature.functions.push_back({"f", 1});
    s.size = 2;
    s.functions = {{1, 0}};
    return s;
}

} // namespace

TEST_CASE("chain embeddings are the strictly increasing maps") {
    CHECK(enumerate_embeddings(chain(2), chain(4)).size() == 6);
    CHECK(enumerate_embeddings(chain(3), chain(3)).size() == 1);
    CHECK(enumerate_embeddings(chain(4), chain(3)).empty());
}

TEST_CASE("constants pin the embedding") {
    Structure a = one_point_with_constant();
    Structure b = one_point_with_constant();
    b.size = 3;
    b.constants = {1};
    // Still a valid structure: one constant symbol interpreted as point 1.
    auto embs = enumerate_embeddings(a, b);
    REQUIRE(embs.size() == 1);
    CHECK(embs[0].map == std::vector<int>{1});
}

TEST_CASE("function tables can rule out every injection") {
    CHECK(enumerate_embeddings(unary_loop(), unary_two_cycle()).empty());
}

TEST_CASE("embedding enumeration agrees with the all-injections oracle") {
    Rng rng(20240817);
    for (int trial = 0; trial < 60; ++trial) {
        Signature sig = random_signature(rng);
        Structure a = random_structure_over(rng, sig, 3);
        Structure b = random_structure_over(rng, sig, 5);
        auto fast = enumerate_embeddings(a, b);
        std::vector<std::vector<int>> fast_maps;
        for (const auto& e : fast) fast_maps.push_back(e.map);
        CHECK(fast_maps == all_embeddings_naive(a, b));
        CHECK(std::is_sorted(fast_maps.begin(), fast_maps.end()));
    }
    // Signatures with functions and constants as well.
    Structure cyc = unary_two_cycle();
    Structure cyc4 = cyc;
    cyc4.size = 4;
    cyc4.functions = {{1, 0, 3, 2}};
    auto fast = enumerate_embeddings(cyc, cyc4);
    std::vector<std::vector<int>> fast_maps;
    for (const auto& e : fast) fast_maps.push_back(e.map);
    CHECK(fast_maps == all_embeddings_naive(cyc, cyc4));
    CHECK(fast_maps.size() == 4);
}

TEST_CASE("reduct keeps the named symbols") {
    Structure two_orders = superpose_structures(chain(3, "<1"), chain(3, "<2"));
    Structure left = reduct(two_orders, {"<1"});
    CHECK(left == chain(3, "<1"));
    Structure full_reduct = reduct(two_orders, {"<1", "<2"});
    CHECK(full_reduct == two_orders);
    Structure bare = reduct(two_orders, {});
    CHECK(bare.signature.relations.empty());
    CHECK(bare.size == 3);
}

TEST_CASE("generated substructure closes under functions and constants") {
    Structure s;
    s.signature.functions.push_back({"f", 1});
    s.size = 2;
    s.functions = {{1, 1}}; // f(0) = 1, f(1) = 1
    auto g = generated_substructure(s, {0});
    CHECK(g.structure.size == 2);
    CHECK(g.closure_added_points);
    CHECK(g.inclusion.map == std::vector<int>{0, 1});

    auto full = generated_substructure(s, {0, 1});
    CHECK(full.structure == s);
    CHECK_FALSE(full.closure_added_points);

    // Relational: the closure is the seed itself.
    auto sub = generated_substructure(chain(4), {1, 3});
    CHECK(sub.structure == chain(2));
    CHECK_FALSE(sub.closure_added_points);
}

TEST_CASE("generated substructure is the least closed superset") {
    Rng rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        Structure s;
        s.signature.functions.push_back({"f", 1});
        s.size = 2 + static_cast<int>(rng.below(5));
        std::vector<int> tbl(s.size);
        for (int i = 0; i < s.size; ++i) tbl[i] = static_cast<int>(rng.below(s.size));
        s.functions = {tbl};
        std::vector<int> seed = {static_cast<int>(rng.below(s.size))};
        auto g = generated_substructure(s, seed);
        // Brute force: smallest f-closed set containing the seed.
        std::set<int> closure(seed.begin(), seed.end());
        bool grew = true;
        while (grew) {
            grew = false;
            for (int p : std::vector<int>(closure.begin(), closure.end()))
                if (closure.insert(tbl[p]).second) grew = true;
        }
        CHECK(g.inclusion.map == std::vector<int>(closure.begin(), closure.end()));
    }
}

TEST_CASE("rigid surjection counts onto 2-chains match the closed form") {
    for (int n = 2; n <= 10; ++n) {
        // Brute force over all maps is the oracle; the closed form 2^(n-1)-1
        // must agree with it.
        std::size_t count = rigid_surjections(n, 2).size();
        CHECK(count == (std::size_t{1} << (n - 1)) - 1);
    }
    for (int n = 1; n <= 6; ++n) {
        auto same = rigid_surjections(n, n);
        REQUIRE(same.size() == 1);
        std::vector<int> ident(n);
        std::iota(ident.begin(), ident.end(), 0);
        CHECK(same[0] == ident);
    }
}

TEST_CASE("rigid surjections compose") {
    for (int a = 1; a <= 6; ++a)
        for (int b = 1; b <= a; ++b)
            for (int c = 1; c <= b; ++c)
                for (const auto& f : rigid_surjections(a, b))
                    for (const auto& g : rigid_surjections(b, c)) {
                        std::vector<int> comp(a);
                        for (int x = 0; x < a; ++x) comp[x] = g[f[x]];
                        CHECK(is_rigid_surjection(comp, a, c));
                    }
}

TEST_CASE("rigid surjection category validates; mono only after dualizing") {
    Category rs = rigid_surjection_category(4);
    LawReport report = validate_category(rs.to_data());
    CHECK(report.accepted());
    CHECK(report.all_mono == TriBool::no);
    LawReport op_report = validate_category(opposite(rs).to_data());
    CHECK(op_report.accepted());
    CHECK(op_report.all_mono == TriBool::yes);
}

TEST_CASE("superposed embeddings are exactly the maps embedding both reducts") {
    Structure s2 = superpose_structures(chain(2, "<1"), chain(2, "<2"));
    Structure bigger_second = apply_permutation(chain(3, "<2"), {2, 1, 0});
    Structure s3 = superpose_structures(chain(3, "<1"), bigger_second);
    auto embs = enumerate_embeddings(s2, s3);
    auto left = all_embeddings_naive(chain(2, "<1"), chain(3, "<1"));
    auto right = all_embeddings_naive(reduct(s2, {"<2"}), reduct(s3, {"<2"}));
    std::vector<std::vector<int>> expect;
    std::set_intersection(left.begin(), left.end(), right.begin(), right.end(),
                          std::back_inserter(expect));
    std::vector<std::vector<int>> got;
    for (const auto& e : embs) got.push_back(e.map);
    CHECK(got == expect);
    CHECK(got.size() <= std::min(left.size(), right.size()));
    CHECK(reduct(s3, {"<1"}) == chain(3, "<1"));
}

TEST_CASE("expanding with constants pins embeddings pointwise") {
    Structure a = expand_with_constants(chain(3), {1});
    Structure b = expand_with_constants(chain(5), {2});
    auto embs = enumerate_embeddings(a, b);
    auto plain = enumerate_embeddings(chain(3), chain(5));
    std::size_t pinned = 0;
    for (const auto& e : plain)
        if (e.map[1] == 2) ++pinned;
    CHECK(embs.size() == pinned);
    for (const auto& e : embs) CHECK(e.map[1] == 2);

    Structure back = reduct(a, {"<"});
    CHECK(back == chain(3));
}

TEST_CASE("class generation counts canonical representatives") {
    auto chains_cls = generate_class(StructureClassSpec::chains_spec(4), 4);
    CHECK(chains_cls.members.size() == 4);
    CHECK(chains_cls.complete);

    auto pointed = generate_class(
        StructureClassSpec::add_constants_spec(StructureClassSpec::chains_spec(3), 1), 3);
    CHECK(pointed.members.size() == 6);

    auto superposed = generate_class(
        StructureClassSpec::superpose_spec(StructureClassSpec::chains_spec(3, "<1"),
                                           StructureClassSpec::chains_spec(3, "<2")),
        3);
    std::array<std::size_t, 4> by_size = {0, 0, 0, 0};
    for (const auto& m : superposed.members) ++by_size[m.size];
    CHECK(by_size[1] == 1);
    CHECK(by_size[2] == 2);
    CHECK(by_size[3] == 6);

    auto orders = generate_class(
        StructureClassSpec::all_structures_spec(chain(1).signature, 3, "linear_order"), 3);
    CHECK(orders.members.size() == 3); // one isomorphism type per size
    for (std::size_t i = 0; i < orders.members.size(); ++i)
        CHECK(isomorphic(orders.members[i], chain(static_cast<int>(i) + 1)));
}

TEST_CASE("superposing with the empty signature copies the class") {
    Signature empty_sig;
    auto spec = StructureClassSpec::superpose_spec(
        StructureClassSpec::chains_spec(0),
        StructureClassSpec::all_structures_spec(empty_sig, 0, "true"));
    auto cls = generate_class(spec, 3);
    auto plain = generate_class(StructureClassSpec::chains_spec(0), 3);
    REQUIRE(cls.members.size() == plain.members.size());
    for (std::size_t i = 0; i < cls.members.size(); ++i)
        CHECK(isomorphic(reduct(cls.members[i], {"<"}), plain.members[i]));
}

TEST_CASE("isomorphism detection and canonical forms") {
    Structure reversed = apply_permutation(chain(4), {3, 2, 1, 0});
    CHECK(isomorphic(reversed, chain(4)));
    CHECK(structure_key(canonical_form(reversed)) == structure_key(canonical_form(chain(4))));
    CHECK_FALSE(isomorphic(chain(3), chain(4)));
}

TEST_CASE("strong amalgamation of chains") {
    Structure a = chain(1);
    Structure b1 = chain(2);
    Structure b2 = chain(2);
    Embedding f1{{0}}; // bottom of b1
    Embedding f2{{1}}; // top of b2
    auto result =
        find_strong_amalgam(a, b1, b2, f1, f2, StructureClassSpec::chains_spec(0), 6);
    REQUIRE(result.answer == TriBool::yes);
    CHECK(result.tip->size == 3); // smallest search hit
    CHECK(is_embedding(b1, *result.tip, result.g1->map));
    CHECK(is_embedding(b2, *result.tip, result.g2->map));

    // Identity span: the amalgam is the structure itself.
    Embedding idm{{0, 1}};
    auto trivial =
        find_strong_amalgam(b1, b1, b1, idm, idm, StructureClassSpec::chains_spec(0), 6);
    REQUIRE(trivial.answer == TriBool::yes);
    CHECK(trivial.tip->size == 2);
}

TEST_CASE("strong amalgamation of superposed orders") {
    auto spec = StructureClassSpec::superpose_spec(StructureClassSpec::chains_spec(0, "<1"),
                                                   StructureClassSpec::chains_spec(0, "<2"));
    auto cls = generate_class(spec, 2);
    Structure a = cls.members.front(); // the single one-point structure
    REQUIRE(a.size == 1);
    Structure b1 = cls.members[1];
    Structure b2 = cls.members[2];
    auto e1 = enumerate_embeddings(a, b1);
    auto e2 = enumerate_embeddings(a, b2);
    REQUIRE(!e1.empty());
    REQUIRE(!e2.empty());
    auto result = find_strong_amalgam(a, b1, b2, e1.front(), e2.front(), spec, 3);
    REQUIRE(result.answer == TriBool::yes);
    CHECK(result.tip->size == 3);
}

TEST_CASE("reasonable classes") {
    CHECK(is_reasonable_class(StructureClassSpec::chains_spec(0), 5).answer == TriBool::yes);

    // Even-size linear orders only: an injection of a 2-chain into a
    // 3-element set has no home.
    auto even = StructureClassSpec::explicit_spec({chain(2), chain(4)});
    auto report = is_reasonable_class(even, 4);
    CHECK(report.answer == TriBool::no);

    Signature empty_sig;
    auto sets = StructureClassSpec::all_structures_spec(empty_sig, 0, "true");
    CHECK(is_reasonable_class(sets, 4).answer == TriBool::yes);
}

TEST_CASE("class views expose hom sets of embeddings") {
    auto sc = chains_category(4);
    CHECK(sc.category.object_count() == 4);
    ObjId two = *sc.category.object_by_name("chain2");
    ObjId four = *sc.category.object_by_name("chain4");
    CHECK(sc.category.hom(two, four).size() == 6);
    CHECK(sc.category.all_mono());
    CHECK(sc.category.complete());

    auto pointed = as_category(
        StructureClassSpec::add_constants_spec(StructureClassSpec::chains_spec(3), 1), 3);
    CHECK(pointed.category.object_count() == 6);
    CHECK(pointed.category.all_mono());

    auto superposed = as_category(
        StructureClassSpec::superpose_spec(StructureClassSpec::chains_spec(0, "<1"),
                                           StructureClassSpec::chains_spec(0, "<2")),
        3);
    CHECK(superposed.category.object_count() == 1 + 2 + 6);
    CHECK(superposed.category.all_mono());
}
