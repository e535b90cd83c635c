#include "ramseycat/engine.hpp"
#include "ramseycat/generators.hpp"
#include "ramseycat/io.hpp"
#include "ramseycat/structures.hpp"

#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace ramseycat;
using Json = io::Json;

namespace {

std::string scratch_path(const std::string& name) {
    return std::string(RAMSEYCAT_SCRATCH_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

int run_cli(const std::string& args) {
    std::string cmd = std::string(RAMSEYCAT_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

} // namespace

TEST_CASE("category files round-trip") {
    Category pair = examples::two_object_pair();
    FiniteCategoryData data = pair.to_data();
    Json j = io::category_json(data);
    FiniteCategoryData back = io::parse_category(j);
    CHECK(structurally_equal(data, back));
    CHECK(io::category_json(back).dump() == j.dump());
}

TEST_CASE("structure and class spec files round-trip") {
    Structure s = expand_with_constants(superpose_structures(chain(3, "<1"), chain(3, "<2")), {1});
    Json j = io::structure_json(s);
    Structure back = io::parse_structure(j);
    CHECK(back == s);

    auto spec = StructureClassSpec::add_constants_spec(
        StructureClassSpec::superpose_spec(StructureClassSpec::chains_spec(3, "<1"),
                                           StructureClassSpec::chains_spec(3, "<2")),
        2);
    Json sj = io::class_spec_json(spec);
    StructureClassSpec back_spec = io::parse_class_spec(sj);
    CHECK(io::class_spec_json(back_spec).dump() == sj.dump());
    CHECK(generate_class(back_spec, 2).members.size() == generate_class(spec, 2).members.size());
}

TEST_CASE("set functor and diagram files parse") {
    Category pair = examples::two_object_pair();
    SetValuedFunctor h = hom_functor(pair, 0);
    Json j = io::set_functor_json(pair, h);
    SetValuedFunctor back = io::parse_set_functor(j, pair);
    CHECK(back.sets == h.sets);
    CHECK(back.maps == h.maps);

    BinaryDiagram d;
    d.bottom = 0;
    d.top = 1;
    d.top_count = 2;
    d.bottoms.push_back({*pair.morphism_by_name("f"), 0, *pair.morphism_by_name("g"), 1});
    Json dj = io::diagram_json(pair, d);
    BinaryDiagram back_d = io::parse_diagram(dj, pair);
    CHECK(back_d.bottom == d.bottom);
    CHECK(back_d.top_count == d.top_count);
    CHECK(back_d.bottoms.size() == 1);
}

TEST_CASE("verdict serialization is deterministic") {
    auto sc = chains_category(5);
    const Category& cat = sc.category;
    ArrowQuery q;
    q.a = *cat.object_by_name("chain2");
    q.b = *cat.object_by_name("chain3");
    q.c = *cat.object_by_name("chain5");
    q.k = 2;
    q.t = 1;
    ArrowOptions serial;
    ArrowOptions parallel;
    parallel.workers = 4;
    std::string first = io::arrow_verdict_json(cat, check_arrow(cat, q, serial)).dump(2);
    std::string second = io::arrow_verdict_json(cat, check_arrow(cat, q, parallel)).dump(2);
    CHECK(first == second);
    // Round trip.
    Json parsed = Json::parse(first);
    CHECK(parsed.dump(2) == first);
}

TEST_CASE("cli: arrow exit codes and worker-count independence") {
    CHECK(run_cli("arrow --class chains --max 6 --A 2 --B 3 --C 6 --k 2 --t 1") == 0);
    CHECK(run_cli("arrow --class chains --max 6 --A 2 --B 3 --C 5 --k 2 --t 1") == 1);

    std::string out1 = scratch_path("arrow_w1.json");
    std::string out4 = scratch_path("arrow_w4.json");
    CHECK(run_cli("arrow --class chains --max 6 --A 2 --B 3 --C 5 --k 2 --t 1 --workers 1 --out " +
                  out1) == 1);
    CHECK(run_cli("arrow --class chains --max 6 --A 2 --B 3 --C 5 --k 2 --t 1 --workers 4 --out " +
                  out4) == 1);
    CHECK(read_file(out1) == read_file(out4));
    CHECK(!read_file(out1).empty());
}

TEST_CASE("cli: construct opposite twice returns a structurally equal file") {
    Category pair = examples::two_object_pair();
    std::string in = scratch_path("pair.json");
    std::string once = scratch_path("pair_op.json");
    std::string twice = scratch_path("pair_opop.json");
    io::write_json_file(in, io::category_json(pair.to_data()));
    CHECK(run_cli("construct opposite --in " + in + " --out " + once) == 0);
    CHECK(run_cli("construct opposite --in " + once + " --out " + twice) == 0);
    FiniteCategoryData original = io::parse_category(io::load_json_file(in));
    FiniteCategoryData back = io::parse_category(io::load_json_file(twice));
    CHECK(structurally_equal(original, back));

    std::string one_obj = scratch_path("one.json");
    std::string one_op = scratch_path("one_op.json");
    io::write_json_file(one_obj, io::category_json(examples::one_object().to_data()));
    CHECK(run_cli("construct opposite --in " + one_obj + " --out " + one_op) == 0);
    CHECK(structurally_equal(io::parse_category(io::load_json_file(one_obj)),
                             io::parse_category(io::load_json_file(one_op))));
}

TEST_CASE("cli: validate and verify commands") {
    std::string in = scratch_path("pair2.json");
    io::write_json_file(in, io::category_json(examples::two_object_pair().to_data()));
    CHECK(run_cli("validate --in " + in) == 0);
    CHECK(run_cli("verify multiplicativity --c1 " + in + " --c2 " + in + " --A1 A --A2 A") == 0);
    CHECK(run_cli("verify aut-factor --count 5 --seed 3") == 0);
    CHECK(run_cli("verify rp-implies-ap --count 10 --seed 4") == 0);
}

TEST_CASE("cli: recheck re-validates certificates definitionally") {
    std::string report = scratch_path("arrow_cert.json");
    CHECK(run_cli("arrow --class chains --max 5 --A 2 --B 3 --C 5 --k 2 --t 1 --out " + report) == 1);
    CHECK(run_cli("recheck --report " + report + " --class chains --max 5") == 0);

    // Corrupt the certificate; recheck must reject it.
    Json j = io::load_json_file(report);
    for (auto& [label, color] : j["certificate"]["coloring"].items())
        color = 0;
    std::string bad = scratch_path("arrow_cert_bad.json");
    io::write_json_file(bad, j);
    CHECK(run_cli("recheck --report " + bad + " --class chains --max 5") == 1);
}

TEST_CASE("cli: structures subcommands") {
    CHECK(run_cli("structures rigid-surjections --n 5 --m 2") == 0);
    std::string a = scratch_path("chain2.json");
    std::string b = scratch_path("chain4.json");
    io::write_json_file(a, io::structure_json(chain(2)));
    io::write_json_file(b, io::structure_json(chain(4)));
    CHECK(run_cli("structures embeddings --A " + a + " --B " + b) == 0);
    std::string b1 = scratch_path("chain2b.json");
    io::write_json_file(b1, io::structure_json(chain(2)));
    std::string one = scratch_path("chain1.json");
    io::write_json_file(one, io::structure_json(chain(1)));
    CHECK(run_cli("structures amalgam --A " + one + " --B1 " + a + " --B2 " + b1 +
                  " --class chains --max 6") == 0);
}

TEST_CASE("cli: grothendieck and pullback constructions from files") {
    Category pair = examples::two_object_pair();
    std::string cat_path = scratch_path("pairc.json");
    io::write_json_file(cat_path, io::category_json(pair.to_data()));

    std::string h_path = scratch_path("homA.json");
    io::write_json_file(h_path, io::set_functor_json(pair, hom_functor(pair, 0)));
    std::string groth_out = scratch_path("groth.json");
    CHECK(run_cli("construct grothendieck --in " + cat_path + " --functor " + h_path + " --out " +
                  groth_out) == 0);
    FiniteCategoryData groth = io::parse_category(io::load_json_file(groth_out));
    CHECK(groth.objects.size() == 3); // (A,id_A), (B,f), (B,g)
    CHECK(validate_category(groth).accepted());

    std::string unit_path = scratch_path("unitc.json");
    io::write_json_file(unit_path, io::category_json(examples::one_object().to_data()));
    Json functor_file;
    functor_file["source"] = cat_path;
    functor_file["target"] = unit_path;
    Json objs = Json::object();
    objs["A"] = "A";
    objs["B"] = "A";
    functor_file["objects"] = objs;
    Json mors = Json::object();
    for (MorId m = 0; m < pair.morphism_count(); ++m) mors[pair.morphism_name(m)] = "id_A";
    functor_file["morphisms"] = mors;
    std::string f_path = scratch_path("const_functor.json");
    io::write_json_file(f_path, functor_file);
    std::string pb_out = scratch_path("pb.json");
    CHECK(run_cli("construct pullback --f1 " + f_path + " --f2 " + f_path + " --out " + pb_out) ==
          0);
    FiniteCategoryData pb = io::parse_category(io::load_json_file(pb_out));
    CHECK(pb.objects.size() == 4); // constant functors: the full product
    CHECK(validate_category(pb).accepted());
}

TEST_CASE("cli: RAMSEYCAT_WORKERS environment override") {
    std::string out_env = scratch_path("arrow_env.json");
    std::string out_plain = scratch_path("arrow_plain.json");
    std::string base = " arrow --class chains --max 6 --A 2 --B 3 --C 5 --k 2 --t 1 --out ";
    int rc1 = std::system((std::string("RAMSEYCAT_WORKERS=3 ") + RAMSEYCAT_CLI_PATH + base +
                           out_env + " > /dev/null 2>&1")
                              .c_str());
    CHECK(WEXITSTATUS(rc1) == 1);
    CHECK(run_cli(base.substr(1) + out_plain) == 1);
    CHECK(read_file(out_env) == read_file(out_plain));
}

TEST_CASE("cli: degree command") {
    CHECK(run_cli("degree --class chains --max 4 --A 2") == 2); // truncated view, non-certified
    std::string in = scratch_path("pair3.json");
    io::write_json_file(in, io::category_json(examples::two_object_pair().to_data()));
    CHECK(run_cli("degree --in " + in + " --A A") == 0);
    CHECK(run_cli("degree --in " + in + " --A A --variant structural") == 0);

    // Degree reports recheck their embedded lower-bound refutations.
    std::string report = scratch_path("degree_pair.json");
    CHECK(run_cli("degree --in " + in + " --A A --out " + report) == 0);
    CHECK(run_cli("recheck --report " + report + " --in " + in) == 0);
    Json j = io::load_json_file(report);
    REQUIRE(j.contains("lower_certificate"));
    for (auto& [cname, colors] : j["lower_certificate"]["colorings"].items())
        for (auto& c : colors) c = 0;
    std::string bad = scratch_path("degree_pair_bad.json");
    io::write_json_file(bad, j);
    CHECK(run_cli("recheck --report " + bad + " --in " + in) == 1);
}

TEST_CASE("cli: unknown object names exit with a usage error") {
    std::string in = scratch_path("pair4.json");
    io::write_json_file(in, io::category_json(examples::two_object_pair().to_data()));
    CHECK(run_cli("arrow --in " + in + " --A nope --B A --C B --k 2 --t 1") == 3);
    CHECK(run_cli("arrow --in " + in + " --A A --B A --C B --k 2 --t 1 --variant structural") == 0);
}
