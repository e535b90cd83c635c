// Command-line front end: file parsing, constructions, arrow checks, degree
// computations, verification suites. Exit codes: 0 holds/verified,
// 1 fails/refuted, 2 unknown/budget exhausted, 3 usage or input errors.

#include "ramseycat/engine.hpp"
#include "ramseycat/generators.hpp"
#include "ramseycat/io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

using namespace ramseycat;
using Json = io::Json;

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitError = 3;

Category load_category(const std::string& path) {
    FiniteCategoryData data = io::parse_category(io::load_json_file(path));
    LawReport report = validate_category(data);
    if (!report.accepted()) {
        std::cerr << "category in " << path << " rejected:\n";
        for (const auto& p : report.problems) std::cerr << "  " << p << "\n";
        std::exit(kExitError);
    }
    return Category::from_data(data);
}

struct ClassOptions {
    std::string name;      // chains | linear-orders | superpose-chains | add-constants-chains | file
    int max = 6;
    int constants = 1;
    std::string spec_file;
};

StructureClassSpec compile_class(const ClassOptions& opts) {
    if (opts.name == "chains") return StructureClassSpec::chains_spec(0);
    if (opts.name == "linear-orders") {
        Signature sig;
        sig.relations.push_back({"<", 2});
        return StructureClassSpec::all_structures_spec(sig, 0, "linear_order");
    }
    if (opts.name == "superpose-chains")
        return StructureClassSpec::superpose_spec(StructureClassSpec::chains_spec(0, "<1"),
                                                  StructureClassSpec::chains_spec(0, "<2"));
    if (opts.name == "add-constants-chains")
        return StructureClassSpec::add_constants_spec(StructureClassSpec::chains_spec(0),
                                                      opts.constants);
    if (opts.name == "file") return io::parse_class_spec(io::load_json_file(opts.spec_file));
    std::cerr << "unknown class \"" << opts.name << "\"\n";
    std::exit(kExitError);
}

struct ViewInput {
    std::optional<std::string> category_file;
    ClassOptions cls;
    bool use_class = false;
};

StructureCategory materialize_class(const ViewInput& in) {
    return as_category(compile_class(in.cls), in.cls.max);
}

Category load_view(const ViewInput& in) {
    if (in.use_class) return materialize_class(in).category;
    return load_category(*in.category_file);
}

ObjId resolve_object(const Category& cat, const ViewInput& in, const std::string& name) {
    if (auto o = cat.object_by_name(name)) return *o;
    if (in.use_class && (in.cls.name == "chains" || in.cls.name.empty())) {
        if (auto o = cat.object_by_name("chain" + name)) return *o;
    }
    std::cerr << "unknown object \"" << name << "\"\n";
    std::exit(kExitError);
}

unsigned worker_count(unsigned cli_value) {
    if (const char* env = std::getenv("RAMSEYCAT_WORKERS")) {
        int v = std::atoi(env);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    return cli_value;
}

void emit(const Json& j, const std::string& out_path, bool json_to_stdout) {
    if (!out_path.empty()) io::write_json_file(out_path, j);
    if (json_to_stdout) std::cout << j.dump(2) << "\n";
}

std::string arrow_notation(const Category& cat, const ArrowQuery& q) {
    std::string rel = q.variant == ArrowVariant::structural ? " ~→ " : " → ";
    return cat.object_name(q.c) + rel + "(" + cat.object_name(q.b) + ")^" + cat.object_name(q.a) +
           "_{" + std::to_string(q.k) + "," + std::to_string(q.t) + "}";
}

void add_view_options(CLI::App* cmd, ViewInput& in) {
    auto* file = cmd->add_option("--in", in.category_file, "category file (JSON)");
    auto* cls = cmd->add_option("--class", in.cls.name,
                                "class spec: chains | linear-orders | superpose-chains | "
                                "add-constants-chains | file");
    cmd->add_option("--max", in.cls.max, "size budget for class materialization");
    cmd->add_option("--constants", in.cls.constants, "constants added by add-constants-chains");
    cmd->add_option("--spec", in.cls.spec_file, "class spec file for --class file");
    file->excludes(cls);
    cmd->callback([&in, cls]() { in.use_class = cls->count() > 0; });
}

int run_recheck(const std::string& report_path, const Category& cat) {
    Json report = io::load_json_file(report_path);
    bool all_ok = true;
    std::size_t checked = 0;
    auto check_coloring = [&](const ArrowQuery& q, const Json& colors) {
        ArrowDomain d = build_arrow_domain(cat, q);
        BadColoring coloring(d.size, 0);
        if (colors.is_object()) {
            for (std::size_t i = 0; i < d.size; ++i) {
                if (!colors.contains(d.labels[i])) return false;
                coloring[i] = colors[d.labels[i]].get<std::uint16_t>();
            }
        } else {
            if (colors.size() != d.size) return false;
            for (std::size_t i = 0; i < d.size; ++i) coloring[i] = colors[i].get<std::uint16_t>();
        }
        return revalidate_bad_coloring(cat, q, coloring);
    };
    auto object_of = [&](const std::string& name) {
        auto o = cat.object_by_name(name);
        if (!o) {
            std::cerr << "recheck: report references unknown object " << name << "\n";
            std::exit(kExitError);
        }
        return *o;
    };
    auto parse_variant = [](const std::string& s) {
        return s == "structural" ? ArrowVariant::structural : ArrowVariant::embedding;
    };
    if (report.contains("query") && report.contains("holds")) {
        const Json& jq = report["query"];
        ArrowQuery q;
        q.variant = parse_variant(jq["variant"].get<std::string>());
        q.a = object_of(jq["A"].get<std::string>());
        q.b = object_of(jq["B"].get<std::string>());
        q.c = object_of(jq["C"].get<std::string>());
        q.k = jq["k"].get<unsigned>();
        q.t = jq["t"].get<unsigned>();
        if (!report["holds"].get<bool>()) {
            ++checked;
            bool ok = check_coloring(q, report["certificate"]["coloring"]);
            std::cout << (ok ? "[ ok ] " : "[FAIL] ") << "bad coloring for " << arrow_notation(cat, q)
                      << "\n";
            all_ok = all_ok && ok;
        }
    } else if (report.contains("status") && !report.contains("lower_certificate")) {
        std::cout << "report carries no definitional certificates (degree 1 needs no lower "
                     "witness); upper witnesses re-verify through `arrow --oracle`\n";
        return kExitHolds;
    } else if (report.contains("status") && report.contains("lower_certificate")) {
        const Json& cert = report["lower_certificate"];
        ArrowQuery q;
        q.variant = parse_variant(report["variant"].get<std::string>());
        q.b = object_of(cert["B"].get<std::string>());
        q.k = cert["k"].get<unsigned>();
        std::string value = report.contains("value") ? report["value"].get<std::string>()
                                                     : report["lower"].get<std::string>();
        q.t = static_cast<unsigned>(std::stoul(value)) - 1;
        // The degree report does not repeat A; it must be supplied.
        if (!report.contains("A")) {
            std::cerr << "recheck: degree report lacks an \"A\" field\n";
            return kExitError;
        }
        q.a = object_of(report["A"].get<std::string>());
        for (const auto& [cname, colors] : cert["colorings"].items()) {
            q.c = object_of(cname);
            ++checked;
            bool ok = check_coloring(q, colors);
            std::cout << (ok ? "[ ok ] " : "[FAIL] ") << "refutation at C=" << cname << "\n";
            all_ok = all_ok && ok;
        }
    } else {
        std::cerr << "recheck: unrecognized report shape\n";
        return kExitError;
    }
    std::cout << (all_ok ? "all " : "some FAILED of ") << checked << " certificates re-validated\n";
    return all_ok ? kExitHolds : kExitFails;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-category Ramsey engine"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string out_path;
    bool emit_json = false;
    app.add_option("--out", out_path, "write the JSON report here");
    app.add_flag("--json", emit_json, "print the JSON report to stdout");

    // ---- validate ----
    auto* validate = app.add_subcommand("validate", "check category laws of a file");
    std::string validate_in;
    validate->add_option("--in", validate_in, "category file")->required();

    // ---- construct ----
    auto* construct = app.add_subcommand("construct", "build a derived category");
    std::string kind, in1, in2, functor_file, slice_object, f1_path, f2_path;
    construct->add_option("kind", kind, "product|pullback|grothendieck|slice|opposite")->required();
    construct->add_option("--in", in1, "primary category file");
    construct->add_option("--in2", in2, "second category file (product)");
    construct->add_option("--functor", functor_file, "set-valued functor file (grothendieck)");
    construct->add_option("--object", slice_object, "slice base object");
    construct->add_option("--f1", f1_path, "first functor file (pullback)");
    construct->add_option("--f2", f2_path, "second functor file (pullback)");

    // ---- arrow ----
    auto* arrow = app.add_subcommand("arrow", "decide one arrow relation");
    ViewInput arrow_view;
    add_view_options(arrow, arrow_view);
    std::string arrow_a, arrow_b, arrow_c, arrow_variant = "embedding";
    unsigned arrow_k = 2, arrow_t = 1, workers = 1;
    bool symmetry = false, with_oracle = false;
    arrow->add_option("--A", arrow_a)->required();
    arrow->add_option("--B", arrow_b)->required();
    arrow->add_option("--C", arrow_c)->required();
    arrow->add_option("--k", arrow_k, "number of colors");
    arrow->add_option("--t", arrow_t, "color threshold");
    arrow->add_option("--variant", arrow_variant, "embedding|structural");
    arrow->add_flag("--symmetry", symmetry, "Aut(C)-orbit pruning");
    arrow->add_option("--workers", workers, "search workers (env RAMSEYCAT_WORKERS overrides)");
    arrow->add_flag("--oracle", with_oracle, "cross-check with the exhaustive oracle");

    // ---- degree ----
    auto* degree = app.add_subcommand("degree", "Ramsey degree of an object");
    ViewInput degree_view;
    add_view_options(degree, degree_view);
    std::string degree_a, degree_variant = "embedding";
    unsigned deg_max_k = 2;
    int deg_max_b = -1, deg_max_c = -1;
    bool budgeted = false;
    degree->add_option("--A", degree_a)->required();
    degree->add_option("--variant", degree_variant, "embedding|structural");
    degree->add_flag("--budgeted", budgeted, "bounds with budgets instead of the exact value");
    degree->add_option("--max-k", deg_max_k, "budget: colors");
    degree->add_option("--max-b", deg_max_b, "budget: highest B index");
    degree->add_option("--max-c", deg_max_c, "budget: highest C index");
    degree->add_option("--workers", workers, "search workers");

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run a theorem verification suite");
    std::string suite;
    verify->add_option("suite", suite,
                       "multiplicativity|aut-factor|monotonicity|transport|rp-implies-ap")
        ->required();
    std::string c1_path, c2_path, a1_name, a2_name;
    std::size_t count = 50, samples = 200;
    std::uint64_t seed = 1;
    int cls_max = 4;
    verify->add_option("--c1", c1_path, "first category file");
    verify->add_option("--c2", c2_path, "second category file");
    verify->add_option("--A1", a1_name);
    verify->add_option("--A2", a2_name);
    verify->add_option("--count", count, "generated instances");
    verify->add_option("--samples", samples, "sampled checks");
    verify->add_option("--seed", seed);
    verify->add_option("--max", cls_max, "chain size budget for sampled chains");

    // ---- structures ----
    auto* structures = app.add_subcommand("structures", "structure-level operations");
    std::string sop, sa_path, sb_path, b1_path, b2_path;
    int rs_n = 4, rs_m = 2;
    bool list_maps = false;
    ClassOptions amalgam_class{"chains", 6, 1, ""};
    structures->add_option("op", sop, "embeddings|rigid-surjections|amalgam")->required();
    structures->add_option("--A", sa_path, "structure file");
    structures->add_option("--B", sb_path, "structure file");
    structures->add_option("--B1", b1_path, "structure file");
    structures->add_option("--B2", b2_path, "structure file");
    structures->add_option("--n", rs_n, "chain size (rigid surjections)");
    structures->add_option("--m", rs_m, "target chain size");
    structures->add_flag("--list", list_maps, "list the maps");
    structures->add_option("--class", amalgam_class.name, "search class for amalgams");
    structures->add_option("--max", amalgam_class.max, "class size budget");

    // ---- recheck ----
    auto* recheck = app.add_subcommand("recheck", "re-validate report certificates definitionally");
    std::string recheck_report;
    ViewInput recheck_view;
    recheck->add_option("--report", recheck_report, "report file")->required();
    add_view_options(recheck, recheck_view);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*validate) {
            FiniteCategoryData data = io::parse_category(io::load_json_file(validate_in));
            LawReport report = validate_category(data);
            Json j = io::law_report_json(report);
            emit(j, out_path, emit_json);
            std::cout << (report.accepted() ? "valid" : "INVALID") << "; all-mono: "
                      << to_string(report.all_mono) << "\n";
            for (const auto& p : report.problems) std::cout << "  " << p << "\n";
            return report.accepted() ? kExitHolds : kExitFails;
        }

        if (*construct) {
            FiniteCategoryData result;
            if (kind == "opposite") {
                result = opposite(load_category(in1)).to_data();
            } else if (kind == "product") {
                result = product(load_category(in1), load_category(in2)).category.to_data();
            } else if (kind == "slice") {
                Category c = load_category(in1);
                ObjId x = c.object_by_name(slice_object)
                              ? *c.object_by_name(slice_object)
                              : (std::cerr << "unknown object\n", std::exit(kExitError), ObjId{});
                result = slice(c, x).category.to_data();
            } else if (kind == "grothendieck") {
                Category c = load_category(in1);
                SetValuedFunctor h = io::parse_set_functor(io::load_json_file(functor_file), c);
                result = grothendieck(c, h).category.to_data();
            } else if (kind == "pullback") {
                io::FunctorFile ff1 = io::parse_functor_file(io::load_json_file(f1_path));
                io::FunctorFile ff2 = io::parse_functor_file(io::load_json_file(f2_path));
                if (ff1.target_path != ff2.target_path) {
                    std::cerr << "pullback: functor targets differ\n";
                    return kExitError;
                }
                Category c1 = load_category(ff1.source_path);
                Category c2 = load_category(ff2.source_path);
                Category d = load_category(ff1.target_path);
                result = pullback(c1, c2, d, io::resolve_functor(ff1, c1, d),
                                  io::resolve_functor(ff2, c2, d))
                             .category.to_data();
            } else {
                std::cerr << "unknown construction \"" << kind << "\"\n";
                return kExitError;
            }
            Json j = io::category_json(result);
            if (out_path.empty()) {
                std::cout << j.dump(2) << "\n";
            } else {
                io::write_json_file(out_path, j);
                std::cout << "wrote " << out_path << " (" << result.objects.size() << " objects, "
                          << result.morphisms.size() << " morphisms)\n";
            }
            return kExitHolds;
        }

        if (*arrow) {
            Category cat = load_view(arrow_view);
            ArrowQuery q;
            q.variant =
                arrow_variant == "structural" ? ArrowVariant::structural : ArrowVariant::embedding;
            q.a = resolve_object(cat, arrow_view, arrow_a);
            q.b = resolve_object(cat, arrow_view, arrow_b);
            q.c = resolve_object(cat, arrow_view, arrow_c);
            q.k = arrow_k;
            q.t = arrow_t;
            ArrowOptions options;
            options.symmetry = symmetry;
            options.workers = worker_count(workers);
            ArrowVerdict v = check_arrow(cat, q, options);
            emit(io::arrow_verdict_json(cat, v), out_path, emit_json);
            std::cout << arrow_notation(cat, q) << ": " << (v.holds ? "holds" : "fails") << " ("
                      << v.reason << ")\n";
            if (with_oracle) {
                ArrowVerdict o = check_arrow_oracle(cat, q);
                std::cout << "oracle: " << (o.holds ? "holds" : "fails") << "\n";
                if (o.holds != v.holds) {
                    std::cout << "ORACLE DISAGREES\n";
                    return kExitError;
                }
            }
            return v.holds ? kExitHolds : kExitFails;
        }

        if (*degree) {
            Category cat = load_view(degree_view);
            ObjId a = resolve_object(cat, degree_view, degree_a);
            ArrowVariant variant =
                degree_variant == "structural" ? ArrowVariant::structural : ArrowVariant::embedding;
            ArrowOptions options;
            options.workers = worker_count(workers);
            DegreeReport report;
            if (budgeted || !cat.complete()) {
                DegreeBudget budget;
                budget.max_k = deg_max_k;
                budget.max_b_index = deg_max_b < 0 ? static_cast<ObjId>(cat.object_count() - 1)
                                                   : static_cast<ObjId>(deg_max_b);
                budget.max_c_index = deg_max_c < 0 ? static_cast<ObjId>(cat.object_count() - 1)
                                                   : static_cast<ObjId>(deg_max_c);
                report = degree_bounds(cat, a, variant, budget, options);
            } else {
                report = degree_exact_finite(cat, a, variant, options);
            }
            Json j = io::degree_report_json(cat, report);
            j["A"] = cat.object_name(a);
            emit(j, out_path, emit_json);
            if (report.exact)
                std::cout << (variant == ArrowVariant::structural ? "t~(" : "t(")
                          << cat.object_name(a) << ") = " << report.value().str() << " (exact)\n";
            else
                std::cout << (variant == ArrowVariant::structural ? "t~(" : "t(")
                          << cat.object_name(a) << ") in [" << report.lower.str() << ", "
                          << report.upper.str() << "] (budgeted"
                          << (report.lower_certified ? ", lower certified" : ", lower non-certified")
                          << ")\n";
            return report.exact || report.lower_certified ? kExitHolds : kExitUnknown;
        }

        if (*verify) {
            ArrowOptions options;
            options.workers = worker_count(1);
            if (suite == "multiplicativity") {
                if (!c1_path.empty()) {
                    Category c1 = load_category(c1_path);
                    Category c2 = load_category(c2_path);
                    ObjId a1 = *c1.object_by_name(a1_name);
                    ObjId a2 = *c2.object_by_name(a2_name);
                    auto r = verify_multiplicativity(c1, c2, a1, a2, options);
                    std::cout << r.t_product.str() << " = " << r.t1.str() << "*" << r.t2.str()
                              << (r.ok ? " (verified)" : " VIOLATED") << "\n";
                    return r.ok ? kExitHolds : kExitFails;
                }
                Rng rng(seed);
                bool all_ok = true;
                for (std::size_t i = 0; i < count; ++i) {
                    Category c1 = random_mono_category(rng);
                    Category c2 = random_mono_category(rng);
                    ObjId a1 = static_cast<ObjId>(rng.below(c1.object_count()));
                    ObjId a2 = static_cast<ObjId>(rng.below(c2.object_count()));
                    auto r = verify_multiplicativity(c1, c2, a1, a2, options);
                    if (!r.ok) {
                        all_ok = false;
                        std::cout << "instance " << i << " VIOLATED: " << r.t_product.str()
                                  << " != " << r.t1.str() << "*" << r.t2.str() << "\n";
                    }
                }
                std::cout << count << " generated instances "
                          << (all_ok ? "verified" : "contain violations") << "\n";
                return all_ok ? kExitHolds : kExitFails;
            }
            if (suite == "aut-factor") {
                Rng rng(seed);
                bool all_ok = true;
                for (std::size_t i = 0; i < count; ++i) {
                    Category c = random_mono_category(rng);
                    ObjId a = static_cast<ObjId>(rng.below(c.object_count()));
                    auto r = verify_aut_factor(c, a, options);
                    if (!r.ok) all_ok = false;
                }
                auto fixed = verify_aut_factor(examples::aut2_category(), 0, options);
                std::cout << "t = |Aut|*t~ on " << count << " generated instances plus the |Aut|=2 "
                          << "example (" << fixed.t.str() << " = " << fixed.aut_size << "*"
                          << fixed.t_structural.str() << "): "
                          << (all_ok && fixed.ok ? "verified" : "VIOLATED") << "\n";
                return all_ok && fixed.ok ? kExitHolds : kExitFails;
            }
            if (suite == "monotonicity") {
                auto chains = chains_category(cls_max);
                SuiteReport chain_report = verify_monotonicity(chains.category, samples / 2, seed, options);
                Rng rng(seed);
                SuiteReport random_report;
                while (random_report.checks < samples - samples / 2) {
                    Category c = random_mono_category(rng);
                    SuiteReport r = verify_monotonicity(
                        c, std::min<std::size_t>(8, samples - samples / 2 - random_report.checks),
                        rng.next(), options);
                    random_report.checks += r.checks;
                    if (!r.ok) {
                        random_report.ok = false;
                        for (auto& n : r.notes) random_report.notes.push_back(n);
                    }
                }
                bool ok = chain_report.ok && random_report.ok;
                std::cout << (chain_report.checks + random_report.checks)
                          << " monotonicity checks: " << (ok ? "verified" : "VIOLATED") << "\n";
                for (const auto& n : chain_report.notes) std::cout << "  " << n << "\n";
                for (const auto& n : random_report.notes) std::cout << "  " << n << "\n";
                return ok ? kExitHolds : kExitFails;
            }
            if (suite == "transport") {
                bool ok = true;
                std::size_t suites = 0;
                Rng rng(seed);
                for (std::size_t i = 0; i < count; ++i) {
                    Category c = random_mono_category(rng);
                    std::vector<ObjId> cofinal;
                    for (ObjId o = 0; o < c.object_count() && cofinal.empty(); ++o)
                        if (is_cofinal_object_set(c, {o})) cofinal = {o};
                    if (cofinal.empty()) continue;
                    SuiteReport r = verify_full_cofinal_inclusion(c, cofinal, options);
                    if (r.hypothesis_ok) {
                        ++suites;
                        ok = ok && r.ok;
                    }
                }
                for (int n = 2; n <= 4; ++n) {
                    Category g = examples::cyclic_group_category(n);
                    SuiteReport r = verify_grothendieck_transport(
                        g, examples::constant_singleton_functor(g), options);
                    if (r.hypothesis_ok) {
                        ++suites;
                        ok = ok && r.ok;
                    }
                    SuiteReport rs = verify_slice_transport(g, 0, options);
                    if (rs.hypothesis_ok) {
                        ++suites;
                        ok = ok && rs.ok;
                    }
                }
                std::cout << suites << " transport suites: " << (ok ? "verified" : "VIOLATED")
                          << "\n";
                return ok ? kExitHolds : kExitFails;
            }
            if (suite == "rp-implies-ap") {
                Rng rng(seed);
                std::vector<Category> cats;
                for (std::size_t i = 0; i < count; ++i) cats.push_back(random_mono_category(rng));
                SuiteReport r = verify_rp_implies_ap(cats, options);
                emit(io::suite_report_json(r), out_path, emit_json);
                std::cout << "RP => AP over " << count << " generated categories: "
                          << (r.ok ? "verified" : "VIOLATED") << "\n";
                for (const auto& n : r.notes) std::cout << "  " << n << "\n";
                return r.ok ? kExitHolds : kExitFails;
            }
            std::cerr << "unknown suite \"" << suite << "\"\n";
            return kExitError;
        }

        if (*structures) {
            if (sop == "embeddings") {
                Structure a = io::parse_structure(io::load_json_file(sa_path));
                Structure b = io::parse_structure(io::load_json_file(sb_path));
                auto embs = enumerate_embeddings(a, b);
                std::cout << embs.size() << " embeddings\n";
                if (list_maps)
                    for (const auto& e : embs) {
                        for (int v : e.map) std::cout << v << " ";
                        std::cout << "\n";
                    }
                return kExitHolds;
            }
            if (sop == "rigid-surjections") {
                if (!out_path.empty()) {
                    // The whole category file, ready for `construct opposite`
                    // and dual arrow queries.
                    Category rs = rigid_surjection_category(rs_n);
                    io::write_json_file(out_path, io::category_json(rs.to_data()));
                    std::cout << "wrote " << out_path << " (chains 1.." << rs_n
                              << " with rigid surjections)\n";
                    return kExitHolds;
                }
                auto maps = rigid_surjections(rs_n, rs_m);
                std::cout << maps.size() << " rigid surjections chain" << rs_n << " -> chain"
                          << rs_m << "\n";
                if (list_maps)
                    for (const auto& f : maps) {
                        for (int v : f) std::cout << v << " ";
                        std::cout << "\n";
                    }
                return kExitHolds;
            }
            if (sop == "amalgam") {
                Structure a = io::parse_structure(io::load_json_file(sa_path));
                Structure b1 = io::parse_structure(io::load_json_file(b1_path));
                Structure b2 = io::parse_structure(io::load_json_file(b2_path));
                auto e1 = enumerate_embeddings(a, b1);
                auto e2 = enumerate_embeddings(a, b2);
                if (e1.empty() || e2.empty()) {
                    std::cerr << "no embeddings of A into B1/B2\n";
                    return kExitError;
                }
                auto result = find_strong_amalgam(a, b1, b2, e1.front(), e2.front(),
                                                  compile_class(amalgam_class), amalgam_class.max);
                if (result.answer == TriBool::yes) {
                    std::cout << "strong amalgam found with tip of size " << result.tip->size << "\n";
                    return kExitHolds;
                }
                std::cout << (result.answer == TriBool::no ? "refuted" : "unknown within budget")
                          << "\n";
                return result.answer == TriBool::no ? kExitFails : kExitUnknown;
            }
            std::cerr << "unknown structures op \"" << sop << "\"\n";
            return kExitError;
        }

        if (*recheck) {
            Category cat = load_view(recheck_view);
            return run_recheck(recheck_report, cat);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
