#include "zk/cli.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "zk/json_io.hpp"

namespace zk {

namespace {

struct Input {
    std::string source;  // name or path as given
    std::optional<SimplePolytope3> polytope;
    std::optional<SimplicialComplex> complex;  // set when the input is a plain complex
    json raw;                                  // canonical JSON of the input
};

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ValidationError("JSON parse error in " + path + ": " + e.what());
    }
    return j;
}

Input resolve_input(const std::string& arg, bool force_complex) {
    Input in;
    in.source = arg;
    if (!force_complex) {
        if (auto P = SimplePolytope3::by_name(arg)) {
            in.polytope = std::move(P);
            in.raw = polytope_to_json(*in.polytope);
            return in;
        }
    }
    if (auto K = builtin_complex(arg)) {
        in.complex = std::move(K);
        in.raw = complex_to_json(*in.complex);
        return in;
    }
    json j = read_json_file(arg);
    if (j.contains("facet_cycles") && !force_complex) {
        in.polytope = polytope_from_json(j);
        in.raw = polytope_to_json(*in.polytope);
    } else if (j.contains("maximal_simplices")) {
        in.complex = complex_from_json(j);
        in.raw = complex_to_json(*in.complex);
    } else {
        throw ValidationError("input has neither \"facet_cycles\" nor \"maximal_simplices\": " + arg);
    }
    return in;
}

const SimplePolytope3& require_polytope(const Input& in) {
    if (!in.polytope)
        throw PreconditionError("this command needs a polytope input (builtin name or facet_cycles file)");
    return *in.polytope;
}

json belt_json(const Belt& b) { return json(b.canonical().facets); }

json check_payload(const SimplePolytope3& P) {
    json r;
    r["m"] = P.facet_count();
    PVector pv = p_vector(P);
    json pvj = json::object();
    for (int k = 3; k < static_cast<int>(pv.counts.size()); ++k)
        if (pv.counts[static_cast<size_t>(k)] != 0) pvj[std::to_string(k)] = pv.counts[static_cast<size_t>(k)];
    r["p_vector"] = pvj;
    r["euler_identity"] = true;  // p_vector would have thrown otherwise
    PogorelovCheck pc = is_pogorelov(P);
    r["flag"] = pc.flag.flag;
    r["pogorelov"] = pc.pogorelov;
    if (pc.flag.is_simplex) r["witness"] = json{{"type", "simplex"}};
    else if (pc.flag.three_belt) r["witness"] = json{{"type", "3-belt"}, {"belt", belt_json(*pc.flag.three_belt)}};
    else if (pc.four_belt) r["witness"] = json{{"type", "4-belt"}, {"belt", belt_json(*pc.four_belt)}};
    return r;
}

void render_check(const json& r, std::ostream& out) {
    out << "m = " << r["m"] << "\n";
    out << "p-vector:";
    for (const auto& [k, v] : r["p_vector"].items()) out << " p" << k << "=" << v;
    out << "\nflag: " << (r["flag"].get<bool>() ? "yes" : "no");
    out << "\npogorelov: " << (r["pogorelov"].get<bool>() ? "yes" : "no") << "\n";
    if (r.contains("witness")) {
        out << "witness: " << r["witness"]["type"].get<std::string>();
        if (r["witness"].contains("belt")) out << " " << r["witness"]["belt"].dump();
        out << "\n";
    }
}

json betti_payload(const Input& in, int max_m) {
    if (in.polytope) {
        ManifoldReport rep = manifold_checks(dual_complex(*in.polytope), max_m);
        json r = betti_to_json(rep.table);
        r["checks"] = json{{"connected", rep.connected_ok},
                           {"two_connected", rep.two_connected_ok},
                           {"duality", rep.duality_ok},
                           {"euler", rep.euler_ok},
                           {"manifold_dim", rep.manifold_dim},
                           {"euler_characteristic", rep.table.euler_characteristic()}};
        return r;
    }
    json r = betti_to_json(betti_numbers(*in.complex, max_m));
    r["checks"] = json::object();
    return r;
}

void render_betti(const json& r, std::ostream& out) {
    out << "betti numbers (nonzero):\n";
    for (const auto& [k, v] : r["betti"].items()) out << "  b_" << k << " = " << v << "\n";
    if (!r["torsion"].empty()) {
        out << "torsion:\n";
        for (const auto& [k, v] : r["torsion"].items()) out << "  H^" << k << " += " << v.dump() << "\n";
    }
    if (!r["checks"].empty()) {
        const auto& c = r["checks"];
        out << "manifold dim " << c["manifold_dim"] << ", connected " << c["connected"] << ", 2-connected "
            << c["two_connected"] << ", duality " << c["duality"] << ", chi=0 " << c["euler"] << "\n";
    }
}

json massey_payload(const Input& in, bool all_configs, const std::string& verify_path, int& exit_code) {
    const SimplePolytope3& P = require_polytope(in);
    PogorelovCheck pc = is_pogorelov(P);
    if (!pc.pogorelov) {
        std::string why = pc.flag.is_simplex ? "the simplex is not a flag polytope"
                          : pc.flag.three_belt
                              ? "3-belt " + pc.flag.three_belt->render()
                              : pc.four_belt ? "4-belt " + pc.four_belt->render() : "not a flag polytope";
        throw PreconditionError("not a Pogorelov polytope: " + why);
    }
    if (!verify_path.empty()) {
        VerifyReport rep = verify_certificate(P, read_json_file(verify_path));
        json checks = json::array();
        for (const auto& [name, ok] : rep.checks) checks.push_back(json{{"check", name}, {"ok", ok}});
        if (!rep.all_ok()) exit_code = 1;
        return json{{"verify", checks}, {"ok", rep.all_ok()}};
    }
    if (all_configs) {
        json certs = json::array();
        for (const auto& config : find_all_configurations(P)) {
            MasseyCertificate cert = certify_with(P, config);
            certs.push_back(json{{"start_facet", config.facet(1)},
                                 {"l", config.l},
                                 {"n", config.n},
                                 {"roles", std::vector<int>(config.role_to_facet.begin() + 1,
                                                            config.role_to_facet.end())},
                                 {"product_degree", cert.result.degree},
                                 {"verdict", cert.nontrivial ? "nontrivial" : "trivial"}});
        }
        return json{{"configurations", certs.size()}, {"certificates", certs}};
    }
    MasseyCertificate cert = certify(P);
    cert.polytope_name = SimplePolytope3::by_name(in.source) ? in.source : "";
    cert.input_digest = digest(in.raw);
    return certificate_to_json(cert);
}

void render_massey(const json& r, std::ostream& out) {
    if (r.contains("verify")) {
        for (const auto& c : r["verify"])
            out << (c["ok"].get<bool>() ? "  ok  " : " FAIL ") << c["check"].get<std::string>() << "\n";
        out << (r["ok"].get<bool>() ? "certificate verifies\n" : "certificate REJECTED\n");
        return;
    }
    if (r.contains("configurations")) {
        out << r["configurations"] << " configurations, all certified:\n";
        for (const auto& c : r["certificates"])
            out << "  F1=" << c["start_facet"] << " l=" << c["l"] << " n=" << c["n"] << " degree "
                << c["product_degree"] << " " << c["verdict"].get<std::string>() << "\n";
        return;
    }
    out << "Massey product certificate (" << r["verdict"].get<std::string>() << ")\n";
    out << "  J1=" << r["J1"].dump() << " J2=" << r["J2"].dump() << " J3=" << r["J3"].dump() << "\n";
    out << "  degrees: alpha " << r["classes"]["alpha"]["degree"] << ", beta " << r["classes"]["beta"]["degree"]
        << ", gamma " << r["classes"]["gamma"]["degree"] << ", product " << r["representative"]["degree"] << "\n";
    out << "  representative: " << r["representative"]["element"].get<std::string>() << "\n";
    out << "  strand group: Z, class coords " << r["representative"]["class_coords"].dump() << "\n";
    out << "  pruned indeterminacy generators: " << r["indeterminacy"]["pruned"].size() << "\n";
}

json obstructions_payload(const Input& in) {
    SimplicialComplex K = in.polytope ? dual_complex(*in.polytope) : *in.complex;
    json hits = json::array();
    for (const auto& h : obstruction_scan(K))
        hits.push_back(json{{"vertices", vlist(h.vertices)}, {"graph", h.graph_id}});
    return json{{"hits", hits}, {"count", hits.size()}};
}

void render_obstructions(const json& r, std::ostream& out) {
    out << r["count"] << " obstruction subgraph(s)\n";
    for (const auto& h : r["hits"])
        out << "  vertices " << h["vertices"].dump() << " ~ graph " << h["graph"] << "\n";
}

json hochster_payload(const Input& in, const std::vector<int>& J, int q) {
    SimplicialComplex K = in.polytope ? dual_complex(*in.polytope) : *in.complex;
    HochsterComponent comp = hochster_component(K, vset(J), q);
    json gens = json::array();
    for (const auto& g : comp.generators) gens.push_back(g.render());
    return json{{"J", vlist(comp.J)},
                {"q", comp.q},
                {"group", group_to_json(comp.group)},
                {"embedding_degree", comp.embedding_degree()},
                {"generators", gens}};
}

void render_hochster(const json& r, std::ostream& out) {
    AbelianGroup g = group_from_json(r["group"]);
    out << "H~^" << r["q"] << "(K_" << r["J"].dump() << ") = " << g.render() << "  in degree "
        << r["embedding_degree"] << " of H*(Z_K)\n";
    for (const auto& gen : r["generators"]) out << "  generator: " << gen.get<std::string>() << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"moment-angle manifold cohomology and Massey product toolkit"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    bool as_json = false;
    int max_m = kDefaultBettiGuard;
    app.add_flag("--json", as_json, "emit the JSON report instead of text");
    app.add_option("--max-m", max_m, "guard for 2^m subset enumeration");

    std::string input, complex_path, verify_path, output_path;
    bool all_configs = false;
    std::vector<int> jset;
    int q = 0;

    auto* c_check = app.add_subcommand("check", "flag/Pogorelov predicates and p-vector");
    c_check->add_option("input", input, "builtin polytope name or JSON file")->required();

    auto* c_betti = app.add_subcommand("betti", "Betti numbers of Z_K with manifold checks");
    c_betti->add_option("input", input, "builtin name or JSON file");
    c_betti->add_option("--complex", complex_path, "simplicial complex JSON file");

    auto* c_massey = app.add_subcommand("massey", "construct or verify a Massey certificate");
    c_massey->add_option("input", input, "builtin polytope name or JSON file")->required();
    c_massey->add_flag("--all-configs", all_configs, "certify every (pentagon, vertex) start");
    c_massey->add_option("--verify", verify_path, "re-check an existing certificate JSON");
    c_massey->add_option("--output", output_path, "write the certificate JSON to a file");

    auto* c_obs = app.add_subcommand("obstructions", "scan 6-subsets for the obstruction graphs");
    c_obs->add_option("input", input, "builtin name or JSON file")->required();

    auto* c_hoch = app.add_subcommand("hochster", "one component H~^q(K_J) of H*(Z_K)");
    c_hoch->add_option("input", input, "builtin name or JSON file")->required();
    c_hoch->add_option("--J", jset, "vertex subset, e.g. --J 5,6,7")->required()->delimiter(',');
    c_hoch->add_option("--q", q, "reduced cohomology degree")->required();

    // Let --json / --max-m appear after the subcommand as well.
    for (auto* sub : {c_check, c_betti, c_massey, c_obs, c_hoch}) sub->fallthrough();

    try {
        std::vector<const char*> argv;
        argv.push_back("zk");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << kToolVersion << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    auto started = std::chrono::steady_clock::now();
    int exit_code = 0;
    json payload;
    std::string command;
    Input in;

    try {
        if (c_check->parsed()) {
            command = "check";
            in = resolve_input(input, false);
            payload = check_payload(require_polytope(in));
        } else if (c_betti->parsed()) {
            command = "betti";
            if (input.empty() && complex_path.empty())
                throw ValidationError("betti needs an input (positional or --complex)");
            in = complex_path.empty() ? resolve_input(input, false) : resolve_input(complex_path, true);
            payload = betti_payload(in, max_m);
        } else if (c_massey->parsed()) {
            command = "massey";
            in = resolve_input(input, false);
            payload = massey_payload(in, all_configs, verify_path, exit_code);
            if (!output_path.empty()) {
                std::ofstream f(output_path);
                if (!f) throw ValidationError("cannot write file: " + output_path);
                f << payload.dump(2) << "\n";
            }
        } else if (c_obs->parsed()) {
            command = "obstructions";
            in = resolve_input(input, false);
            payload = obstructions_payload(in);
        } else if (c_hoch->parsed()) {
            command = "hochster";
            in = resolve_input(input, false);
            payload = hochster_payload(in, jset, q);
        }
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);

    json report{{"command", command},
                {"input", json{{"source", in.source}, {"digest", digest(in.raw)}}},
                {"tool_version", kToolVersion},
                {"elapsed_ms", elapsed.count()},
                {"result", payload}};

    if (as_json) {
        out << report.dump(2) << "\n";
    } else {
        if (command == "check") render_check(payload, out);
        else if (command == "betti") render_betti(payload, out);
        else if (command == "massey") render_massey(payload, out);
        else if (command == "obstructions") render_obstructions(payload, out);
        else if (command == "hochster") render_hochster(payload, out);
    }
    return exit_code;
}

}  // namespace zk
