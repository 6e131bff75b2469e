#include "zk/json_io.hpp"

#include <algorithm>

namespace zk {

namespace {

std::vector<std::vector<int>> int_lists(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_array())
        throw ValidationError(std::string("missing or non-array field \"") + field + "\"");
    std::vector<std::vector<int>> out;
    for (const auto& row : j[field]) {
        if (!row.is_array()) throw ValidationError(std::string("entries of \"") + field + "\" must be arrays");
        std::vector<int> r;
        for (const auto& v : row) {
            if (!v.is_number_integer()) throw ValidationError(std::string("non-integer entry in \"") + field + "\"");
            r.push_back(v.get<int>());
        }
        out.push_back(std::move(r));
    }
    return out;
}

int int_field(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number_integer())
        throw ValidationError(std::string("missing or non-integer field \"") + field + "\"");
    return j[field].get<int>();
}

}  // namespace

SimplicialComplex complex_from_json(const json& j) {
    return SimplicialComplex::build(int_lists(j, "maximal_simplices"), int_field(j, "m"));
}

json complex_to_json(const SimplicialComplex& K) {
    json j;
    j["m"] = K.vertex_count();
    if (K.ground() != vrange(K.vertex_count())) j["vertices"] = vlist(K.ground());
    json maximal = json::array();
    // Maximal simplices: those with no proper coface.
    for (int d = K.dim(); d >= 0; --d)
        for (VSet s : K.simplices_of_dim(d)) {
            bool covered = false;
            VSet candidates = K.ground() & ~s;
            while (candidates && !covered) {
                u64 low = candidates & (~candidates + 1);
                candidates ^= low;
                if (K.contains(s | low)) covered = true;
            }
            if (!covered) maximal.push_back(vlist(s));
        }
    j["maximal_simplices"] = maximal;
    return j;
}

SimplePolytope3 polytope_from_json(const json& j) {
    auto cycles = int_lists(j, "facet_cycles");
    int m = int_field(j, "m");
    if (static_cast<int>(cycles.size()) != m)
        throw ValidationError("\"m\" disagrees with the number of facet cycles");
    return SimplePolytope3::from_cycles(std::move(cycles));
}

json polytope_to_json(const SimplePolytope3& P) {
    json j;
    j["m"] = P.facet_count();
    j["facet_cycles"] = P.cycles();
    return j;
}

std::string digest(const json& j) {
    std::string s = j.dump();
    u64 h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json group_to_json(const AbelianGroup& g) {
    return json{{"free_rank", g.free_rank}, {"torsion", g.torsion}};
}

AbelianGroup group_from_json(const json& j) {
    AbelianGroup g;
    g.free_rank = j.at("free_rank").get<i64>();
    for (const auto& d : j.at("torsion")) g.torsion.push_back(d.get<i64>());
    return g;
}

json betti_to_json(const BettiTable& t) {
    json betti = json::object(), torsion = json::object();
    for (const auto& [k, b] : t.betti) betti[std::to_string(k)] = b;
    for (const auto& [k, d] : t.torsion) torsion[std::to_string(k)] = d;
    return json{{"betti", betti}, {"torsion", torsion}};
}

namespace {

json class_to_json(const CohomologyClass& c) {
    return json{{"representative", c.representative.render()},
                {"support", vlist(c.mdeg.support)},
                {"degree", c.degree}};
}

json generators_to_json(const std::vector<IndetGenerator>& gens) {
    json out = json::array();
    for (const auto& g : gens)
        out.push_back(json{{"representative", g.rep.render()},
                           {"side", g.side == 1 ? "alpha" : "gamma"},
                           {"support", vlist(g.mdeg.support)},
                           {"degree", g.mdeg.total_degree()}});
    return out;
}

}  // namespace

json certificate_to_json(const MasseyCertificate& cert) {
    json j;
    j["schema"] = kCertificateSchema;
    j["tool_version"] = kToolVersion;
    j["polytope"] = json{{"m", cert.m}, {"digest", cert.input_digest}};
    if (!cert.polytope_name.empty()) j["polytope"]["name"] = cert.polytope_name;
    j["configuration"] = json{{"l", cert.config.l},
                              {"n", cert.config.n},
                              {"roles", std::vector<int>(cert.config.role_to_facet.begin() + 1,
                                                         cert.config.role_to_facet.end())},
                              {"belt", cert.config.belt.facets}};
    j["J1"] = vlist(cert.config.J1());
    j["J2"] = vlist(cert.config.J2());
    j["J3"] = vlist(cert.config.J3());
    j["classes"] = json{{"alpha", class_to_json(cert.classes.alpha)},
                        {"beta", class_to_json(cert.classes.beta)},
                        {"gamma", class_to_json(cert.classes.gamma)}};
    j["lifts"] = json{{"a12", cert.result.a12.render()}, {"a23", cert.result.a23.render()}};
    j["representative"] = json{{"element", cert.result.b.render()},
                               {"degree", cert.result.degree},
                               {"support", vlist(cert.result.b_mdeg.support)},
                               {"strand_group", group_to_json(cert.strand_group)},
                               {"class_coords", cert.representative_coords}};
    j["indeterminacy"] = json{{"pruned", generators_to_json(cert.result.indeterminacy)},
                              {"unpruned", generators_to_json(cert.unpruned_indeterminacy)}};
    j["verdict"] = cert.nontrivial ? "nontrivial" : "trivial";
    return j;
}

MasseyCertificate certificate_from_json(const json& j, const SimplePolytope3& P) {
    if (!j.contains("schema") || j["schema"] != kCertificateSchema)
        throw ValidationError("unsupported certificate schema");
    MasseyCertificate cert;
    cert.m = j.at("polytope").at("m").get<int>();
    cert.input_digest = j.at("polytope").value("digest", "");
    if (j.at("polytope").contains("name")) cert.polytope_name = j["polytope"]["name"].get<std::string>();
    cert.complex = std::make_shared<const SimplicialComplex>(dual_complex(P));
    const SimplicialComplex& K = *cert.complex;

    const json& cj = j.at("configuration");
    cert.config.l = cj.at("l").get<int>();
    cert.config.n = cj.at("n").get<int>();
    cert.config.role_to_facet.assign(1, 0);
    for (const auto& f : cj.at("roles")) cert.config.role_to_facet.push_back(f.get<int>());
    if (static_cast<int>(cert.config.role_to_facet.size()) != cert.config.l + cert.config.n)
        throw ValidationError("certificate roles list has wrong length");
    cert.config.belt.facets.clear();
    for (const auto& f : cj.at("belt")) cert.config.belt.facets.push_back(f.get<int>());

    auto parse_class = [&](const json& c) {
        RElement rep = RElement::parse(K, c.at("representative").get<std::string>());
        if (rep.is_zero()) throw ValidationError("certificate class representative is zero");
        return CohomologyClass::from_cocycle(rep);
    };
    cert.classes.alpha = parse_class(j.at("classes").at("alpha"));
    cert.classes.beta = parse_class(j.at("classes").at("beta"));
    cert.classes.gamma = parse_class(j.at("classes").at("gamma"));

    cert.result.defined = true;
    cert.result.pruned = true;
    cert.result.a12 = RElement::parse(K, j.at("lifts").at("a12").get<std::string>());
    cert.result.a23 = RElement::parse(K, j.at("lifts").at("a23").get<std::string>());
    cert.result.b = RElement::parse(K, j.at("representative").at("element").get<std::string>());
    cert.result.degree = j.at("representative").at("degree").get<int>();
    VSet support = vset(j.at("representative").at("support").get<std::vector<int>>());
    cert.result.b_mdeg = Multidegree{2 * vcard(support) - cert.result.degree, support};
    cert.strand_group = group_from_json(j.at("representative").at("strand_group"));
    for (const auto& c : j.at("representative").at("class_coords"))
        cert.representative_coords.push_back(c.get<i64>());

    auto parse_gens = [&](const json& arr) {
        std::vector<IndetGenerator> out;
        for (const auto& g : arr) {
            IndetGenerator gen;
            gen.rep = RElement::parse(K, g.at("representative").get<std::string>());
            gen.side = g.at("side") == "alpha" ? 1 : 3;
            VSet s = vset(g.at("support").get<std::vector<int>>());
            gen.mdeg = Multidegree{2 * vcard(s) - g.at("degree").get<int>(), s};
            out.push_back(std::move(gen));
        }
        return out;
    };
    cert.result.indeterminacy = parse_gens(j.at("indeterminacy").at("pruned"));
    cert.unpruned_indeterminacy = parse_gens(j.at("indeterminacy").at("unpruned"));
    cert.nontrivial = j.at("verdict") == "nontrivial";
    return cert;
}

bool VerifyReport::all_ok() const {
    for (const auto& [name, ok] : checks)
        if (!ok) return false;
    return true;
}

VerifyReport verify_certificate(const SimplePolytope3& P, const json& cert_json) {
    VerifyReport report;
    auto check = [&](const std::string& name, bool ok) { report.checks.emplace_back(name, ok); };

    MasseyCertificate cert = certificate_from_json(cert_json, P);
    const SimplicialComplex& K = *cert.complex;

    check("polytope-facet-count", cert.m == P.facet_count());
    std::string want_digest = digest(polytope_to_json(P));
    check("polytope-digest", cert.input_digest.empty() || cert.input_digest == want_digest);

    bool config_ok = true;
    PipelineClasses rebuilt;
    try {
        Configuration probe = configuration_from(
            P, cert.config.facet(1),
            [&] {
                std::array<int, 3> v{cert.config.facet(1), cert.config.facet(2), cert.config.facet(3)};
                std::sort(v.begin(), v.end());
                return v;
            }());
        config_ok = probe.role_to_facet == cert.config.role_to_facet && probe.l == cert.config.l &&
                    probe.n == cert.config.n && probe.belt == cert.config.belt;
        rebuilt = build_classes(K, cert.config);
    } catch (const std::exception&) {
        config_ok = false;
    }
    check("configuration", config_ok);
    if (!config_ok) return report;

    const CohomologyClass &a1 = cert.classes.alpha, &a2 = cert.classes.beta, &a3 = cert.classes.gamma;
    check("classes-match-construction", a1.representative == rebuilt.alpha.representative &&
                                            a2.representative == rebuilt.beta.representative &&
                                            a3.representative == rebuilt.gamma.representative);
    check("degrees", a1.degree == 4 && a2.degree == cert.config.n - 2 && a3.degree == 3 &&
                         cert.result.degree == cert.config.n + 4);
    check("lift-a12", differential(cert.result.a12) == multiply(a1.representative, a2.representative));
    check("lift-a23", differential(cert.result.a23) == multiply(a2.representative, a3.representative));
    RElement expect_b = multiply(a1.representative, cert.result.a23).scaled(a1.degree % 2 == 0 ? -1 : 1) +
                        multiply(cert.result.a12, a3.representative);
    check("representative-formula", cert.result.b == expect_b);
    check("representative-cocycle", differential(cert.result.b).is_zero());

    Strand strand(K, cert.result.b_mdeg.support);
    int poly = vcard(cert.result.b_mdeg.support) - cert.result.b_mdeg.p;
    CohomologyPiece piece = strand.cohomology(poly);
    check("strand-group", piece.group() == cert.strand_group && cert.strand_group == AbelianGroup{1, {}});
    std::vector<i64> coords = piece.class_coords(strand.coords(cert.result.b, poly));
    check("representative-generator",
          coords == cert.representative_coords && coords.size() == 1 && (coords[0] == 1 || coords[0] == -1));

    // Recompute the pruned generators and require an exact match.
    MasseyResult recomputed = restrict_indeterminacy_by_multidegree(triple_massey(a1, a2, a3));
    auto rendered = [](const std::vector<IndetGenerator>& gens) {
        std::vector<std::string> out;
        for (const auto& g : gens) out.push_back(g.rep.render());
        std::sort(out.begin(), out.end());
        return out;
    };
    check("indeterminacy-generators", rendered(recomputed.indeterminacy) == rendered(cert.result.indeterminacy));

    std::vector<RElement> gens;
    for (const auto& g : cert.result.indeterminacy) gens.push_back(g.rep);
    bool trivial = strand_class_in_span(K, cert.result.b_mdeg, gens, cert.result.b);
    check("nontrivial", !trivial && cert.nontrivial);
    return report;
}

std::optional<SimplicialComplex> builtin_complex(const std::string& name) {
    if (name == "pentagon")
        return SimplicialComplex::build({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}}, 5);
    if (name == "two-points") return SimplicialComplex::build({{1}, {2}}, 2);
    if (name == "icosahedron") return dual_complex(SimplePolytope3::dodecahedron());
    for (const auto& g : obstruction_graphs())
        if (name == "figure1-g" + std::to_string(g.id)) {
            std::vector<std::vector<int>> edges;
            for (auto [a, b] : g.edges) edges.push_back({a, b});
            return SimplicialComplex::build(edges, 6);
        }
    return std::nullopt;
}

std::vector<std::string> builtin_complex_names() {
    return {"pentagon", "two-points", "icosahedron", "figure1-g1", "figure1-g2",
            "figure1-g3", "figure1-g4", "figure1-g5"};
}

}  // namespace zk
