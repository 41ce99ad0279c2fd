// projconn: command-line front end.
//
// Exit codes: 0 success, 1 invalid input or budget refusal, 2 a certificate failed its own verification.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "projconn/io.hpp"
#include "projconn/projconn.hpp"

namespace {

using namespace projconn;
using io::Json;

struct CliConfig {
    std::string field = "q=2";
    unsigned long long budget = kDefaultBudget;
    std::string format = "text";
    unsigned long long seed = 20240601ULL;
    std::string predicate = "projective";
};

struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

LinearCode read_code(const std::string& arg, const CliConfig& cfg) {
    namespace fs = std::filesystem;
    if (arg.size() > 5 && arg.ends_with(".json") && fs::exists(arg)) {
        std::ifstream in(arg);
        Json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorKind::Parse, arg + ": " + e.what());
        }
        return io::code_from_json(j);
    }
    return LinearCode::from_generator(io::parse_matrix(io::parse_field(cfg.field), arg));
}

void emit(const Json& j, const std::string& text, const CliConfig& cfg) {
    if (cfg.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

std::string points_text(const FieldCtx& f, const std::vector<ProjPoint>& pts) {
    std::string s;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        s += i ? " " : "";
        s += "<";
        for (std::size_t c = 0; c < pts[i].dim(); ++c) s += (c ? "," : "") + io::format_element(f, pts[i].rep()[c]);
        s += ">";
    }
    return s;
}

int cmd_check(const std::string& code_arg, const CliConfig& cfg) {
    const LinearCode c = read_code(code_arg, cfg);
    Json j;
    j["n"] = c.n();
    j["k"] = c.k();
    j["q"] = c.ctx().q();
    j["gen"] = io::format_matrix(c.gen());
    j["nondegenerate"] = c.is_nondegenerate();
    j["projective"] = c.is_projective();
    j["mds"] = c.is_projective() ? Json(c.is_mds_arc()) : Json(nullptr);
    std::ostringstream text;
    text << "code [" << c.n() << "," << c.k() << "]_" << c.ctx().q() << "  gen " << io::format_matrix(c.gen()) << "\n"
         << "nondegenerate: " << std::boolalpha << c.is_nondegenerate() << "\n"
         << "projective:    " << c.is_projective() << "\n"
         << "mds:           " << (c.is_projective() ? (c.is_mds_arc() ? "true" : "false") : "n/a") << "\n";
    if (c.is_nondegenerate()) {
        const auto sys = c.projective_system();
        Json pts = Json::array();
        for (const auto& p : sys.points) pts.push_back(io::vector_json(p.rep()));
        j["projective_system"] = std::move(pts);
        text << "points:        " << points_text(c.ctx(), sys.points) << "\n";
    } else {
        j["projective_system"] = nullptr;
    }
    emit(j, text.str(), cfg);
    return 0;
}

int cmd_path(const std::string& a, const std::string& b, const CliConfig& cfg, bool mds) {
    const LinearCode from = read_code(a, cfg);
    const LinearCode to = read_code(b, cfg);
    const auto pred = mds ? PathPredicate::Mds : PathPredicate::Projective;
    for (const LinearCode* c : {&from, &to}) {
        if (!c->is_projective()) throw Error(ErrorKind::NotProjective, "input code is not projective");
        if (mds && !c->is_mds_arc()) throw Error(ErrorKind::InvalidArgument, "input code is not MDS");
    }
    const PathCertificate cert = mds ? mds_chain(from, to) : connect(from, to);
    if (const auto v = verify_certificate(cert, pred, &from, &to); !v)
        throw VerificationFailure("certificate failed verification: " + v.reason);
    std::cout << io::certificate_json(cert).dump(2) << "\n";
    return 0;
}

int cmd_class(const std::string& code_arg, const CliConfig& cfg) {
    const LinearCode c = read_code(code_arg, cfg);
    if (!c.is_projective()) throw Error(ErrorKind::NotProjective, "class analysis needs a projective code");
    const SpecialSet x = SpecialSet::of_tuple(FunctionalTuple::of_code(c));
    const auto members = class_enumerate(x, cfg.budget);
    const unsigned long long aut = automorphism_group_order(c, cfg.budget);
    const unsigned long long total = monomial_group_order(c.n(), c.ctx().q());
    const bool pass = members.size() * aut == total;
    Json j;
    j["n"] = c.n();
    j["k"] = c.k();
    j["q"] = c.ctx().q();
    j["class_size"] = members.size();
    j["aut_order"] = aut;
    j["monomial_group_order"] = total;
    j["formula_check"] = pass ? "pass" : "fail";
    j["point_set"] = io::special_set_json(x);
    std::ostringstream text;
    text << "class size:            " << members.size() << "\n"
         << "automorphism order:    " << aut << "\n"
         << "(q-1)^n n!:            " << total << "\n"
         << "class_size * aut_order == (q-1)^n n!: " << (pass ? "pass" : "fail") << "\n";
    emit(j, text.str(), cfg);
    return pass ? 0 : 2;
}

int cmd_verify(std::size_t n, std::size_t k, const CliConfig& cfg, std::size_t path_samples, const std::string& csv) {
    const auto pred = parse_predicate(cfg.predicate);
    if (!pred) throw Error(ErrorKind::InvalidArgument, "unknown predicate '" + cfg.predicate + "'");
    const GrassmannParams params{io::parse_field(cfg.field), n, k};
    const Subgraph g = Subgraph::build(params, *pred, cfg.budget);
    const SubgraphReport r = report(g);
    Json j = io::report_json(r);

    std::size_t checked = 0, valid = 0;
    if (path_samples > 0 && g.size() > 0 && (*pred == CodePredicate::Projective || *pred == CodePredicate::Mds)) {
        std::mt19937_64 rng(cfg.seed);
        std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
        for (std::size_t s = 0; s < path_samples; ++s) {
            const std::size_t u = pick(rng), v = pick(rng);
            const LinearCode& a = g.vertices()[u];
            const LinearCode& b = g.vertices()[v];
            const PathCertificate cert = connect(a, b);
            ++checked;
            if (verify_certificate(cert, PathPredicate::Projective, &a, &b)) ++valid;
        }
        j["paths_checked"] = checked;
        j["paths_valid"] = valid;
    }
    if (!csv.empty()) {
        std::ofstream out(csv);
        write_distance_csv(out, g);
    }

    std::ostringstream text;
    text << "(n,k,q) = (" << n << "," << k << "," << params.ctx.q() << "), predicate " << to_string(*pred) << "\n"
         << "vertices:            " << r.vertex_count << "\n"
         << "components:          " << r.component_count << "\n"
         << "diameter within:     " << r.diameter_within << "\n"
         << "grassmann diameter:  " << r.grassmann_diameter << "\n"
         << "detour pairs:        " << r.detour_pairs << " of " << r.pair_count << "\n";
    if (checked) text << "certified paths:     " << valid << "/" << checked << "\n";
    emit(j, text.str(), cfg);
    return checked == valid ? 0 : 2;
}

int cmd_distance(const std::string& a, const std::string& b, const CliConfig& cfg, const std::string& within) {
    const LinearCode x = read_code(a, cfg);
    const LinearCode y = read_code(b, cfg);
    const std::size_t formula = distance(x.space(), y.space());
    Json j;
    j["grassmann"] = formula;
    std::ostringstream text;
    text << "grassmann distance: " << formula << "\n";
    if (!within.empty()) {
        const auto pred = parse_predicate(within);
        if (!pred) throw Error(ErrorKind::InvalidArgument, "unknown predicate '" + within + "'");
        if (!satisfies(x, *pred) || !satisfies(y, *pred))
            throw Error(ErrorKind::InvalidArgument, std::string("input does not satisfy predicate ") + to_string(*pred));
        std::optional<std::size_t> d;
        if (x == y)
            d = 0;
        else
            d = distance_within(x, y, *pred, cfg.budget);
        j["predicate"] = to_string(*pred);
        j["within"] = d ? Json(*d) : Json(nullptr);
        text << "within " << to_string(*pred) << ": " << (d ? std::to_string(*d) : "unreachable") << "\n";
    }
    emit(j, text.str(), cfg);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified paths of projective codes in the Grassmann graph"};
    app.require_subcommand(1);
    app.fallthrough();
    CliConfig cfg;
    app.add_option("--field", cfg.field, "field spec, e.g. q=3 or q=4:1,1,1")->capture_default_str();
    app.add_option("--budget", cfg.budget, "enumeration budget")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    app.add_option("--seed", cfg.seed, "seed for sampled checks")->capture_default_str();

    std::string code_a, code_b, within, csv;
    std::size_t n = 0, k = 0, samples = 0;

    auto* check = app.add_subcommand("check", "predicates and projective system of a code");
    check->add_option("code", code_a, "generator matrix text or .json file")->required();

    auto* path = app.add_subcommand("path", "certified path between two codes (JSON)");
    path->add_option("from", code_a)->required();
    path->add_option("to", code_b)->required();
    path->add_option("--predicate", cfg.predicate)->check(CLI::IsMember({"projective", "mds"}))->capture_default_str();

    auto* mds = app.add_subcommand("mds-chain", "certified path of MDS codes (JSON)");
    mds->add_option("from", code_a)->required();
    mds->add_option("to", code_b)->required();

    auto* cls = app.add_subcommand("class", "equivalence class size and automorphism group order");
    cls->add_option("code", code_a)->required();

    auto* verify = app.add_subcommand("verify-connectivity", "exhaustive component census of a code subgraph");
    verify->add_option("n", n)->required();
    verify->add_option("k", k)->required();
    verify->add_option("--predicate", cfg.predicate)
        ->check(CLI::IsMember({"any", "nondegenerate", "projective", "mds"}))
        ->capture_default_str();
    verify->add_option("--paths", samples, "also certify this many seeded random pairs");
    verify->add_option("--csv", csv, "write pairwise distances (<= 500 vertices)");

    auto* dist = app.add_subcommand("distance", "Grassmann distance and optional within-predicate distance");
    dist->add_option("from", code_a)->required();
    dist->add_option("to", code_b)->required();
    dist->add_option("--within", within, "any|nondegenerate|projective|mds");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (check->parsed()) return cmd_check(code_a, cfg);
        if (path->parsed()) return cmd_path(code_a, code_b, cfg, cfg.predicate == "mds");
        if (mds->parsed()) return cmd_path(code_a, code_b, cfg, true);
        if (cls->parsed()) return cmd_class(code_a, cfg);
        if (verify->parsed()) return cmd_verify(n, k, cfg, samples, csv);
        if (dist->parsed()) return cmd_distance(code_a, code_b, cfg, within);
    } catch (const VerificationFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::Internal ? 2 : 1;
    }
    return 1;
}
