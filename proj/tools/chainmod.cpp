// chainmod — boundary/mass/p-mass calculus, boundary-mass repair with
// certificates, grid total-variation checks, and an exact flat-norm oracle
// on small complexes. Exit codes: 0 success/pass, 1 negative result,
// 2 usage or parse error, 3 violated internal invariant.

#include <CLI11.hpp>
#include <json.hpp>

#include "chainmod/flatnorm.hpp"
#include "chainmod/gen.hpp"
#include "chainmod/json_io.hpp"
#include "chainmod/lp.hpp"
#include "chainmod/repair.hpp"
#include "chainmod/rng.hpp"

#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace chainmod;
using Json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct RunConfig {
    std::string chain_name;   // empty = the document's only chain
    std::string in_path;
    std::string out_path;
    std::string cert_path;
    Coeff p = 0;
    std::optional<Coeff> bound;
    std::uint64_t seed = 0;
    bool force = false;
    bool json_report = false;
};

Json value_to_json(const std::optional<Rational>& exact, double approx) {
    Json v;
    v["float"] = approx;
    if (exact) v["exact"] = rational_to_string(*exact);
    return v;
}

void emit(std::ostream& out, const Json& report) { out << report.dump(2) << "\n"; }

std::vector<int> parse_dims(const std::string& text) {
    std::vector<int> dims;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ','))
        dims.push_back(std::stoi(item));
    return dims;
}

Point parse_point(const std::string& text) {
    Point p;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ','))
        p.push_back(parse_rational(item));
    return p;
}

int cmd_select(const RunConfig& cfg, std::ostream& out) {
    ChainDocument doc = load_chain_document(cfg.in_path);
    const IntegerChain& t = select_chain(doc, cfg.chain_name);
    IntegerChain selected = select_representative(t, cfg.p);
    ChainDocument result{doc.complex, {{"selected", selected}}};
    std::string text = serialize_chain_document(result);
    if (cfg.out_path.empty())
        out << text;
    else
        write_file(cfg.out_path, text);
    return kExitPass;
}

int cmd_pmass(const RunConfig& cfg, std::ostream& out) {
    ChainDocument doc = load_chain_document(cfg.in_path);
    const IntegerChain& t = select_chain(doc, cfg.chain_name);
    Json report;
    report["version"] = kSchemaVersion;
    report["kind"] = "pmass-report";
    report["p"] = cfg.p;
    report["degree"] = t.degree();
    std::optional<Rational> exact;
    if (t.degree() == 0)
        exact = Rational(pmass0(t, cfg.p));
    else if (t.complex()->all_lengths_rational())
        exact = pmass_exact(t, cfg.p);
    report["pmass"] = value_to_json(exact, pmass(t, cfg.p));
    emit(out, report);
    return kExitPass;
}

int cmd_equiv(const RunConfig& cfg, const std::string& path_a,
              const std::string& path_b, std::ostream& out) {
    ChainDocument doc_a = load_chain_document(path_a);
    ChainDocument doc_b = load_chain_document(path_b);
    const IntegerChain& a = select_chain(doc_a, cfg.chain_name);
    const IntegerChain& b = select_chain(doc_b, cfg.chain_name);
    EquivResult result = equiv_mod_p(a, b, cfg.p);
    Json report;
    report["version"] = kSchemaVersion;
    report["kind"] = "congruence-certificate";
    report["p"] = cfg.p;
    report["equivalent"] = result.equivalent;
    if (result.equivalent) {
        report["quotient"] = chain_to_json(result.certificate->quotient);
        report["checked"] = result.certificate->checked;
    }
    emit(out, report);
    return result.equivalent ? kExitPass : kExitNegative;
}

int cmd_repair(const RunConfig& cfg, std::ostream& out) {
    ChainDocument doc = load_chain_document(cfg.in_path);
    const IntegerChain& t = select_chain(doc, cfg.chain_name);
    RepairResult result = repair(t, cfg.p);

    if (!cfg.out_path.empty()) {
        ChainDocument repaired{doc.complex, {{"repaired", result.repaired}}};
        write_file(cfg.out_path, serialize_chain_document(repaired));
    }
    if (!cfg.cert_path.empty())
        write_file(cfg.cert_path,
                   serialize_certificate_document(result.certificate, cfg.p));

    Json report;
    report["version"] = kSchemaVersion;
    report["kind"] = "repair-report";
    report["p"] = cfg.p;
    report["iterations"] = result.certificate.trace.size();
    report["boundary_mass"] = mass0(boundary(result.repaired));
    report["pmass_boundary"] = pmass0(boundary(t), cfg.p);
    emit(out, report);
    return kExitPass;
}

int cmd_verify(const RunConfig& cfg, const std::string& path_a,
               const std::string& path_b, const std::string& cert_path,
               const std::string& chain_out_name, std::ostream& out) {
    ChainDocument doc_a = load_chain_document(path_a);
    ChainDocument doc_b = load_chain_document(path_b);
    const IntegerChain& input = select_chain(doc_a, cfg.chain_name);
    IntegerChain output = select_chain(doc_b, chain_out_name);
    if (!same_complex(doc_a.complex, doc_b.complex))
        throw ComplexMismatch("the two documents carry different complexes");
    output = lift_chain(output, doc_a.complex);

    CertificateDocument parsed = load_certificate_document(cert_path, doc_a.complex);
    Coeff p = cfg.p != 0 ? cfg.p : parsed.p;
    if (parsed.p != p)
        throw Error("certificate p differs from --p");
    RepairCertificate cert;
    cert.input = input;
    cert.output = output;
    cert.quotient = parsed.quotient;
    cert.trace = parsed.trace;

    RepairReport result = verify_repair(input, output, cert, p);
    Json report;
    report["version"] = kSchemaVersion;
    report["kind"] = "verify-report";
    report["p"] = p;
    Json checks = Json::array();
    for (const auto& item : result.checks) {
        Json entry;
        entry["name"] = item.name;
        entry["pass"] = item.pass;
        entry["detail"] = item.detail;
        checks.push_back(std::move(entry));
    }
    report["checks"] = std::move(checks);
    report["all_pass"] = result.all_pass;
    emit(out, report);
    return result.all_pass ? kExitPass : kExitNegative;
}

int cmd_flatnorm(const RunConfig& cfg, std::ostream& out) {
    ChainDocument doc = load_chain_document(cfg.in_path);
    const IntegerChain& t = select_chain(doc, cfg.chain_name);
    Coeff bound = cfg.bound ? *cfg.bound : default_bound(t, cfg.p);
    FlatNormDecomposition d =
        cfg.p == 0 ? flat_norm(t, bound, cfg.force)
                   : flat_norm_mod_p(t, cfg.p, bound, cfg.force);
    Json report;
    report["version"] = kSchemaVersion;
    report["kind"] = "flatnorm-report";
    report["p"] = d.p;
    report["bound"] = d.bound_used;
    report["bound_saturated"] = d.bound_saturated;
    report["value"] = value_to_json(d.exact_value, d.value);
    report["r"] = chain_to_json(d.r);
    report["s"] = chain_to_json(d.s);
    if (d.p != 0) report["q"] = chain_to_json(d.q);
    emit(out, report);
    return kExitPass;
}

Json select_bound_to_json(const SelectBoundReport& r) {
    Json entry;
    entry["lhs"] = rational_to_string(r.lhs);
    entry["rhs"] = rational_to_string(r.rhs);
    entry["pmass_boundary"] = rational_to_string(r.pmass_boundary);
    entry["ratio"] = r.ratio;
    entry["mass_ratio"] = r.mass_ratio;
    entry["pass"] = r.pass;
    return entry;
}

int cmd_grid_check(const RunConfig& cfg, const std::string& dims_text,
                   std::ostream& out) {
    GridChain grid = load_grid_document(cfg.in_path);
    if (!dims_text.empty() && parse_dims(dims_text) != grid.dims)
        throw Error("--dims disagrees with the theta document");
    SelectBoundReport result = check_select_bound(grid, cfg.p);
    Json report;
    report["version"] = kSchemaVersion;
    report["kind"] = "grid-report";
    report["p"] = cfg.p;
    report.update(select_bound_to_json(result));
    emit(out, report);
    return result.pass ? kExitPass : kExitNegative;
}

int cmd_grid_random(const RunConfig& cfg, const std::string& dims_text,
                    Coeff range, int count, std::ostream& out) {
    std::vector<int> dims = parse_dims(dims_text);
    SplitMix64 rng(cfg.seed);
    Json instances = Json::array();
    bool all_pass = true;
    double max_mass_ratio = 0.0;
    for (int i = 0; i < count; ++i) {
        GridChain grid = gen_random_grid(dims, range, rng.next());
        SelectBoundReport result = check_select_bound(grid, cfg.p);
        all_pass &= result.pass;
        max_mass_ratio = std::max(max_mass_ratio, result.mass_ratio);
        instances.push_back(select_bound_to_json(result));
    }
    Json report;
    report["version"] = kSchemaVersion;
    report["kind"] = "grid-random-report";
    report["p"] = cfg.p;
    report["dims"] = dims;
    report["range"] = range;
    report["seed"] = cfg.seed;
    report["count"] = count;
    report["max_mass_ratio"] = max_mass_ratio;
    report["all_pass"] = all_pass;
    report["instances"] = std::move(instances);
    emit(out, report);
    return all_pass ? kExitPass : kExitNegative;
}

int cmd_cone(const RunConfig& cfg, const std::string& apex_text,
             std::ostream& out) {
    ChainDocument doc = load_chain_document(cfg.in_path);
    const IntegerChain& r = select_chain(doc, cfg.chain_name);
    ConeResult result = cone(r, parse_point(apex_text));
    ChainDocument extended{result.complex,
                           {{"C", result.cone_chain},
                            {"R", lift_chain(r, result.complex)}}};
    std::string text = serialize_chain_document(extended);
    if (cfg.out_path.empty())
        out << text;
    else
        write_file(cfg.out_path, text);
    Json report;
    report["version"] = kSchemaVersion;
    report["kind"] = "cone-report";
    report["apex_vertex"] = result.apex_vertex;
    emit(out, report);
    return kExitPass;
}

int cmd_zerosum(const RunConfig& cfg, std::ostream& out) {
    ChainDocument doc = load_chain_document(cfg.in_path);
    const IntegerChain& r = select_chain(doc, cfg.chain_name);
    bool pass = zero_sum_check(r, cfg.p);
    Coeff sum = 0;
    for (const auto& [v, theta] : r.coeffs()) sum += theta;
    Json report;
    report["version"] = kSchemaVersion;
    report["kind"] = "zerosum-report";
    report["p"] = cfg.p;
    report["sum"] = sum;
    report["residue"] = positive_residue(sum, cfg.p);
    report["pass"] = pass;
    emit(out, report);
    return pass ? kExitPass : kExitNegative;
}

void write_fixture(const ChainFixture& fixture, const std::string& path,
                   std::ostream& out) {
    ChainDocument doc{fixture.complex, {{"T", fixture.chain}}};
    std::string text = serialize_chain_document(doc);
    if (path.empty())
        out << text;
    else
        write_file(path, text);
}

int run_args(const std::vector<std::string>& args, std::ostream& out);

int cmd_manifest(const std::string& path, std::ostream& out) {
    Json doc;
    try {
        doc = Json::parse(read_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("manifest: ") + e.what(), 0, 0);
    }
    if (!doc.is_object() || !doc.contains("version") || !doc.contains("runs") ||
        doc.size() != 2 || doc["version"] != kSchemaVersion ||
        !doc["runs"].is_array())
        throw ParseError("manifest must be {\"version\": 1, \"runs\": [...]}", 0, 0);

    Json results = Json::array();
    bool all_zero = true;
    for (const auto& run : doc["runs"]) {
        if (!run.is_object() || !run.contains("args") || !run["args"].is_array())
            throw ParseError("each run must be {\"args\": [...]}", 0, 0);
        std::vector<std::string> args;
        for (const auto& a : run["args"]) args.push_back(a.get<std::string>());
        std::ostringstream capture;
        int code = run_args(args, capture);
        all_zero &= code == 0;
        Json entry;
        entry["args"] = run["args"];
        entry["exit"] = code;
        entry["output"] = capture.str();
        results.push_back(std::move(entry));
    }
    Json report;
    report["version"] = kSchemaVersion;
    report["kind"] = "manifest-report";
    report["results"] = std::move(results);
    emit(out, report);
    return all_zero ? kExitPass : kExitNegative;
}

int run_args(const std::vector<std::string>& args, std::ostream& out) {
    CLI::App app{"integral polyhedral chains modulo p"};
    app.require_subcommand(0, 1);

    RunConfig cfg;
    app.fallthrough();
    std::string manifest_path;
    app.add_option("--manifest", manifest_path, "run a batch of configs");
    app.add_flag("--json", cfg.json_report,
                 "machine-readable reports (the default; flag kept for scripts)");

    auto add_p = [&](CLI::App* cmd, bool required = true) {
        auto* opt = cmd->add_option("--p", cfg.p, "modulus (≥ 2)");
        if (required) opt->required();
    };
    auto add_in = [&](CLI::App* cmd) {
        cmd->add_option("--in", cfg.in_path, "input chain document")->required();
        cmd->add_option("--chain", cfg.chain_name, "chain name within the document");
    };

    auto* select_cmd = app.add_subcommand("select", "select representative mod p");
    add_p(select_cmd);
    add_in(select_cmd);
    select_cmd->add_option("--out", cfg.out_path, "output document");

    auto* pmass_cmd = app.add_subcommand("pmass", "mass of the class mod p");
    add_p(pmass_cmd);
    add_in(pmass_cmd);

    auto* equiv_cmd = app.add_subcommand("equiv", "congruence test with certificate");
    add_p(equiv_cmd);
    std::vector<std::string> equiv_paths;
    equiv_cmd->add_option("paths", equiv_paths, "two chain documents")
        ->expected(2)
        ->required();
    equiv_cmd->add_option("--chain", cfg.chain_name, "chain name in both documents");

    auto* repair_cmd = app.add_subcommand("repair", "boundary-mass repair");
    add_p(repair_cmd);
    add_in(repair_cmd);
    repair_cmd->add_option("--out", cfg.out_path, "repaired chain document");
    repair_cmd->add_option("--cert", cfg.cert_path, "certificate document");

    auto* verify_cmd = app.add_subcommand("verify", "re-check a repair certificate");
    add_p(verify_cmd, /*required=*/false);
    std::vector<std::string> verify_paths;
    verify_cmd->add_option("paths", verify_paths, "input, output, certificate")
        ->expected(3)
        ->required();
    verify_cmd->add_option("--chain-in", cfg.chain_name, "chain name in the input document");
    std::string chain_out_name;
    verify_cmd->add_option("--chain-out", chain_out_name, "chain name in the output document");

    auto* flat_cmd = app.add_subcommand("flatnorm", "exact bounded flat-norm oracle");
    flat_cmd->add_option("--p", cfg.p, "modulus (omit for the classical norm)");
    add_in(flat_cmd);
    Coeff bound_value = 0;
    auto* bound_opt = flat_cmd->add_option("--bound", bound_value, "coefficient bound B");
    flat_cmd->add_flag("--force", cfg.force, "override the instance-size guardrail");

    auto* gcheck_cmd = app.add_subcommand("grid-check", "select-representative jump bound on one grid");
    add_p(gcheck_cmd);
    gcheck_cmd->add_option("--theta", cfg.in_path, "grid document")->required();
    std::string dims_text;
    gcheck_cmd->add_option("--dims", dims_text, "expected shape, e.g. 4,4");

    auto* grand_cmd = app.add_subcommand("grid-random", "randomized jump-bound sweep");
    add_p(grand_cmd);
    grand_cmd->add_option("--dims", dims_text, "grid shape, e.g. 4,4")->required();
    Coeff range = 0;
    grand_cmd->add_option("--range", range, "θ uniform in [−range, range]")->required();
    grand_cmd->add_option("--seed", cfg.seed, "PRNG seed")->required();
    int count = 1;
    grand_cmd->add_option("--count", count, "number of instances");

    auto* cone_cmd = app.add_subcommand("cone", "cone over a 0-chain");
    add_in(cone_cmd);
    std::string apex_text;
    cone_cmd->add_option("--apex", apex_text, "apex coordinates, e.g. 1,2 or 1/2,3")
        ->required();
    cone_cmd->add_option("--out", cfg.out_path, "extended document");

    auto* zsum_cmd = app.add_subcommand("zerosum", "coefficient-sum test mod p");
    add_p(zsum_cmd);
    add_in(zsum_cmd);

    auto* gen_cmd = app.add_subcommand("gen", "reproducible fixtures");
    gen_cmd->require_subcommand(1);
    auto* bundle_cmd = gen_cmd->add_subcommand("parallel-bundle", "k parallel unit edges");
    int k = 2;
    bundle_cmd->add_option("--k", k, "number of parallel edges")->required();
    bundle_cmd->add_option("--out", cfg.out_path, "output fixture");
    auto* pathg_cmd = gen_cmd->add_subcommand("path-graph", "unit path of k edges");
    pathg_cmd->add_option("--k", k, "number of edges")->required();
    pathg_cmd->add_option("--out", cfg.out_path, "output fixture");
    auto* rchain_cmd = gen_cmd->add_subcommand("random-1chain", "seeded random 1-chain");
    RandomChainParams chain_params;
    rchain_cmd->add_option("--seed", cfg.seed, "PRNG seed")->required();
    rchain_cmd->add_option("--vertices", chain_params.vertices, "vertex count");
    rchain_cmd->add_option("--edges", chain_params.edges, "edge count");
    Coeff coeff_range = 50;
    rchain_cmd->add_option("--coeff-range", coeff_range, "coefficients in ±range");
    rchain_cmd->add_flag("--rational", chain_params.rational_lengths,
                         "place vertices on a rational line");
    rchain_cmd->add_option("--out", cfg.out_path, "output fixture");
    auto* rgrid_cmd = gen_cmd->add_subcommand("random-grid", "seeded random grid");
    rgrid_cmd->add_option("--dims", dims_text, "grid shape")->required();
    rgrid_cmd->add_option("--range", range, "θ uniform in [−range, range]")->required();
    rgrid_cmd->add_option("--seed", cfg.seed, "PRNG seed")->required();
    rgrid_cmd->add_option("--out", cfg.out_path, "output fixture");

    std::vector<const char*> argv;
    argv.push_back("chainmod");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        out << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (!manifest_path.empty()) return cmd_manifest(manifest_path, out);
        if (select_cmd->parsed()) return cmd_select(cfg, out);
        if (pmass_cmd->parsed()) return cmd_pmass(cfg, out);
        if (equiv_cmd->parsed())
            return cmd_equiv(cfg, equiv_paths[0], equiv_paths[1], out);
        if (repair_cmd->parsed()) return cmd_repair(cfg, out);
        if (verify_cmd->parsed())
            return cmd_verify(cfg, verify_paths[0], verify_paths[1],
                              verify_paths[2], chain_out_name, out);
        if (flat_cmd->parsed()) {
            if (bound_opt->count() > 0) cfg.bound = bound_value;
            return cmd_flatnorm(cfg, out);
        }
        if (gcheck_cmd->parsed()) return cmd_grid_check(cfg, dims_text, out);
        if (grand_cmd->parsed())
            return cmd_grid_random(cfg, dims_text, range, count, out);
        if (cone_cmd->parsed()) return cmd_cone(cfg, apex_text, out);
        if (zsum_cmd->parsed()) return cmd_zerosum(cfg, out);
        if (gen_cmd->parsed()) {
            if (bundle_cmd->parsed())
                write_fixture(gen_parallel_bundle(k), cfg.out_path, out);
            else if (pathg_cmd->parsed())
                write_fixture(gen_path_graph(k), cfg.out_path, out);
            else if (rchain_cmd->parsed()) {
                chain_params.coeff_lo = -coeff_range;
                chain_params.coeff_hi = coeff_range;
                write_fixture(gen_random_1chain(chain_params, cfg.seed),
                              cfg.out_path, out);
            } else if (rgrid_cmd->parsed()) {
                GridChain grid = gen_random_grid(parse_dims(dims_text), range, cfg.seed);
                std::string text = serialize_grid_document(grid);
                if (cfg.out_path.empty())
                    out << text;
                else
                    write_file(cfg.out_path, text);
            }
            return kExitPass;
        }
        out << app.help();
        return kExitUsage;
    } catch (const ParseError& e) {
        out << "parse error";
        if (e.line > 0) out << " at line " << e.line << ", column " << e.column;
        out << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const InternalError& e) {
        out << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const Error& e) {
        out << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        out << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

} // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run_args(args, std::cout);
}
