// cohprod: calculator and verifier for loop-space decompositions of simply
// connected co-H spaces at the level of graded homology dimensions.

#include "coh/field.hpp"
#include "coh/free_algebra.hpp"
#include "coh/identities.hpp"
#include "coh/io.hpp"
#include "coh/lie.hpp"
#include "coh/peel.hpp"
#include "coh/telescope.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <filesystem>
#include <iostream>

namespace {

constexpr int kExitVerdictFailure = 1;
constexpr int kExitBadInput = 2;

struct RunConfig {
    int trunc_degree = 32;
    std::string field_spec = "101";
    std::string out_dir = "reports";

    coh::Field field() const { return coh::Field::parse(field_spec); }
    void validate() const {
        if (trunc_degree < 4) throw coh::precondition_error("truncation degree must be >= 4");
        field();  // validates primality
    }
    std::string canonical() const {
        return "D=" + std::to_string(trunc_degree) + ";field=" + field_spec;
    }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw coh::precondition_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string out_path(const RunConfig& cfg, const std::string& subcommand,
                     const std::string& inputs) {
    return (std::filesystem::path(cfg.out_dir) /
            coh::report_filename(subcommand, cfg.canonical() + "\n" + inputs))
        .string();
}

const std::vector<std::string> kAllIdentities = {"half_smash_wedge", "loop_suspension",
                                                 "loop_join", "product_cells",
                                                 "join_complement", "lie"};

int cmd_verify(const RunConfig& cfg, const std::string& g_path, const std::string& h_path,
               std::vector<std::string> identities) {
    coh::SpaceModel g = coh::load_space(g_path, cfg.trunc_degree);
    coh::SpaceModel h = coh::load_space(h_path, cfg.trunc_degree);
    if (identities.empty()) identities = kAllIdentities;

    const std::string inputs = slurp(g_path) + "\n" + slurp(h_path);
    bool all_equal = true;
    for (const std::string& id : identities) {
        coh::Json report;
        bool equal;
        if (id == "lie") {
            auto r = coh::check_kernel_identity(coh::loop_generators(g), coh::loop_generators(h));
            report = coh::kernel_report_to_json(r);
            equal = r.equal;
        } else {
            coh::IdentityReport r;
            if (id == "half_smash_wedge")
                r = coh::verify_half_smash_wedge(g, h);
            else if (id == "loop_suspension")
                r = coh::verify_loop_suspension(g);
            else if (id == "loop_join")
                r = coh::verify_loop_join(g, h);
            else if (id == "product_cells")
                r = coh::verify_product_cells(g, h);
            else if (id == "join_complement")
                r = coh::verify_join_complement(g, h);
            else
                throw coh::precondition_error("unknown identity: " + id);
            report = coh::identity_report_to_json(r, cfg.trunc_degree);
            equal = r.equal;
        }
        std::string path = out_path(cfg, "verify_" + id, inputs);
        coh::write_json_file(path, report);
        std::cout << id << ": " << (equal ? "equal" : "UNEQUAL") << "  (" << path << ")\n";
        all_equal = all_equal && equal;
    }
    return all_equal ? 0 : kExitVerdictFailure;
}

int cmd_peel(const RunConfig& cfg, const std::string& g_path, const std::string& h_path, int k) {
    coh::SpaceModel g = coh::load_space(g_path, cfg.trunc_degree);
    coh::SpaceModel h = coh::load_space(h_path, cfg.trunc_degree);
    if (k < 1) throw coh::precondition_error("k must be >= 1");

    coh::Json trace;
    trace["trunc_degree"] = cfg.trunc_degree;
    trace["G"] = g.label();
    trace["H"] = h.label();
    coh::Json steps = coh::Json::array();

    coh::PeelState state = coh::init_peel(g, h);
    steps.push_back(coh::peel_state_to_json(state));
    bool ok = state.conservation_ok;
    while (state.k < k) {
        coh::PeelState next = coh::peel_step(state);
        if (next.k == state.k) break;
        state = std::move(next);
        steps.push_back(coh::peel_state_to_json(state));
        ok = ok && state.conservation_ok;
    }
    trace["steps"] = std::move(steps);
    trace["verdict"] = ok ? "pass" : "fail";

    std::string inputs = slurp(g_path) + "\n" + slurp(h_path) + "\nk=" + std::to_string(k);
    std::string path = out_path(cfg, "peel", inputs);
    coh::write_json_file(path, trace);
    std::cout << "peel to k=" << state.k << ": " << (ok ? "conservation pass" : "conservation FAIL")
              << "  (" << path << ")\n";
    return ok ? 0 : kExitVerdictFailure;
}

int cmd_oracle(const RunConfig& cfg, const std::string& g_path, const std::string& h_path,
               int cap) {
    coh::SpaceModel g = coh::load_space(g_path, cfg.trunc_degree);
    coh::SpaceModel h = coh::load_space(h_path, cfg.trunc_degree);
    if (cap > cfg.trunc_degree) throw coh::precondition_error("cap must be <= truncation degree");

    coh::PbwReport r = coh::check_pbw_surjectivity(g, h, cap, cfg.field());
    std::string inputs = slurp(g_path) + "\n" + slurp(h_path) + "\ncap=" + std::to_string(cap);
    std::string path = out_path(cfg, "oracle", inputs);
    coh::write_json_file(path, coh::pbw_report_to_json(r, cfg.field()));
    for (const auto& row : r.rows)
        std::cout << "degree " << row.degree << ": dim=" << row.dim << " count=" << row.count
                  << " rank=" << row.rank << " " << (row.pass ? "pass" : "FAIL") << "\n";
    std::cout << "oracle: " << (r.pass ? "pass" : "FAIL") << "  (" << path << ")\n";
    return r.pass ? 0 : kExitVerdictFailure;
}

int cmd_telescope_split(const RunConfig& cfg, const std::string& e_path) {
    coh::GradedEndo e = coh::load_endo(e_path, cfg.field());
    coh::TelescopeSplitReport r = coh::verify_telescope_splitting(e);
    std::string path = out_path(cfg, "telescope_split", slurp(e_path));
    coh::write_json_file(path, coh::split_report_to_json(r));
    std::cout << "telescope splitting: " << (r.pass ? "pass" : "FAIL") << "  (" << path << ")\n";
    return r.pass ? 0 : kExitVerdictFailure;
}

int cmd_telescope_swap(const RunConfig& cfg, const std::string& f1_path,
                       const std::string& f2_path) {
    coh::GradedEndo f1 = coh::load_endo(f1_path, cfg.field());
    coh::GradedEndo f2 = coh::load_endo(f2_path, cfg.field());
    coh::TelescopeSwapReport r = coh::verify_telescope_swap(f1, f2);
    std::string path = out_path(cfg, "telescope_swap", slurp(f1_path) + "\n" + slurp(f2_path));
    coh::write_json_file(path, coh::swap_report_to_json(r));
    std::cout << "telescope swap: " << (r.equal ? "equal" : "UNEQUAL") << "  (" << path << ")\n";
    return r.equal ? 0 : kExitVerdictFailure;
}

int cmd_telescope_circle(const RunConfig& cfg, const std::string& x_path,
                         const std::string& y_path, int cap) {
    coh::SpaceModel x = coh::load_space(x_path, cfg.trunc_degree);
    coh::SpaceModel y = coh::load_space(y_path, cfg.trunc_degree);
    coh::CircleTelescopeReport r = coh::circle_via_telescope(x, y, cap, cfg.field());
    std::string inputs = slurp(x_path) + "\n" + slurp(y_path) + "\ncap=" + std::to_string(cap);
    std::string path = out_path(cfg, "telescope_circle", inputs);
    coh::write_json_file(path, coh::circle_report_to_json(r));
    std::cout << "telescope circle product: " << (r.pass ? "pass" : "FAIL") << "  (" << path
              << ")\n";
    return r.pass ? 0 : kExitVerdictFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graded-homology calculator for circle products of co-H spaces"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("-d,--degree", cfg.trunc_degree, "truncation degree D (default 32)")
        ->envname("COHPROD_DEGREE");
    app.add_option("-f,--field", cfg.field_spec, "coefficient field: a prime p or Q (default 101)")
        ->envname("COHPROD_FIELD");
    app.add_option("-o,--out", cfg.out_dir, "report output directory (default reports)")
        ->envname("COHPROD_OUT");

    std::string g_path, h_path;
    std::vector<std::string> identities;
    auto* verify = app.add_subcommand("verify", "check the decomposition identities for G, H");
    verify->add_option("G", g_path, "space document for G")->required();
    verify->add_option("H", h_path, "space document for H")->required();
    verify->add_option("identities", identities,
                       "subset of: half_smash_wedge loop_suspension loop_join product_cells "
                       "join_complement lie");

    int peel_k = 4;
    auto* peel = app.add_subcommand("peel", "peel the loop space of G v H to length threshold k");
    peel->add_option("G", g_path, "space document for G")->required();
    peel->add_option("H", h_path, "space document for H")->required();
    peel->add_option("-k,--k", peel_k, "target length threshold (default 4)");

    int oracle_cap = 8;
    auto* oracle = app.add_subcommand(
        "oracle", "brute-force tensor-algebra check of the kernel factorization");
    oracle->add_option("G", g_path, "space document for G")->required();
    oracle->add_option("H", h_path, "space document for H")->required();
    oracle->add_option("-c,--cap", oracle_cap, "degree cap (default 8)");

    auto* telescope = app.add_subcommand("telescope", "graded self-map telescope checks");
    telescope->require_subcommand(1);
    std::string e_path, f1_path, f2_path, x_path, y_path;
    auto* split = telescope->add_subcommand(
        "split", "splitting checks for a quasi-idempotent with unit -1");
    split->add_option("E", e_path, "graded endomorphism document")->required();
    auto* swap = telescope->add_subcommand("swap", "telescope dims of f1 f2 vs f2 f1");
    swap->add_option("F1", f1_path, "graded endomorphism document")->required();
    swap->add_option("F2", f2_path, "graded endomorphism document")->required();
    int circle_cap = 8;
    auto* circ = telescope->add_subcommand(
        "circle", "realize the circle product of two suspensions as a telescope");
    circ->add_option("X", x_path, "space document for X (a suspension)")->required();
    circ->add_option("Y", y_path, "space document for Y (a suspension)")->required();
    circ->add_option("-c,--cap", circle_cap, "degree cap (default 8)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitBadInput;
    }

    try {
        cfg.validate();
        if (*verify) return cmd_verify(cfg, g_path, h_path, identities);
        if (*peel) return cmd_peel(cfg, g_path, h_path, peel_k);
        if (*oracle) return cmd_oracle(cfg, g_path, h_path, oracle_cap);
        if (*split) return cmd_telescope_split(cfg, e_path);
        if (*swap) return cmd_telescope_swap(cfg, f1_path, f2_path);
        if (*circ) return cmd_telescope_circle(cfg, x_path, y_path, circle_cap);
    } catch (const coh::precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: bad JSON input: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
