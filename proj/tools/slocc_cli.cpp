// Command-line front end: SLOCC overlaps and tables, witness checks, PPT
// bounds, and the GHZ/W threshold table.
//
// Exit codes: 0 success (or verdict "witness"), 1 witness violated,
// 2 bad state id, 3 dimension mismatch, 4 trivial witness, 5 budget
// exceeded.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <omp.h>
#include <string>

#include "slocc/ghzw.hpp"
#include "slocc/hierarchy.hpp"
#include "slocc/overlap.hpp"
#include "slocc/sdp.hpp"
#include "slocc/witness.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitBadStateId = 2;
constexpr int kExitDimMismatch = 3;
constexpr int kExitTrivial = 4;
constexpr int kExitBudget = 5;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("SLOCC_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            std::cerr << "warning: ignoring unparseable SLOCC_SEED\n";
        }
    }
    return 0;
}

void write_or_print(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text << '\n';
        return;
    }
    std::ofstream out(path);
    out << text;
    if (!out) throw std::runtime_error("cannot write " + path);
}

std::string fraction_label(double value) {
    // pretty fractions for the stdout rendering of tables
    static const std::pair<double, const char*> table[] = {
        {1.0 / 2, "1/2"}, {9.0 / 16, "9/16"}, {2.0 / 3, "2/3"},  {7.0 / 10, "7/10"},
        {3.0 / 4, "3/4"}, {4.0 / 5, "4/5"},   {5.0 / 6, "5/6"},  {7.0 / 8, "7/8"},
        {9.0 / 10, "9/10"}, {19.0 / 20, "19/20"},
    };
    for (const auto& [v, label] : table)
        if (std::abs(value - v) < 1e-9) return label;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    return buf;
}

void print_pretty_table(const slocc::OverlapTable& table) {
    const int n = static_cast<int>(table.ids.size());
    std::printf("%-8s", "orb\\tgt");
    for (int i = 0; i < n; ++i) std::printf(" %8s", table.ids[i].str().c_str());
    std::printf("\n");
    for (int j = 0; j < n; ++j) {
        std::printf("%-8s", table.ids[j].str().c_str());
        for (int i = 0; i < n; ++i) {
            if (i == j)
                std::printf(" %8s", "-");
            else if (table.at(j, i).saturated)
                std::printf(" %8s", "1*");
            else
                std::printf(" %8s", fraction_label(table.at(j, i).lambda).c_str());
        }
        std::printf("\n");
    }
}

int run(int argc, char** argv) {
    CLI::App app{"SLOCC class overlaps, witnesses and PPT relaxation bounds"};
    app.require_subcommand(1);

    slocc::OptimizerConfig cfg;
    cfg.seed = default_seed();
    int jobs = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--restarts", cfg.restarts, "optimizer restarts");
        cmd->add_option("--max-sweeps", cfg.maxSweeps, "sweep cap per restart");
        cmd->add_option("--seed", cfg.seed, "PRNG seed (env SLOCC_SEED)");
        cmd->add_option("--tol", cfg.convergenceTol, "relative convergence tolerance");
        cmd->add_option("--saturation-threshold", cfg.saturationThreshold,
                        "lambda treated as saturated");
        cmd->add_option("--jobs,-j", jobs, "parallel threads (0 = all cores)");
    };

    // overlap
    auto* cmdOverlap = app.add_subcommand("overlap", "max squared overlap target vs orbit");
    std::string targetId, orbitId, jsonPath;
    cmdOverlap->add_option("--target", targetId, "target state id")->required();
    cmdOverlap->add_option("--orbit", orbitId, "orbit representative id")->required();
    cmdOverlap->add_option("--json", jsonPath, "write the result to a file");
    add_common(cmdOverlap);

    // table233
    auto* cmdTable = app.add_subcommand("table233", "overlap table over psi6..psi17");
    std::string idsCsv, csvPath, tableJsonPath;
    bool noDiag = false;
    cmdTable->add_option("--ids", idsCsv, "comma-separated subset of ids");
    cmdTable->add_option("--csv", csvPath, "write CSV here");
    cmdTable->add_option("--json", tableJsonPath, "write JSON here");
    cmdTable->add_flag("--no-diagnostics", noDiag, "omit per-restart data from JSON");
    add_common(cmdTable);

    // hierarchy
    auto* cmdHier = app.add_subcommand("hierarchy", "derive the class inclusion DOT graph");
    std::string tablePath, dotPath;
    bool reduce = false;
    cmdHier->add_option("--table", tablePath, "table file (CSV or JSON)")->required();
    cmdHier->add_option("--dot", dotPath, "write DOT here (default stdout)");
    cmdHier->add_flag("--reduce", reduce, "transitive reduction");

    // witness-check
    auto* cmdWit = app.add_subcommand("witness-check", "projector witness verdict");
    double lambda = 0.0;
    std::string phiId, witOrbitId, witJsonPath;
    cmdWit->add_option("--lambda", lambda, "witness lambda")->required();
    cmdWit->add_option("--phi", phiId, "projector state id")->required();
    cmdWit->add_option("--orbit", witOrbitId, "orbit id the witness targets")->required();
    cmdWit->add_option("--json", witJsonPath, "write the verdict to a file");
    add_common(cmdWit);

    // sdp-bound
    auto* cmdSdp = app.add_subcommand("sdp-bound", "certified PPT upper bound on the overlap");
    std::string sdpPhi, sdpPsi, sdpJsonPath;
    double bisectTol = 1e-3;
    int dimBudget = 128;
    bool sdpVerbose = false;
    cmdSdp->add_option("--phi", sdpPhi, "target state id")->required();
    cmdSdp->add_option("--psi", sdpPsi, "orbit representative id")->required();
    cmdSdp->add_option("--bisect-tol", bisectTol, "bisection tolerance");
    cmdSdp->add_option("--budget", dimBudget, "dimension budget for the solver");
    cmdSdp->add_option("--seed", cfg.seed, "PRNG seed");
    cmdSdp->add_option("--json", sdpJsonPath, "write the result to a file");
    cmdSdp->add_flag("--verbose", sdpVerbose, "log bisection progress");

    // ghzw
    auto* cmdGhzw = app.add_subcommand("ghzw", "GHZ/W critical overlap: analytic vs numeric");
    int nParties = 3, trials = 64;
    cmdGhzw->add_option("--n", nParties, "qubit count")->required();
    cmdGhzw->add_option("--trials", trials, "multistart trials for the supremum");
    cmdGhzw->add_option("--seed", cfg.seed, "PRNG seed");
    cmdGhzw->add_option("--jobs,-j", jobs, "parallel threads");

    CLI11_PARSE(app, argc, argv);
    if (jobs > 0) omp_set_num_threads(jobs);

    if (cmdOverlap->parsed()) {
        slocc::StateId target = slocc::parse_state_id(targetId);
        slocc::StateId orbit = slocc::parse_state_id(orbitId);
        slocc::OverlapResult res = slocc::maximize_slocc_overlap(
            slocc::representative(target), slocc::representative(orbit), cfg, jobs);
        nlohmann::json j;
        j["schemaVersion"] = 1;
        j["kind"] = "overlap";
        j["target"] = target.str();
        j["orbit"] = orbit.str();
        j["self"] = (target.str() == orbit.str());
        j["lambda"] = res.lambda;
        j["saturated"] = res.saturated;
        j["restarts"] = cfg.restarts;
        j["seed"] = cfg.seed;
        j["sweepsUsed"] = res.sweepsUsed;
        write_or_print(j.dump(2), jsonPath);
        return kExitOk;
    }

    if (cmdTable->parsed()) {
        std::vector<slocc::StateId> ids;
        if (idsCsv.empty()) {
            for (int k = 6; k <= 17; ++k) ids.push_back(slocc::StateId::psi(k));
        } else {
            std::istringstream is(idsCsv);
            std::string piece;
            while (std::getline(is, piece, ',')) ids.push_back(slocc::parse_state_id(piece));
        }
        slocc::OverlapTable table = slocc::overlap_table(ids, cfg, jobs);
        print_pretty_table(table);
        if (!csvPath.empty()) write_or_print(slocc::table_to_csv(table), csvPath);
        if (!tableJsonPath.empty())
            write_or_print(slocc::table_to_json(table, !noDiag), tableJsonPath);
        return kExitOk;
    }

    if (cmdHier->parsed()) {
        slocc::HierarchyGraph g = slocc::hierarchy_from_file(tablePath);
        if (reduce) g = transitive_reduction(g);
        write_or_print(slocc::hierarchy_to_dot(g), dotPath);
        return kExitOk;
    }

    if (cmdWit->parsed()) {
        slocc::StateId phi = slocc::parse_state_id(phiId);
        slocc::StateId orbit = slocc::parse_state_id(witOrbitId);
        slocc::SloccWitness w =
            slocc::build_witness(lambda, slocc::representative(phi), orbit);
        slocc::WitnessVerdict verdict = slocc::verify_slocc_witness(w, cfg);
        write_or_print(slocc::witness_to_json(w, verdict), witJsonPath);
        switch (verdict.kind) {
            case slocc::WitnessVerdict::Kind::Witness: return kExitOk;
            case slocc::WitnessVerdict::Kind::Violated: return kExitViolated;
            case slocc::WitnessVerdict::Kind::Trivial: return kExitTrivial;
        }
    }

    if (cmdSdp->parsed()) {
        slocc::StateId phi = slocc::parse_state_id(sdpPhi);
        slocc::StateId psi = slocc::parse_state_id(sdpPsi);
        slocc::PptBoundOptions opts;
        opts.bisectTol = bisectTol;
        opts.solver.dimBudget = dimBudget;
        opts.seed = cfg.seed;
        opts.verbose = sdpVerbose;
        const double bound = slocc::ppt_bound_lambda(slocc::representative(phi),
                                                     slocc::representative(psi), bisectTol, opts);
        nlohmann::json j;
        j["schemaVersion"] = 1;
        j["kind"] = "sdp-bound";
        j["phi"] = phi.str();
        j["psi"] = psi.str();
        j["bisectTol"] = bisectTol;
        j["bound"] = bound;
        write_or_print(j.dump(2), sdpJsonPath);
        return kExitOk;
    }

    if (cmdGhzw->parsed()) {
        const double analytic = slocc::lambda_critical(nParties);
        const double numeric = slocc::numeric_sup_check(nParties, trials, cfg.seed);
        slocc::OptimizerConfig oc = cfg;
        oc.restarts = std::max(cfg.restarts, 64);
        slocc::OverlapResult opt = slocc::maximize_slocc_overlap(
            slocc::representative(slocc::StateId::ghz(nParties)),
            slocc::representative(slocc::StateId::w(nParties)), oc, jobs);
        nlohmann::json j;
        j["schemaVersion"] = 1;
        j["kind"] = "ghzw";
        j["n"] = nParties;
        j["analyticCritical"] = analytic;
        j["numericSup"] = numeric;
        j["optimizerLambda"] = opt.lambda;
        std::cout << j.dump(2) << '\n';
        return kExitOk;
    }

    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const slocc::StateIdError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadStateId;
    } catch (const slocc::BudgetError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const slocc::ShapeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDimMismatch;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 10;
    }
}
