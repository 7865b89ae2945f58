#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "dsmix/engine.hpp"
#include "dsmix/factory.hpp"
#include "dsmix/maxsat.hpp"
#include "dsmix/nk.hpp"
#include "dsmix/spinglass.hpp"
#include "dsmix/sweep.hpp"

namespace {

struct ProblemArgs {
    std::string family;
    int ell = 0;
    int k = 0;
    int s = 0;
    std::string instance;
};

void add_problem_options(CLI::App* cmd, ProblemArgs& args) {
    cmd->add_option("--problem", args.family, "trap|ctrap|ftrap|nk|spin|maxsat")->required();
    cmd->add_option("--ell", args.ell, "problem size");
    cmd->add_option("--k", args.k, "trap subfunction size / nk neighbor count");
    cmd->add_option("--s", args.s, "nk step size (generate on the fly with --seed)");
    cmd->add_option("--instance", args.instance, "instance file (nk, spin, maxsat)");
}

std::unique_ptr<dsmix::ProblemInstance> build_problem(const ProblemArgs& args,
                                                      std::uint64_t seed) {
    if (args.family == "nk" && args.instance.empty()) {
        if (args.ell <= 0 || args.s <= 0)
            throw std::invalid_argument("nk without --instance needs --ell, --s (and --k)");
        dsmix::RandomSource rng(seed);
        return std::make_unique<dsmix::NkProblem>(
            dsmix::generate_nk(args.ell, args.k > 0 ? args.k : 4, args.s, rng));
    }
    dsmix::ProblemSpec spec;
    spec.family = args.family;
    spec.ell = args.ell;
    spec.k = args.k;
    spec.instance_path = args.instance;
    return dsmix::make_problem(spec);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"DSMGA-II optimizer: pairwise-linkage model building with "
                 "restricted and back mixing"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "run the optimizer once");
    ProblemArgs solve_problem;
    add_problem_options(solve, solve_problem);
    int solve_pop = 0;
    std::uint64_t solve_seed = 0;
    std::uint64_t solve_max_nfe = 0;
    solve->add_option("--pop", solve_pop, "population size")->required();
    solve->add_option("--seed", solve_seed, "run seed")->required();
    solve->add_option("--max-nfe", solve_max_nfe, "evaluation budget (0 = none)");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "adaptive population sizing");
    ProblemArgs sweep_problem;
    add_problem_options(sweep_cmd, sweep_problem);
    dsmix::SweepConfig scfg;
    scfg.run_budget = 1000000;
    int repeats = 10;
    std::string out_path;
    sweep_cmd->add_option("--hits", scfg.hits, "consecutive successful runs per size");
    sweep_cmd->add_option("--init-pop", scfg.initial_population, "starting population size");
    sweep_cmd->add_option("--init-step", scfg.initial_step, "starting step size");
    sweep_cmd->add_option("--range-frac", scfg.range_fraction, "convergence fraction");
    sweep_cmd->add_option("--budget", scfg.run_budget, "per-run evaluation budget");
    sweep_cmd->add_option("--max-pop", scfg.max_population, "expansion upper bound");
    sweep_cmd->add_option("--seed", scfg.master_seed, "master seed");
    sweep_cmd->add_option("--repeats", repeats, "verification runs at the best size");
    sweep_cmd->add_option("--out", out_path, "CSV output path")->required();

    // gen-nk
    auto* gen_nk = app.add_subcommand("gen-nk", "generate an nk instance file");
    int nk_ell = 0, nk_k = 4, nk_s = 1;
    std::uint64_t nk_seed = 0;
    std::string nk_out;
    gen_nk->add_option("--ell", nk_ell)->required();
    gen_nk->add_option("--k", nk_k)->required();
    gen_nk->add_option("--s", nk_s)->required();
    gen_nk->add_option("--seed", nk_seed)->required();
    gen_nk->add_option("--out", nk_out)->required();

    // gen-spin
    auto* gen_spin = app.add_subcommand("gen-spin", "generate a spin-glass instance file");
    int spin_side = 0;
    std::uint64_t spin_seed = 0;
    std::string spin_out;
    gen_spin->add_option("--side", spin_side)->required();
    gen_spin->add_option("--seed", spin_seed)->required();
    gen_spin->add_option("--out", spin_out)->required();

    // oracle
    auto* oracle = app.add_subcommand("oracle", "print the exact optimum of an instance");
    std::string oracle_family, oracle_instance;
    oracle->add_option("--problem", oracle_family, "nk|spin|maxsat")->required();
    oracle->add_option("--instance", oracle_instance, "instance file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) {
            auto problem = build_problem(solve_problem, solve_seed);
            dsmix::EngineConfig cfg;
            cfg.population_size = solve_pop;
            cfg.seed = solve_seed;
            cfg.max_nfe = solve_max_nfe;
            const dsmix::RunResult rr = dsmix::run(*problem, cfg);
            std::cout << "problem: " << problem->name() << '\n'
                      << "success: " << (rr.success ? "true" : "false") << '\n'
                      << "nfe: " << rr.nfe << '\n'
                      << "best_fitness: " << rr.best_fitness << '\n'
                      << "generations: " << rr.generations << '\n'
                      << "best: " << rr.best.to_string() << '\n';
            return rr.success ? 0 : 2;
        }

        if (sweep_cmd->parsed()) {
            auto problem = build_problem(sweep_problem, scfg.master_seed);
            std::vector<const dsmix::ProblemInstance*> problems{problem.get()};
            dsmix::EngineConfig tmpl;
            auto batch = dsmix::run_batch(problems, scfg, tmpl, repeats);
            std::ofstream out(out_path);
            if (!out)
                throw std::runtime_error("cannot write " + out_path);
            out << dsmix::emit_csv(batch);
            const auto& entry = batch.front();
            if (!entry.sweep.any_success) {
                std::cout << "all sizes failed\n";
                return 2;
            }
            std::cout << "best_pop: " << entry.sweep.best_size << '\n'
                      << "mean_nfe: " << entry.sweep.best_mean_nfe << '\n'
                      << "verify_success_rate: "
                      << static_cast<double>(entry.verify.successes) / entry.verify.runs << '\n';
            return 0;
        }

        if (gen_nk->parsed()) {
            dsmix::RandomSource rng(nk_seed);
            const dsmix::NkInstance inst = dsmix::generate_nk(nk_ell, nk_k, nk_s, rng);
            std::ofstream out(nk_out);
            if (!out)
                throw std::runtime_error("cannot write " + nk_out);
            dsmix::write_nk(out, inst);
            std::cout << "wrote " << nk_out << " (" << inst.subfunction_count()
                      << " subfunctions)\n";
            return 0;
        }

        if (gen_spin->parsed()) {
            dsmix::RandomSource rng(spin_seed);
            const dsmix::SpinGlassInstance inst = dsmix::generate_spinglass(spin_side, rng);
            std::ofstream out(spin_out);
            if (!out)
                throw std::runtime_error("cannot write " + spin_out);
            dsmix::write_spinglass(out, inst);
            std::cout << "wrote " << spin_out << " (" << inst.couplings.size() << " couplings)\n";
            return 0;
        }

        if (oracle->parsed()) {
            std::ifstream in(oracle_instance);
            if (!in)
                throw std::runtime_error("cannot open " + oracle_instance);
            if (oracle_family == "nk") {
                const dsmix::NkInstance inst = dsmix::read_nk(in);
                const dsmix::NkOptimum opt = dsmix::nk_exact_optimum(inst);
                std::cout << "optimum: " << opt.value << '\n'
                          << "argmax: " << opt.argmax.to_string() << '\n';
            } else if (oracle_family == "spin") {
                const dsmix::SpinGlassInstance inst = dsmix::parse_spinglass(in);
                const double best = inst.ground_energy ? -*inst.ground_energy
                                                       : dsmix::spinglass_brute_force_best(inst);
                std::cout << "optimum: " << best << '\n'
                          << "ground_energy: " << -best << '\n';
            } else if (oracle_family == "maxsat") {
                const dsmix::CnfInstance inst = dsmix::parse_dimacs(in);
                std::cout << "optimum: " << inst.clause_count()
                          << " (clause count; exact when satisfiable)\n";
            } else {
                throw std::invalid_argument("oracle: unknown family " + oracle_family);
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
