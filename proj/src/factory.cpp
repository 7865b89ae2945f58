#include "dsmix/factory.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "dsmix/maxsat.hpp"
#include "dsmix/nk.hpp"
#include "dsmix/spinglass.hpp"
#include "dsmix/traps.hpp"

namespace dsmix {

namespace {

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open instance file: " + path);
    return in;
}

std::string stem_of(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

} // namespace

std::unique_ptr<ProblemInstance> make_problem(const ProblemSpec& spec) {
    if (spec.family == "trap") {
        const int k = spec.k > 0 ? spec.k : 5;
        if (spec.ell <= 0 || spec.ell % k != 0)
            throw std::invalid_argument("trap: ell must be a positive multiple of k");
        return std::make_unique<TrapProblem>(spec.ell / k, k);
    }
    if (spec.family == "ctrap") {
        const int k = spec.k > 0 ? spec.k : 5;
        if (spec.ell <= 0 || spec.ell % (k - 1) != 0)
            throw std::invalid_argument("ctrap: ell must be a positive multiple of k-1");
        return std::make_unique<CyclicTrapProblem>(spec.ell / (k - 1), k);
    }
    if (spec.family == "ftrap") {
        if (spec.k != 0 && spec.k != 6)
            throw std::invalid_argument("ftrap: k is fixed at 6");
        if (spec.ell <= 0 || spec.ell % 6 != 0)
            throw std::invalid_argument("ftrap: ell must be a positive multiple of 6");
        return std::make_unique<FoldedTrapProblem>(spec.ell / 6);
    }
    if (spec.family == "nk") {
        if (spec.instance_path.empty())
            throw std::invalid_argument("nk: --instance file required");
        auto in = open_or_throw(spec.instance_path);
        NkInstance inst = read_nk(in);
        if (spec.ell > 0 && spec.ell != inst.length)
            throw std::invalid_argument("nk: --ell does not match the instance file");
        return std::make_unique<NkProblem>(std::move(inst));
    }
    if (spec.family == "spin") {
        if (spec.instance_path.empty())
            throw std::invalid_argument("spin: --instance file required");
        auto in = open_or_throw(spec.instance_path);
        SpinGlassInstance inst = parse_spinglass(in);
        if (spec.ell > 0 && spec.ell != inst.spin_count())
            throw std::invalid_argument("spin: --ell does not match the instance file");
        return std::make_unique<SpinGlassProblem>(std::move(inst),
                                                  "spin_" + stem_of(spec.instance_path));
    }
    if (spec.family == "maxsat") {
        if (spec.instance_path.empty())
            throw std::invalid_argument("maxsat: --instance file required");
        auto in = open_or_throw(spec.instance_path);
        CnfInstance inst = parse_dimacs(in);
        if (spec.ell > 0 && spec.ell != inst.variable_count)
            throw std::invalid_argument("maxsat: --ell does not match the instance file");
        return std::make_unique<MaxSatProblem>(std::move(inst), stem_of(spec.instance_path));
    }
    throw std::invalid_argument("unknown problem family: " + spec.family);
}

} // namespace dsmix
