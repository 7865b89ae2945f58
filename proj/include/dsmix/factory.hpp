#pragma once

#include <memory>
#include <string>

#include "dsmix/problem.hpp"

namespace dsmix {

/// Command-line description of a problem: a family plus either closed-form
/// parameters (traps) or an instance file (nk, spin, maxsat).
struct ProblemSpec {
    std::string family;        // trap | ctrap | ftrap | nk | spin | maxsat
    int ell = 0;               // trap families; cross-checked for files
    int k = 0;                 // subfunction size (traps); 0 = family default
    std::string instance_path; // nk/spin/maxsat
};

std::unique_ptr<ProblemInstance> make_problem(const ProblemSpec& spec);

} // namespace dsmix
