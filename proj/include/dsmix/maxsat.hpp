#pragma once

#include <iosfwd>
#include <vector>

#include "dsmix/problem.hpp"

namespace dsmix {

/// CNF formula; fitness of an assignment is the number of satisfied
/// clauses, so the optimum of a satisfiable instance is the clause count.
struct CnfInstance {
    struct Literal {
        int var = 0; // 0-based
        bool negated = false;
    };

    int variable_count = 0;
    std::vector<std::vector<Literal>> clauses;

    int clause_count() const { return static_cast<int>(clauses.size()); }
};

/// Standard DIMACS CNF: 'c' comment lines, one 'p cnf <vars> <clauses>'
/// header, then zero-terminated clauses. A '%' line ends the clause
/// section (SATLIB convention). Errors carry the offending line number.
CnfInstance parse_dimacs(std::istream& in);

double eval_maxsat(const BitVector& x, const CnfInstance& inst);

class MaxSatProblem : public ProblemInstance {
public:
    explicit MaxSatProblem(CnfInstance inst, std::string name = "maxsat");
    int size() const override { return inst_.variable_count; }
    double evaluate(const BitVector& x) const override { return eval_maxsat(x, inst_); }
    /// Clause count: a true upper bound always, exact for satisfiable
    /// formulas (the benchmark set is satisfiable by construction).
    std::optional<double> optimum() const override { return inst_.clause_count(); }
    std::string family() const override { return "maxsat"; }
    std::string name() const override { return name_; }
    const CnfInstance& instance() const { return inst_; }

private:
    CnfInstance inst_;
    std::string name_;
};

} // namespace dsmix
