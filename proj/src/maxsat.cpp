#include "dsmix/maxsat.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace dsmix {

CnfInstance parse_dimacs(std::istream& in) {
    std::string line;
    int line_no = 0;
    auto fail = [&line_no](const std::string& what) {
        throw std::runtime_error("cnf parse error at line " + std::to_string(line_no) + ": " +
                                 what);
    };

    CnfInstance inst;
    int declared_clauses = -1;
    std::vector<CnfInstance::Literal> clause;
    bool done = false;

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == 'c')
            continue;
        if (line[0] == '%') {
            done = true;
            break;
        }
        if (line[0] == 'p') {
            if (declared_clauses >= 0)
                fail("duplicate header");
            std::istringstream header(line);
            std::string p, fmt;
            if (!(header >> p >> fmt >> inst.variable_count >> declared_clauses) || fmt != "cnf" ||
                inst.variable_count < 1 || declared_clauses < 1)
                fail("expected 'p cnf <vars> <clauses>'");
            continue;
        }
        if (declared_clauses < 0)
            fail("clause before header");
        std::istringstream body(line);
        int lit;
        while (body >> lit) {
            if (lit == 0) {
                if (clause.empty())
                    fail("empty clause");
                inst.clauses.push_back(clause);
                clause.clear();
                if (inst.clause_count() > declared_clauses)
                    fail("more clauses than declared");
                continue;
            }
            const int var = lit > 0 ? lit : -lit;
            if (var > inst.variable_count)
                fail("literal " + std::to_string(lit) + " out of range");
            clause.push_back({var - 1, lit < 0});
        }
        if (!body.eof()) {
            std::string rest;
            body.clear();
            body >> rest;
            fail("unexpected token '" + rest + "'");
        }
    }

    (void)done;
    if (declared_clauses < 0)
        fail("missing header");
    if (!clause.empty())
        fail("unterminated clause");
    if (inst.clause_count() != declared_clauses)
        fail("declared " + std::to_string(declared_clauses) + " clauses, found " +
             std::to_string(inst.clause_count()));
    return inst;
}

double eval_maxsat(const BitVector& x, const CnfInstance& inst) {
    if (x.size() != inst.variable_count)
        throw std::invalid_argument("eval_maxsat: length mismatch");
    int satisfied = 0;
    for (const auto& clause : inst.clauses) {
        for (const auto& lit : clause) {
            if (x.get(lit.var) != lit.negated) {
                ++satisfied;
                break;
            }
        }
    }
    return static_cast<double>(satisfied);
}

MaxSatProblem::MaxSatProblem(CnfInstance inst, std::string name)
    : inst_(std::move(inst)), name_(std::move(name)) {}

} // namespace dsmix
