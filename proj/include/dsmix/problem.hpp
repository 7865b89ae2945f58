#pragma once

#include <optional>
#include <string>

#include "dsmix/bitvector.hpp"

namespace dsmix {

/// A pseudo-Boolean maximization problem. Instances are immutable after
/// construction and safe for concurrent evaluate() calls.
class ProblemInstance {
public:
    virtual ~ProblemInstance() = default;

    /// Number of decision variables.
    virtual int size() const = 0;

    /// Pure, deterministic fitness of a full assignment.
    virtual double evaluate(const BitVector& x) const = 0;

    /// Known global-optimum fitness, when available. No assignment
    /// evaluates strictly above it.
    virtual std::optional<double> optimum() const = 0;

    /// Problem family identifier (trap, ctrap, ftrap, nk, spin, maxsat).
    virtual std::string family() const = 0;

    /// Instance identifier, unique within a family.
    virtual std::string name() const = 0;
};

} // namespace dsmix
