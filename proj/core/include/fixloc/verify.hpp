#pragma once

#include "fixloc/counting.hpp"
#include "fixloc/report.hpp"

#include <vector>

namespace fixloc {

struct VerifyOptions {
    std::string dataset;     // identifier copied into reports
    long long window = 40;   // width of the checked range past the threshold
    unsigned range = 50;     // n0 range for the two-component check
    bool parallel = false;   // fan window evaluations out over threads
    bool timing = false;     // record elapsed_ms
};

// Equality of the signed partition-function sums past the threshold, plus
// the coefficient-wise identity against the exact character over the whole
// window.
VerificationReport verify_cancellation(const FixedPointSet& fps, const CountMode& mode,
                                       const VerifyOptions& options = {});

// Moment differences between the two classes lie in the lattice (ideal)
// generated by the weights of the opposite class; multiplier bounds.
// Throws EmptyClass when one class is empty.
VerificationReport verify_lattice(const FixedPointSet& fps, const CountMode& mode,
                                  const VerifyOptions& options = {});

// No open half space contains every weight.
VerificationReport verify_halfspace(const FixedPointSet& fps, const VerifyOptions& options = {});

// Two-component circle action on a 4-manifold (an isolated point q below a
// fixed surface F). Throws ShapeMismatch when the data has another shape.
VerificationReport verify_prop42(const ComponentSet& cs, const VerifyOptions& options = {});

// Every verifier applicable to the dataset; precondition failures become
// Inapplicable reports.
std::vector<VerificationReport> verify_all(const Dataset& dataset, const VerifyOptions& options = {});

} // namespace fixloc
