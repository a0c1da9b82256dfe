#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "macshift/jack.hpp"
#include "macshift/report.hpp"
#include "macshift/shifted.hpp"

namespace macshift {

enum class IdentityKind {
    theorem1,
    theorem2,
    branching,
    duality,
    powersum_duality,
    vanishing,
    lemmas,
    coherence,
    equivalence,
};

IdentityKind parse_identity(const std::string& name); // throws std::invalid_argument
std::string identity_name(IdentityKind kind);

struct VerifyOptions {
    IdentityKind kind = IdentityKind::theorem1;
    int max_mu_size = 3;
    int nmax = 3;
    std::vector<int> thetas = {1, 2}; // integer thetas; empty means symbolic-only
    int kmax = 3;                     // power-sum duality exponent bound
    int jobs = 1;
    bool timings = false;
};

struct VerifySummary {
    int total = 0;
    int failed = 0;
};

// Expands the bound box into instances, runs them (optionally across worker
// threads), streams one JSON report per line to `out` in deterministic
// instance order, and a human summary to `err`.
VerifySummary run_verify(MacCtx& mac, ShiftCtx& shift, JackCtx& jack, const VerifyOptions& opt,
                         std::ostream& out, std::ostream& err);

} // namespace macshift
