#pragma once

#include <chrono>
#include <optional>
#include <string>

namespace macshift {

// One verified identity instance.  `witness` is present exactly when the
// instance failed and records the first disagreeing monomial (or value).
struct Witness {
    std::string where; // monomial / evaluation point description
    std::string lhs;
    std::string rhs;
};

struct Instance {
    std::string mu;
    std::string nu;
    std::string lambda;
    int n = 0;          // 0: not applicable
    std::string theta;  // "", integer, "p/r", or "symbolic"
    int k = 0;          // power-sum index; 0: not applicable
};

struct Report {
    std::string identity;
    Instance instance;
    bool pass = false;
    std::optional<Witness> witness;
    std::chrono::milliseconds elapsed{0};

    static Report passed(std::string identity, Instance inst) {
        return Report{std::move(identity), std::move(inst), true, std::nullopt, {}};
    }
    static Report failed(std::string identity, Instance inst, Witness w) {
        return Report{std::move(identity), std::move(inst), false, std::move(w), {}};
    }

    // One JSON object per line; `with_elapsed` adds the wall time (off by
    // default so identical invocations stay byte-identical).
    std::string to_json(bool with_elapsed = false) const;
};

} // namespace macshift
