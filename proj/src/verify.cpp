#include "macshift/verify.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace macshift {

IdentityKind parse_identity(const std::string& name) {
    if (name == "theorem1") return IdentityKind::theorem1;
    if (name == "theorem2") return IdentityKind::theorem2;
    if (name == "branching") return IdentityKind::branching;
    if (name == "duality") return IdentityKind::duality;
    if (name == "powersum-duality") return IdentityKind::powersum_duality;
    if (name == "vanishing") return IdentityKind::vanishing;
    if (name == "lemmas") return IdentityKind::lemmas;
    if (name == "coherence") return IdentityKind::coherence;
    if (name == "equivalence") return IdentityKind::equivalence;
    throw std::invalid_argument("unknown identity: '" + name + "'");
}

std::string identity_name(IdentityKind kind) {
    switch (kind) {
        case IdentityKind::theorem1: return "theorem1";
        case IdentityKind::theorem2: return "theorem2";
        case IdentityKind::branching: return "branching";
        case IdentityKind::duality: return "duality";
        case IdentityKind::powersum_duality: return "powersum-duality";
        case IdentityKind::vanishing: return "vanishing";
        case IdentityKind::lemmas: return "lemmas";
        case IdentityKind::coherence: return "coherence";
        case IdentityKind::equivalence: return "equivalence";
    }
    return "?";
}

namespace {

using Task = std::function<Report()>;

void build_tasks(MacCtx& mac, ShiftCtx& shift, JackCtx& jack, const VerifyOptions& opt,
                 std::vector<Task>& tasks) {
    auto mus = enumerate_partitions(opt.max_mu_size, opt.nmax);
    switch (opt.kind) {
        case IdentityKind::theorem1:
            for (int n = 2; n <= opt.nmax; ++n)
                for (const auto& mu : mus)
                    if (mu.length() < n)
                        for (int theta : opt.thetas)
                            tasks.push_back(
                                [&mac, mu, n, theta] { return mac.verify_theorem_I(mu, n, theta); });
            break;
        case IdentityKind::theorem2:
            for (int n = 2; n <= opt.nmax; ++n)
                for (const auto& mu : mus)
                    if (mu.length() < n)
                        for (int theta : opt.thetas)
                            tasks.push_back([&shift, mu, n, theta] {
                                return shift.verify_theorem_II(mu, n, theta);
                            });
            break;
        case IdentityKind::branching:
            for (const auto& mu : enumerate_partitions(opt.max_mu_size, opt.max_mu_size))
                tasks.push_back([&shift, mu] { return shift.verify_branching(mu); });
            break;
        case IdentityKind::duality:
            for (const auto& mu : enumerate_partitions(opt.max_mu_size, opt.max_mu_size))
                for (const auto& la :
                     enumerate_partitions(mu.size() + 2, mu.size() + 2))
                    tasks.push_back([&shift, mu, la] { return shift.omega_star_check(mu, la); });
            break;
        case IdentityKind::powersum_duality:
            for (int k = 1; k <= opt.kmax; ++k)
                for (const auto& la :
                     enumerate_partitions(opt.max_mu_size, opt.max_mu_size))
                    tasks.push_back([&shift, k, la] { return shift.powersum_duality_check(k, la); });
            break;
        case IdentityKind::vanishing:
            // symbolic (q,t) defining conditions plus the extra-vanishing window
            for (int n = 1; n <= opt.nmax; ++n)
                for (const auto& mu : mus)
                    if (mu.length() <= n)
                        tasks.push_back([&shift, mu, n] {
                            return shift.verify_defining_conditions(mu, n);
                        });
            break;
        case IdentityKind::lemmas:
            for (int n = 2; n <= opt.nmax; ++n) {
                for (const auto& mu : mus)
                    if (mu.length() <= n)
                        tasks.push_back([&mac, mu, n] { return mac.eigen_check(mu, n); });
                for (const auto& la : mus)
                    if (la.length() <= n) {
                        for (int theta : opt.thetas)
                            tasks.push_back(
                                [&mac, la, n, theta] { return mac.lemma_3_10_check(la, n, theta); });
                        tasks.push_back([&mac, la, n] { return mac.lemma_3_11_check(la, n); });
                        tasks.push_back([&mac, la, n] { return mac.E_stability_check(la, n); });
                    }
            }
            break;
        case IdentityKind::coherence:
            for (int n = 2; n <= opt.nmax; ++n)
                for (const auto& mu : mus)
                    if (mu.length() < n)
                        for (int theta : opt.thetas)
                            tasks.push_back([&jack, mu, n, theta] {
                                return jack.verify_coherence(mu, n, theta);
                            });
            break;
        case IdentityKind::equivalence:
            for (int n = 1; n <= opt.nmax; ++n)
                for (const auto& mu : mus)
                    if (mu.length() <= n)
                        tasks.push_back([&shift, mu, n] { return shift.verify_equivalence(mu, n); });
            break;
    }
}

} // namespace

VerifySummary run_verify(MacCtx& mac, ShiftCtx& shift, JackCtx& jack, const VerifyOptions& opt,
                         std::ostream& out, std::ostream& err) {
    std::vector<Task> tasks;
    build_tasks(mac, shift, jack, opt, tasks);

    std::vector<Report> results(tasks.size());
    auto run_one = [&](size_t i) {
        auto start = std::chrono::steady_clock::now();
        Report r;
        try {
            r = tasks[i]();
        } catch (const std::exception& e) {
            r = Report::failed(identity_name(opt.kind), Instance{},
                               Witness{"exception", e.what(), ""});
        }
        r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start);
        results[i] = std::move(r);
    };

    int jobs = std::max(1, opt.jobs);
    if (jobs == 1) {
        for (size_t i = 0; i < tasks.size(); ++i) run_one(i);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w)
            pool.emplace_back([&] {
                size_t i;
                while ((i = next.fetch_add(1)) < tasks.size()) run_one(i);
            });
        for (auto& th : pool) th.join();
    }

    VerifySummary summary;
    summary.total = static_cast<int>(results.size());
    for (const auto& r : results) {
        out << r.to_json(opt.timings) << "\n";
        if (!r.pass) ++summary.failed;
    }
    err << identity_name(opt.kind) << ": " << (summary.total - summary.failed) << "/"
        << summary.total << " instances passed\n";
    return summary;
}

} // namespace macshift
