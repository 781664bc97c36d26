#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rio/prio.hpp"

namespace rio {

struct Failure {
    std::vector<Syndrome> syndromes;
    std::string stage;   // "solve", "check", "oracle", "roundtrip"
    std::string detail;
};

struct VerificationReport {
    std::uint64_t instances_checked = 0;
    std::vector<Failure> failures;
    std::chrono::duration<double> elapsed{0};

    bool ok() const { return failures.empty(); }
};

// Independent backtracking search over V-set members (zero syndrome forces
// the empty support), pages in input order, members singleton-first then
// pairs by (min, max). Returns the first disjoint assignment found, or
// nullopt when no weight<=2 assignment exists ("infeasible within pairs";
// higher-weight supports are outside the search space by design).
std::optional<SupportAssignment> brute_force_supports(const ParityCheckMatrix& H,
                                                      const std::vector<Syndrome>& s);

// One canonical (nondecreasing) tuple per multiset of size t over the 2^r
// syndrome values, zero included. Count: C(2^r + t - 1, t).
std::uint64_t count_syndrome_multisets(int r, int t);
void enumerate_syndrome_multisets(int r, int t,
                                  const std::function<void(const std::vector<unsigned>&)>& fn);
// Random access into the same enumeration order.
std::vector<unsigned> unrank_syndrome_multiset(int r, int t, std::uint64_t rank);

struct Scope {
    enum Kind { Exhaustive, Multisets, Random } kind = Exhaustive;
    std::uint64_t count = 0;  // Random only
    std::uint64_t seed = 0;   // Random only
};

// For every instance in scope: the constructive solver must succeed and
// pass check_solution, the brute-force search must agree on feasibility
// (and its witness must also pass), and the full encode/decode roundtrip
// must recover every page. Instances are processed in a fixed global order;
// the thread count changes neither the instance set nor the report.
VerificationReport cross_validate(const PRioCode& code, const Scope& scope, int threads = 0);

}  // namespace rio
