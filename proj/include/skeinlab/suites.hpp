/**
 * @file suites.hpp
 * @brief Named verification suites shared by the CLI and the acceptance gate.
 *
 * Every suite runs a batch of exact checks over a deterministic corpus
 * (exhaustive grids, canonical enumerations, or seeded random words) and
 * reports the number of checks, the number of failures, and a capped list
 * of counterexample descriptions.  Randomized corpora are generated
 * sequentially from the seed before any parallel work, so results are
 * byte-identical for a fixed seed regardless of thread count.
 */
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace skeinlab {

/// Thrown by run_suite for a name not in suite_names().
struct UnknownSuite : std::runtime_error {
    explicit UnknownSuite(const std::string& name)
        : std::runtime_error("unknown suite: " + name) {}
};

/// Knobs shared by all suites; zero values mean "suite default".
struct SuiteOptions {
    std::uint64_t seed = 20260826;  ///< seed for every randomized corpus
    int samples = 0;                ///< randomized corpus size override
    int max_len = 0;                ///< corpus word-length override
    long kappa_lo = -6;             ///< weighted-sum family range
    long kappa_hi = 6;
};

struct SuiteResult {
    std::string name;
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::vector<std::string> counterexamples;  ///< capped detail lines
    double seconds = 0.0;
    bool passed() const { return failures == 0; }
};

/// All suite names, in display order:
///   torus      engine vs closed form on the (p,2) torus family
///   coeffs     p_0/p_1/p_2 closed forms on canonical + random corpora
///   sums       weighted h_j sum family and two-weight combinations
///   oracles    state-sum Jones and determinant Alexander cross-checks
///   survey     equal-V buckets carry a single P (three-strand census)
///   equalp     equal-P prediction matches direct engine comparison
///   landscape  coefficient degree landscape on the canonical corpus
///   omega      conjugacy-representative closed-form Alexander grid
///   threebraid three-strand closed forms for P, V, and the p_j
///   invariance conjugation / stabilization / mirror invariance
///   conway     torus-family identities, gcd laws, closed-form agreement
///   augmented  full-twist augmentation and alternating-product checks
///   skein      skein triples and generator-power reduction formulas
std::vector<std::string> suite_names();

/// Runs one suite.  Throws UnknownSuite for a name not in suite_names().
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt = {});

/// One-line summary: "[PASS] name checks=... failures=... (t s)".
std::string summary_line(const SuiteResult& r);

}  // namespace skeinlab
