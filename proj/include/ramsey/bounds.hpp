#ifndef RAMSEY_BOUNDS_HPP
#define RAMSEY_BOUNDS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/arrowing.hpp"
#include "ramsey/enumerate.hpp"
#include "ramsey/patterns.hpp"

namespace ramsey {

/// Thrown when a sweep finds a counterexample to an expected property.
struct SweepViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Registry lookup of the known closed-form values, evaluated only on their
/// stated validity domains (no extrapolation). Tries both pattern orders.
std::optional<long> predicted(const Pattern& red, const Pattern& blue);

/// The published witness construction for the query, when one exists.
std::optional<Graph> witness_for(const Pattern& red, const Pattern& blue);

ArrowVerdict verify_upper(const Pattern& red, const Pattern& blue,
                          const ArrowOptions& opts = {});

struct ExhaustionRecord {
    int q = 0;
    std::uint64_t examined = 0;
    bool all_nonarrowing = false;
    std::optional<std::string> refuted_g6;  // set when some graph arrows
};

/// Certificate sink: canonical graph6 of the host plus its coloring.
using CertificateSink = std::function<void(const std::string&, const EdgeColoring&)>;

/// Checks that no graph with q edges arrows (red, blue). Every graph gets a
/// non-arrowing certificate; a counterexample is reported, not thrown.
ExhaustionRecord verify_lower(const Pattern& red, const Pattern& blue, int q,
                              const EnumerationTask& base = {}, int threads = 1,
                              const CertificateSink& sink = nullptr);

struct RamseyReport {
    std::string red, blue;    // pattern names
    std::string status;       // "exact" or "bounds"
    std::optional<long> value;
    long lower = 1;           // proven lower bound on the value
    std::optional<long> upper;
    std::optional<std::string> witness_g6;
    std::uint64_t witness_avoiders = 0;
    std::vector<ExhaustionRecord> sweeps;
    std::optional<long> predicted;
    bool formula_consistent = true;
    double elapsed_s = 0.0;
};

/// Ascending exhaustive sweep for the size Ramsey number. Exact when the
/// first arrowing graph is found within budget; otherwise a bounds interval
/// (the upper bound coming from the registry witness, when one exists).
RamseyReport size_ramsey(const Pattern& red, const Pattern& blue, int budget_edges,
                         int threads = 1);

struct PackSweepRecord {
    int n = 0, m = 0, q = 0;
    std::uint64_t examined = 0;
    bool ok = false;
};

/// Checks that every connected graph with nm edges fails to arrow
/// (2K2, nP_m); each certificate is re-validated. Throws SweepViolation on a
/// counterexample.
PackSweepRecord connected_pack_sweep(int n, int m, int threads = 1,
                                     const CertificateSink& sink = nullptr);

/// Runs fn(i) for i in [0, count) on the given number of threads.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace ramsey

#endif
