#ifndef CSF_HARNESS_HPP
#define CSF_HARNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "csf/graph.hpp"

namespace csf {

struct Failure {
    std::string instance; // one-line serialization of the failing instance
    std::string detail;
    std::string repro; // standalone command reproducing the check
};

struct Report {
    std::string suite;
    int max_n = 0;
    uint64_t seed = 0;
    long instances = 0;
    std::vector<Failure> failures;
    double wall_seconds = 0;

    bool passed() const { return failures.empty(); }
    std::string to_json() const;
    std::string to_text() const;
};

// Registered verification suites and their default sweep sizes.
const std::vector<std::string>& suite_names();
int suite_default_max_n(const std::string& suite);

// Runs every instance of a suite up to max_n on `jobs` worker threads.
// Aggregation is order-independent: the Report (except wall_seconds) is
// identical for any jobs value. Unknown suite names throw.
Report verify_suite(const std::string& suite, int max_n, int jobs = 1,
                    uint64_t seed = 1);

struct CollisionGroup {
    std::string invariant;            // shared invariant, canonical form
    std::vector<std::string> members; // one-line instance serializations
};

// Exhaustive collision search at size n. Kinds:
//   f-unrooted : free trees under f(T) = X_T(q, q, 1, 1)
//   X-unrooted : connected graphs under X_G
//   X0-rooted  : rooted connected graphs under X_0
// Candidates are grouped by canonical serialization, re-verified by exact
// comparison, and isomorphic duplicates are excluded.
std::vector<CollisionGroup> search_collision(const std::string& kind, int n);

std::string collisions_json(const std::string& kind, int n,
                            const std::vector<CollisionGroup>& groups);

// One-line variant of the graph text format: newlines become "; ".
std::string graph_line(const Graph& g, int root = -1);

} // namespace csf

#endif
