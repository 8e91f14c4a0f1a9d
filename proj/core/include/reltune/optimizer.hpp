#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "reltune/param_space.hpp"
#include "reltune/rng.hpp"

namespace reltune {

/// One objective evaluation at a sampled point.
struct Trial {
    std::size_t number = 0;
    std::vector<int> values; // aligned with ParameterSpace::dims
    double objective = 0.0;

    bool operator==(const Trial&) const = default;
};

/// Append-only record of an optimization run.
struct StudyState {
    ParameterSpace space;
    std::uint64_t seed = 0;
    std::vector<Trial> trials;
    std::size_t best_index = 0; // lowest trial number among maxima

    const Trial& best() const;

    /// Running maximum of the objective after each trial; non-decreasing.
    std::vector<double> best_so_far() const;
};

struct TpeOptions {
    std::size_t n_startup = 10;    // random trials before the model kicks in
    double gamma = 0.10;           // fraction of history in the "good" split
    std::size_t n_candidates = 24; // draws from l(x) per dimension
    double prior_count = 1.0;      // symmetric pseudo-count on every value
};

/// Every dimension drawn independently and uniformly from its domain.
std::vector<int> sample_random(const ParameterSpace& space, Rng& rng);

/// Tree-structured Parzen Estimator suggestion, specialized to integer and
/// binary domains: the history splits into the top ceil(gamma*n) trials by
/// objective ("good") and the rest ("bad"); each dimension gets smoothed
/// categorical densities l(x) over good and g(x) over bad (observed counts
/// plus the prior pseudo-count); n_candidates values are drawn from l and
/// the one maximizing l(x)/g(x) wins, ties to the first drawn candidate.
/// Histories shorter than n_startup fall back to sample_random.
std::vector<int> tpe_suggest(const ParameterSpace& space, std::span<const Trial> history,
                             Rng& rng, const TpeOptions& opts = {});

using ObjectiveFn = std::function<double(std::span<const int>)>;

/// Sequential maximization of the objective over the space; deterministic
/// given (space, objective, n_trials, seed). Configs in initial_points are
/// evaluated first, before any sampling. A non-finite objective value aborts
/// with an InternalError naming the offending config.
StudyState optimize(const ParameterSpace& space, const ObjectiveFn& objective,
                    std::size_t n_trials, std::uint64_t seed, const TpeOptions& opts = {},
                    std::span<const std::vector<int>> initial_points = {});

/// Evaluates every configuration in ascending lexicographic dim order and
/// returns the true maximizer, ties to the lexicographically smallest
/// config. Rejects spaces with more than 100000 configurations.
std::pair<std::vector<int>, double> exhaustive_search(const ParameterSpace& space,
                                                      const ObjectiveFn& objective);

/// {"seed", "space": [{name, lo, hi}...], "trials": [{number, config,
/// objective}...], "best": {...}}; config objects are keyed by dim name.
nlohmann::json study_to_json(const StudyState& study);
StudyState study_from_json(const nlohmann::json& j);

/// CSV "trial,best_objective" rows of the running maximum.
std::string best_curve_csv(const StudyState& study);

} // namespace reltune
