#include "reltune/optimizer.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "reltune/errors.hpp"

namespace reltune {

namespace {

std::string describe_values(const ParameterSpace& space, std::span<const int> values) {
    std::string out = "{";
    for (std::size_t i = 0; i < space.dims.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += space.dims[i].name + "=" + std::to_string(values[i]);
    }
    out += "}";
    return out;
}

void check_point(const ParameterSpace& space, std::span<const int> values) {
    if (values.size() != space.dims.size()) {
        throw std::invalid_argument("initial point length does not match the parameter space");
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] < space.dims[i].lo || values[i] > space.dims[i].hi) {
            throw std::invalid_argument("initial point value " + std::to_string(values[i]) +
                                        " outside dimension '" + space.dims[i].name + "'");
        }
    }
}

std::string format_double(double value) {
    char buffer[32];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    if (ec != std::errc{}) {
        throw InternalError("failed to format a double");
    }
    return std::string(buffer, ptr);
}

} // namespace

const Trial& StudyState::best() const {
    if (trials.empty()) {
        throw InternalError("study has no trials");
    }
    return trials[best_index];
}

std::vector<double> StudyState::best_so_far() const {
    std::vector<double> curve;
    curve.reserve(trials.size());
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& trial : trials) {
        best = std::max(best, trial.objective);
        curve.push_back(best);
    }
    return curve;
}

std::vector<int> sample_random(const ParameterSpace& space, Rng& rng) {
    std::vector<int> values;
    values.reserve(space.dims.size());
    for (const auto& dim : space.dims) {
        values.push_back(rng.uniform_int(dim.lo, dim.hi));
    }
    return values;
}

std::vector<int> tpe_suggest(const ParameterSpace& space, std::span<const Trial> history,
                             Rng& rng, const TpeOptions& opts) {
    if (history.size() < opts.n_startup) {
        return sample_random(space, rng);
    }

    const std::size_t n = history.size();
    const auto n_good = static_cast<std::size_t>(
        std::ceil(opts.gamma * static_cast<double>(n)));

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (history[a].objective != history[b].objective) {
            return history[a].objective > history[b].objective;
        }
        return history[a].number < history[b].number;
    });

    std::vector<int> suggestion;
    suggestion.reserve(space.dims.size());
    std::vector<double> good_density;
    std::vector<double> bad_density;
    for (std::size_t d = 0; d < space.dims.size(); ++d) {
        const Dimension& dim = space.dims[d];
        const auto domain = static_cast<std::size_t>(dim.size());
        good_density.assign(domain, opts.prior_count);
        bad_density.assign(domain, opts.prior_count);
        for (std::size_t rank = 0; rank < n; ++rank) {
            const int value = history[order[rank]].values[d];
            auto& density = rank < n_good ? good_density : bad_density;
            density[static_cast<std::size_t>(value - dim.lo)] += 1.0;
        }

        // Candidates come from the good density; the winner maximizes
        // l(x)/g(x) (the shared normalizers cancel). Ties keep the first
        // drawn candidate: breaking ties toward small values would skew the
        // uninformative-history marginal away from uniform.
        int best_value = 0;
        double best_ratio = -1.0;
        bool have_best = false;
        for (std::size_t c = 0; c < opts.n_candidates; ++c) {
            const auto slot = rng.categorical(good_density);
            const int value = dim.lo + static_cast<int>(slot);
            const double ratio = good_density[slot] / bad_density[slot];
            if (!have_best || ratio > best_ratio) {
                best_value = value;
                best_ratio = ratio;
                have_best = true;
            }
        }
        suggestion.push_back(best_value);
    }
    return suggestion;
}

StudyState optimize(const ParameterSpace& space, const ObjectiveFn& objective,
                    std::size_t n_trials, std::uint64_t seed, const TpeOptions& opts,
                    std::span<const std::vector<int>> initial_points) {
    if (space.dims.empty()) {
        throw std::invalid_argument("parameter space has no dimensions");
    }
    if (n_trials == 0) {
        throw std::invalid_argument("n_trials must be >= 1");
    }
    for (const auto& point : initial_points) {
        check_point(space, point);
    }

    StudyState study;
    study.space = space;
    study.seed = seed;
    study.trials.reserve(n_trials);
    Rng rng(seed);

    for (std::size_t number = 0; number < n_trials; ++number) {
        std::vector<int> values = number < initial_points.size()
                                      ? initial_points[number]
                                      : tpe_suggest(space, study.trials, rng, opts);
        const double value = objective(values);
        if (!std::isfinite(value)) {
            throw InternalError("objective returned a non-finite value at config " +
                                describe_values(space, values));
        }
        study.trials.push_back(Trial{number, std::move(values), value});
        if (value > study.trials[study.best_index].objective) {
            study.best_index = number;
        }
    }
    return study;
}

std::pair<std::vector<int>, double> exhaustive_search(const ParameterSpace& space,
                                                      const ObjectiveFn& objective) {
    if (space.dims.empty()) {
        throw std::invalid_argument("parameter space has no dimensions");
    }
    constexpr std::uint64_t kMaxConfigs = 100000;
    if (space.total_configs() > kMaxConfigs) {
        throw std::invalid_argument("space has more than " + std::to_string(kMaxConfigs) +
                                    " configurations");
    }

    std::vector<int> values;
    values.reserve(space.dims.size());
    for (const auto& dim : space.dims) {
        values.push_back(dim.lo);
    }

    std::vector<int> best_values;
    double best_objective = 0.0;
    bool have_best = false;
    for (;;) {
        const double value = objective(values);
        // Strict improvement keeps the first (lexicographically smallest) tie.
        if (!have_best || value > best_objective) {
            best_values = values;
            best_objective = value;
            have_best = true;
        }
        // Odometer increment, last dimension fastest.
        std::size_t d = space.dims.size();
        while (d > 0) {
            --d;
            if (values[d] < space.dims[d].hi) {
                ++values[d];
                for (std::size_t reset = d + 1; reset < space.dims.size(); ++reset) {
                    values[reset] = space.dims[reset].lo;
                }
                break;
            }
            if (d == 0) {
                return {best_values, best_objective};
            }
        }
    }
}

nlohmann::json study_to_json(const StudyState& study) {
    nlohmann::json j;
    j["seed"] = study.seed;
    j["space"] = nlohmann::json::array();
    for (const auto& dim : study.space.dims) {
        j["space"].push_back({{"name", dim.name}, {"lo", dim.lo}, {"hi", dim.hi}});
    }
    auto trial_json = [&](const Trial& trial) {
        nlohmann::json config;
        for (std::size_t i = 0; i < study.space.dims.size(); ++i) {
            config[study.space.dims[i].name] = trial.values[i];
        }
        return nlohmann::json{
            {"number", trial.number}, {"config", std::move(config)}, {"objective", trial.objective}};
    };
    j["trials"] = nlohmann::json::array();
    for (const auto& trial : study.trials) {
        j["trials"].push_back(trial_json(trial));
    }
    j["best"] = trial_json(study.best());
    return j;
}

StudyState study_from_json(const nlohmann::json& j) {
    StudyState study;
    try {
        study.seed = j.at("seed").get<std::uint64_t>();
        for (const auto& dim : j.at("space")) {
            study.space.dims.push_back(Dimension{dim.at("name").get<std::string>(),
                                                 dim.at("lo").get<int>(),
                                                 dim.at("hi").get<int>()});
        }
        for (const auto& row : j.at("trials")) {
            Trial trial;
            trial.number = row.at("number").get<std::size_t>();
            trial.objective = row.at("objective").get<double>();
            const auto& config = row.at("config");
            for (const auto& dim : study.space.dims) {
                trial.values.push_back(config.at(dim.name).get<int>());
            }
            study.trials.push_back(std::move(trial));
        }
        study.best_index = j.at("best").at("number").get<std::size_t>();
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed study JSON: ") + e.what());
    }
    if (study.best_index >= study.trials.size()) {
        throw InputError("study JSON best trial is out of range");
    }
    return study;
}

std::string best_curve_csv(const StudyState& study) {
    std::string csv = "trial,best_objective\n";
    const auto curve = study.best_so_far();
    for (std::size_t i = 0; i < curve.size(); ++i) {
        csv += std::to_string(i) + "," + format_double(curve[i]) + "\n";
    }
    return csv;
}

} // namespace reltune
