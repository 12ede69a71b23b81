#include "cindcount/cli.hpp"

#include "cindcount/coarse.hpp"
#include "cindcount/count.hpp"
#include "cindcount/io.hpp"
#include "cindcount/problems.hpp"
#include "cindcount/sample.hpp"
#include "cindcount/verify.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>

namespace cindcount
{
    namespace
    {
        using nlohmann::json;

        class InputError : public std::runtime_error
        {
        public:
            using std::runtime_error::runtime_error;
        };

        auto is_colourful(const Instance & instance) -> bool
        {
            return std::holds_alternative<std::shared_ptr<const PatternInstance>>(instance.value);
        }

        /// One count call; oracle queries are added to `stats`.
        auto estimate(const Instance & instance, double epsilon, double delta, Rng & rng, const ConstantsProfile & profile,
            RunStats & stats) -> double
        {
            if (is_colourful(instance))
                return count_colourful_h(std::get<std::shared_ptr<const PatternInstance>>(instance.value), epsilon, delta, rng,
                    profile, stats, colourful_brute_force_decider());
            auto oracle = make_oracle(instance);
            const double value = count(*oracle, epsilon, delta, rng, profile, stats);
            stats.oracle_queries += oracle->queries();
            return value;
        }

        auto approximates(double estimate, double truth, double epsilon) -> bool
        {
            if (truth == 0.0)
                return estimate == 0.0;
            return std::abs(estimate - truth) < epsilon * truth;
        }

        auto run_command(const CliConfig & config, const Instance & instance, const ConstantsProfile & profile,
            std::ostream & out) -> int
        {
            RunStats stats;
            Rng rng(config.seed);
            const auto & cmd = config.command;

            if (cmd == "exact")
            {
                out << json{{"exact", brute_force_count(instance)}, {"stats", stats.to_json(false)}}.dump() << '\n';
                return 0;
            }
            if (cmd == "count")
            {
                const double value = estimate(instance, config.epsilon, config.delta, rng, profile, stats);
                out << json{{"estimate", value}, {"epsilon", config.epsilon}, {"delta", config.delta},
                           {"stats", stats.to_json(false)}}.dump()
                    << '\n';
                return 0;
            }
            if (cmd == "coarse")
            {
                auto oracle = make_oracle(instance);
                PaddedOracle padded(*oracle);
                if (padded.vertex_count() < 2)
                    throw InputError("coarse needs at least two vertices");
                const double value = coarse(padded, config.delta, rng, profile, stats);
                stats.oracle_queries += oracle->queries();
                out << json{{"estimate", value}, {"delta", config.delta}, {"stats", stats.to_json(false)}}.dump() << '\n';
                return 0;
            }
            if (cmd == "sample")
            {
                auto oracle = make_oracle(instance);
                std::uint64_t fails = 0;
                for (std::uint64_t i = 0; i < config.samples; ++i)
                {
                    auto edge = sample(*oracle, config.epsilon, rng, profile, stats);
                    if (edge)
                        out << json{{"edge", *edge}}.dump() << '\n';
                    else
                    {
                        ++fails;
                        out << json{{"fail", true}}.dump() << '\n';
                    }
                }
                stats.oracle_queries += oracle->queries();
                out << json{{"samples", config.samples}, {"fails", fails}, {"stats", stats.to_json(false)}}.dump() << '\n';
                return 2 * fails > config.samples ? 1 : 0;
            }
            if (cmd == "trial")
            {
                const double truth = static_cast<double>(brute_force_count(instance));
                auto runner = [&](std::uint64_t seed) {
                    Rng trial_rng(seed);
                    RunStats trial_stats;
                    const double value = estimate(instance, config.epsilon, config.delta, trial_rng, profile, trial_stats);
                    return TrialOutcome{approximates(value, truth, config.epsilon), trial_stats.oracle_queries};
                };
                const auto report = success_rate_trial(runner, config.trials, config.seed, config.threads);
                auto j = report.to_json();
                j["exact"] = truth;
                j["epsilon"] = config.epsilon;
                j["delta"] = config.delta;
                out << j.dump() << '\n';
                return 0;
            }
            throw InputError("unknown command '" + cmd + "'");
        }
    }

    auto load_profile(const std::string & spec) -> ConstantsProfile
    {
        if (spec == "paper" || spec == "light")
            return ConstantsProfile::from_json(spec);
        std::ifstream in(spec);
        if (!in)
            throw InputError("profile '" + spec + "' is neither a preset nor a readable file");
        try
        {
            return ConstantsProfile::from_json(json::parse(in));
        }
        catch (const json::exception & e)
        {
            throw InputError("profile '" + spec + "': " + e.what());
        }
    }

    auto run(const CliConfig & config, std::ostream & out, std::ostream & err) -> int
    {
        const auto start = std::chrono::steady_clock::now();
        try
        {
            if (!(config.epsilon > 0.0 && config.epsilon < 1.0))
                throw InputError("--epsilon must lie in (0, 1)");
            if (!(config.delta > 0.0 && config.delta < 1.0))
                throw InputError("--delta must lie in (0, 1)");
            if (config.trials < 1)
                throw InputError("--trials must be at least 1");
            if (config.threads < 1)
                throw InputError("--threads must be at least 1");

            const auto profile = load_profile(config.profile);
            if (profile.name != "paper")
                err << "warning: profile '" << profile.name
                    << "' trades the theoretical guarantees for speed; use --profile paper for them\n";
            const auto instance = parse_instance_file(config.instance_path);
            if (is_colourful(instance) && (config.command == "sample" || config.command == "coarse"))
                throw UnsupportedInstance(config.command + " is not supported for colourful instances");

            int code;
            if (config.output_path.empty())
                code = run_command(config, instance, profile, out);
            else
            {
                std::ofstream file(config.output_path);
                if (!file)
                    throw InputError("cannot write '" + config.output_path + "'");
                code = run_command(config, instance, profile, file);
            }
            const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
            err << json{{"elapsed_seconds", elapsed.count()}}.dump() << '\n';
            return code;
        }
        catch (const InputError & e)
        {
            err << "error: " << e.what() << '\n';
        }
        catch (const MalformedInstance & e)
        {
            err << "error: malformed instance: " << e.what() << '\n';
        }
        catch (const UnsupportedInstance & e)
        {
            err << "error: unsupported: " << e.what() << '\n';
        }
        catch (const std::invalid_argument & e)
        {
            err << "error: " << e.what() << '\n';
        }
        catch (const std::overflow_error & e)
        {
            err << "error: " << e.what() << '\n';
        }
        return 2;
    }
}
