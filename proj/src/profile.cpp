#include "cindcount/profile.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cindcount
{
    namespace
    {
        constexpr double inf = std::numeric_limits<double>::infinity();

        auto knob_to_json(const Knob & k) -> nlohmann::json
        {
            nlohmann::json j{{"multiplier", k.multiplier}, {"floor", k.floor}};
            if (std::isinf(k.cap))
                j["cap"] = nullptr;
            else
                j["cap"] = k.cap;
            return j;
        }

        void knob_from_json(const nlohmann::json & j, const char * name, Knob & k)
        {
            if (!j.contains(name))
                return;
            const auto & o = j.at(name);
            if (o.contains("multiplier"))
                k.multiplier = o.at("multiplier").get<double>();
            if (o.contains("floor"))
                k.floor = o.at("floor").get<double>();
            if (o.contains("cap"))
                k.cap = o.at("cap").is_null() ? inf : o.at("cap").get<double>();
            if (!(k.multiplier > 0) || !(k.floor > 0) || !(k.cap >= k.floor))
                throw std::invalid_argument(std::string("profile: bad knob '") + name + "'");
        }

        template <class F>
        void for_each_knob(ConstantsProfile & p, F && f)
        {
            f("colour_coarse_repetitions", p.colour_coarse_repetitions);
            f("helper_coarse_colourings", p.helper_coarse_colourings);
            f("helper_coarse_rounds", p.helper_coarse_rounds);
            f("coarse_rounds", p.coarse_rounds);
            f("count_rounds", p.count_rounds);
            f("trim_samples", p.trim_samples);
            f("halve_samples", p.halve_samples);
            f("accept_loop", p.accept_loop);
        }
    }

    auto Knob::apply(double formula) const -> std::uint64_t
    {
        double v = std::ceil(formula * multiplier);
        v = std::clamp(v, floor, cap);
        if (!(v >= 1.0))
            v = 1.0;
        if (v >= 1.8e19)
            return std::numeric_limits<std::uint64_t>::max();
        return static_cast<std::uint64_t>(v);
    }

    auto Knob::allocate(std::span<const double> raw) const -> std::vector<std::uint64_t>
    {
        double total = 0.0;
        for (double r : raw)
            total += r * multiplier;
        double scale = multiplier;
        if (total > cap)
            scale *= cap / total;
        else if (total > 0 && total < floor)
            scale *= floor / total;
        std::vector<std::uint64_t> out;
        out.reserve(raw.size());
        for (double r : raw)
        {
            double v = std::max(1.0, std::ceil(r * scale));
            out.push_back(v >= 1.8e19 ? std::numeric_limits<std::uint64_t>::max() : static_cast<std::uint64_t>(v));
        }
        return out;
    }

    auto ConstantsProfile::paper() -> ConstantsProfile
    {
        return ConstantsProfile{};
    }

    auto ConstantsProfile::light() -> ConstantsProfile
    {
        ConstantsProfile p;
        p.name = "light";
        p.colour_coarse_repetitions = {1e-4, 30.0, inf};
        p.helper_coarse_colourings = {1.0, 1.0, 12.0};
        p.helper_coarse_rounds = {1.0, 1.0, 1.0};
        p.coarse_rounds = {1.0, 1.0, 1.0};
        p.count_rounds = {1.0, 1.0, 5.0};
        p.trim_samples = {1.0, 1.0, 32.0};
        p.halve_samples = {1.0, 8.0, 16.0};
        p.accept_loop = {1.0, 1.0, inf};
        p.colour_coarse_early_exit = true;
        return p;
    }

    auto ConstantsProfile::from_json(const nlohmann::json & j) -> ConstantsProfile
    {
        if (j.is_string())
        {
            auto s = j.get<std::string>();
            if (s == "paper")
                return paper();
            if (s == "light")
                return light();
            throw std::invalid_argument("profile: unknown preset '" + s + "'");
        }
        if (!j.is_object())
            throw std::invalid_argument("profile: expected a preset name or an object");
        ConstantsProfile p = j.contains("base") ? from_json(j.at("base")) : paper();
        p.name = j.value("name", std::string("custom"));
        for_each_knob(p, [&](const char * name, Knob & k) { knob_from_json(j, name, k); });
        if (j.contains("resource_cap_factor"))
            p.resource_cap_factor = j.at("resource_cap_factor").get<double>();
        if (j.contains("exact_threshold"))
            p.exact_threshold = j.at("exact_threshold").get<std::size_t>();
        if (j.contains("colour_coarse_early_exit"))
            p.colour_coarse_early_exit = j.at("colour_coarse_early_exit").get<bool>();
        if (!(p.resource_cap_factor > 0))
            throw std::invalid_argument("profile: resource_cap_factor must be positive");
        return p;
    }

    auto ConstantsProfile::to_json() const -> nlohmann::json
    {
        nlohmann::json j{{"name", name}};
        auto & self = const_cast<ConstantsProfile &>(*this);
        for_each_knob(self, [&](const char * key, Knob & k) { j[key] = knob_to_json(k); });
        j["resource_cap_factor"] = resource_cap_factor;
        j["exact_threshold"] = exact_threshold;
        j["colour_coarse_early_exit"] = colour_coarse_early_exit;
        return j;
    }

    void RunStats::merge(const RunStats & o)
    {
        oracle_queries += o.oracle_queries;
        coarse_calls += o.coarse_calls;
        colour_coarse_calls += o.colour_coarse_calls;
        verify_guess_calls += o.verify_guess_calls;
        helper_count_runs += o.helper_count_runs;
        over_budget_runs += o.over_budget_runs;
        rejection_iterations += o.rejection_iterations;
        trim_clamped += o.trim_clamped;
        query_budget = std::max(query_budget, o.query_budget);
        max_run_queries = std::max(max_run_queries, o.max_run_queries);
        elapsed_seconds += o.elapsed_seconds;
    }

    auto RunStats::to_json(bool with_time) const -> nlohmann::json
    {
        nlohmann::json j{
            {"oracle_queries", oracle_queries},
            {"coarse_calls", coarse_calls},
            {"colour_coarse_calls", colour_coarse_calls},
            {"verify_guess_calls", verify_guess_calls},
            {"helper_count_runs", helper_count_runs},
            {"over_budget_runs", over_budget_runs},
            {"rejection_iterations", rejection_iterations},
            {"trim_clamped", trim_clamped},
            {"query_budget", query_budget},
            {"max_run_queries", max_run_queries},
        };
        if (with_time)
            j["elapsed_seconds"] = elapsed_seconds;
        return j;
    }
}
