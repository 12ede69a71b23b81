#include "cindcount/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char ** argv)
{
    cindcount::CliConfig config;
    CLI::App app{"Approximate counting and sampling of witnesses from a coloured independence oracle"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App * sub) {
        sub->add_option("instance", config.instance_path, "Instance JSON file")->required();
        sub->add_option("--seed", config.seed, "Random seed");
        sub->add_option("--profile", config.profile, "paper, light, or a profile JSON file");
        sub->add_option("--out", config.output_path, "Write results here instead of stdout");
    };

    auto * count = app.add_subcommand("count", "Estimate the number of witnesses");
    add_common(count);
    count->add_option("--epsilon", config.epsilon, "Relative accuracy");
    count->add_option("--delta", config.delta, "Failure probability");

    auto * sample = app.add_subcommand("sample", "Draw approximately uniform witnesses");
    add_common(sample);
    sample->add_option("--epsilon", config.epsilon, "Distance from uniform");
    sample->add_option("--samples", config.samples, "Number of draws")->check(CLI::PositiveNumber);

    auto * exact = app.add_subcommand("exact", "Count witnesses by brute force");
    add_common(exact);

    auto * coarse = app.add_subcommand("coarse", "Polylog-factor estimate");
    add_common(coarse);
    coarse->add_option("--delta", config.delta, "Failure probability");

    auto * trial = app.add_subcommand("trial", "Measure how often count lands within epsilon of the truth");
    add_common(trial);
    trial->add_option("--epsilon", config.epsilon, "Relative accuracy");
    trial->add_option("--delta", config.delta, "Failure probability");
    trial->add_option("--trials", config.trials, "Number of trials")->check(CLI::PositiveNumber);
    trial->add_option("--threads", config.threads, "Worker threads")->check(CLI::PositiveNumber);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    config.command = app.get_subcommands().front()->get_name();
    return cindcount::run(config, std::cout, std::cerr);
}
