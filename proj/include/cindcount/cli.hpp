#pragma once

#include "cindcount/profile.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>

namespace cindcount
{
    struct CliConfig
    {
        std::string command;          // count | sample | exact | coarse | trial
        std::string instance_path;
        double epsilon = 0.3;
        double delta = 0.2;
        std::uint64_t seed = 1;
        std::string profile = "light";   // paper | light | path to a profile JSON file
        std::uint64_t samples = 1;
        std::uint64_t trials = 20;
        std::string output_path;      // empty: write to `out`
        unsigned threads = 1;
    };

    auto load_profile(const std::string & spec) -> ConstantsProfile;

    /// Exit codes: 0 success, 1 when most sample draws FAIL, 2 on input errors.
    auto run(const CliConfig & config, std::ostream & out, std::ostream & err) -> int;
}
