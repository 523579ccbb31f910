#pragma once

#include <rcl/report.hpp>

#include <map>
#include <string>

namespace rcl {

// A fully merged run description: subcommand plus flat key/value options
// (config file defaults overlaid by command-line flags).
struct RunConfig
{
    std::string command;
    std::map<std::string, std::string> options;
};

ReportEnvelope run(const RunConfig & config);

// format: json (envelope), text (summary), csv (per-trial rows where defined)
std::string render_output(const ReportEnvelope & env, const std::string & format);

// simple key=value file, '#' comments
std::map<std::string, std::string> parse_config_file(const std::string & path);

} // namespace rcl
