#pragma once

#include <map>
#include <string>

namespace rcl {

enum class RunVerdict { Ok, Unknown, Uncertified, Error };

const char * verdict_name(RunVerdict v);

struct ReportEnvelope
{
    RunVerdict verdict = RunVerdict::Error;
    std::string command;
    std::map<std::string, std::string> config_echo;
    double timing_ms = 0.0;
    std::string result_json; // serialised payload object
    std::string error_message;
    bool has_result = false;
};

// Full envelope document. Every run emits exactly one of these.
std::string envelope_to_json(const ReportEnvelope & env, int indent = 2);
ReportEnvelope envelope_from_json(const std::string & text);

// 0 iff OK or UNKNOWN-with-results
int exit_code_for(const ReportEnvelope & env);

} // namespace rcl
