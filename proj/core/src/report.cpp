#include <rcl/report.hpp>

#include <nlohmann/json.hpp>

using nlohmann::json;

namespace rcl {

const char * verdict_name(RunVerdict v)
{
    switch (v) {
        case RunVerdict::Ok: return "OK";
        case RunVerdict::Unknown: return "UNKNOWN";
        case RunVerdict::Uncertified: return "UNCERTIFIED";
        case RunVerdict::Error: return "ERROR";
    }
    return "ERROR";
}

std::string envelope_to_json(const ReportEnvelope & env, int indent)
{
    json doc;
    doc["schema_version"] = 1;
    doc["tool"] = "rcl";
    doc["version"] = "0.1.0";
    doc["command"] = env.command;
    doc["config"] = env.config_echo;
    doc["timing_ms"] = env.timing_ms;
    doc["verdict"] = verdict_name(env.verdict);
    if (env.has_result)
        doc["result"] = json::parse(env.result_json);
    else
        doc["result"] = nullptr;
    if (! env.error_message.empty())
        doc["error"] = env.error_message;
    return doc.dump(indent);
}

ReportEnvelope envelope_from_json(const std::string & text)
{
    json doc = json::parse(text);
    ReportEnvelope env;
    std::string verdict = doc.at("verdict").get<std::string>();
    if (verdict == "OK")
        env.verdict = RunVerdict::Ok;
    else if (verdict == "UNKNOWN")
        env.verdict = RunVerdict::Unknown;
    else if (verdict == "UNCERTIFIED")
        env.verdict = RunVerdict::Uncertified;
    else
        env.verdict = RunVerdict::Error;
    env.command = doc.at("command").get<std::string>();
    env.config_echo = doc.at("config").get<std::map<std::string, std::string>>();
    env.timing_ms = doc.at("timing_ms").get<double>();
    if (! doc.at("result").is_null()) {
        env.result_json = doc.at("result").dump();
        env.has_result = true;
    }
    if (doc.contains("error"))
        env.error_message = doc.at("error").get<std::string>();
    return env;
}

int exit_code_for(const ReportEnvelope & env)
{
    if (env.verdict == RunVerdict::Ok)
        return 0;
    if (env.verdict == RunVerdict::Unknown && env.has_result)
        return 0;
    if (env.verdict == RunVerdict::Uncertified)
        return 2;
    return 1;
}

} // namespace rcl
