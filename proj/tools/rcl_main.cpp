// rcl: combinatorial computation engine CLI. Subcommands cover exact density
// parameters, Ramsey/Rado oracles, container building/verification and the
// seeded random-model harness. Every run emits one report envelope.

#include <rcl/driver.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <string>

namespace {

struct Cli
{
    std::map<std::string, std::string> options;
    std::string config_path;
    std::string format = "json";
    std::string out_path;
    bool json_flag = false;

    void capture(CLI::App * cmd, const std::string & flag, const std::string & key)
    {
        auto holder = std::make_shared<std::string>();
        cmd->add_option(flag, *holder, "")
            ->each([this, key, holder](const std::string & value) { options[key] = value; });
    }

    void capture_flag(CLI::App * cmd, const std::string & flag, const std::string & key)
    {
        cmd->add_flag_callback(flag, [this, key] { options[key] = "true"; });
    }
};

void add_common(CLI::App * cmd, Cli & cli)
{
    cmd->add_option("--config", cli.config_path, "key=value defaults, flags win");
    cmd->add_option("--format", cli.format, "json|text|csv");
    cmd->add_flag("--json", cli.json_flag, "shorthand for --format json");
    cmd->add_option("--out", cli.out_path, "write the report to a file instead of stdout");
    cli.capture(cmd, "--budget", "budget");
    cli.capture(cmd, "--workers", "workers");
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"ramsey-container-lab"};
    app.require_subcommand(1);
    Cli cli;
    std::string command;

    auto bind = [&](CLI::App * cmd, const std::string & name) {
        add_common(cmd, cli);
        cmd->callback([&command, name] { command = name; });
        return cmd;
    };

    auto * density = bind(app.add_subcommand("density", "exact density parameters of a hypergraph"),
                          "density");
    cli.capture(density, "--graph", "graph");
    cli.capture(density, "--with", "with");
    cli.capture_flag(density, "--chromatic", "chromatic");

    auto * ramsey = app.add_subcommand("ramsey", "exact Ramsey oracles");
    ramsey->require_subcommand(1);
    auto * rcheck = bind(ramsey->add_subcommand("check", "(H_1,...,H_r)-Ramsey verdict"), "ramsey.check");
    cli.capture(rcheck, "--patterns", "patterns");
    cli.capture(rcheck, "--graph", "graph");
    cli.capture(rcheck, "--n", "n");
    cli.capture(rcheck, "--k", "k");
    auto * rex = bind(ramsey->add_subcommand("ex", "extremal number ex^r(n; ...)"), "ramsey.ex");
    cli.capture(rex, "--patterns", "patterns");
    cli.capture(rex, "--n", "n");
    auto * rnum = bind(ramsey->add_subcommand("number", "Ramsey number for cliques"), "ramsey.number");
    cli.capture(rnum, "--ell", "ell");
    auto * rres = bind(ramsey->add_subcommand("resilience", "exact Ramsey resilience"), "ramsey.resilience");
    cli.capture(rres, "--patterns", "patterns");
    cli.capture(rres, "--graph", "graph");
    cli.capture(rres, "--n", "n");
    cli.capture(rres, "--k", "k");

    auto * rado = app.add_subcommand("rado", "integer matrix machinery");
    rado->require_subcommand(1);
    auto * rclass = bind(rado->add_subcommand("classify", "rank, (*), columns property, irredundancy"),
                         "rado.classify");
    cli.capture(rclass, "--matrix", "matrix");
    cli.capture(rclass, "--bound", "bound");
    auto * rma = bind(rado->add_subcommand("mA", "matrix density m(A)"), "rado.mA");
    cli.capture(rma, "--matrix", "matrix");
    cli.capture(rma, "--bound", "bound");
    cli.capture_flag(rma, "--assume-irredundant", "assume-irredundant");
    auto * rmu = bind(rado->add_subcommand("mu", "largest (L,r)-free subset of [n]"), "rado.mu");
    cli.capture(rmu, "--matrix", "matrix");
    cli.capture(rmu, "--n", "n");
    cli.capture(rmu, "--r", "r");
    cli.capture(rmu, "--mode", "mode");
    auto * rschur = bind(rado->add_subcommand("schur", "Schur partition numbers f(r), h(r)"), "rado.schur");
    rschur->set_help_flag("--help", "print help"); // frees the short -h for h(r)
    cli.capture(rschur, "--f", "f");
    cli.capture(rschur, "--h", "h");

    auto * containers = app.add_subcommand("containers", "container families");
    containers->require_subcommand(1);
    auto * cbuild = bind(containers->add_subcommand("build", "build a container family"),
                         "containers.build");
    cli.capture(cbuild, "--hypergraph", "hypergraph");
    cli.capture(cbuild, "--matrix", "matrix");
    cli.capture(cbuild, "--patterns", "patterns");
    cli.capture(cbuild, "--n", "n");
    cli.capture(cbuild, "--r", "r");
    cli.capture(cbuild, "--ceiling", "ceiling");
    cli.capture(cbuild, "--refine", "refine");
    auto * cverify = bind(containers->add_subcommand("verify", "check the container family guarantees"),
                          "containers.verify");
    cli.capture(cverify, "--mode", "mode");
    cli.capture(cverify, "--matrix", "matrix");
    cli.capture(cverify, "--patterns", "patterns");
    cli.capture(cverify, "--n", "n");
    cli.capture(cverify, "--r", "r");
    cli.capture(cverify, "--delta", "delta");
    cli.capture(cverify, "--ceiling", "ceiling");
    cli.capture(cverify, "--family", "family");
    cli.capture(cverify, "--solution-mode", "solution-mode");

    auto add_harness_options = [&](CLI::App * cmd) {
        cli.capture(cmd, "--model", "model");
        cli.capture(cmd, "--n", "n");
        cli.capture(cmd, "--k", "k");
        cli.capture(cmd, "--p", "p");
        cli.capture(cmd, "--C", "C");
        cli.capture(cmd, "--exponent-from", "exponent-from");
        cli.capture(cmd, "--seed", "seed");
        cli.capture(cmd, "--trials", "trials");
        cli.capture(cmd, "--ramsey", "ramsey");
        cli.capture(cmd, "--rado", "rado");
        cli.capture(cmd, "--r", "r");
        cli.capture(cmd, "--mode", "mode");
    };
    auto * mc = bind(app.add_subcommand("mc", "Monte Carlo property probability"), "mc");
    add_harness_options(mc);
    auto * scan = bind(app.add_subcommand("scan", "threshold scan over a p grid"), "scan");
    add_harness_options(scan);
    cli.capture(scan, "--p-grid", "p-grid");
    auto * res = bind(app.add_subcommand("resilience", "Monte Carlo resilience distribution"),
                      "resilience");
    add_harness_options(res);

    CLI11_PARSE(app, argc, argv);

    // config file values sit under explicit flags
    if (! cli.config_path.empty()) {
        try {
            auto defaults = rcl::parse_config_file(cli.config_path);
            for (const auto & [k, v] : defaults)
                cli.options.emplace(k, v);
        }
        catch (const std::exception & e) {
            std::cerr << "rcl: " << e.what() << '\n';
            return 1;
        }
    }
    if (cli.json_flag)
        cli.format = "json";

    rcl::RunConfig config{command, cli.options};
    auto envelope = rcl::run(config);
    std::string rendered;
    try {
        rendered = rcl::render_output(envelope, cli.format);
    }
    catch (const std::exception & e) {
        std::cerr << "rcl: " << e.what() << '\n';
        return 1;
    }
    if (! cli.out_path.empty()) {
        std::ofstream f(cli.out_path);
        if (! f) {
            std::cerr << "rcl: cannot open output file " << cli.out_path << '\n';
            return 1;
        }
        f << rendered;
    }
    else
        std::cout << rendered << '\n';
    return rcl::exit_code_for(envelope);
}
