// Command-line front end: tvb <command> <input.json> [flags]
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "tvb/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Cox rings of projectivized rank-two toric vector bundles"};
    app.require_subcommand(1);
    tvb::cli::Options opt;

    struct Command {
        const char* name;
        const char* help;
    };
    const Command commands[] = {
        {"validate", "check fan, smoothness and bundle compatibility"},
        {"classify", "group rays by the lines of their filtrations"},
        {"dim", "dimension of one graded piece (needs --degree)"},
        {"chambers", "print the chamber cones, or the chamber of --degree"},
        {"hilbert", "semigroup generators of every chamber"},
        {"generators", "write the generator document"},
        {"verify", "run the chamber, Hilbert basis and generation suites"},
    };
    for (const auto& c : commands) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        sub->add_option("input", opt.input, "input JSON document")->required();
        sub->add_option("--degree", opt.degree, "degree as u1,...,un;m;m1,...,md");
        sub->add_option("--grid", opt.grid, "grid bound on |coordinates| (default 3c)");
        sub->add_option("--box", opt.box, "box bound for Hilbert completeness (default 4c)");
        sub->add_option("--cap", opt.cap, "largest coefficient on a unit-degree generator pair (default 10)");
        sub->add_option("--output", opt.output, "write the document to this path");
        sub->add_option("--generators", opt.generators, "generator document to verify instead of recomputing");
        sub->add_flag("--verbose,-v", opt.verbose, "print details");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return tvb::cli::kUsage;
    }
    for (const auto& c : commands)
        if (app.got_subcommand(c.name)) return tvb::cli::dispatch(c.name, opt, std::cout, std::cerr);
    return tvb::cli::kUsage;
}
