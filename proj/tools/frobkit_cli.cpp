#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "frobkit/dsl/interpreter.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Commutative algebra in positive characteristic: Groebner bases, Frobenius powers, colons and lengths"};
    frobkit::dsl::RunOptions options;
    std::string script_path;
    std::string order = "grevlex";
    std::string workspace;
    bool json = false;

    app.add_option("script", script_path, "Script file; standard input when omitted or '-'");
    app.add_option("--order", order, "Monomial order of every ring")
        ->check(CLI::IsMember({"lex", "grlex", "grevlex"}));
    app.add_option("--seed", options.seed, "Seed for randomized searches");
    app.add_option("--budget", options.budget, "S-pair reductions allowed per basis computation");
    app.add_option("--workspace", workspace, "Directory holding the basis cache");
    auto* json_flag = app.add_flag("--json", json, "One JSON object per line (default)");
    app.add_flag("--pretty", options.pretty, "Indented JSON")->excludes(json_flag);
    CLI11_PARSE(app, argc, argv);

    options.order = *frobkit::parse_order_kind(order);
    if (!workspace.empty()) options.workspace = workspace;

    std::string source;
    if (script_path.empty() || script_path == "-") {
        source.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(script_path);
        if (!in) {
            std::cerr << "error: cannot read " << script_path << "\n";
            return frobkit::dsl::exit_command_error;
        }
        std::ostringstream buffer;
        buffer << in.rdbuf();
        source = buffer.str();
    }
    return frobkit::dsl::run_script(source, options, std::cout, std::cerr);
}
