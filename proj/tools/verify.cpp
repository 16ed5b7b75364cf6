#include "gstruct/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace gstruct;

namespace {

std::vector<std::string> split_ids(const std::vector<std::string>& raw)
{
    std::vector<std::string> out;
    for (const auto& r : raw) {
        std::stringstream ss(r);
        for (std::string piece; std::getline(ss, piece, ',');)
            if (!piece.empty()) out.push_back(piece);
    }
    return out;
}

std::map<std::string, Rational> parse_params(const std::vector<std::string>& raw)
{
    std::map<std::string, Rational> out;
    for (const auto& p : raw) {
        const auto eq = p.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("--param expects k=v, got '" + p + "'");
        try {
            out[p.substr(0, eq)] = parse_rational(p.substr(eq + 1));
        } catch (const std::invalid_argument& e) {
            throw UsageError("--param " + p + ": " + e.what());
        }
    }
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact verification of G-structure identities on model spaces"};
    std::string model, format = "json", frame_file;
    std::vector<std::string> params, checks;
    app.add_option("--model", model, "model name: nil6, s6_nk, s7_np, s5_sasaki");
    app.add_option("--param", params, "model parameter k=v with v rational")->take_all();
    app.add_option("--check", checks, "comma-separated ids or groups, or all")->take_all();
    app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--frame-file", frame_file, "structure equations of a Lie algebra");
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (model.empty() == frame_file.empty()) throw UsageError("give exactly one of --model or --frame-file");
        const auto selection = split_ids(checks);
        std::vector<CheckResult> results;
        std::vector<std::string> commentary;
        if (!frame_file.empty()) {
            if (!params.empty()) throw UsageError("--param applies to --model only");
            std::ifstream in(frame_file);
            if (!in) throw UsageError("cannot read " + frame_file);
            std::stringstream buf;
            buf << in.rdbuf();
            results = run_frame_scenario(parse_frame(buf.str()), selection);
        } else {
            const auto handle = make_model(model, parse_params(params));
            results = run_scenario(handle, selection);
            commentary = scenario_commentary(model);
        }
        std::cout << (format == "json" ? render_json(results, commentary) : render_text(results, commentary));
        for (const auto& r : results)
            if (r.status == Status::fail || r.status == Status::c0_conflict) return 1;
        return 0;
    } catch (const ParseError& e) {
        std::cerr << frame_file << ":" << e.what() << '\n';
        return 2;
    } catch (const InvalidFrame& e) {
        std::cerr << frame_file << ": " << e.what() << '\n';
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
