#include "valconv/serialization.hpp"
#include "valconv/valuation.hpp"
#include "valconv/verify.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

namespace {

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_text(out_path, content);
}

int run_eval(const std::string& scene_path, const std::string& name,
             std::vector<std::string> probes, const std::string& out_path) {
    valconv::Scene scene = valconv::load_scene(scene_path);
    auto vit = scene.valuations.find(name);
    if (vit == scene.valuations.end())
        throw std::runtime_error("scene has no valuation named " + name);
    if (probes.empty())
        probes = scene.probes;
    std::string csv = "probe,value\n";
    for (const auto& pname : probes) {
        auto bit = scene.bodies.find(pname);
        if (bit == scene.bodies.end())
            throw std::runtime_error("scene has no body named " + pname);
        double value = valconv::evaluate(vit->second, bit->second);
        csv += pname + "," + valconv::format_g17(value) + "\n";
    }
    emit(out_path, csv);
    return 0;
}

int run_convolve(const std::string& scene_path, const std::string& left,
                 const std::string& right, const std::string& path_name,
                 const std::string& out_path) {
    valconv::Scene scene = valconv::load_scene(scene_path);
    auto find = [&](const std::string& name) -> const valconv::SmoothValuation& {
        auto it = scene.valuations.find(name);
        if (it == scene.valuations.end())
            throw std::runtime_error("scene has no valuation named " + name);
        return it->second;
    };
    valconv::ConvPath path = valconv::ConvPath::kAuto;
    if (path_name == "direct")
        path = valconv::ConvPath::kDirect;
    else if (path_name == "spectral")
        path = valconv::ConvPath::kSpectral;
    valconv::SmoothValuation result = valconv::convolve(find(left), find(right), path);
    emit(out_path, valconv::valuation_to_json(result).dump(2) + "\n");
    return 0;
}

int run_verify(const std::string& suite, const valconv::VerifyOptions& opt,
               const std::string& out_path) {
    std::vector<valconv::CheckResult> checks = valconv::run_suite(suite, opt);
    int passed = 0;
    for (const auto& c : checks) {
        std::printf("%s  [%2d] %-28s measured %11.4e  limit %11.4e  %6.2f s\n",
                    c.pass ? "PASS" : "FAIL", c.criterion, c.name.c_str(), c.measured, c.limit,
                    c.seconds);
        if (c.pass)
            ++passed;
    }
    bool ok = valconv::all_pass(checks);
    std::printf("suite %s: %d/%zu checks passed\n", suite.c_str(), passed, checks.size());
    if (!out_path.empty()) {
        valconv::Json report;
        report["suite"] = suite;
        report["seed"] = opt.seed;
        report["grid_spacing"] = opt.grid_spacing;
        report["tolerance"] = opt.tolerance;
        report["pass"] = ok;
        report["checks"] = valconv::Json::array();
        for (const auto& c : checks) {
            valconv::Json row;
            row["criterion"] = c.criterion;
            row["name"] = c.name;
            row["measured"] = c.measured;
            row["limit"] = c.limit;
            row["pass"] = c.pass;
            row["seconds"] = c.seconds;
            row["details"] = c.details;
            report["checks"].push_back(row);
        }
        write_text(out_path, report.dump(2) + "\n");
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"convolution algebra of smooth valuations: evaluate, convolve, verify"};
    app.require_subcommand(1);

    std::string scene_path;
    std::string out_path;

    std::string eval_name;
    std::vector<std::string> eval_probes;
    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a named valuation on probe bodies");
    eval_cmd->add_option("valuation", eval_name, "valuation name in the scene")->required();
    eval_cmd->add_option("probe", eval_probes, "probe body names (default: the scene's probes)");
    eval_cmd->add_option("--scene", scene_path, "scene file")->required();
    eval_cmd->add_option("--out", out_path, "write CSV here instead of stdout");

    std::string left;
    std::string right;
    std::string path_name = "auto";
    CLI::App* conv_cmd = app.add_subcommand("convolve", "convolve two named valuations");
    conv_cmd->add_option("left", left, "left valuation name")->required();
    conv_cmd->add_option("right", right, "right valuation name")->required();
    conv_cmd->add_option("--scene", scene_path, "scene file")->required();
    conv_cmd->add_option("--path", path_name, "convolution path")
        ->check(CLI::IsMember({"auto", "direct", "spectral"}));
    conv_cmd->add_option("--out", out_path, "write JSON here instead of stdout");

    std::string suite;
    valconv::VerifyOptions verify_opt;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run a property check suite");
    verify_cmd->add_option("suite", suite, "algebra, oned, steiner, tau or all")
        ->required()
        ->check(CLI::IsMember({"algebra", "oned", "steiner", "tau", "all"}));
    verify_cmd->add_option("--seed", verify_opt.seed, "random seed");
    verify_cmd->add_option("--grid-spacing", verify_opt.grid_spacing,
                           "one dimensional engine spacing");
    verify_cmd->add_option("--tolerance", verify_opt.tolerance,
                           "override the default agreement limits");
    verify_cmd->add_option("--out", out_path, "write a JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (eval_cmd->parsed())
            return run_eval(scene_path, eval_name, eval_probes, out_path);
        if (conv_cmd->parsed())
            return run_convolve(scene_path, left, right, path_name, out_path);
        return run_verify(suite, verify_opt, out_path);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
