#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "fueterlab/bargmann.hpp"
#include "fueterlab/json_io.hpp"
#include "fueterlab/suites.hpp"

using namespace fueterlab;

namespace {

QuatD parse_point(const std::string& at) {
    std::array<double, 4> v{};
    std::stringstream ss(at);
    std::string part;
    for (int i = 0; i < 4; ++i) {
        if (!std::getline(ss, part, ','))
            throw std::invalid_argument("point must be four comma-separated reals");
        size_t used = 0;
        v[i] = std::stod(part, &used);
        if (used != part.size())
            throw std::invalid_argument("malformed point component '" + part + "'");
    }
    if (std::getline(ss, part, ','))
        throw std::invalid_argument("point must have exactly four components");
    return {v[0], v[1], v[2], v[3]};
}

int cmd_verify(const std::string& suite, const SuiteConfig& cfg,
               const std::string& json_path) {
    std::vector<VerificationReport> reports;
    try {
        reports = run_suite(suite, cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    std::string text = arr.dump(2);
    text.push_back('\n');
    if (json_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(json_path, std::ios::binary);
        if (!out || !(out << text)) {
            std::cerr << "error: cannot write report to '" << json_path << "'\n";
            return 2;
        }
    }
    long fails = 0, flagged = 0;
    for (const auto& r : reports) {
        if (r.status == VerificationReport::Status::fail) ++fails;
        if (r.status == VerificationReport::Status::flagged) ++flagged;
    }
    std::cerr << reports.size() << " checks, " << fails << " failed, " << flagged
              << " flagged\n";
    return fails ? 1 : 0;
}

int cmd_eval(const std::string& object, int k, int s, int m, int p, int n,
             const std::string& at, double x, int trunc) {
    QuatD q = parse_point(at);
    QuatD value;
    if (object == "Q") {
        value = eval_appell_Q(k, q);
    } else if (object == "M") {
        value = eval_gen_M(k, s, q);
    } else if (object == "Hq") {
        value = eval_qhermite(m, p, q);
    } else if (object == "K") {
        value = kernel_K(n, q, x, trunc).closed;
    } else if (object == "Phi") {
        value = kernel_Phi(n, q, x, trunc);
    } else if (object == "Theta") {
        value = kernel_Theta(n, q, x, trunc);
    } else {
        throw std::invalid_argument("unknown object '" + object + "'");
    }
    std::cout << to_json(value).dump(2) << "\n";
    return 0;
}

int cmd_transform(const std::string& map_name, const std::string& input,
                  const std::string& output) {
    std::ifstream in(input, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read '" << input << "'\n";
        return 2;
    }
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        std::cerr << "error: invalid JSON in '" << input << "': " << e.what() << "\n";
        return 2;
    }
    NCPoly image;
    try {
        SliceCoeffMatrix f = matrix_from_json(j);
        image = map_name == "C" ? map_C(f) : map_tau(f);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::ofstream out(output, std::ios::binary);
    if (!out || !(out << to_json(image).dump(2) << "\n")) {
        std::cerr << "error: cannot write '" << output << "'\n";
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification engine for slice polyanalytic Fock-space calculus"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all", json_path;
    SuiteConfig cfg;
    verify->add_option("--suite", suite,
                       "appell|fueter|hermite|fock|bargmann|kernel|all");
    verify->add_option("--n-max", cfg.n_max, "order grid bound (<= 4)");
    verify->add_option("--deg-max", cfg.deg_max, "degree grid bound (<= 12)");
    verify->add_option("--trunc", cfg.trunc, "series truncation");
    verify->add_option("--tol", cfg.tol, "float tolerance");
    verify->add_option("--json", json_path, "report output path (default stdout)");
    verify->add_option("--seed", cfg.seed, "seed for random instances");

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate an object at a point");
    std::string object, at = "0,0,0,0";
    int k = 0, s = 0, m = 0, p = 0, n = 0, trunc = 64;
    double x = 0.0;
    eval->add_option("object", object, "Q|M|Hq|K|Phi|Theta")->required();
    eval->add_option("--k", k, "degree index");
    eval->add_option("--s", s, "slice-regular degree for M");
    eval->add_option("--m", m, "qbar degree for Hq");
    eval->add_option("--p", p, "q degree for Hq");
    eval->add_option("--n", n, "kernel order");
    eval->add_option("--at", at, "quaternion point w,x,y,z");
    eval->add_option("--x", x, "real kernel argument");
    eval->add_option("--trunc", trunc, "kernel truncation");

    // transform
    auto* transform = app.add_subcommand("transform", "apply a Fueter map to a file");
    std::string map_name, input, output;
    transform->add_option("--map", map_name, "C|tau")
        ->required()
        ->check(CLI::IsMember({"C", "tau"}));
    transform->add_option("input", input, "SliceCoeffMatrix JSON path")->required();
    transform->add_option("output", output, "NCPoly JSON output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(suite, cfg, json_path);
        if (eval->parsed()) return cmd_eval(object, k, s, m, p, n, at, x, trunc);
        return cmd_transform(map_name, input, output);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
