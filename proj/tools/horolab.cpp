#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

#include "horolab/figures.hpp"
#include "horolab/sampling.hpp"
#include "horolab/trig.hpp"
#include "horolab/verify.hpp"

namespace {

int write_or_print(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return 0;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open output file: " << out_path << "\n";
        return 1;
    }
    file << content;
    return file.good() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"horolab: hyperbolic constructions, figures, and verification suites"};
    app.require_subcommand(1);

    double curvature = 1.0;
    std::uint64_t seed = 42;
    std::string out_path;
    std::string projection = "poincare";
    double tol = -1.0;  // negative means "no override"
    app.add_option("--curvature", curvature, "curvature radius r (K = -1/r^2)");
    app.add_option("--seed", seed, "random seed for sampled checks");
    app.add_option("--tol", tol, "override every check tolerance (fault injection)");
    app.add_option("--out", out_path, "output file (default: stdout for text formats)");
    app.add_option("--projection", projection, "disk projection: poincare | klein")
        ->check(CLI::IsMember({"poincare", "klein"}));

    std::string figure_name;
    CLI::App* fig = app.add_subcommand("figure", "render a construction as SVG");
    fig->add_option("name", figure_name, "one of fig1..fig8")->required();

    double d_min = 0.05, d_max = 5.0;
    int steps = 40;
    CLI::App* table = app.add_subcommand("table", "angle-of-parallelism table (CSV)");
    table->add_option("--dmin", d_min, "smallest distance");
    table->add_option("--dmax", d_max, "largest distance");
    table->add_option("--steps", steps, "number of rows");

    std::string suite;
    CLI::App* verify = app.add_subcommand("verify", "run a module invariant suite");
    verify->add_option("suite", suite, "parallels | horosphere | duality | units | all")
        ->required();

    double ta = -1.0, tb = -1.0, tc = -1.0, tA = -1.0, tB = -1.0;
    CLI::App* duality = app.add_subcommand(
        "duality", "identity-by-identity imaginary-substitution report");
    duality->add_option("--a", ta, "side a");
    duality->add_option("--b", tb, "side b");
    duality->add_option("--c", tc, "side c");
    duality->add_option("--A", tA, "angle A (radians)");
    duality->add_option("--B", tB, "angle B (radians)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    horolab::Curvature k{curvature};
    try {
        if (fig->parsed()) {
            const auto& names = horolab::figure_names();
            if (std::find(names.begin(), names.end(), figure_name) == names.end()) {
                std::cerr << "error: unknown figure '" << figure_name << "'\n";
                return 2;
            }
            if (out_path.empty()) out_path = figure_name + ".svg";
            horolab::DiskModel model = projection == "klein" ? horolab::DiskModel::Klein
                                                             : horolab::DiskModel::Poincare;
            horolab::write_figure(figure_name, out_path, k, model);
            std::cout << "wrote " << out_path << "\n";
            return 0;
        }

        if (table->parsed()) {
            if (!(0.0 < d_min && d_min < d_max) || steps < 2) {
                std::cerr << "error: table requires 0 < dmin < dmax and steps >= 2\n";
                return 2;
            }
            return write_or_print(horolab::parallelism_table_csv(d_min, d_max, steps, k),
                                  out_path);
        }

        if (verify->parsed()) {
            const auto& names = horolab::suite_names();
            if (std::find(names.begin(), names.end(), suite) == names.end()) {
                std::cerr << "error: unknown suite '" << suite << "'\n";
                return 2;
            }
            std::optional<double> tol_override;
            if (tol >= 0.0) tol_override = tol;
            horolab::SuiteReport rep = horolab::run_suite(suite, seed, k, tol_override);
            std::cout << horolab::report_to_text(rep);
            if (!out_path.empty()) {
                if (write_or_print(horolab::report_to_json(rep), out_path) != 0) return 1;
            }
            return rep.all_pass() ? 0 : 1;
        }

        if (duality->parsed()) {
            if (ta < 0.0) {  // default: a synthesized right triangle
                horolab::Rng rng(seed);
                horolab::TriangleMeasurements t = horolab::synthesize_right_triangle(rng, k);
                ta = t.a;
                tb = t.b;
                tc = t.c;
                tA = t.A;
                tB = t.B;
            }
            horolab::SubstitutionReport rep =
                horolab::imaginary_substitution_report(ta, tb, tc, tA, tB);
            nlohmann::json j;
            j["a"] = ta;
            j["b"] = tb;
            j["c"] = tc;
            j["A"] = tA;
            j["B"] = tB;
            j["identities"] = nlohmann::json::array();
            for (const auto& e : rep.identities) {
                nlohmann::json je;
                je["spherical"] = e.spherical;
                je["hyperbolic"] = e.hyperbolic;
                je["i_power"] = e.i_power;
                je["residual"] = e.residual;
                je["imag_leak"] = e.imag_leak;
                j["identities"].push_back(je);
            }
            j["max_residual"] = rep.max_residual;
            return write_or_print(j.dump(2) + "\n", out_path);
        }
    } catch (const horolab::FigureError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
