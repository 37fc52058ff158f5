// Command-line front end for the hyperbolic triangle kernel. Talks to the
// library exclusively through the C API in hyptri.h.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hyptri.h"
#include "json.hpp"

using json = nlohmann::ordered_json;

namespace {

// 17 significant digits: lossless double round-trip in CSV and text output.
std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

bool ok(ht_status status) {
    if (status == HT_OK) return true;
    std::fprintf(stderr, "error: %s (%s)\n", ht_last_error(), ht_status_name(status));
    return false;
}

bool write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) {
        std::fprintf(stderr, "error: cannot write %s\n", path.c_str());
        return false;
    }
    return true;
}

struct Grid {
    double lo = 0.0, hi = 0.0;
    int steps = 0;
};

bool parse_grid(const std::string& text, Grid& grid) {
    char trailing = '\0';
    if (std::sscanf(text.c_str(), "%lf:%lf:%d%c", &grid.lo, &grid.hi, &grid.steps,
                    &trailing) != 3)
        return false;
    return grid.lo > 0.0 && grid.hi >= grid.lo && grid.hi <= 50.0 && grid.steps >= 1;
}

std::vector<double> log_spaced(const Grid& grid) {
    std::vector<double> points;
    points.reserve(static_cast<size_t>(grid.steps));
    if (grid.steps == 1) {
        points.push_back(grid.lo);
        return points;
    }
    const double span = std::log(grid.hi / grid.lo);
    for (int i = 0; i < grid.steps - 1; ++i)
        points.push_back(grid.lo * std::exp(span * i / (grid.steps - 1)));
    points.push_back(grid.hi);
    return points;
}

json residuals_json(const ht_condition_report& rep) {
    json out;
    for (int i = 0; i < 6; ++i)
        out["c" + std::to_string(i)] = rep.residual[i];
    return out;
}

std::string residuals_text(const ht_condition_report& rep) {
    char buf[200];
    std::snprintf(buf, sizeof(buf), "c0=%.3g c1=%.3g c2=%.3g c3=%.3g c4=%.3g c5=%.3g",
                  rep.residual[0], rep.residual[1], rep.residual[2], rep.residual[3],
                  rep.residual[4], rep.residual[5]);
    return buf;
}

bool report_passes(const ht_condition_report& rep, double tol) {
    if (!rep.alpha_acute || !rep.circumcircle_compact) return false;
    for (double r : rep.residual)
        if (!(r < tol)) return false;
    return true;
}

double worst_residual(const ht_condition_report& rep, int& index) {
    index = 0;
    for (int i = 1; i < 6; ++i)
        if (rep.residual[i] > rep.residual[index]) index = i;
    return rep.residual[index];
}

struct SolveRow {
    double b = 0.0, c = 0.0, alpha = 0.0, area = 0.0, side = 0.0;
    ht_condition_report report{};
};

bool solve_cell(double b, double c, SolveRow& row) {
    ht_solution* sol = nullptr;
    if (!ok(ht_solve(b, c, &sol))) return false;
    row.b = b;
    row.c = c;
    ht_solution_alpha(sol, &row.alpha);
    ht_solution_area(sol, &row.area);
    ht_solution_side(sol, &row.side);
    const ht_status status = ht_solution_check(sol, &row.report);
    ht_solution_destroy(sol);
    return ok(status);
}

int run_solve(double b, double c, bool as_json) {
    SolveRow row;
    if (!solve_cell(b, c, row)) return 2;
    if (as_json) {
        json j;
        j["b"] = b;
        j["c"] = c;
        j["alpha_star"] = row.alpha;
        j["s_star"] = row.area;
        j["a_star"] = row.side;
        j["residuals"] = residuals_json(row.report);
        std::printf("%s\n", j.dump(2).c_str());
    } else {
        std::printf("b          = %s\n", fmt17(b).c_str());
        std::printf("c          = %s\n", fmt17(c).c_str());
        std::printf("alpha_star = %s\n", fmt17(row.alpha).c_str());
        std::printf("s_star     = %s\n", fmt17(row.area).c_str());
        std::printf("a_star     = %s\n", fmt17(row.side).c_str());
        std::printf("residuals  : %s\n", residuals_text(row.report).c_str());
    }
    return 0;
}

int run_verify(const std::vector<double>& b_axis, const std::vector<double>& c_axis,
               double tol, bool as_json) {
    int checked = 0, failed = 0;
    double worst = -1.0, worst_b = 0.0, worst_c = 0.0;
    int worst_index = -1;
    json cells = json::array();
    for (double b : b_axis) {
        for (double c : c_axis) {
            SolveRow row;
            if (!solve_cell(b, c, row)) return 2;
            ++checked;
            const bool pass = report_passes(row.report, tol);
            if (!pass) ++failed;
            int index = 0;
            const double w = worst_residual(row.report, index);
            if (w > worst) {
                worst = w;
                worst_b = b;
                worst_c = c;
                worst_index = index;
            }
            if (as_json) {
                json cell;
                cell["b"] = b;
                cell["c"] = c;
                cell["residuals"] = residuals_json(row.report);
                cell["pass"] = pass;
                cells.push_back(cell);
            }
        }
    }
    if (as_json) {
        json j;
        j["cells_checked"] = checked;
        j["tol"] = tol;
        j["failed"] = failed;
        json w;
        w["b"] = worst_b;
        w["c"] = worst_c;
        w["condition"] = "c" + std::to_string(worst_index);
        w["value"] = worst;
        j["worst"] = w;
        j["pass"] = failed == 0;
        j["cells"] = cells;
        std::printf("%s\n", j.dump(2).c_str());
    } else {
        const std::string verdict = failed == 0
                                        ? std::string("all cells passed")
                                        : std::to_string(failed) + " cells FAILED";
        std::printf("verify: %d cells, tol %s\n", checked, fmt17(tol).c_str());
        std::printf("%s; worst residual %.3g (c%d at b=%s, c=%s)\n", verdict.c_str(),
                    worst, worst_index, fmt17(worst_b).c_str(), fmt17(worst_c).c_str());
    }
    return failed == 0 ? 0 : 3;
}

int run_sweep(const std::vector<double>& axis, const std::string& csv_path,
              bool as_json) {
    std::string csv = "b,c,alpha_star,s_star,a_star\n";
    json rows = json::array();
    for (double b : axis) {
        for (double c : axis) {
            ht_solution* sol = nullptr;
            if (!ok(ht_solve(b, c, &sol))) return 2;
            double alpha = 0.0, area = 0.0, side = 0.0;
            ht_solution_alpha(sol, &alpha);
            ht_solution_area(sol, &area);
            ht_solution_side(sol, &side);
            ht_solution_destroy(sol);
            csv += fmt17(b) + "," + fmt17(c) + "," + fmt17(alpha) + "," + fmt17(area) +
                   "," + fmt17(side) + "\n";
            if (as_json) {
                json row;
                row["b"] = b;
                row["c"] = c;
                row["alpha_star"] = alpha;
                row["s_star"] = area;
                row["a_star"] = side;
                rows.push_back(row);
            }
        }
    }
    if (!csv_path.empty() && !write_text_file(csv_path, csv)) return 2;
    if (as_json) {
        std::printf("%s\n", rows.dump(2).c_str());
    } else if (csv_path.empty()) {
        std::fputs(csv.c_str(), stdout);
    } else {
        std::printf("wrote %zu rows to %s\n",
                    axis.size() * axis.size(), csv_path.c_str());
    }
    return 0;
}

int run_construct(double b, double c, const std::string& svg_path, bool as_json) {
    ht_solution* sol = nullptr;
    if (!ok(ht_solve(b, c, &sol))) return 2;
    char* svg = nullptr;
    if (!ok(ht_render_construction_svg(sol, &svg))) {
        ht_solution_destroy(sol);
        return 2;
    }
    const std::string svg_text(svg);
    ht_string_free(svg);

    double ax, ay, bx, by, cx, cy, ix, iy, ocx, ocy, oradius, alpha, area, side;
    ht_solution_vertices(sol, &ax, &ay, &bx, &by, &cx, &cy);
    ht_solution_inverse_point(sol, &ix, &iy);
    ht_solution_omega(sol, &ocx, &ocy, &oradius);
    ht_solution_alpha(sol, &alpha);
    ht_solution_area(sol, &area);
    ht_solution_side(sol, &side);
    ht_solution_destroy(sol);

    if (!svg_path.empty() && !write_text_file(svg_path, svg_text)) return 2;
    if (svg_path.empty() && !as_json) {
        std::fputs(svg_text.c_str(), stdout);
        return 0;
    }
    if (as_json) {
        json j;
        j["b"] = b;
        j["c"] = c;
        j["alpha_star"] = alpha;
        j["s_star"] = area;
        j["a_star"] = side;
        j["vertices"] = {{"a", {ax, ay}}, {"b", {bx, by}}, {"c", {cx, cy}}};
        j["b_inverse"] = {ix, iy};
        j["omega"] = {{"center", {ocx, ocy}}, {"radius", oradius}};
        if (!svg_path.empty()) j["svg"] = svg_path;
        std::printf("%s\n", j.dump(2).c_str());
    } else {
        std::printf("construct: b=%s c=%s\n", fmt17(b).c_str(), fmt17(c).c_str());
        std::printf("A  = (%s, %s)\n", fmt17(ax).c_str(), fmt17(ay).c_str());
        std::printf("B  = (%s, %s)\n", fmt17(bx).c_str(), fmt17(by).c_str());
        std::printf("C  = (%s, %s)\n", fmt17(cx).c_str(), fmt17(cy).c_str());
        std::printf("B' = (%s, %s)\n", fmt17(ix).c_str(), fmt17(iy).c_str());
        std::printf("omega: hyperbolic radius %s about A\n", fmt17(oradius).c_str());
        std::printf("wrote SVG to %s\n", svg_path.c_str());
    }
    return 0;
}

int run_shvartsman(double c_len, double tau, int samples, double tol, bool as_json) {
    const double bx = std::tanh(0.5 * c_len);
    double tau_max = 0.0;
    if (!ok(ht_max_chord_angle(bx, 0.0, &tau_max))) return 2;
    ht_chord* chord = nullptr;
    if (!ok(ht_chord_create(bx, 0.0, tau, &chord))) return 2;

    double ix = 0.0, iy = 0.0;
    ht_chord_inverse_point(chord, &ix, &iy);
    const double expected = 2.0 * tau;
    double max_deviation = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double u = samples == 1 ? 0.5 : static_cast<double>(i) / (samples - 1);
        double x = 0.0, y = 0.0, area = 0.0;
        if (!ok(ht_chord_sample(chord, u, &x, &y)) ||
            !ok(ht_chord_area_at(chord, x, y, &area))) {
            ht_chord_destroy(chord);
            return 2;
        }
        max_deviation = std::max(max_deviation, std::abs(area - expected));
    }
    ht_chord_destroy(chord);

    const bool pass = max_deviation < tol;
    if (as_json) {
        json j;
        j["c"] = c_len;
        j["b_point"] = {bx, 0.0};
        j["b_inverse"] = {ix, iy};
        j["tau"] = tau;
        j["tau_max"] = tau_max;
        j["area"] = expected;
        j["samples"] = samples;
        j["max_deviation"] = max_deviation;
        j["pass"] = pass;
        std::printf("%s\n", j.dump(2).c_str());
    } else {
        std::printf("shvartsman: |AB| = %s, B = (%s, 0), B' = (%s, 0)\n",
                    fmt17(c_len).c_str(), fmt17(bx).c_str(), fmt17(ix).c_str());
        std::printf("tau = %s (tau_max = %s), expected area 2*tau = %s\n",
                    fmt17(tau).c_str(), fmt17(tau_max).c_str(), fmt17(expected).c_str());
        std::printf("%d samples: max |S - 2*tau| = %.3g -> %s\n", samples, max_deviation,
                    pass ? "constant" : "NOT constant");
    }
    return pass ? 0 : 3;
}

int run_isoperimetric(double perimeter, int max_n, const std::string& csv_path,
                      bool as_json) {
    double circle_area = 0.0;
    if (!ok(ht_circle_area_for_perimeter(perimeter, &circle_area))) return 2;

    std::vector<double> radius(static_cast<size_t>(max_n) + 1, 0.0);
    std::vector<double> area(static_cast<size_t>(max_n) + 1, 0.0);
    bool monotone = true, below = true;
    for (int n = 3; n <= max_n; ++n) {
        if (!ok(ht_regular_polygon(n, perimeter, &radius[n], &area[n]))) return 2;
        if (n > 3 && area[n] <= area[n - 1]) monotone = false;
        if (area[n] >= circle_area) below = false;
    }

    // Richardson step for the 1/n^2 convergence; needs the half-resolution row.
    double extrapolated = area[max_n];
    if (max_n % 2 == 0 && max_n / 2 >= 3)
        extrapolated = area[max_n] + (area[max_n] - area[max_n / 2]) / 3.0;
    const double relative_gap = std::abs(extrapolated - circle_area) / circle_area;

    if (!csv_path.empty()) {
        std::string csv = "n,circumradius,area\n";
        for (int n = 3; n <= max_n; ++n)
            csv += std::to_string(n) + "," + fmt17(radius[n]) + "," + fmt17(area[n]) + "\n";
        if (!write_text_file(csv_path, csv)) return 2;
    }

    const bool pass = monotone && below;
    if (as_json) {
        json rows = json::array();
        for (int n = 3; n <= max_n; ++n) {
            json row;
            row["n"] = n;
            row["circumradius"] = radius[n];
            row["area"] = area[n];
            rows.push_back(row);
        }
        json j;
        j["perimeter"] = perimeter;
        j["max_n"] = max_n;
        j["circle_area"] = circle_area;
        j["monotone_increasing"] = monotone;
        j["below_circle_area"] = below;
        j["extrapolated_limit"] = extrapolated;
        j["relative_gap"] = relative_gap;
        j["pass"] = pass;
        j["rows"] = rows;
        std::printf("%s\n", j.dump(2).c_str());
    } else {
        std::printf("isoperimetric: perimeter %s, n = 3..%d\n", fmt17(perimeter).c_str(),
                    max_n);
        std::printf("circle area = %s\n", fmt17(circle_area).c_str());
        for (int n = 3; n <= max_n; n = n < 4 ? 4 : 2 * n)
            std::printf("n=%-4d area = %s\n", n, fmt17(area[n]).c_str());
        if (max_n > 4 && (max_n & (max_n - 1)) != 0)
            std::printf("n=%-4d area = %s\n", max_n, fmt17(area[max_n]).c_str());
        std::printf("strictly increasing in n: %s\n", monotone ? "yes" : "NO");
        std::printf("below the circle area:    %s\n", below ? "yes" : "NO");
        std::printf("extrapolated limit %s (relative gap %.3g)\n",
                    fmt17(extrapolated).c_str(), relative_gap);
    }
    return pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Maximum-area triangles and equal-area chords on the Poincare disc"};
    app.require_subcommand(1);
    app.set_version_flag("--version", []() { return std::string(ht_version()); });

    double b = 0.0, c = 0.0, tau = 0.0, tol = 1e-9, perimeter = 0.0;
    int samples = 100, max_n = 256;
    std::string grid_text, csv_path, svg_path;
    bool as_json = false;

    CLI::App* solve = app.add_subcommand("solve", "Optimal triangle for two fixed sides");
    solve->add_option("--b", b, "side AC (hyperbolic length)")->required();
    solve->add_option("--c", c, "side AB (hyperbolic length)")->required();
    solve->add_flag("--json", as_json, "emit JSON");

    CLI::App* verify =
        app.add_subcommand("verify", "Check the six optimality conditions on a grid");
    verify->add_option("--grid", grid_text, "log-spaced grid min:max:steps");
    verify->add_option("--b", b, "single-cell side AC");
    verify->add_option("--c", c, "single-cell side AB");
    verify->add_option("--tol", tol, "residual tolerance")->capture_default_str();
    verify->add_flag("--json", as_json, "emit JSON");

    CLI::App* sweep = app.add_subcommand("sweep", "Tabulate closed forms over a grid");
    sweep->add_option("--grid", grid_text, "log-spaced grid min:max:steps")->required();
    sweep->add_option("--csv", csv_path, "write CSV to this path");
    sweep->add_flag("--json", as_json, "emit JSON");

    CLI::App* construct =
        app.add_subcommand("construct", "Tangent construction of the optimal triangle");
    construct->add_option("--b", b, "side AC (hyperbolic length)")->required();
    construct->add_option("--c", c, "side AB (hyperbolic length)")->required();
    construct->add_option("--svg", svg_path, "write the figure to this path");
    construct->add_flag("--json", as_json, "emit JSON");

    CLI::App* shvartsman =
        app.add_subcommand("shvartsman", "Equal-area chord demonstration");
    shvartsman->add_option("--c", c, "segment length |AB|")->required();
    shvartsman->add_option("--tau", tau, "chord angle at B'")->required();
    shvartsman->add_option("--samples", samples, "points sampled on the chord")
        ->capture_default_str();
    shvartsman->add_option("--tol", tol, "constancy tolerance")->capture_default_str();
    shvartsman->add_flag("--json", as_json, "emit JSON");

    CLI::App* isoperimetric =
        app.add_subcommand("isoperimetric", "Polygon areas against the circle bound");
    isoperimetric->add_option("--perimeter", perimeter, "common perimeter")->required();
    isoperimetric->add_option("--max-n", max_n, "largest vertex count")
        ->capture_default_str();
    isoperimetric->add_option("--csv", csv_path, "write per-n rows to this path");
    isoperimetric->add_flag("--json", as_json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const auto bad = [](const char* message) {
        std::fprintf(stderr, "error: %s\n", message);
        return 2;
    };
    const auto side_ok = [](double v) { return v > 0.0 && v <= 50.0; };

    if (*solve) {
        if (!side_ok(b) || !side_ok(c)) return bad("--b and --c must lie in (0, 50]");
        return run_solve(b, c, as_json);
    }
    if (*verify) {
        if (!(tol > 0.0)) return bad("--tol must be positive");
        if (!grid_text.empty()) {
            Grid grid;
            if (!parse_grid(grid_text, grid))
                return bad("--grid must be min:max:steps with 0 < min <= max <= 50");
            const std::vector<double> axis = log_spaced(grid);
            return run_verify(axis, axis, tol, as_json);
        }
        if (side_ok(b) && side_ok(c))
            return run_verify({b}, {c}, tol, as_json);
        return bad("verify needs --grid or both --b and --c in (0, 50]");
    }
    if (*sweep) {
        Grid grid;
        if (!parse_grid(grid_text, grid))
            return bad("--grid must be min:max:steps with 0 < min <= max <= 50");
        return run_sweep(log_spaced(grid), csv_path, as_json);
    }
    if (*construct) {
        if (!side_ok(b) || !side_ok(c)) return bad("--b and --c must lie in (0, 50]");
        return run_construct(b, c, svg_path, as_json);
    }
    if (*shvartsman) {
        if (!side_ok(c)) return bad("--c must lie in (0, 50]");
        if (!(tau > 0.0)) return bad("--tau must be positive");
        if (samples < 1 || samples > 1000000) return bad("--samples must be in [1, 1e6]");
        if (!(tol > 0.0)) return bad("--tol must be positive");
        return run_shvartsman(c, tau, samples, tol, as_json);
    }
    if (*isoperimetric) {
        if (!(perimeter > 0.0) || perimeter > 1e6)
            return bad("--perimeter must lie in (0, 1e6]");
        if (max_n < 3 || max_n > 100000) return bad("--max-n must be in [3, 1e5]");
        return run_isoperimetric(perimeter, max_n, csv_path, as_json);
    }
    return bad("no subcommand selected");
}
