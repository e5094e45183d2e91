#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fvw/fv_ops.hpp"
#include "fvw/io.hpp"
#include "fvw/stats.hpp"
#include "fvw/wigner.hpp"

using namespace fvw;
using nlohmann::json;

namespace {

struct GridFlags {
    int n = 1024;
    double p_max = 16.0, hbar = 1.0, mass = 1.0, c = 1.0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--n", n, "grid points per axis");
        cmd->add_option("--p-max", p_max, "momentum half-width");
        cmd->add_option("--hbar", hbar, "Planck constant");
        cmd->add_option("--mass", mass, "particle mass");
        cmd->add_option("--c", c, "speed of light");
    }
    PhaseSpaceGrid make() const { return make_grid(n, p_max, hbar, mass, c); }
};

bool ends_with(const std::string& s, const std::string& suf) {
    return s.size() >= suf.size() &&
           s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
}

void write_json(const json& j, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << j.dump(1) << "\n";
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open for writing: " + path);
    out << j.dump(1) << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"phase-space calculus for two-component scalar particles"};
    app.require_subcommand(1);

    // gaussian
    auto* cg = app.add_subcommand("gaussian", "write a Gaussian packet state");
    GridFlags gf_g;
    gf_g.attach(cg);
    double sigma2 = 1.0, p0 = 0.0, q0 = 0.0;
    int charge = 1;
    std::string out_path = "state.json";
    cg->add_option("--sigma2", sigma2, "momentum variance");
    cg->add_option("--charge", charge, "+1 or -1");
    cg->add_option("--p0", p0, "momentum center");
    cg->add_option("--q0", q0, "coordinate center");
    cg->add_option("-o,--output", out_path, "state file path");

    // wigner
    auto* cw = app.add_subcommand("wigner", "state file -> component CSV");
    std::string in_w, out_w = "wigner.csv";
    cw->add_option("state", in_w, "input state file")->required();
    cw->add_option("-o,--output", out_w, "CSV path");

    // evolve
    auto* ce = app.add_subcommand("evolve", "free evolution of a state file");
    std::string in_e, out_e = "evolved.json";
    double t_e = 0.0;
    ce->add_option("state", in_e, "input state file")->required();
    ce->add_option("--t", t_e, "time")->required();
    ce->add_option("-o,--output", out_e, "output state file");

    // moments
    auto* cm = app.add_subcommand("moments", "coordinate moment report");
    std::string in_m, out_m;
    int order = 2;
    cm->add_option("state", in_m, "input state file")->required();
    cm->add_option("--n", order, "moment order (1..4)");
    cm->add_option("-o,--output", out_m, "JSON path (default stdout)");

    // purity
    auto* cp = app.add_subcommand("purity", "purity report from state or CSV");
    std::string in_p, out_p;
    cp->add_option("input", in_p, "state file (.json) or wigner CSV")->required();
    cp->add_option("-o,--output", out_p, "JSON path (default stdout)");

    // fig2
    auto* cf = app.add_subcommand("fig2", "dispersion curve CSV");
    GridFlags gf_f;
    gf_f.n = 4096;
    gf_f.p_max = 64.0;
    gf_f.attach(cf);
    double s2min = 1e-4, s2max = 16.0;
    int points = 60;
    std::string out_f = "fig2.csv";
    cf->add_option("--sigma2-min", s2min, "smallest momentum variance");
    cf->add_option("--sigma2-max", s2max, "largest momentum variance");
    cf->add_option("--points", points, "number of rows");
    cf->add_option("-o,--output", out_f, "CSV path");

    // check
    auto* cc = app.add_subcommand("check", "invariant report for a state file");
    std::string in_c, out_c;
    cc->add_option("state", in_c, "input state file")->required();
    cc->add_option("-o,--output", out_c, "JSON path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cg) {
            FVState s = make_gaussian(gf_g.make(), sigma2, charge, p0, q0);
            save_state(s, out_path);
        } else if (*cw) {
            FVState s = load_state(in_w);
            WignerComponents w = fv_wigner_components(s);
            save_wigner_csv(w, out_w, state_hash(s));
        } else if (*ce) {
            FVState s = load_state(in_e);
            save_state(evolve_free(s, t_e), out_e);
        } else if (*cm) {
            FVState s = load_state(in_m);
            MomentReport r = coordinate_moment(s, order);
            json j = {{"order", r.order},
                      {"formula_value", r.formula_value},
                      {"grid_value", r.grid_value}};
            if (order == 2) {
                auto [usual, corr] = second_moment_corrected(s);
                j["usual_term"] = usual;
                j["correction_term"] = corr;
            }
            write_json(j, out_m);
        } else if (*cp) {
            WignerComponents w =
                ends_with(in_p, ".csv")
                    ? load_wigner_csv(in_p)
                    : fv_wigner_components(load_state(in_p));
            const double pf = purity_functional(w);
            const double limit = 1.0 / (2.0 * std::numbers::pi * w.grid.hbar);
            json j = {{"purity_functional", pf},
                      {"pure_state_value", limit},
                      {"constraint_residual", constraint_residual(w)}};
            try {
                j["criterion_max_even"] =
                    purity_criterion_max(w, CriterionPart::Even);
            } catch (const std::runtime_error&) {
                j["criterion_max_even"] = nullptr;
            }
            write_json(j, out_p);
        } else if (*cf) {
            if (points < 2) throw std::invalid_argument("fig2: points must be >= 2");
            std::vector<double> s2(points);
            const double lr = std::log(s2max / s2min);
            for (int i = 0; i < points; ++i)
                s2[i] = s2min * std::exp(lr * i / (points - 1));
            auto rows = fig2_curve(s2, gf_f.make());
            std::ofstream out(out_f, std::ios::binary);
            if (!out)
                throw std::invalid_argument("cannot open for writing: " + out_f);
            out << "sigma_p,dx2_usual,dx2_corrected,reference_dx2\n";
            for (const auto& r : rows) {
                if (!r.ok) {
                    std::cerr << "warning: sigma_p=" << fmt17(r.sigma_p)
                              << " not representable on this grid, skipped\n";
                    continue;
                }
                out << fmt17(r.sigma_p) << ',' << fmt17(r.dx2_usual) << ','
                    << fmt17(r.dx2_corrected) << ',' << fmt17(r.reference_dx2)
                    << "\n";
            }
        } else if (*cc) {
            FVState s = load_state(in_c);
            WignerComponents w = fv_wigner_components(s);
            auto [im_even, conj_dev] = reality_report(w);
            RVec marg = momentum_marginal(w);
            double marg_dev = 0;
            for (int k = 0; k < s.grid.n; ++k)
                marg_dev = std::max(
                    marg_dev, std::abs(marg[k] - std::norm(s.psi_plus[k]) -
                                       std::norm(s.psi_minus[k])));
            json j = {{"charge_norm", charge_norm(s)},
                      {"positive_norm", positive_norm(s)},
                      {"reality_im_even", im_even},
                      {"reality_conj_dev", conj_dev},
                      {"marginal_max_dev", marg_dev},
                      {"constraint_residual", constraint_residual(w)}};
            bool single = s.psi_plus.cwiseAbs().maxCoeff() == 0 ||
                          s.psi_minus.cwiseAbs().maxCoeff() == 0;
            if (single) {
                MomentReport m1 = coordinate_moment(s, 1);
                MomentReport m2 = coordinate_moment(s, 2);
                j["moment1"] = {{"formula_value", m1.formula_value},
                                {"grid_value", m1.grid_value}};
                j["moment2"] = {{"formula_value", m2.formula_value},
                                {"grid_value", m2.grid_value}};
            }
            write_json(j, out_c);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "contract violation: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
