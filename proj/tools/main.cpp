// mset: majorization order, energies, bounds, and design certification for
// point configurations on the unit sphere.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mset/energy.hpp"
#include "mset/errors.hpp"
#include "mset/generators.hpp"
#include "mset/harmonic.hpp"
#include "mset/optimize.hpp"
#include "mset/pointset_io.hpp"

using nlohmann::json;

namespace {

std::string fmt15(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", x);
    return buf;
}

void emit_json(const json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<double> parse_number_list(const std::string& text, const std::string& flag) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        std::size_t consumed = 0;
        double value = 0.0;
        try {
            value = std::stod(token, &consumed);
        } catch (const std::exception&) {
            throw mset::FormatError(flag + ": cannot parse '" + token + "' as a number");
        }
        if (consumed != token.size()) {
            throw mset::FormatError(flag + ": trailing characters in '" + token + "'");
        }
        out.push_back(value);
    }
    if (out.empty()) throw mset::FormatError(flag + ": empty list");
    return out;
}

std::vector<std::size_t> parse_size_list(const std::string& text, const std::string& flag) {
    std::vector<std::size_t> out;
    for (double v : parse_number_list(text, flag)) {
        if (v < 0.0 || v != static_cast<double>(static_cast<std::size_t>(v))) {
            throw mset::FormatError(flag + ": expected nonnegative integers");
        }
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

mset::SphericalConfiguration load_input(const std::string& path, bool normalize) {
    if (path == "-") return mset::read_pointset(std::cin, normalize);
    return mset::read_pointset_file(path, normalize);
}

void write_output(const std::string& path, const mset::SphericalConfiguration& x) {
    if (path == "-") {
        mset::write_pointset(std::cout, x);
    } else {
        mset::write_pointset_file(path, x);
    }
}

mset::DistanceFunctional make_rho(const std::string& name, double s) {
    if (name == "r") return mset::DistanceFunctional::euclidean();
    if (name == "r2") return mset::DistanceFunctional::squared_euclidean();
    if (name == "phi") return mset::DistanceFunctional::angular();
    if (name == "rs") return mset::DistanceFunctional::scale(s);
    throw mset::DomainError("unknown distance functional '" + name + "'");
}

json config_to_json(const mset::SphericalConfiguration& x) {
    json points = json::array();
    for (std::size_t i = 0; i < x.size(); ++i) {
        json row = json::array();
        for (double c : x.point(i)) row.push_back(c);
        points.push_back(std::move(row));
    }
    return json{{"dimension", x.dimension()}, {"count", x.size()}, {"points", std::move(points)}};
}

json certificate_to_json(const mset::DesignCertificate& cert) {
    const char* kind = cert.kind == mset::DesignCertificate::Kind::FDesign ? "f-design"
                       : cert.kind == mset::DesignCertificate::Kind::TauDesign ? "tau-design"
                                                                               : "harmonic-index";
    json residuals = json::array();
    for (const auto& [k, r] : cert.condition_1_residuals) {
        residuals.push_back(json{{"k", k}, {"residual", r}});
    }
    json j{{"kind", kind},
           {"passed", cert.passed},
           {"condition_1_residuals", std::move(residuals)},
           {"condition_2_violations", cert.condition_2_violations},
           {"consistency_ok", cert.consistency_ok}};
    if (cert.consistency) {
        j["f_at_1"] = cert.consistency->first;
        j["m_times_f0"] = cert.consistency->second;
    }
    return j;
}

void print_certificate(const mset::DesignCertificate& cert) {
    std::cout << "passed " << (cert.passed ? "true" : "false") << "\n";
    for (const auto& [k, r] : cert.condition_1_residuals) {
        std::cout << "residual k=" << k << " " << fmt15(r) << "\n";
    }
    for (double v : cert.condition_2_violations) {
        std::cout << "violation t=" << fmt15(v) << "\n";
    }
    if (cert.consistency) {
        std::cout << "f(1) " << fmt15(cert.consistency->first) << " m*f0 "
                  << fmt15(cert.consistency->second) << " consistent "
                  << (cert.consistency_ok ? "true" : "false") << "\n";
    }
}

struct GenOptions {
    std::string family;
    std::size_t n = 3;
    std::size_t m = 4;
    double alpha = 2.0;
    double a = 0.0;
    double theta = 1.5707963267948966;
    std::string dims = "1,1";
    std::string out = "-";
};

struct ProfileOptions {
    std::string input = "-";
    std::string rho = "r";
    double s = 1.0;
    bool normalize = false;
    bool as_json = false;
};

struct CompareOptions {
    std::string lhs;
    std::string rhs;
    std::string rho = "r";
    double s = 1.0;
    double tol = mset::kCompareRelTol;
    bool normalize = false;
    bool as_json = false;
};

struct EnergyOptions {
    std::string input = "-";
    double t = 1.0;
    std::string rho = "r";
    double s = 1.0;
    std::string poly;
    bool as_json = false;
};

struct MinimizeOptions {
    std::size_t n = 3;
    std::size_t m = 4;
    double t = 1.0;
    mset::OptimizerConfig cfg;
    std::string out = "-";
    bool as_json = false;
};

struct FalsifyOptions {
    std::string input = "-";
    std::string rho = "r";
    double s = 1.0;
    std::size_t trials = 10000;
    std::uint64_t seed = 0;
    std::string out;
    bool as_json = false;
};

struct ListOptions {
    std::string list;
    bool as_json = false;
};

struct LowerBoundOptions {
    std::string T;
    double t = 1.0;
    std::string poly;
    bool as_json = false;
};

struct SimplexBoundOptions {
    std::size_t m = 4;
    double t = 1.0;
    std::string poly;
    bool as_json = false;
};

struct GegenbauerOptions {
    std::size_t n = 3;
    std::size_t k = 0;
    double t = 0.0;
    std::string poly;
    std::string from;
    bool as_json = false;
};

struct MomentsOptions {
    std::string input = "-";
    std::size_t kmax = 5;
    bool as_json = false;
};

struct DesignOptions {
    std::string input = "-";
    std::string poly;
    std::size_t tau = 0;
    std::string index_set;
    double mtol = mset::kDesignTol;
    bool as_json = false;
};

struct DelsarteOptions {
    std::string poly;
    std::size_t n = 3;
    std::string t_points;
    std::string interval;
    double tol = 1e-9;
    bool as_json = false;
};

struct TwoDistOptions {
    std::string input = "-";
    double ctol = mset::kDefaultClusterTol;
    bool as_json = false;
};

struct DecomposeOptions {
    std::string input = "-";
    double ortho_tol = 1e-6;
    bool as_json = false;
};

struct ScalarOptions {
    double s = 3.0;
    bool as_json = false;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"majorization order, energies, bounds, and spherical design certification "
                 "for finite point sets on the unit sphere"};
    app.require_subcommand(1);

    int exit_code = 0;
    auto run = [&exit_code](auto body) {
        return [&exit_code, body]() {
            try {
                body();
            } catch (const mset::Error& e) {
                std::cerr << "error: " << e.what() << "\n";
                exit_code = 1;
            }
        };
    };

    auto gen = std::make_shared<GenOptions>();
    {
        CLI::App* cmd = app.add_subcommand("gen", "generate a canonical configuration");
        cmd->add_option("family", gen->family, "configuration family")
            ->required()
            ->check(CLI::IsMember({"regular-polygon", "regular-simplex", "cross-polytope", "tbp",
                                   "24-cell", "lambda", "isoceles-triangle", "quadrilateral",
                                   "delta-tetra", "simplex-product"}));
        cmd->add_option("--n", gen->n, "ambient dimension (regular-simplex, cross-polytope, lambda)");
        cmd->add_option("--m", gen->m, "number of vertices (regular-polygon)");
        cmd->add_option("--alpha", gen->alpha,
                        "angular side length (isoceles-triangle, quadrilateral)");
        cmd->add_option("--a", gen->a, "midpoint height a in [0,1] (delta-tetra)");
        cmd->add_option("--theta", gen->theta, "angle between opposite edges (delta-tetra)");
        cmd->add_option("--dims", gen->dims, "comma-separated factor dimensions (simplex-product)");
        cmd->add_option("--out", gen->out, "output path, '-' for stdout (default)");
        cmd->callback(run([gen]() {
            const std::string& f = gen->family;
            mset::SphericalConfiguration x =
                f == "regular-polygon"     ? mset::regular_polygon(gen->m)
                : f == "regular-simplex"   ? mset::regular_simplex(gen->n)
                : f == "cross-polytope"    ? mset::cross_polytope(gen->n)
                : f == "tbp"               ? mset::triangular_bipyramid()
                : f == "24-cell"           ? mset::cell24()
                : f == "lambda"            ? mset::lambda_design(gen->n)
                : f == "isoceles-triangle" ? mset::isoceles_triangle(gen->alpha)
                : f == "quadrilateral"     ? mset::quadrilateral(gen->alpha)
                : f == "delta-tetra"       ? mset::delta_tetrahedron(gen->a, gen->theta)
                                           : mset::simplex_product(
                                                 parse_size_list(gen->dims, "--dims"));
            write_output(gen->out, x);
        }));
    }

    auto prof = std::make_shared<ProfileOptions>();
    {
        CLI::App* cmd = app.add_subcommand("profile", "distance profile and prefix sums");
        cmd->add_option("input", prof->input, "point-set file, '-' for stdin (default)");
        cmd->add_option("--rho", prof->rho, "distance functional: r, r2, phi, rs")
            ->check(CLI::IsMember({"r", "r2", "phi", "rs"}));
        cmd->add_option("--s", prof->s, "exponent for the rs scale family");
        cmd->add_flag("--normalize", prof->normalize, "rescale input points to unit norm");
        cmd->add_flag("--json", prof->as_json, "machine-readable output");
        cmd->callback(run([prof]() {
            auto x = load_input(prof->input, prof->normalize);
            auto profile = mset::distance_profile(x, make_rho(prof->rho, prof->s));
            if (prof->as_json) {
                emit_json(json{{"command", "profile"},
                               {"rho", make_rho(prof->rho, prof->s).name()},
                               {"values", profile.sorted_view()},
                               {"prefix_sums", profile.prefix_sums()}});
            } else {
                for (std::size_t k = 0; k < profile.size(); ++k) {
                    std::cout << fmt15(profile.sorted_view()[k]) << " "
                              << fmt15(profile.prefix_sums()[k]) << "\n";
                }
            }
        }));
    }

    auto cmp = std::make_shared<CompareOptions>();
    {
        CLI::App* cmd = app.add_subcommand("compare", "majorization order between two point sets");
        cmd->add_option("lhs", cmp->lhs, "first point-set file")->required();
        cmd->add_option("rhs", cmp->rhs, "second point-set file")->required();
        cmd->add_option("--rho", cmp->rho, "distance functional: r, r2, phi, rs")
            ->check(CLI::IsMember({"r", "r2", "phi", "rs"}));
        cmd->add_option("--s", cmp->s, "exponent for the rs scale family");
        cmd->add_option("--tol", cmp->tol, "relative comparison tolerance (default 1e-9)");
        cmd->add_flag("--normalize", cmp->normalize, "rescale input points to unit norm");
        cmd->add_flag("--json", cmp->as_json, "machine-readable output");
        cmd->callback(run([cmp]() {
            auto rho = make_rho(cmp->rho, cmp->s);
            auto a = mset::distance_profile(load_input(cmp->lhs, cmp->normalize), rho);
            auto b = mset::distance_profile(load_input(cmp->rhs, cmp->normalize), rho);
            auto order = mset::compare(a, b, cmp->tol);
            if (cmp->as_json) {
                emit_json(json{{"command", "compare"},
                               {"rho", rho.name()},
                               {"order", mset::to_string(order)}});
            } else {
                std::cout << mset::to_string(order) << "\n";
            }
        }));
    }

    auto en = std::make_shared<EnergyOptions>();
    {
        CLI::App* cmd = app.add_subcommand("energy", "pair energy of a configuration");
        cmd->add_option("input", en->input, "point-set file, '-' for stdin (default)");
        auto* topt = cmd->add_option("--t", en->t, "Riesz exponent t >= 0");
        cmd->add_option("--rho", en->rho, "distance functional for --f mode")
            ->check(CLI::IsMember({"r", "r2", "phi", "rs"}));
        cmd->add_option("--s", en->s, "exponent for the rs scale family");
        auto* fopt = cmd->add_option(
            "--f", en->poly, "polynomial potential in the rho value, coefficients low-to-high");
        fopt->excludes(topt);
        cmd->add_flag("--json", en->as_json, "machine-readable output");
        cmd->callback(run([en, topt, fopt]() {
            auto x = load_input(en->input, false);
            double value = 0.0;
            std::string kernel;
            if (fopt->count() > 0) {
                auto f = mset::PotentialFunction::polynomial(parse_number_list(en->poly, "--f"),
                                                             mset::Interval::all(), false, false,
                                                             false);
                value = mset::pair_energy(x, make_rho(en->rho, en->s), f);
                kernel = "polynomial over " + make_rho(en->rho, en->s).name();
            } else {
                if (topt->count() == 0) throw mset::DomainError("energy requires --t or --f");
                value = mset::riesz_energy(x, en->t);
                kernel = "riesz t=" + fmt15(en->t);
            }
            if (en->as_json) {
                emit_json(json{{"command", "energy"}, {"kernel", kernel}, {"energy", value}});
            } else {
                std::cout << fmt15(value) << "\n";
            }
        }));
    }

    auto mini = std::make_shared<MinimizeOptions>();
    {
        CLI::App* cmd = app.add_subcommand("minimize", "local Riesz energy minimization on S^{n-1}");
        cmd->add_option("--n", mini->n, "ambient dimension")->required();
        cmd->add_option("--m", mini->m, "number of points")->required();
        cmd->add_option("--t", mini->t, "Riesz exponent t >= 0")->required();
        cmd->add_option("--restarts", mini->cfg.restarts, "independent restarts (default 20)");
        cmd->add_option("--iters", mini->cfg.max_iterations,
                        "iteration cap per restart (default 5000)");
        cmd->add_option("--seed", mini->cfg.rng_seed, "RNG seed (default 0)");
        cmd->add_option("--gtol", mini->cfg.gradient_tolerance,
                        "projected-gradient norm tolerance (default 1e-7)");
        cmd->add_option("--out", mini->out, "output path for the minimizer, '-' for stdout");
        cmd->add_flag("--json", mini->as_json, "machine-readable output");
        cmd->callback(run([mini]() {
            auto result = mset::minimize_riesz(mini->n, mini->m, mini->t, mini->cfg);
            if (mini->as_json) {
                emit_json(json{{"command", "minimize"},
                               {"energy", result.energy},
                               {"converged", result.converged},
                               {"gradient_norm", result.final_gradient_norm},
                               {"restart_index", result.restart_index},
                               {"configuration", config_to_json(result.configuration)}});
            } else {
                // comment summary first so the output stays loadable
                std::ostringstream summary;
                summary << "# energy " << fmt15(result.energy) << " converged "
                        << (result.converged ? "true" : "false") << " gradient_norm "
                        << fmt15(result.final_gradient_norm) << " restart "
                        << result.restart_index << "\n";
                if (mini->out == "-") {
                    std::cout << summary.str();
                    mset::write_pointset(std::cout, result.configuration);
                } else {
                    mset::write_pointset_file(mini->out, result.configuration);
                    std::cout << summary.str();
                }
            }
        }));
    }

    auto fal = std::make_shared<FalsifyOptions>();
    {
        CLI::App* cmd = app.add_subcommand(
            "falsify", "search for a configuration whose profile strictly dominates the input's");
        cmd->add_option("input", fal->input, "point-set file, '-' for stdin (default)");
        cmd->add_option("--rho", fal->rho, "distance functional: r, r2, phi, rs")
            ->check(CLI::IsMember({"r", "r2", "phi", "rs"}));
        cmd->add_option("--s", fal->s, "exponent for the rs scale family");
        cmd->add_option("--trials", fal->trials, "random trials (default 10000)");
        cmd->add_option("--seed", fal->seed, "RNG seed (default 0)");
        cmd->add_option("--out", fal->out, "write the witness to this path when found");
        cmd->add_flag("--json", fal->as_json, "machine-readable output");
        cmd->callback(run([fal]() {
            auto x = load_input(fal->input, false);
            mset::OptimizerConfig cfg;
            cfg.rng_seed = fal->seed;
            auto result = mset::mset_falsify(x, make_rho(fal->rho, fal->s), fal->trials, cfg);
            if (result.found && !fal->out.empty()) {
                mset::write_pointset_file(fal->out, *result.witness);
            }
            if (fal->as_json) {
                json j{{"command", "falsify"},
                       {"found", result.found},
                       {"trials_used", result.trials_used}};
                if (result.found) {
                    j["witness_order"] = mset::to_string(result.witness_order);
                    j["witness"] = config_to_json(*result.witness);
                }
                emit_json(j);
            } else {
                std::cout << "# found " << (result.found ? "true" : "false") << " trials_used "
                          << result.trials_used << "\n";
                if (result.found && fal->out.empty()) {
                    mset::write_pointset(std::cout, *result.witness);
                }
            }
        }));
    }

    auto ext = std::make_shared<ListOptions>();
    {
        CLI::App* cmd = app.add_subcommand("extremal-seq",
                                           "extremal sequence of a prefix-sum constraint vector");
        cmd->add_option("--T", ext->list, "comma-separated non-decreasing bounds")->required();
        cmd->add_flag("--json", ext->as_json, "machine-readable output");
        cmd->callback(run([ext]() {
            auto y = mset::extremal_sequence(
                mset::ConstraintVector(parse_number_list(ext->list, "--T")));
            if (ext->as_json) {
                emit_json(json{{"command", "extremal-seq"}, {"values", y.values()}});
            } else {
                for (double v : y.values()) std::cout << fmt15(v) << "\n";
            }
        }));
    }

    auto lb = std::make_shared<LowerBoundOptions>();
    {
        CLI::App* cmd = app.add_subcommand(
            "lower-bound", "energy lower bound from prefix-sum constraints on the profile");
        cmd->add_option("--T", lb->T, "comma-separated non-decreasing bounds")->required();
        auto* topt = cmd->add_option("--t", lb->t, "Riesz exponent (kernel of the distance value)");
        auto* fopt =
            cmd->add_option("--f", lb->poly, "polynomial potential, coefficients low-to-high");
        fopt->excludes(topt);
        cmd->add_flag("--json", lb->as_json, "machine-readable output");
        cmd->callback(run([lb, fopt]() {
            auto T = mset::ConstraintVector(parse_number_list(lb->T, "--T"));
            mset::PotentialFunction f =
                fopt->count() > 0
                    ? mset::PotentialFunction::polynomial(parse_number_list(lb->poly, "--f"),
                                                          mset::Interval::all(), false, false,
                                                          false)
                    : mset::PotentialFunction::riesz(lb->t);
            const double bound = mset::lower_bound_from_constraints(T, f);
            if (lb->as_json) {
                emit_json(json{{"command", "lower-bound"}, {"bound", bound}});
            } else {
                std::cout << fmt15(bound) << "\n";
            }
        }));
    }

    auto sb = std::make_shared<SimplexBoundOptions>();
    {
        CLI::App* cmd = app.add_subcommand(
            "simplex-bound",
            "universal lower bound C(m,2) f(2m/(m-1)) on squared-distance energies");
        cmd->add_option("--m", sb->m, "number of points")->required();
        auto* topt = cmd->add_option("--t", sb->t, "Riesz exponent (f(q) = q^{-t/2})");
        auto* fopt = cmd->add_option(
            "--f", sb->poly, "polynomial in the squared distance, coefficients low-to-high");
        fopt->excludes(topt);
        cmd->add_flag("--json", sb->as_json, "machine-readable output");
        cmd->callback(run([sb, fopt]() {
            mset::PotentialFunction f =
                fopt->count() > 0
                    ? mset::PotentialFunction::polynomial(parse_number_list(sb->poly, "--f"),
                                                          mset::Interval::all(), false, false,
                                                          false)
                    : mset::PotentialFunction::riesz_squared(sb->t);
            const double bound = mset::simplex_energy_bound(sb->m, f);
            if (sb->as_json) {
                emit_json(json{{"command", "simplex-bound"}, {"bound", bound}});
            } else {
                std::cout << fmt15(bound) << "\n";
            }
        }));
    }

    auto geg = std::make_shared<GegenbauerOptions>();
    {
        CLI::App* cmd =
            app.add_subcommand("gegenbauer", "evaluate G_k or change polynomial basis");
        cmd->add_option("--n", geg->n, "ambient dimension (>= 2)")->required();
        auto* kopt = cmd->add_option("--k", geg->k, "evaluate G_k at --t");
        auto* topt = cmd->add_option("--t", geg->t, "evaluation point in [-1, 1]");
        auto* fopt = cmd->add_option("--f", geg->poly,
                                     "expand a monomial polynomial, coefficients low-to-high");
        auto* iopt = cmd->add_option(
            "--from", geg->from, "invert: Gegenbauer coefficients f_0,f_1,... to monomials");
        fopt->excludes(kopt);
        fopt->excludes(iopt);
        iopt->excludes(kopt);
        cmd->add_flag("--json", geg->as_json, "machine-readable output");
        cmd->callback(run([geg, kopt, topt, fopt, iopt]() {
            if (fopt->count() > 0) {
                auto e = mset::to_gegenbauer(
                    mset::PolynomialInT(parse_number_list(geg->poly, "--f")), geg->n);
                if (geg->as_json) {
                    emit_json(json{{"command", "gegenbauer"},
                                   {"mode", "expand"},
                                   {"dimension", geg->n},
                                   {"coefficients", e.coefficients()}});
                } else {
                    for (std::size_t k = 0; k <= e.degree(); ++k) {
                        std::cout << k << " " << fmt15(e.coefficient(k)) << "\n";
                    }
                }
            } else if (iopt->count() > 0) {
                mset::GegenbauerExpansion e(geg->n, parse_number_list(geg->from, "--from"));
                auto p = mset::from_gegenbauer(e);
                if (geg->as_json) {
                    emit_json(json{{"command", "gegenbauer"},
                                   {"mode", "invert"},
                                   {"dimension", geg->n},
                                   {"coefficients", p.coefficients()}});
                } else {
                    for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
                        std::cout << i << " " << fmt15(p.coefficients()[i]) << "\n";
                    }
                }
            } else {
                if (kopt->count() == 0 || topt->count() == 0) {
                    throw mset::DomainError("gegenbauer requires --k with --t, or --f, or --from");
                }
                const double value = mset::gegenbauer_eval(geg->n, geg->k, geg->t);
                if (geg->as_json) {
                    emit_json(json{{"command", "gegenbauer"}, {"mode", "eval"}, {"value", value}});
                } else {
                    std::cout << fmt15(value) << "\n";
                }
            }
        }));
    }

    auto mom = std::make_shared<MomentsOptions>();
    {
        CLI::App* cmd = app.add_subcommand("moments", "configuration moments M_1..M_kmax");
        cmd->add_option("input", mom->input, "point-set file, '-' for stdin (default)");
        cmd->add_option("--kmax", mom->kmax, "largest moment index (default 5)");
        cmd->add_flag("--json", mom->as_json, "machine-readable output");
        cmd->callback(run([mom]() {
            auto x = load_input(mom->input, false);
            auto vec = mset::moments(x, mom->kmax);
            const double m2 = vec.moment(0);
            if (mom->as_json) {
                emit_json(json{{"command", "moments"},
                               {"m", vec.configuration_size()},
                               {"values", vec.values()}});
            } else {
                for (std::size_t k = 1; k <= vec.kmax(); ++k) {
                    std::cout << k << " " << fmt15(vec.moment(k)) << " "
                              << fmt15(std::abs(vec.moment(k)) / m2) << "\n";
                }
            }
        }));
    }

    auto des = std::make_shared<DesignOptions>();
    {
        CLI::App* cmd = app.add_subcommand("design-check",
                                           "certify f-designs, tau-designs, or harmonic indices");
        cmd->add_option("input", des->input, "point-set file, '-' for stdin (default)");
        auto* fopt = cmd->add_option("--f", des->poly, "polynomial f, coefficients low-to-high");
        auto* topt = cmd->add_option("--tau", des->tau, "certify as a tau-design");
        auto* hopt =
            cmd->add_option("--harmonic-index", des->index_set, "comma-separated index set K");
        fopt->excludes(topt);
        fopt->excludes(hopt);
        topt->excludes(hopt);
        cmd->add_option("--mtol", des->mtol, "moment-zero tolerance (default 1e-8, scaled by m^2)");
        cmd->add_flag("--json", des->as_json, "machine-readable output");
        cmd->callback(run([des, fopt, topt, hopt]() {
            auto x = load_input(des->input, false);
            mset::DesignCertificate cert = [&]() {
                if (fopt->count() > 0) {
                    return mset::certify_f_design(
                        x, mset::PolynomialInT(parse_number_list(des->poly, "--f")), des->mtol);
                }
                if (topt->count() > 0) return mset::certify_tau_design(x, des->tau, des->mtol);
                if (hopt->count() > 0) {
                    return mset::harmonic_index_check(
                        x, parse_size_list(des->index_set, "--harmonic-index"), des->mtol);
                }
                throw mset::DomainError("design-check requires --f, --tau, or --harmonic-index");
            }();
            if (des->as_json) {
                json j = certificate_to_json(cert);
                j["command"] = "design-check";
                emit_json(j);
            } else {
                print_certificate(cert);
            }
        }));
    }

    auto del = std::make_shared<DelsarteOptions>();
    {
        CLI::App* cmd =
            app.add_subcommand("delsarte", "linear-programming cardinality bound f(1)/f_0");
        cmd->add_option("--f", del->poly, "polynomial f, coefficients low-to-high")->required();
        cmd->add_option("--n", del->n, "ambient dimension (>= 2)")->required();
        auto* popt =
            cmd->add_option("--T", del->t_points, "allowed inner products, comma-separated");
        auto* iopt =
            cmd->add_option("--interval", del->interval, "allowed interval 'lo,hi' in [-1,1)");
        iopt->excludes(popt);
        cmd->add_option("--tol", del->tol, "hypothesis tolerance (default 1e-9)");
        cmd->add_flag("--json", del->as_json, "machine-readable output");
        cmd->callback(run([del, popt, iopt]() {
            mset::InnerProductSet t_set;
            if (iopt->count() > 0) {
                auto pair = parse_number_list(del->interval, "--interval");
                if (pair.size() != 2) throw mset::FormatError("--interval expects 'lo,hi'");
                t_set = std::make_pair(pair[0], pair[1]);
            } else if (popt->count() > 0) {
                t_set = parse_number_list(del->t_points, "--T");
            } else {
                throw mset::DomainError("delsarte requires --T or --interval");
            }
            auto f = mset::PolynomialInT(parse_number_list(del->poly, "--f"));
            auto report = mset::delsarte_bound(f, del->n, t_set, del->tol);
            if (del->as_json) {
                json j{{"command", "delsarte"},
                       {"hypotheses_ok", report.hypotheses_ok},
                       {"f0", report.f0},
                       {"f_at_1", report.f_at_1},
                       {"diagnostics", report.diagnostics}};
                if (report.bound) j["bound"] = *report.bound;
                emit_json(j);
            } else if (report.hypotheses_ok) {
                std::cout << fmt15(*report.bound) << "\n";
            } else {
                std::cout << "refused: hypotheses fail\n";
                for (const auto& d : report.diagnostics) std::cout << "  " << d << "\n";
            }
        }));
    }

    auto two = std::make_shared<TwoDistOptions>();
    {
        CLI::App* cmd =
            app.add_subcommand("two-distance", "two-distance structure and equiangular bounds");
        cmd->add_option("input", two->input, "point-set file, '-' for stdin (default)");
        cmd->add_option("--ctol", two->ctol, "inner-product cluster tolerance (default 1e-6)");
        cmd->add_flag("--json", two->as_json, "machine-readable output");
        cmd->callback(run([two]() {
            auto x = load_input(two->input, false);
            auto report = mset::two_distance_analysis(x, two->ctol);
            if (two->as_json) {
                json j{{"command", "two-distance"},
                       {"is_two_distance", report.is_two_distance},
                       {"distinct_count", report.distinct_count},
                       {"absolute_bound", report.absolute_bound},
                       {"meets_absolute", report.meets_absolute}};
                if (report.is_two_distance) {
                    j["a"] = report.a;
                    j["b"] = report.b;
                    j["a_plus_b_sign"] = report.a_plus_b_sign;
                    j["is_equiangular"] = report.is_equiangular;
                    if (report.relative_bound) j["relative_bound"] = *report.relative_bound;
                }
                emit_json(j);
            } else {
                std::cout << "two_distance " << (report.is_two_distance ? "true" : "false")
                          << " distinct " << report.distinct_count << "\n";
                if (report.is_two_distance) {
                    std::cout << "a " << fmt15(report.a) << " b " << fmt15(report.b)
                              << " a_plus_b_sign " << report.a_plus_b_sign << " equiangular "
                              << (report.is_equiangular ? "true" : "false") << "\n";
                    if (report.relative_bound) {
                        std::cout << "relative_bound " << fmt15(*report.relative_bound) << "\n";
                    }
                }
                std::cout << "absolute_bound " << report.absolute_bound << " meets_absolute "
                          << (report.meets_absolute ? "true" : "false") << "\n";
            }
        }));
    }

    auto dec = std::make_shared<DecomposeOptions>();
    {
        CLI::App* cmd = app.add_subcommand("decompose",
                                           "orthogonal factor decomposition of a configuration");
        cmd->add_option("input", dec->input, "point-set file, '-' for stdin (default)");
        cmd->add_option("--ortho-tol", dec->ortho_tol,
                        "inner products at most this count as orthogonal (default 1e-6)");
        cmd->add_flag("--json", dec->as_json, "machine-readable output");
        cmd->callback(run([dec]() {
            auto x = load_input(dec->input, false);
            auto result = mset::kuperberg_decompose(x, dec->ortho_tol);
            if (dec->as_json) {
                emit_json(json{{"command", "decompose"},
                               {"clusters", result.clusters},
                               {"dims", result.dims},
                               {"is_valid", result.is_valid},
                               {"failure", result.failure}});
            } else {
                for (std::size_t c = 0; c < result.clusters.size(); ++c) {
                    std::cout << "cluster " << c << " dim " << result.dims[c] << " points";
                    for (std::size_t i : result.clusters[c]) std::cout << " " << i;
                    std::cout << "\n";
                }
                std::cout << "valid " << (result.is_valid ? "true" : "false");
                if (!result.is_valid) std::cout << " (" << result.failure << ")";
                std::cout << "\n";
            }
        }));
    }

    auto root = std::make_shared<ScalarOptions>();
    {
        CLI::App* cmd = app.add_subcommand(
            "root51", "interior root t_s of the isoceles-triangle threshold equation");
        cmd->add_option("--s", root->s, "scale exponent in [log(9/4)/log(4/3), 4]")->required();
        cmd->add_flag("--json", root->as_json, "machine-readable output");
        cmd->callback(run([root]() {
            const double t = mset::triangle_threshold_root(root->s);
            if (root->as_json) {
                emit_json(json{{"command", "root51"},
                               {"s", root->s},
                               {"t", t},
                               {"residual", mset::triangle_threshold_residual(root->s, t)}});
            } else {
                std::cout << fmt15(t) << "\n";
            }
        }));
    }

    auto cls = std::make_shared<ScalarOptions>();
    {
        CLI::App* cmd = app.add_subcommand(
            "classify-triangles",
            "maximal three-point circle configurations for scale exponent s");
        cmd->add_option("--s", cls->s, "scale exponent, s > 0")->required();
        cmd->add_flag("--json", cls->as_json, "machine-readable output");
        cmd->callback(run([cls]() {
            auto result = mset::classify_triangle_msets(cls->s);
            if (cls->as_json) {
                json j{{"command", "classify-triangles"}, {"case", result.case_id}};
                if (result.alpha_range) {
                    j["alpha_min"] = result.alpha_range->first;
                    j["alpha_max"] = result.alpha_range->second;
                }
                emit_json(j);
            } else {
                std::cout << "case " << result.case_id;
                if (result.alpha_range) {
                    std::cout << " alpha in " << (result.case_id == 2 ? "(" : "[")
                              << fmt15(result.alpha_range->first) << ", "
                              << fmt15(result.alpha_range->second) << "]";
                }
                std::cout << "\n";
            }
        }));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const mset::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
