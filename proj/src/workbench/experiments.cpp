// Copyright 2026 The qcbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcbench/workbench/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qcbench/dynamics.hpp"
#include "qcbench/measurement.hpp"
#include "qcbench/random.hpp"
#include "qcbench/spectral.hpp"
#include "qcbench/trace_scalar.hpp"

namespace qcb::wb {

namespace {

constexpr int kWellLevels = 5;

double sqrt_n(std::int64_t n) { return std::sqrt(static_cast<double>(n)); }

StateVector well_ground_profile(const GridMeta &grid) {
    const double length = grid.length;
    return grid_sample(
        [length](double x) { return TraceScalar(std::sin(std::numbers::pi * x / length)); },
        grid);
}

StateVector centered_gaussian(const GridMeta &grid, double sigma) {
    const double c = grid.length / 2.0;
    return grid_sample(
        [c, sigma](double x) {
            return TraceScalar(std::exp(-(x - c) * (x - c) / (4.0 * sigma * sigma)));
        },
        grid);
}

} // namespace

RunResult run_cat(const ExperimentConfig &cfg) {
    const CatReport rep = cat_experiment(cfg.a1, cfg.a2, cfg.n, cfg.seed);

    const HermitianOperator observable = certify_hermitian(Operator::diagonal({cfg.a1, cfg.a2}));
    const SpectralDecomposition dec = eigendecompose(observable);
    const double amp = 1.0 / std::sqrt(2.0);
    const StateVector cat{amp, amp};
    const std::vector<std::size_t> outcomes =
        sample_outcomes([cat] { return cat; }, dec, cfg.n, cfg.seed);

    RunResult out;
    out.table.columns = {"sample", "outcome"};
    std::int64_t outside = 0;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        const double v = dec.group_value(outcomes[i]);
        if (v != cfg.a1 && v != cfg.a2) {
            ++outside;
        }
        out.table.rows.push_back({static_cast<std::int64_t>(i), v});
    }

    const CatReport again = cat_experiment(cfg.a1, cfg.a2, cfg.n, cfg.seed);
    const double k = cfg.tol("sigma");
    out.checks.push_back(check_le("outcomes_outside_spectrum", static_cast<double>(outside), 0.0));
    out.checks.push_back(check_le("mean_gap", std::abs(rep.ensemble.empirical_mean - rep.alpha),
                                  k * rep.beta / sqrt_n(cfg.n)));
    out.checks.push_back(check_le("std_gap", std::abs(rep.ensemble.empirical_std - rep.beta),
                                  binomial_std_band(cfg.a1, cfg.a2, cfg.n, k)));
    out.checks.push_back(check_le("idempotence_failures",
                                  static_cast<double>(rep.ensemble.idempotence_failures), 0.0));
    out.checks.push_back(
        check_le("reproducibility_mismatch", again.ensemble == rep.ensemble ? 0.0 : 1.0, 0.0));
    return out;
}

RunResult run_well_spectrum(const ExperimentConfig &cfg) {
    const GridMeta grid = GridMeta::make(cfg.length, cfg.grid_n, cfg.mass, cfg.hbar);
    const ModelSystem well = build_grid_model(grid, Potential::infinite_well);
    const auto &levels = well.energy_basis().eigenvalues();

    RunResult out;
    out.table.columns = {"n", "numeric", "analytic", "rel_err"};
    const int count = std::min<int>(kWellLevels, static_cast<int>(levels.size()));
    for (int n = 1; n <= count; ++n) {
        const double numeric = levels[static_cast<std::size_t>(n - 1)];
        const double analytic = well_level(n, cfg.length, cfg.mass, cfg.hbar);
        const double rel = std::abs(numeric - analytic) / analytic;
        out.table.rows.push_back({std::int64_t{n}, numeric, analytic, rel});
        out.checks.push_back(check_le("rel_err_n" + std::to_string(n), rel, cfg.tol("well")));
    }
    return out;
}

RunResult run_spread(const ExperimentConfig &cfg) {
    const GridMeta grid = GridMeta::make(cfg.length, cfg.grid_n, cfg.mass, cfg.hbar);
    const ModelSystem box = build_grid_model(grid, Potential::free);
    const double sigma0 = cfg.length / 40.0;
    const double doubling = 2.0 * std::sqrt(3.0) * cfg.mass * sigma0 * sigma0 / cfg.hbar;

    std::vector<double> times = cfg.times;
    if (times.empty()) {
        for (int k = 0; k <= 10; ++k) {
            times.push_back(doubling * k / 10.0);
        }
    }
    const StateVector packet = centered_gaussian(grid, sigma0);
    const auto series = spread_series(box, packet, times);
    const StateVector ground = box.energy_basis().eigenvector(0);
    const auto still = spread_series(box, ground, times);

    RunResult out;
    out.table.columns = {"t", "dx", "analytic", "rel_err", "edge_fraction", "ground_dx"};
    double worst = 0.0;
    double drift = 0.0;
    std::int64_t compared = 0;
    for (std::size_t k = 0; k < series.size(); ++k) {
        const double analytic = free_packet_width(sigma0, series[k].t, cfg.mass, cfg.hbar);
        const double rel = std::abs(series[k].dx - analytic) / analytic;
        out.table.rows.push_back(
            {series[k].t, series[k].dx, analytic, rel, series[k].edge_fraction, still[k].dx});
        if (series[k].edge_fraction < cfg.tol("edge")) {
            worst = std::max(worst, rel);
            ++compared;
        }
        drift = std::max(drift, std::abs(still[k].dx - still[0].dx));
    }
    out.checks.push_back(check_ge("uncontaminated_points", static_cast<double>(compared), 1.0));
    out.checks.push_back(check_le("max_width_rel_err", worst, cfg.tol("spread")));
    out.checks.push_back(check_le("ground_width_drift", drift, cfg.tol("stationary")));
    return out;
}

RunResult run_eq3(const ExperimentConfig &cfg) {
    const ModelSystem osc = build_oscillator_ladder(cfg.d, cfg.mass, cfg.omega, cfg.hbar);
    const PolynomialObservable h = PolynomialObservable::oscillator_hamiltonian(cfg.mass, cfg.omega);
    Rng rng(cfg.seed);
    const StateVector psi = random_state_on_levels(cfg.d, 4, rng);

    const PolynomialObservable q = PolynomialObservable::q();
    const PolynomialObservable p = PolynomialObservable::p();
    const std::vector<std::pair<std::string, PolynomialObservable>> cases{
        {"q", q}, {"p", p}, {"q2", q * q}, {"p2", p * p}, {"qp", q * p}, {"H", h}};

    RunResult out;
    out.table.columns = {"observable", "lhs", "rhs", "gap"};
    for (const auto &[name, a] : cases) {
        const Eq3Result r = eq3_check(a, h, osc, psi);
        out.table.rows.push_back({name, r.lhs, r.rhs, r.gap});
        out.checks.push_back(check_le("gap_" + name, r.gap, cfg.tol("eq3")));
    }
    return out;
}

RunResult run_vn_generator(const ExperimentConfig &cfg) {
    RunResult out;
    out.table.columns = {"family", "dim", "labels", "reconstruction_err", "commutator_err"};

    double worst_rec = 0.0;
    double worst_comm = 0.0;
    double min_gap = 1.0;
    const auto record = [&](std::int64_t id, std::span<const HermitianOperator> fam,
                            const GeneratorResult &gen) {
        double rec = 0.0;
        double comm = 0.0;
        for (std::size_t j = 0; j < fam.size(); ++j) {
            rec = std::max(rec, (reconstruct_from_generator(gen, j).matrix() - fam[j].matrix())
                                    .cwiseAbs()
                                    .maxCoeff());
            comm = std::max(comm, commutator(fam[j].op(), gen.generator.op()).max_abs());
        }
        for (std::size_t k = 1; k < gen.labels.size(); ++k) {
            min_gap = std::min(min_gap, gen.labels[k] - gen.labels[k - 1]);
        }
        worst_rec = std::max(worst_rec, rec);
        worst_comm = std::max(worst_comm, comm);
        out.table.rows.push_back({id, static_cast<std::int64_t>(fam.front().dim()),
                                  static_cast<std::int64_t>(gen.labels.size()), rec, comm});
    };

    // Family 0: the hand-enumerated example.
    const std::vector<HermitianOperator> hand{
        certify_hermitian(Operator::diagonal({1.0, 1.0, 2.0})),
        certify_hermitian(Operator::diagonal({3.0, 4.0, 4.0}))};
    const GeneratorResult g0 = vn_generator(hand);
    record(0, hand, g0);
    const double r_dev =
        (g0.generator.matrix() - Operator::diagonal({0.0, 1.0, 2.0}).matrix()).cwiseAbs().maxCoeff();
    const bool tables_ok = g0.tables.size() == 2 &&
                           g0.tables[0] == std::map<int, double>{{0, 1.0}, {1, 1.0}, {2, 2.0}} &&
                           g0.tables[1] == std::map<int, double>{{0, 3.0}, {1, 4.0}, {2, 4.0}};

    Rng rng(cfg.seed);
    for (std::int64_t f = 1; f <= cfg.n; ++f) {
        const std::size_t dim = 2 + static_cast<std::size_t>((f - 1) % 15);
        const HermitianOperator a = random_hermitian(dim, rng);
        const std::vector<HermitianOperator> fam{a, random_polynomial_of(a, rng),
                                                 random_polynomial_of(a, rng)};
        record(f, fam, vn_generator(fam));
    }

    out.checks.push_back(check_le("hand_generator_deviation", r_dev, 0.0));
    out.checks.push_back(check_le("hand_table_mismatch", tables_ok ? 0.0 : 1.0, 0.0));
    out.checks.push_back(check_le("max_reconstruction_err", worst_rec, cfg.tol("generator")));
    out.checks.push_back(check_le("max_commutator_with_generator", worst_comm, cfg.tol("generator")));
    out.checks.push_back(check_ge("min_label_gap", min_gap, 1.0));
    return out;
}

RunResult run_ensemble_density(const ExperimentConfig &cfg) {
    const GridMeta grid = GridMeta::make(cfg.length, cfg.grid_n, cfg.mass, cfg.hbar);
    const SpectralDecomposition position = eigendecompose(position_operator(grid));
    const StateVector ground = well_ground_profile(grid);
    const EnsembleReport rep = repeat_experiment([ground] { return ground; }, position, cfg.n, cfg.seed);
    const auto density = reconstruct_density(rep, grid);

    RunResult out;
    out.table.columns = {"x", "frequency", "expected", "deviation", "envelope"};
    const double k = cfg.tol("sigma");
    double mass = 0.0;
    std::int64_t outside = 0;
    double worst_ratio = 0.0;
    for (std::size_t j = 0; j < density.size(); ++j) {
        const double p = std::norm(ground.amplitudes()(static_cast<Eigen::Index>(j))) *
                         grid.spacing();
        const double dev = std::abs(density[j].frequency - p);
        const double env = k * std::sqrt(p * (1.0 - p) / static_cast<double>(cfg.n));
        out.table.rows.push_back({density[j].x, density[j].frequency, p, dev, env});
        mass += density[j].frequency;
        if (dev > env) {
            ++outside;
        }
        if (env > 0.0) {
            worst_ratio = std::max(worst_ratio, dev / env * k);
        }
    }

    // Point preparation at the middle cell.
    const std::size_t mid = grid.points / 2;
    const StateVector point = StateVector::basis(grid.points, mid, grid);
    const auto delta = reconstruct_density(
        repeat_experiment([point] { return point; }, position, cfg.n, cfg.seed), grid);

    out.checks.push_back(check_le("cells_outside_envelope", static_cast<double>(outside), 0.0));
    out.checks.push_back(check_le("worst_cell_sigmas", worst_ratio, k));
    out.checks.push_back(check_le("total_mass_err", std::abs(mass - 1.0), 1e-12));
    out.checks.push_back(
        check_ge("point_concentration", delta[mid].frequency, cfg.tol("concentration")));
    return out;
}

RunResult run_claims(const ExperimentConfig &cfg) {
    RunResult out;
    out.table.columns = {"claim", "trials", "worst", "tolerance"};
    const auto add = [&](const std::string &name, std::int64_t trials, double worst, double tol) {
        out.table.rows.push_back({name, trials, worst, tol});
        out.checks.push_back(check_le(name, worst, tol));
    };
    Rng rng(cfg.seed);
    const std::int64_t trials = cfg.n;

    // Trace algebra: tr(i) = 0 and the minimal polynomial.
    {
        std::uniform_real_distribution<double> u(-1e3, 1e3);
        double worst = std::abs(trace(TraceScalar::unit_imaginary()));
        for (std::int64_t t = 0; t < trials; ++t) {
            const TraceScalar x(u(rng), u(rng));
            worst = std::max(worst, max_component(minimal_poly_residual(x)) /
                                        (1.0 + norm_form(x)));
        }
        add("minimal_polynomial", trials, worst, cfg.tol("minpoly"));
    }

    // Weak commutativity in the trace form.
    {
        double worst = 0.0;
        for (std::int64_t t = 0; t < trials; ++t) {
            const std::size_t dim = 2 + static_cast<std::size_t>(t % 7);
            const HermitianOperator a = random_hermitian(dim, rng);
            const HermitianOperator b = random_hermitian(dim, rng);
            const StateVector psi = random_state(dim, rng);
            worst = std::max(worst, std::abs(real_form(commutator(a, b), psi)));
        }
        add("weak_commutativity", trials, worst, cfg.tol("weak"));
    }

    // AV decomposition.
    {
        const std::int64_t n_av = std::max<std::int64_t>(1, trials / 2);
        double worst_rec = 0.0;
        double worst_orth = 0.0;
        for (std::int64_t t = 0; t < n_av; ++t) {
            const std::size_t dim = 2 + static_cast<std::size_t>(t % 7);
            const HermitianOperator a = random_hermitian(dim, rng);
            const StateVector psi = random_state(dim, rng);
            const AvDecomposition av = av_decompose(a, psi);
            Eigen::VectorXcd rebuilt = av.alpha * psi.amplitudes();
            if (av.orthogonal) {
                rebuilt += av.beta * av.orthogonal->amplitudes();
                worst_orth = std::max(worst_orth,
                                      std::abs(complex_inner(psi, *av.orthogonal).to_complex()));
            }
            worst_rec =
                std::max(worst_rec, (a.matrix() * psi.amplitudes() - rebuilt).norm());
        }
        add("av_reconstruction", n_av, worst_rec, cfg.tol("av"));
        add("av_orthogonality", n_av, worst_orth, cfg.tol("orth"));
    }

    // Dispersion-free eigenbases.
    {
        const std::int64_t n_eig = std::max<std::int64_t>(1, trials / 10);
        double worst_disp = 0.0;
        double worst_res = 0.0;
        for (std::int64_t t = 0; t < n_eig; ++t) {
            const std::size_t dim = 1 + static_cast<std::size_t>(t % 64);
            const HermitianOperator a = random_hermitian(dim, rng);
            const SpectralDecomposition dec = eigendecompose(a);
            const double norm = a.matrix().norm();
            worst_disp = std::max(worst_disp,
                                  verify_dispersion_free(dec, a) / std::sqrt(1.0 + norm * norm));
            worst_res = std::max(worst_res, eigen_residual(dec, a) / (1.0 + norm));
        }
        add("dispersion_free_basis", n_eig, worst_disp, cfg.tol("dispersion"));
        add("eigen_residual", n_eig, worst_res, cfg.tol("residual"));
    }

    // Single generator of commuting families.
    {
        const std::int64_t n_fam = std::max<std::int64_t>(1, trials / 10);
        double worst = 0.0;
        for (std::int64_t t = 0; t < n_fam; ++t) {
            const std::size_t dim = 2 + static_cast<std::size_t>(t % 15);
            const HermitianOperator a = random_hermitian(dim, rng);
            const std::vector<HermitianOperator> fam{a, random_polynomial_of(a, rng),
                                                     random_polynomial_of(a, rng)};
            const GeneratorResult gen = vn_generator(fam);
            for (std::size_t j = 0; j < fam.size(); ++j) {
                worst = std::max(worst, (reconstruct_from_generator(gen, j).matrix() -
                                         fam[j].matrix())
                                            .cwiseAbs()
                                            .maxCoeff());
            }
        }
        add("generator_reconstruction", n_fam, worst, cfg.tol("generator"));
    }
    return out;
}

RunResult run_experiment(const ExperimentConfig &cfg) {
    switch (cfg.experiment) {
    case Experiment::cat:
        return run_cat(cfg);
    case Experiment::well_spectrum:
        return run_well_spectrum(cfg);
    case Experiment::spread:
        return run_spread(cfg);
    case Experiment::eq3:
        return run_eq3(cfg);
    case Experiment::vn_generator:
        return run_vn_generator(cfg);
    case Experiment::ensemble_density:
        return run_ensemble_density(cfg);
    case Experiment::claims:
        return run_claims(cfg);
    }
    return {};
}

} // namespace qcb::wb
