#include <doctest.h>

#include <cmath>

#include "marstrand/experiments.hpp"
#include "marstrand/report.hpp"

using namespace marstrand;

namespace {

// Reduced-size configuration so the unit suite stays fast; the full-scale
// windows live in default_verify_config and run in the acceptance binary.
ExperimentConfig small_config() {
    ExperimentConfig config = default_verify_config();
    config.seed = 515151;
    config.checks.clear();

    CheckSpec t1;
    t1.id = "t1_small";
    t1.kind = "theorem1";
    t1.fixture = "cantor8";
    t1.family = "planar_angle";
    t1.n_lambda = 16;
    t1.tolerance = 0.08;
    for (int k = 2; k <= 6; ++k) t1.scales.push_back(std::pow(3.0, -k));
    config.checks.push_back(t1);
    return config;
}

}  // namespace

TEST_CASE("theorem1: embedded Cantor passes the equality-case fraction") {
    ExperimentConfig config = small_config();
    // cantor8 is 1-D; embed for the planar family
    config.fixtures["cantor8"].embed_dim = 2;
    Workspace ws;
    ws.config = &config;
    const auto record = verify_theorem1(config, config.checks[0], ws);
    CHECK(record.estimates.at("target") ==
          doctest::Approx(std::log(2.0) / std::log(3.0)).epsilon(1e-9));
    CHECK(record.estimates.at("fraction_equal") >= 0.9);
    CHECK(record.pass);
}

TEST_CASE("theorem1: degenerate single-point fixture passes vacuously") {
    ExperimentConfig config = small_config();
    config.checks[0].fixture = "atom2d";
    Workspace ws;
    ws.config = &config;
    const auto record = verify_theorem1(config, config.checks[0], ws);
    // dim X = 0, target 0: every lambda projects to one point, estimate 0.
    CHECK(record.estimates.at("target") == 0.0);
    CHECK(record.pass);
}

TEST_CASE("theorem2: product passes, plain Cantor control fails, atom refuses") {
    ExperimentConfig config = default_verify_config();
    config.seed = 99;
    Workspace ws;
    ws.config = &config;

    CheckSpec spec;
    spec.kind = "theorem2";
    spec.family = "planar_angle";
    spec.n_lambda = 24;
    spec.epsilon = std::pow(3.0, -5);
    spec.length_threshold = 0.1;
    spec.ratio_threshold = 0.8;

    spec.id = "t2_pos";
    spec.fixture = "cantor_sq7";
    const auto positive = verify_theorem2(config, spec, ws);
    CHECK(positive.estimates.at("fraction_positive") >= 0.9);
    CHECK(positive.pass);

    spec.id = "t2_neg";
    spec.fixture = "cantor10";
    spec.expect_fail = true;
    const auto negative = verify_theorem2(config, spec, ws);
    CHECK(negative.estimates.at("fraction_positive") <= 0.1);
    CHECK_FALSE(negative.pass);

    spec.id = "t2_atom";
    spec.fixture = "atom2d";
    spec.expect_fail = false;
    CHECK_THROWS_AS(verify_theorem2(config, spec, ws), Error);

    // Precondition: dim X <= alpha kappa without the control flag refuses.
    spec.id = "t2_cantor_no_flag";
    spec.fixture = "cantor10";
    CHECK_THROWS_AS(verify_theorem2(config, spec, ws), Error);
}

TEST_CASE("theorem3: Cantor ratio lands in (1, 2] at t = 0.5") {
    ExperimentConfig config = default_verify_config();
    config.seed = 2222;
    Workspace ws;
    ws.config = &config;
    CheckSpec spec;
    spec.id = "t3_small";
    spec.kind = "theorem3";
    spec.fixture = "cantor8";
    spec.family = "planar_angle";
    spec.n_lambda = 128;
    spec.t_values = {0.5};
    spec.r_min = 1e-9;
    config.fixtures["cantor8"].embed_dim = 2;
    const auto record = verify_theorem3(config, spec, ws);
    CHECK(record.pass);
    const double ratio = record.estimates.at("t=0.5 ratio");
    CHECK(ratio > 1.0);
    CHECK(ratio <= 2.0);
    CHECK_THROWS_AS(
        [&] {
            CheckSpec bad = spec;
            bad.t_values = {1.0};
            verify_theorem3(config, bad, ws);
        }(),
        Error);
}

TEST_CASE("theorem3: t = 0 energies agree exactly") {
    ExperimentConfig config = default_verify_config();
    config.seed = 31;
    config.fixtures["cantor4"].embed_dim = 2;
    Workspace ws;
    ws.config = &config;
    CheckSpec spec;
    spec.id = "t3_zero";
    spec.kind = "theorem3";
    spec.fixture = "cantor4";
    spec.family = "planar_angle";
    spec.n_lambda = 32;
    spec.t_values = {0.0};
    spec.r_min = 1e-9;
    const auto record = verify_theorem3(config, spec, ws);
    // I_0 is mass^2 - sum w^2 on both sides; the bound factor is 1.
    CHECK(record.estimates.at("t=0 avg") == doctest::Approx(record.estimates.at("t=0 bound")));
    CHECK(record.pass);
}

TEST_CASE("theorem4: Cantor passes, atom control fails, coarsening raises the statistic") {
    ExperimentConfig config = default_verify_config();
    config.seed = 771;
    Workspace ws;
    ws.config = &config;
    CheckSpec spec;
    spec.id = "t4_small";
    spec.kind = "theorem4";
    spec.fixture = "cantor8";
    spec.family = "planar_angle";
    spec.n_lambda = 24;
    for (int k = 2; k <= 5; ++k) spec.radii.push_back(std::pow(3.0, -k));
    config.fixtures["cantor8"].embed_dim = 2;

    const auto record = verify_theorem4(config, spec, ws);
    CHECK(record.pass);
    CHECK(record.estimates.at("coarse_grid_delta") >= 0.0);

    CheckSpec control = spec;
    control.id = "t4_atom";
    control.fixture = "atom2d";
    control.expect_fail = true;
    const auto atom = verify_theorem4(config, control, ws);
    CHECK_FALSE(atom.pass);
    CHECK(atom.bound == 0.0);  // single atom has zero off-diagonal energy
    CHECK(atom.estimates.at("lhs_avg") > 0.0);
}

TEST_CASE("corollary1: uniform projected measure has squared density near 1") {
    // Uniform weights on a fine grid pushed through lambda = 0 stay uniform
    // on [0,1]; sum(binmass^2)/h -> 1 when bins hold many points.
    ExperimentConfig config;
    config.seed = 10;
    FixtureDef grid;
    grid.type = "ifs";
    grid.ifs.ambient_dim = 1;
    grid.ifs.maps = {{0.5, {}, {0.0}}, {0.5, {}, {0.5}}};  // full-interval refinement
    grid.ifs.weights = {0.5, 0.5};
    grid.depth = 12;
    grid.embed_dim = 2;
    config.fixtures["grid"] = grid;

    Workspace ws;
    ws.config = &config;
    CheckSpec spec;
    spec.id = "c1_uniform";
    spec.kind = "corollary1";
    spec.fixture = "grid";
    spec.family = "planar_angle";
    spec.n_lambda = 8;
    spec.histogram_bin = 1.0 / 64.0;
    const auto record = verify_corollary1(config, spec, ws);
    CHECK(record.pass);

    // Direct check at lambda = 0 with the same bin width.
    const auto mu = build_fixture(config, "grid");
    double mass_per_bin = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i)
        if (mu.support.point(i)[0] < spec.histogram_bin) mass_per_bin += mu.weights[i];
    CHECK(mass_per_bin * mass_per_bin / spec.histogram_bin * 64.0 ==
          doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("corollary1: atom control blows up the squared density") {
    ExperimentConfig config = default_verify_config();
    config.seed = 8;
    Workspace ws;
    ws.config = &config;
    CheckSpec spec;
    spec.id = "c1_atom";
    spec.kind = "corollary1";
    spec.fixture = "atom2d";
    spec.family = "planar_angle";
    spec.n_lambda = 16;
    spec.histogram_bin = 1.0 / 128.0;
    spec.expect_fail = true;
    const auto record = verify_corollary1(config, spec, ws);
    CHECK_FALSE(record.pass);
    CHECK(record.estimates.at("lhs_avg") == doctest::Approx(128.0));
}

TEST_CASE("run_verification: control inversion, duplicate ids, thread invariance") {
    ExperimentConfig config = small_config();
    config.fixtures["cantor8"].embed_dim = 2;

    CheckSpec control = config.checks[0];
    control.id = "t1_control_impossible";
    control.tolerance = -0.5;  // no estimate can land within a negative tolerance
    control.expect_fail = true;
    config.checks.push_back(control);

    const auto report1 = run_verification(config, {}, 1);
    const auto report8 = run_verification(config, {}, 8);
    CHECK(report1.checks.size() == 2);
    CHECK(report1.checks[0].ok);
    CHECK(report1.checks[1].ok);  // failed as expected
    CHECK_FALSE(report1.checks[1].pass);
    CHECK(report1.all_ok);
    CHECK(render_report_json(report1) == render_report_json(report8));

    config.checks.push_back(control);  // duplicate id
    CHECK_THROWS_AS(run_verification(config), Error);
}

TEST_CASE("run_verification: a passing negative control fails the suite") {
    ExperimentConfig config = small_config();
    config.fixtures["cantor8"].embed_dim = 2;
    config.checks[0].expect_fail = true;  // it will pass, which must break all_ok
    const auto report = run_verification(config);
    CHECK(report.checks[0].pass);
    CHECK_FALSE(report.checks[0].ok);
    CHECK_FALSE(report.all_ok);
}
