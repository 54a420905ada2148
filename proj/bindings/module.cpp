#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "halobeam/constellation.hpp"
#include "halobeam/coverage.hpp"
#include "halobeam/ephemeris.hpp"
#include "halobeam/link_budget.hpp"
#include "halobeam/pointing.hpp"
#include "halobeam/scenario.hpp"

namespace py = pybind11;
using namespace halobeam;

namespace {

py::array_t<double> to_array(const std::vector<double>& values) {
    py::array_t<double> out(static_cast<py::ssize_t>(values.size()));
    std::copy(values.begin(), values.end(), out.mutable_data());
    return out;
}

ScenarioConfig config_from(const std::string& scenario, const std::string& config_json) {
    if (!scenario.empty() && !config_json.empty()) {
        throw ConfigError("pass either a builtin scenario name or config JSON, not both");
    }
    if (!scenario.empty()) return builtin_scenario(scenario);
    if (!config_json.empty()) return parse_config(config_json);
    throw ConfigError("a builtin scenario name or config JSON is required");
}

RunOptions options_from(const std::string& out_dir, unsigned threads,
                        std::optional<std::uint64_t> seed) {
    RunOptions options;
    options.out_dir = out_dir;
    options.threads = threads;
    options.seed = seed;
    return options;
}

py::dict summary_to_dict(const RunSummary& summary) {
    py::dict out;
    out["scenario"] = summary.scenario;
    out["config_hash"] = summary.config_hash;
    out["seed"] = summary.seed;
    out["wall_seconds"] = summary.wall_seconds;
    py::dict metrics;
    for (const auto& [key, value] : summary.metrics) {
        metrics[py::str(key)] = value;
    }
    out["metrics"] = metrics;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Laser power beaming from EMLP-2 halo orbits to lunar far-side receivers";

    py::register_exception<ConfigError>(m, "ConfigError");
    py::register_exception<IoError>(m, "IoError");

    py::class_<Vector3>(m, "Vector3")
        .def(py::init<double, double, double>(), py::arg("x"), py::arg("y"), py::arg("z"))
        .def_readonly("x", &Vector3::x)
        .def_readonly("y", &Vector3::y)
        .def_readonly("z", &Vector3::z)
        .def("norm", &Vector3::norm)
        .def("__repr__", [](const Vector3& v) {
            return "Vector3(" + std::to_string(v.x) + ", " + std::to_string(v.y) + ", " +
                   std::to_string(v.z) + ")";
        });

    py::class_<LinkParameters>(m, "LinkParameters")
        .def(py::init([](double p_t_w, double lambda_m, double eta_t, double eta_h, double d_r_m,
                         double l_e, double l_s, double l_c) {
                 LinkParameters p{p_t_w, lambda_m, eta_t, eta_h, d_r_m, l_e, l_s, l_c};
                 p.validate();
                 return p;
             }),
             py::arg("p_t_w") = 1000.0, py::arg("lambda_m") = 1.064e-6, py::arg("eta_t") = 0.51,
             py::arg("eta_h") = 0.508, py::arg("d_r_m") = 1.0, py::arg("l_e") = 1.0,
             py::arg("l_s") = 1.0, py::arg("l_c") = 1.0)
        .def_readonly("p_t_w", &LinkParameters::p_t_w)
        .def_readonly("lambda_m", &LinkParameters::lambda_m)
        .def_readonly("eta_t", &LinkParameters::eta_t)
        .def_readonly("eta_h", &LinkParameters::eta_h)
        .def_readonly("d_r_m", &LinkParameters::d_r_m);

    py::class_<LinkGeometry>(m, "LinkGeometry")
        .def_readonly("range_m", &LinkGeometry::range_m)
        .def_readonly("phi_rad", &LinkGeometry::phi_rad)
        .def_readonly("d_t_m", &LinkGeometry::d_t_m)
        .def_readonly("g_t", &LinkGeometry::g_t)
        .def_readonly("g_r", &LinkGeometry::g_r);

    py::class_<LinkBudgetResult>(m, "LinkBudgetResult")
        .def_readonly("l_t", &LinkBudgetResult::l_t)
        .def_readonly("c2_w", &LinkBudgetResult::c2_w)
        .def_readonly("p_h_w", &LinkBudgetResult::p_h_w);

    m.def("link_geometry", &link_geometry, py::arg("params"), py::arg("range_m"),
          "Adaptive-divergence link geometry at a line-of-sight range in meters");
    m.def("misalignment_loss", &misalignment_loss, py::arg("g_t"), py::arg("gamma_rad"),
          "Transmitter misalignment loss exp(-G_T gamma^2)");
    m.def("harvested_power", &harvested_power, py::arg("params"), py::arg("geom"),
          py::arg("gamma_rad"), "Deterministic harvested power for a radial pointing error");
    m.def("central_angle_limit", &central_angle_limit, py::arg("sat_distance_km"),
          py::arg("moon_radius_km"),
          "Coverage central-angle limit beta for a satellite distance from the moon center");

    py::class_<PointingErrorModel>(m, "PointingErrorModel")
        .def(py::init([](double sigma_gamma_rad) {
                 PointingErrorModel model{sigma_gamma_rad};
                 model.validate();
                 return model;
             }),
             py::arg("sigma_gamma_rad"))
        .def_readonly("sigma_gamma_rad", &PointingErrorModel::sigma_gamma_rad);

    py::class_<HarvestedPowerDistribution>(m, "HarvestedPowerDistribution")
        .def_static("make", &HarvestedPowerDistribution::make, py::arg("params"),
                    py::arg("geom"), py::arg("model"))
        .def_readonly("c1", &HarvestedPowerDistribution::c1)
        .def_readonly("c2_w", &HarvestedPowerDistribution::c2_w)
        .def_readonly("psi", &HarvestedPowerDistribution::psi)
        .def("exponent", &HarvestedPowerDistribution::exponent)
        .def("pdf", &HarvestedPowerDistribution::pdf, py::arg("h_w"))
        .def("cdf", &HarvestedPowerDistribution::cdf, py::arg("h_w"))
        .def("quantile", &HarvestedPowerDistribution::quantile, py::arg("p"));

    py::class_<EmpiricalCdf>(m, "EmpiricalCdf")
        .def_static("from_samples", &EmpiricalCdf::from_samples, py::arg("samples_w"))
        .def("evaluate", &EmpiricalCdf::evaluate, py::arg("h_w"))
        .def("samples_w", [](const EmpiricalCdf& cdf) { return to_array(cdf.samples_w()); })
        .def("__len__", &EmpiricalCdf::size);

    m.def(
        "sample_radial_error",
        [](const PointingErrorModel& model, std::uint64_t seed, std::size_t n, unsigned threads) {
            return to_array(sample_radial_error(model, seed, n, threads));
        },
        py::arg("model"), py::arg("seed"), py::arg("n"), py::arg("threads") = 0,
        "Rayleigh radial pointing-error draws, reproducible from the seed");
    m.def("monte_carlo_cdf", &monte_carlo_cdf, py::arg("params"), py::arg("geom"),
          py::arg("model"), py::arg("n"), py::arg("seed"), py::arg("threads") = 0);
    m.def("ks_statistic", &ks_statistic, py::arg("empirical"), py::arg("dist"));

    py::class_<HaloOrbitSpec>(m, "HaloOrbitSpec")
        .def_static("with_default_ratio", &HaloOrbitSpec::with_default_ratio, py::arg("a_z_km"),
                    py::arg("num_satellites"))
        .def_readonly("a_z_km", &HaloOrbitSpec::a_z_km)
        .def_readonly("a_y_km", &HaloOrbitSpec::a_y_km)
        .def_readonly("period_h", &HaloOrbitSpec::period_h);

    m.def(
        "visibility_constraint_margin_km",
        [](const HaloOrbitSpec& spec) { return validate_visibility_constraint(spec).margin_km; },
        py::arg("spec"), "Clearance a_y - 3671 km of the Earth-visibility constraint");

    m.def(
        "run_coverage",
        [](const std::string& scenario, const std::string& config_json, const std::string& out_dir,
           unsigned threads, std::optional<std::uint64_t> seed) {
            return summary_to_dict(run_coverage(config_from(scenario, config_json),
                                                options_from(out_dir, threads, seed)));
        },
        py::arg("scenario") = "", py::arg("config_json") = "", py::arg("out_dir") = "",
        py::arg("threads") = 0, py::arg("seed") = std::nullopt);
    m.def(
        "run_visibility",
        [](const std::string& scenario, const std::string& config_json, const std::string& out_dir,
           unsigned threads, std::optional<std::uint64_t> seed) {
            return summary_to_dict(run_visibility(config_from(scenario, config_json),
                                                  options_from(out_dir, threads, seed)));
        },
        py::arg("scenario") = "", py::arg("config_json") = "", py::arg("out_dir") = "",
        py::arg("threads") = 0, py::arg("seed") = std::nullopt);
    m.def(
        "run_power_cdf",
        [](const std::string& scenario, const std::string& config_json, const std::string& out_dir,
           unsigned threads, std::optional<std::uint64_t> seed) {
            return summary_to_dict(run_power_cdf(config_from(scenario, config_json),
                                                 options_from(out_dir, threads, seed)));
        },
        py::arg("scenario") = "", py::arg("config_json") = "", py::arg("out_dir") = "",
        py::arg("threads") = 0, py::arg("seed") = std::nullopt);

    m.def("list_scenarios", &builtin_scenario_names);
    m.def("scenario_config_json",
          [](const std::string& name) { return serialize_config(builtin_scenario(name)); },
          py::arg("name"), "Fully resolved JSON for a builtin scenario");
    m.def(
        "validate_config_json",
        [](const std::string& config_json) {
            const ValidationReport report = validate_config(parse_config(config_json));
            py::dict out;
            out["errors"] = report.errors;
            out["warnings"] = report.warnings;
            out["clean"] = report.clean();
            return out;
        },
        py::arg("config_json"));

#ifdef HALOBEAM_VERSION
    m.attr("__version__") = HALOBEAM_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
