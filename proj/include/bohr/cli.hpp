#pragma once

#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bohr/collapse.hpp"
#include "bohr/format.hpp"
#include "bohr/quantization.hpp"
#include "bohr/spectra.hpp"

namespace bohr::cli {

inline constexpr std::string_view version = "1.0.0";

// exit codes: 0 success, 1 verification/convergence failure, 2 usage error
inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_usage = 2;

namespace detail {

inline long long as_int(int v) { return static_cast<long long>(v); }

inline DataTable constants_table(const ConstantsSet& k) {
    const std::string tag{to_string(k.provenance())};
    DataTable t;
    t.columns = {"symbol", "value", "unit", "provenance"};
    t.rows = {
        {std::string("e"), k.e().value(), std::string("C"), tag},
        {std::string("m_e"), k.m_e().value(), std::string("kg"), tag},
        {std::string("eps0"), k.eps0().value(), std::string("F/m"), tag},
        {std::string("h"), k.h().value(), std::string("J*s"), tag},
        {std::string("c"), k.c().value(), std::string("m/s"), tag},
        {std::string("hbar"), k.hbar().value(), std::string("J*s"),
         std::string("derived")},
        {std::string("rydberg_energy"), k.rydberg_energy().value(), std::string("J"),
         std::string("derived")},
    };
    return t;
}

inline DataTable orbit_records(const OrbitState& o, const ConstantsSet& k) {
    DataTable t;
    t.columns = {"Z", "n", "r_m", "v_mps", "f_hz", "Ek_J", "Ep_J", "E_J", "E_eV",
                 "L_Js"};
    t.rows = {{as_int(o.z), as_int(o.n.value()), o.radius.value(), o.speed.value(),
               o.frequency.value(), o.kinetic_energy.value(),
               o.potential_energy.value(), o.total_energy.value(),
               convert(o.total_energy, k.electronvolt()),
               o.angular_momentum.value()}};
    return t;
}

inline DataTable orbit_key_value(const OrbitState& o, const ConstantsSet& k) {
    DataTable t;
    t.columns = {"quantity", "value", "unit"};
    auto row = [&](const char* name, Cell v, const char* unit) {
        t.rows.push_back({std::string(name), std::move(v), std::string(unit)});
    };
    row("Z", as_int(o.z), "");
    row("n", as_int(o.n.value()), "");
    row("r", o.radius.value(), "m");
    row("v", o.speed.value(), "m/s");
    row("f", o.frequency.value(), "Hz");
    row("E_k", o.kinetic_energy.value(), "J");
    row("E_p", o.potential_energy.value(), "J");
    row("E", o.total_energy.value(), "J");
    row("E", convert(o.total_energy, k.electronvolt()), "eV");
    row("L", o.angular_momentum.value(), "J*s");
    row("L/hbar", (o.angular_momentum / k.hbar()).value(), "");
    return t;
}

inline DataTable verify_table(int n_max, double step, const ConstantsSet& k,
                              bool& all_within) {
    DataTable t;
    t.columns = {"n", "f_hz", "dEdf_system_Js", "dEdf_numeric_Js", "dEdf_planck_Js",
                 "L_Js", "residual_numeric", "residual_quantization"};
    all_within = true;
    for (int n = 1; n <= n_max; ++n) {
        const DerivativeCheck row = run_derivation_check(n, step, k);
        all_within = all_within && row.residual_quantization <= 1e-12 &&
                     row.residual_numeric <= 1e-6;
        t.rows.push_back({as_int(n), row.frequency.value(),
                          row.dEdf_system_analytic.value(),
                          row.dEdf_system_numeric.value(), row.dEdf_planck.value(),
                          row.angular_momentum.value(), row.residual_numeric,
                          row.residual_quantization});
    }
    return t;
}

inline DataTable spectrum_table(const std::vector<TransitionLine>& lines,
                                const std::string& unit, const ConstantsSet& k) {
    DataTable t;
    const std::string energy_col = unit == "eV" ? "energy_eV" : "energy_J";
    const std::string wavelength_col = unit == "nm" ? "wavelength_nm" : "wavelength_m";
    t.columns = {"n_upper", "n_lower", energy_col, "frequency_hz", wavelength_col};
    for (const TransitionLine& line : lines) {
        const double energy = unit == "eV"
                                  ? convert(line.delta_energy, k.electronvolt())
                                  : line.delta_energy.value();
        const double wavelength = unit == "nm" ? convert(line.wavelength, units::nanometer)
                                               : line.wavelength.value();
        t.rows.push_back({as_int(line.n_upper), as_int(line.n_lower), energy,
                          line.photon_frequency.value(), wavelength});
    }
    return t;
}

inline DataTable collapse_records(const CollapseConfig& cfg, const Quantity& r_stop,
                                  const CollapseResult& res) {
    DataTable t;
    t.columns = {"Z", "r0_m", "r_stop_m", "collapse_time_s", "closed_form_time_s",
                 "residual", "steps"};
    t.rows = {{as_int(cfg.z), cfg.r0.value(), r_stop.value(),
               res.collapse_time.value(), res.closed_form_time.value(), res.residual,
               as_int(res.steps)}};
    return t;
}

}  // namespace detail

/// Parse and execute. `argv` excludes the program name.
inline int run(const std::vector<std::string>& argv, std::ostream& out,
               std::ostream& err) {
    CLI::App app{"semi-classical hydrogen orbit calculator"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string constants_name = "full";
    std::string format_name = "table";
    int precision = 6;
    app.add_option("--constants", constants_name, "constants set")
        ->check(CLI::IsMember({"paper", "full"}));
    app.add_option("--format", format_name, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    app.add_option("--precision", precision, "significant digits")
        ->check(CLI::Range(2, 17));

    CLI::App* cmd_constants = app.add_subcommand("constants", "print the constants set");

    CLI::App* cmd_orbit = app.add_subcommand("orbit", "one quantized orbit");
    int orbit_z = 1, orbit_n = 1;
    cmd_orbit->add_option("-Z", orbit_z, "proton count")->check(CLI::PositiveNumber);
    cmd_orbit->add_option("-n", orbit_n, "quantum number")
        ->required()
        ->check(CLI::PositiveNumber);

    CLI::App* cmd_verify =
        app.add_subcommand("verify", "check 2 pi L = n h and dE/df numerically");
    int verify_n_max = 10;
    double verify_step = 1e-5;
    cmd_verify->add_option("-n", verify_n_max, "check n = 1..N")
        ->check(CLI::PositiveNumber);
    cmd_verify->add_option("--step", verify_step, "relative step for the difference");

    CLI::App* cmd_spectrum = app.add_subcommand("spectrum", "emission line series");
    int spectrum_z = 1, spectrum_lower = 2, spectrum_count = 4;
    std::string spectrum_unit = "nm";
    cmd_spectrum->add_option("-Z", spectrum_z, "proton count")->check(CLI::PositiveNumber);
    cmd_spectrum->add_option("--lower", spectrum_lower, "final level")
        ->check(CLI::PositiveNumber);
    cmd_spectrum->add_option("--count", spectrum_count, "number of lines")
        ->check(CLI::PositiveNumber);
    cmd_spectrum->add_option("--unit", spectrum_unit, "report unit")
        ->check(CLI::IsMember({"nm", "m", "eV", "Hz"}));

    CLI::App* cmd_collapse =
        app.add_subcommand("collapse", "classical radiative inspiral");
    double col_r0 = 1e-10, col_rstop = 0.0, col_tol = 1e-6;
    int col_z = 1, col_max_steps = 100000;
    std::string col_trajectory;
    cmd_collapse->add_option("--r0", col_r0, "initial radius, m");
    cmd_collapse->add_option("-Z", col_z, "proton count")->check(CLI::PositiveNumber);
    CLI::Option* rstop_opt =
        cmd_collapse->add_option("--r-stop", col_rstop, "termination radius, m");
    cmd_collapse->add_option("--tol", col_tol, "relative tolerance");
    cmd_collapse->add_option("--max-steps", col_max_steps, "step budget")
        ->check(CLI::PositiveNumber);
    cmd_collapse->add_option("--trajectory", col_trajectory,
                             "write t,r samples to this CSV file");

    std::vector<const char*> cargs;
    cargs.push_back("bohr");
    for (const std::string& a : argv) cargs.push_back(a.c_str());
    try {
        app.parse(int(cargs.size()), cargs.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return exit_usage;
    }

    const ConstantsSet& k = ConstantsSet::get(*provenance_from_string(constants_name));
    const OutputFormat format = *format_from_string(format_name);
    RenderMeta meta;
    meta.constants = constants_name;
    meta.version = std::string(version);
    meta.precision = precision;

    try {
        if (cmd_constants->parsed()) {
            meta.command = "constants";
            out << render(detail::constants_table(k), format, meta);
            return exit_ok;
        }
        if (cmd_orbit->parsed()) {
            meta.command = "orbit";
            const OrbitState o = quantized_orbit(orbit_z, orbit_n, k);
            const DataTable t = format == OutputFormat::table
                                    ? detail::orbit_key_value(o, k)
                                    : detail::orbit_records(o, k);
            out << render(t, format, meta);
            return exit_ok;
        }
        if (cmd_verify->parsed()) {
            meta.command = "verify";
            bool all_within = false;
            const DataTable t = detail::verify_table(verify_n_max, verify_step, k, all_within);
            out << render(t, format, meta);
            if (!all_within) {
                err << "verification failed: residual above threshold\n";
                return exit_check_failed;
            }
            return exit_ok;
        }
        if (cmd_spectrum->parsed()) {
            meta.command = "spectrum";
            const std::vector<TransitionLine> lines = series(spectrum_z, spectrum_lower, spectrum_count, k);
            const DataTable t = detail::spectrum_table(lines, spectrum_unit, k);
            const Quantity limit = series_limit_wavelength(spectrum_z, spectrum_lower, k);
            if (format == OutputFormat::json) {
                nlohmann::ordered_json doc = json_document(t, meta);
                doc["meta"]["series_limit_m"] =
                    round_to_significant(limit.value(), precision);
                out << doc.dump(2) << '\n';
            } else {
                out << render(t, format, meta);
                if (format == OutputFormat::table)
                    out << "series limit: "
                        << format_significant(spectrum_unit == "nm"
                                                  ? convert(limit, units::nanometer)
                                                  : limit.value(),
                                              precision)
                        << (spectrum_unit == "nm" ? " nm\n" : " m\n");
            }
            return exit_ok;
        }
        if (cmd_collapse->parsed()) {
            meta.command = "collapse";
            CollapseConfig cfg;
            cfg.z = col_z;
            cfg.r0 = Quantity(col_r0, dim::length);
            if (rstop_opt->count() > 0) cfg.r_stop = Quantity(col_rstop, dim::length);
            cfg.max_steps = col_max_steps;
            cfg.rel_tol = col_tol;
            const Quantity r_stop = bohr::detail::resolve_r_stop(cfg, k);
            const CollapseResult res = simulate_collapse(cfg, k);
            out << render(detail::collapse_records(cfg, r_stop, res), format, meta);
            if (!col_trajectory.empty()) {
                std::ofstream file(col_trajectory);
                if (!file) {
                    err << "cannot open trajectory file: " << col_trajectory << '\n';
                    return exit_usage;
                }
                file << "t_seconds,r_meters\n";
                for (const CollapseSample& s : res.samples)
                    file << format_significant(s.t_s, precision) << ','
                         << format_significant(s.r_m, precision) << '\n';
            }
            return exit_ok;
        }
    } catch (const convergence_error& e) {
        err << e.what() << '\n';
        return exit_check_failed;
    } catch (const error& e) {
        err << e.what() << '\n';
        return exit_usage;
    }
    err << "no subcommand\n";
    return exit_usage;
}

}  // namespace bohr::cli
