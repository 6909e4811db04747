#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>

#include "oamrcs/analysis.hpp"
#include "oamrcs/angles.hpp"
#include "oamrcs/antenna.hpp"
#include "oamrcs/beam.hpp"
#include "oamrcs/csv.hpp"
#include "oamrcs/error.hpp"
#include "oamrcs/measurement.hpp"
#include "oamrcs/scene.hpp"

namespace oamrcs::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

constexpr const char* kFormatsFooter =
    "File formats:\n"
    "  target CSV      x_m,y_m,z_m,sigma_m2[,profile_file]  (profile: angle_deg,sigma_m2)\n"
    "  gain CSV        angle_deg,gain_dbi,phase_deg\n"
    "  wavefront CSV   angle_deg,phase_deg\n"
    "  echo sweep CSV  angle_deg,p_r_dbm\n"
    "  config JSON     freq_ghz, range_m, gt_db, gr_db, pt_dbm, height_m, sphere_radius_m,\n"
    "                  sphere_spacing_m [, pr_dbm, rotation_rad_per_min]\n"
    "  curve CSV out   angle_deg,value  (multi-curve: angle_deg,<label1>,<label2>,...)\n"
    "Angles are degrees in every file and flag.";

/// Options shared by every subcommand, resolved against the config file.
struct GlobalOptions {
    std::optional<std::string> config_path;
    std::optional<std::string> out_path;
    bool json = false;

    MeasurementConfig config() const {
        return config_path ? load_measurement_config(*config_path) : MeasurementConfig{};
    }
};

/// Flags describing the illuminated scene for sweep and compare.
struct SceneOptions {
    std::string target = "two-sphere";
    std::optional<std::string> target_file;
    std::optional<double> freq_ghz;
    std::optional<double> wavelength_mm;
    std::optional<double> spacing_m;
    std::optional<double> standoff_m;
    double sigma0_m2 = 1.0;
    double tilt_deg = 0.0;
    std::optional<std::string> gain_file;
    std::size_t grid = kDefaultGridPoints;

    void add_to(CLI::App& cmd) {
        cmd.add_option("--freq-ghz", freq_ghz, "Carrier frequency in GHz [config freq_ghz, 10]");
        cmd.add_option("--wavelength-mm", wavelength_mm, "Free-space wavelength in mm (overrides --freq-ghz)");
        cmd.add_option("--spacing-m", spacing_m, "Two-sphere spacing D in m [config sphere_spacing_m, 0.4]");
        cmd.add_option("--standoff-m", standoff_m, "Two-sphere standoff y0 in m [config range_m, 8.5]");
        cmd.add_option("--sigma0-m2", sigma0_m2, "RCS of one sphere in m^2")->capture_default_str();
        cmd.add_option("--tilt-deg", tilt_deg, "OAM antenna tilt; k_z = k*cos(tilt)")->capture_default_str();
        cmd.add_option("--gain-file", gain_file, "OAM gain pattern CSV (angle_deg,gain_dbi,phase_deg)");
        cmd.add_option("--grid", grid, "Number of observation angles over [0, 360)")->capture_default_str();
    }

    double wavelength(const MeasurementConfig& cfg) const {
        if (wavelength_mm) {
            return *wavelength_mm * 1e-3;
        }
        return wavelength_from_ghz(freq_ghz.value_or(cfg.freq_ghz));
    }

    TwoSphereLayout layout(const MeasurementConfig& cfg) const {
        TwoSphereLayout l{spacing_m.value_or(cfg.sphere_spacing_m), standoff_m.value_or(cfg.range_m), sigma0_m2};
        l.validate();
        return l;
    }

    OamBeam oam_beam(int mode, double wavenumber) const {
        GainPattern gain = gain_file ? load_gain_csv(*gain_file) : GainPattern::uniform();
        return OamBeam::tilted(mode, wavenumber, deg_to_rad(tilt_deg), std::move(gain));
    }
};

std::string format_fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

/// Rounds to the precision used in every data file so JSON and CSV agree.
double round_sig(double v) { return std::strtod(csv::format_number(v).c_str(), nullptr); }

std::string curves_csv(const std::vector<RcsCurve>& curves, const std::vector<std::string>& columns) {
    std::string out = "angle_deg";
    for (const auto& c : columns) {
        out += "," + c;
    }
    out += "\n";
    const auto& grid = curves.front().angles_deg();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        out += csv::format_number(grid[i]);
        for (const auto& c : curves) {
            out += "," + csv::format_number(c.values()[i]);
        }
        out += "\n";
    }
    return out;
}

void emit(const std::optional<std::string>& path, const std::string& content, std::ostream& out) {
    if (path) {
        csv::write_file(*path, content);
    } else {
        out << content;
    }
}

void fail_usage(const std::string& message) { throw CLI::ValidationError(message); }

// ---------------------------------------------------------------- design

struct DesignCommand {
    double mode = 0.0;
    std::optional<double> freq_ghz;
    std::optional<double> wavelength_mm;
    double wide_side_mm = kDefaultWideSide * 1e3;

    void add_to(CLI::App& app) {
        auto* cmd = app.add_subcommand("design", "Arc waveguide radius for an equivalent OAM mode");
        cmd->add_option("--mode", mode, "Desired equivalent OAM mode (positive)")->required();
        cmd->add_option("--freq-ghz", freq_ghz, "Carrier frequency in GHz [config freq_ghz, 10]");
        cmd->add_option("--wavelength-mm", wavelength_mm, "Free-space wavelength in mm (overrides --freq-ghz)");
        cmd->add_option("--wide-side-mm", wide_side_mm, "Waveguide wide side s_w in mm")->capture_default_str();
        cmd->footer(
            "Prints mode, guided wavelength, effective radius a = r + s_w/2 and arc radius r\n"
            "(mm, 3 decimals). With --json: {\"mode\", \"lambda_g_mm\", \"a_mm\", \"r_mm\"}.");
    }

    void run(const GlobalOptions& g, std::ostream& out) const {
        const MeasurementConfig cfg = g.config();
        const double lambda0 = wavelength_mm ? *wavelength_mm * 1e-3 : wavelength_from_ghz(freq_ghz.value_or(cfg.freq_ghz));
        const ArcDesign d = design_arc(mode, wide_side_mm * 1e-3, lambda0);
        const double lg = d.guided_wavelength * 1e3;
        const double a = d.effective_radius * 1e3;
        const double r = d.radius * 1e3;
        if (g.json) {
            ordered_json j;
            j["mode"] = std::round(d.mode * 1e3) / 1e3;
            j["lambda_g_mm"] = std::round(lg * 1e3) / 1e3;
            j["a_mm"] = std::round(a * 1e3) / 1e3;
            j["r_mm"] = std::round(r * 1e3) / 1e3;
            out << j.dump() << "\n";
            return;
        }
        char line[160];
        std::snprintf(line, sizeof line, "%10s %14s %12s %12s\n", "mode", "lambda_g_mm", "a_mm", "r_mm");
        out << line;
        std::snprintf(line, sizeof line, "%10.3f %14.3f %12.3f %12.3f\n", d.mode, lg, a, r);
        out << line;
    }
};

// ---------------------------------------------------------------- sweep

struct SweepCommand {
    SceneOptions scene;
    std::string beam = "plane";
    std::optional<int> mode;
    CLI::App* cmd = nullptr;

    void add_to(CLI::App& app) {
        cmd = app.add_subcommand("sweep", "RCS-vs-angle curve for one beam");
        cmd->add_option("--target", scene.target, "two-sphere | csv")
            ->check(CLI::IsMember({"two-sphere", "csv"}))
            ->capture_default_str();
        cmd->add_option("--target-file", scene.target_file, "Target CSV (with --target csv)");
        cmd->add_option("--beam", beam, "plane | oam")->check(CLI::IsMember({"plane", "oam"}))->capture_default_str();
        cmd->add_option("--mode", mode, "OAM mode number (with --beam oam)");
        scene.add_to(*cmd);
        cmd->footer(std::string("Writes angle_deg,value to --out (stdout when omitted).\n") + kFormatsFooter);
    }

    void validate_flags() const {
        if (beam == "plane" && mode) {
            fail_usage("--mode is only valid with --beam oam");
        }
        if (beam == "oam" && !mode) {
            fail_usage("--beam oam requires --mode");
        }
        if (beam == "plane" && (cmd->count("--tilt-deg") || scene.gain_file)) {
            fail_usage("--tilt-deg and --gain-file apply to --beam oam only");
        }
        if (scene.target == "csv" && !scene.target_file) {
            fail_usage("--target csv requires --target-file");
        }
        if (scene.target == "two-sphere" && scene.target_file) {
            fail_usage("--target-file is only valid with --target csv");
        }
        if (scene.target == "csv" && (scene.spacing_m || scene.standoff_m || cmd->count("--sigma0-m2"))) {
            fail_usage("--spacing-m, --standoff-m and --sigma0-m2 apply to --target two-sphere only");
        }
    }

    void run(const GlobalOptions& g, std::ostream& out) const {
        validate_flags();
        const MeasurementConfig cfg = g.config();
        const double lambda = scene.wavelength(cfg);
        if (!(lambda > 0.0) || !std::isfinite(lambda)) {
            throw DomainError("wavelength must be positive");
        }
        const double k = kTwoPi / lambda;
        const auto grid = angle_grid(scene.grid);
        Beam b = PlaneWaveBeam{k};
        if (beam == "oam") {
            b = scene.oam_beam(*mode, k);
        }
        std::optional<RcsCurve> curve;
        if (scene.target == "two-sphere") {
            curve = sweep_two_sphere(scene.layout(cfg), b, grid);
        } else {
            curve = sweep_general(rotating_target(load_target_csv(*scene.target_file)), b, grid);
        }
        emit(g.out_path, curves_csv({*curve}, {"value"}), out);
    }
};

// ---------------------------------------------------------------- compare

struct CompareCommand {
    SceneOptions scene;
    std::vector<int> modes;
    double prominence = 0.5;

    void add_to(CLI::App& app) {
        auto* cmd = app.add_subcommand("compare", "Plane wave against several OAM modes on the two-sphere target");
        cmd->add_option("--modes", modes, "Comma-separated OAM modes, e.g. 1,2,3,5")->required()->delimiter(',');
        cmd->add_option("--prominence", prominence, "Peak threshold as a fraction of the curve maximum")
            ->capture_default_str();
        scene.add_to(*cmd);
        cmd->footer(
            "Writes <out>/curves.csv (angle_deg,plane,oam_l<mode>,...) and <out>/report.json:\n"
            "  grid_points, prominence, curves[], modes[], distance_to_plane[] (one per mode),\n"
            "  distance_matrix[][], peaks_deg[][], mirror_asymmetry[], best_curve_per_angle[]\n" +
            std::string(kFormatsFooter));
    }

    void run(const GlobalOptions& g) const {
        if (!g.out_path) {
            fail_usage("compare requires --out <directory>");
        }
        if (!(prominence > 0.0 && prominence < 1.0)) {
            fail_usage("--prominence must lie in (0, 1)");
        }
        const MeasurementConfig cfg = g.config();
        const double k = kTwoPi / scene.wavelength(cfg);
        const TwoSphereLayout layout = scene.layout(cfg);
        const auto grid = angle_grid(scene.grid);
        std::vector<OamBeam> beams;
        for (int m : modes) {
            beams.push_back(scene.oam_beam(m, k));
        }

        std::vector<RcsCurve> curves;
        curves.push_back(sweep_two_sphere(layout, PlaneWaveBeam{k}, grid));
        for (const auto& b : beams) {
            curves.push_back(sweep_two_sphere(layout, b, grid));
        }
        const DiversityReport report = diversity_report(curves, prominence);

        ordered_json j;
        j["grid_points"] = grid.size();
        j["prominence"] = prominence;
        j["curves"] = report.labels;
        j["modes"] = modes;
        auto to_plane = ordered_json::array();
        for (std::size_t i = 1; i < curves.size(); ++i) {
            to_plane.push_back(round_sig(report.distance[0][i]));
        }
        j["distance_to_plane"] = to_plane;
        auto matrix = ordered_json::array();
        for (const auto& row : report.distance) {
            auto r = ordered_json::array();
            for (double d : row) {
                r.push_back(round_sig(d));
            }
            matrix.push_back(r);
        }
        j["distance_matrix"] = matrix;
        auto peaks = ordered_json::array();
        for (const auto& p : report.peaks_deg) {
            auto r = ordered_json::array();
            for (double a : p) {
                r.push_back(round_sig(a));
            }
            peaks.push_back(r);
        }
        j["peaks_deg"] = peaks;
        auto asym = ordered_json::array();
        for (double a : report.asymmetry) {
            asym.push_back(round_sig(a));
        }
        j["mirror_asymmetry"] = asym;
        j["best_curve_per_angle"] = report.best_curve;

        const fs::path dir = *g.out_path;
        fs::create_directories(dir);
        csv::write_file(dir / "curves.csv", curves_csv(curves, report.labels));
        csv::write_file(dir / "report.json", j.dump(2) + "\n");
    }
};

// ---------------------------------------------------------------- reduce

struct ReduceCommand {
    std::vector<std::string> sweeps;
    std::optional<double> align_at;

    void add_to(CLI::App& app) {
        auto* cmd = app.add_subcommand("reduce", "Radar-equation reduction of measured echo sweeps to dBsm");
        cmd->add_option("--sweep", sweeps, "Echo sweep CSV (angle_deg,p_r_dbm); repeat for several")
            ->required()
            ->take_all();
        cmd->add_option("--align-at", align_at, "Align every curve to the first one at this angle (degrees)");
        cmd->footer(
            "Without --config the chamber defaults are used (10 GHz, 8.5 m, 16 dB gains, 28 dBm).\n"
            "Writes angle_deg,rcs_dbsm for one sweep, angle_deg,<label1>,... for several.\n" +
            std::string(kFormatsFooter));
    }

    void run(const GlobalOptions& g, std::ostream& out) const {
        const MeasurementConfig cfg = g.config();
        std::vector<RcsCurve> curves;
        for (const auto& path : sweeps) {
            curves.push_back(reduce_sweep_to_rcs(load_echo_sweep(path), cfg));
        }
        for (std::size_t i = 1; i < curves.size(); ++i) {
            require_same_grid(curves.front(), curves[i]);
        }
        if (align_at) {
            curves = align_at_reference(curves, *align_at);
        }
        std::vector<std::string> columns;
        if (curves.size() == 1) {
            columns.push_back("rcs_dbsm");
        } else {
            for (const auto& c : curves) {
                columns.push_back(c.label());
            }
        }
        emit(g.out_path, curves_csv(curves, columns), out);
    }
};

// ---------------------------------------------------------------- estimate-mode

struct EstimateModeCommand {
    std::string wavefront;

    void add_to(CLI::App& app) {
        auto* cmd = app.add_subcommand("estimate-mode", "Equivalent OAM mode from a main-lobe wavefront");
        cmd->add_option("--wavefront", wavefront, "Wavefront CSV (angle_deg,phase_deg), unwrapped phase")
            ->required();
        cmd->footer("Prints the least-squares phase slope (deg/deg) and the RMS fit residual.");
    }

    void run(const GlobalOptions& g, std::ostream& out) const {
        const auto samples = load_wavefront_csv(wavefront);
        const ModeEstimate e = fit_mode_from_wavefront(samples);
        std::string text;
        if (g.json) {
            ordered_json j;
            j["mode_estimate"] = std::round(e.mode * 1e3) / 1e3;
            j["residual_rms_deg"] = std::round(e.residual_rms_deg * 1e3) / 1e3;
            text = j.dump() + "\n";
        } else {
            text = "mode_estimate " + format_fixed(e.mode, 3) + "\nresidual_rms_deg " +
                   format_fixed(e.residual_rms_deg, 3) + "\n";
        }
        emit(g.out_path, text, out);
    }
};

std::string one_line(std::string s) {
    for (auto& c : s) {
        if (c == '\n' || c == '\r') {
            c = ' ';
        }
    }
    return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"RCS diversity under OAM and plane-wave illumination", "oamrcs"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions global;
    app.add_option("--config", global.config_path, "Measurement configuration JSON")
        ->check(CLI::ExistingFile);
    app.add_option("--out", global.out_path, "Output file (directory for compare)");
    app.add_flag("--json", global.json, "JSON output where supported");
    app.footer(kFormatsFooter);

    DesignCommand design;
    SweepCommand sweep;
    CompareCommand compare;
    ReduceCommand reduce;
    EstimateModeCommand estimate;
    design.add_to(app);
    sweep.add_to(app);
    compare.add_to(app);
    reduce.add_to(app);
    estimate.add_to(app);

    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        const auto* sub = app.get_subcommands().front();
        const std::string name = sub->get_name();
        if (name == "design") {
            design.run(global, out);
        } else if (name == "sweep") {
            sweep.run(global, out);
        } else if (name == "compare") {
            compare.run(global);
        } else if (name == "reduce") {
            reduce.run(global, out);
        } else {
            estimate.run(global, out);
        }
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << one_line(e.what()) << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << one_line(e.what()) << "\n";
        return 1;
    }
    return 0;
}

}  // namespace oamrcs::cli
