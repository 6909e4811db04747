#include "oamrcs/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <variant>

#include "oamrcs/angles.hpp"
#include "oamrcs/error.hpp"
#include "oamrcs/scattering.hpp"
#include "oamrcs/simd/kernels.hpp"

namespace oamrcs {

namespace {

// Grid angles closer than this are treated as the same knot.
constexpr double kKnotSnapDeg = 1e-9;

std::string format_angle(double deg) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", deg);
    return buf;
}

}  // namespace

RcsCurve::RcsCurve(std::vector<double> angles_deg, std::vector<double> values, std::string label,
                   CurveKind kind)
    : angles_(std::move(angles_deg)), values_(std::move(values)), label_(std::move(label)), kind_(kind) {
    if (angles_.size() != values_.size()) {
        throw DomainError("curve angles and values differ in length");
    }
    if (angles_.size() < 2) {
        throw DomainError("curve needs at least 2 points");
    }
    for (std::size_t i = 0; i < angles_.size(); ++i) {
        if (!std::isfinite(angles_[i]) || angles_[i] < 0.0 || angles_[i] >= 360.0) {
            throw DomainError("curve angles must lie in [0, 360) degrees");
        }
        if (i > 0 && !(angles_[i] > angles_[i - 1])) {
            throw DomainError("curve angles must be strictly increasing");
        }
        if (!std::isfinite(values_[i])) {
            throw DomainError("curve values must be finite (at " + format_angle(angles_[i]) + " deg)");
        }
        if (!is_logarithmic() && values_[i] < 0.0) {
            throw DomainError("RCS values must be >= 0 (at " + format_angle(angles_[i]) + " deg)");
        }
    }
}

double RcsCurve::value_at(double angle_deg) const {
    double a = std::fmod(angle_deg, 360.0);
    if (a < 0.0) {
        a += 360.0;
    }
    const auto hi = std::upper_bound(angles_.begin(), angles_.end(), a);
    const std::size_t n = angles_.size();
    const std::size_t j = static_cast<std::size_t>(hi - angles_.begin());  // first knot > a
    const std::size_t lo = (j + n - 1) % n;
    const std::size_t up = j % n;
    if (std::abs(angles_[lo] - a) <= kKnotSnapDeg) {
        return values_[lo];
    }
    if (std::abs(angles_[up] - a) <= kKnotSnapDeg || std::abs(angles_[up] + 360.0 - a) <= kKnotSnapDeg) {
        return values_[up];
    }
    double span = angles_[up] - angles_[lo];
    double offset = a - angles_[lo];
    if (span <= 0.0) {
        span += 360.0;
    }
    if (offset < 0.0) {
        offset += 360.0;
    }
    const double t = offset / span;
    return values_[lo] + t * (values_[up] - values_[lo]);
}

RcsCurve RcsCurve::with_label(std::string label) const {
    RcsCurve copy = *this;
    copy.label_ = std::move(label);
    return copy;
}

std::vector<double> angle_grid(std::size_t n) {
    if (n < 2) {
        throw DomainError("angle grid needs at least 2 points");
    }
    std::vector<double> grid(n);
    for (std::size_t i = 0; i < n; ++i) {
        grid[i] = 360.0 * static_cast<double>(i) / static_cast<double>(n);
    }
    return grid;
}

namespace {

std::string beam_label(const Beam& beam) {
    if (const auto* oam = std::get_if<OamBeam>(&beam)) {
        return "oam_l" + std::to_string(oam->mode);
    }
    return "plane";
}

}  // namespace

RcsCurve sweep_two_sphere(const TwoSphereLayout& layout, const Beam& beam, std::span<const double> grid_deg) {
    layout.validate();
    const OamBeam oam =
        std::holds_alternative<OamBeam>(beam) ? std::get<OamBeam>(beam) : OamBeam::from_plane(std::get<PlaneWaveBeam>(beam));
    oam.validate();

    const std::size_t n = grid_deg.size();
    std::vector<double> phase(n);
    for (std::size_t i = 0; i < n; ++i) {
        phase[i] = two_sphere_phase_difference(oam.mode, oam.wavenumber, oam.axial_wavenumber, layout.spacing_m,
                                               layout.standoff_m, deg_to_rad(grid_deg[i]));
    }
    std::vector<double> values(n);
    simd::kernels().raised_cosine(phase, values);

    if (!oam.gain.is_uniform()) {
        for (std::size_t i = 0; i < n; ++i) {
            const double phi = deg_to_rad(grid_deg[i]);
            if (!gains_cancel(layout, oam, phi)) {
                values[i] = oam_rcs_ratio(build_two_sphere_target(layout, phi), oam);
            }
        }
    }
    return RcsCurve({grid_deg.begin(), grid_deg.end()}, std::move(values), beam_label(beam));
}

TargetBuilder rotating_target(TargetModel base) {
    const Vec3 c = base.centroid();
    return [base = std::move(base), c](double phi_rad) {
        const double s = std::sin(phi_rad);
        const double co = std::cos(phi_rad);
        std::vector<ScattererPoint> pts = base.scatterers();
        for (auto& p : pts) {
            const Vec3 d = p.position - c;
            p.position = Vec3{c.x + d.x * co - d.z * s, p.position.y, c.z + d.x * s + d.z * co};
        }
        return TargetModel(std::move(pts), base.label());
    };
}

RcsCurve sweep_general(const TargetBuilder& builder, const Beam& beam, std::span<const double> grid_deg) {
    const OamBeam oam =
        std::holds_alternative<OamBeam>(beam) ? std::get<OamBeam>(beam) : OamBeam::from_plane(std::get<PlaneWaveBeam>(beam));
    oam.validate();
    std::vector<double> values(grid_deg.size());
    std::optional<CurveKind> kind;
    for (std::size_t i = 0; i < grid_deg.size(); ++i) {
        const double phi = deg_to_rad(grid_deg[i]);
        try {
            const TargetModel target = builder(phi);
            const CurveKind here = target.uniform_constant_rcs() ? CurveKind::Ratio : CurveKind::SquareMeters;
            if (kind && *kind != here) {
                throw DomainError("target builder switched between isotropic and anisotropic scatterers");
            }
            kind = here;
            values[i] = here == CurveKind::Ratio ? oam_rcs_ratio(target, oam) : anisotropic_oam_rcs(target, oam, phi);
        } catch (const DomainError& e) {
            throw DomainError("at " + format_angle(grid_deg[i]) + " deg: " + e.what());
        }
    }
    return RcsCurve({grid_deg.begin(), grid_deg.end()}, std::move(values), beam_label(beam),
                    kind.value_or(CurveKind::Ratio));
}

void require_same_grid(const RcsCurve& a, const RcsCurve& b) {
    if (a.angles_deg() != b.angles_deg()) {
        throw DomainError("curves '" + a.label() + "' and '" + b.label() + "' are on different angle grids");
    }
}

double curve_distance(const RcsCurve& a, const RcsCurve& b) {
    require_same_grid(a, b);
    const auto s = simd::kernels().sum_squares(a.values(), b.values());
    if (s.ref_sq == 0.0) {
        throw DomainError("reference curve '" + a.label() + "' has zero RMS");
    }
    return std::sqrt(s.diff_sq / s.ref_sq);
}

std::vector<double> peak_angles(const RcsCurve& curve, double prominence) {
    if (!(prominence > 0.0 && prominence < 1.0)) {
        throw DomainError("prominence must lie in (0, 1)");
    }
    const auto& v = curve.values();
    const auto [min_it, max_it] = std::minmax_element(v.begin(), v.end());
    const double lo = *min_it;
    const double hi = *max_it;
    const double threshold = lo >= 0.0 ? prominence * hi : lo + prominence * (hi - lo);
    const std::size_t n = v.size();
    std::vector<double> peaks;
    for (std::size_t i = 0; i < n; ++i) {
        const double prev = v[(i + n - 1) % n];
        const double next = v[(i + 1) % n];
        if (v[i] > prev && v[i] >= next && v[i] >= threshold) {
            peaks.push_back(curve.angles_deg()[i]);
        }
    }
    return peaks;
}

double mirror_asymmetry(const RcsCurve& curve) {
    double worst = 0.0;
    double scale = 0.0;
    for (std::size_t i = 0; i < curve.size(); ++i) {
        const double f = curve.values()[i];
        worst = std::max(worst, std::abs(curve.value_at(180.0 - curve.angles_deg()[i]) - f));
        scale = std::max(scale, std::abs(f));
    }
    return scale > 0.0 ? worst / scale : 0.0;
}

DiversityReport diversity_report(std::span<const RcsCurve> curves, double prominence) {
    if (curves.size() < 2) {
        throw DomainError("diversity report needs at least 2 curves");
    }
    for (const auto& c : curves.subspan(1)) {
        require_same_grid(curves.front(), c);
    }
    const auto& kernels = simd::kernels();
    const std::size_t m = curves.size();
    DiversityReport r;
    r.prominence = prominence;
    const double ref = kernels.sum_squares(curves[0].values(), curves[0].values()).ref_sq;
    if (ref == 0.0) {
        throw DomainError("reference curve '" + curves[0].label() + "' has zero RMS");
    }
    r.distance.assign(m, std::vector<double>(m, 0.0));
    for (std::size_t i = 0; i < m; ++i) {
        r.labels.push_back(curves[i].label());
        r.peaks_deg.push_back(peak_angles(curves[i], prominence));
        r.asymmetry.push_back(mirror_asymmetry(curves[i]));
        for (std::size_t j = i + 1; j < m; ++j) {
            const double d = std::sqrt(kernels.sum_squares(curves[i].values(), curves[j].values()).diff_sq / ref);
            r.distance[i][j] = d;
            r.distance[j][i] = d;
        }
    }
    const std::size_t n = curves[0].size();
    r.best_curve.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < m; ++i) {
            if (curves[i].values()[k] > curves[best].values()[k]) {
                best = i;
            }
        }
        r.best_curve[k] = best;
    }
    return r;
}

}  // namespace oamrcs
