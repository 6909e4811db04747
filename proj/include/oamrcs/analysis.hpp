#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "oamrcs/beam.hpp"
#include "oamrcs/scene.hpp"

namespace oamrcs {

/// Default sweep resolution: 0.1° steps.
inline constexpr std::size_t kDefaultGridPoints = 3600;

enum class CurveKind {
    Ratio,         // σ/σ0, non-negative
    SquareMeters,  // absolute σ, non-negative
    Dbsm,          // 10·log10(σ / 1 m²)
    Dbm,           // received power
};

/// Values sampled on a strictly increasing angle grid within [0°, 360°).
class RcsCurve {
public:
    RcsCurve(std::vector<double> angles_deg, std::vector<double> values, std::string label,
             CurveKind kind = CurveKind::Ratio);

    const std::vector<double>& angles_deg() const { return angles_; }
    const std::vector<double>& values() const { return values_; }
    const std::string& label() const { return label_; }
    CurveKind kind() const { return kind_; }
    std::size_t size() const { return values_.size(); }

    bool is_logarithmic() const { return kind_ == CurveKind::Dbsm || kind_ == CurveKind::Dbm; }

    /// Periodic linear interpolation; exact at grid knots.
    double value_at(double angle_deg) const;

    RcsCurve with_label(std::string label) const;

private:
    std::vector<double> angles_;
    std::vector<double> values_;
    std::string label_;
    CurveKind kind_;
};

/// n evenly spaced angles i·360/n, in degrees. Throws DomainError for n < 2.
std::vector<double> angle_grid(std::size_t n);

/// Closed-form two-sphere sweep (plane: raised cosine of 2kD·cosφ; OAM: gain-cancelled form,
/// falling back to the general sum where the sphere gains differ).
RcsCurve sweep_two_sphere(const TwoSphereLayout& layout, const Beam& beam, std::span<const double> grid_deg);

using TargetBuilder = std::function<TargetModel(double phi_rad)>;

/// Rigid turntable rotation of a fixed cloud: rotates by φ in the x–z plane
/// about the axis through the centroid parallel to y, matching the
/// two-sphere layout's sense of rotation.
TargetBuilder rotating_target(TargetModel base);

/// Evaluates the general phasor sum on builder(φ) for every grid angle.
/// Ratio-typed when every scatterer shares one constant σ, otherwise the
/// orientation-dependent absolute RCS in m². Errors name the offending angle.
RcsCurve sweep_general(const TargetBuilder& builder, const Beam& beam, std::span<const double> grid_deg);

/// RMS(a − b) / RMS(a). Throws DomainError on grid mismatch or zero-RMS a.
double curve_distance(const RcsCurve& a, const RcsCurve& b);

/// Local maxima (periodic at 0°/360°) at or above prominence·max. For curves
/// with negative values the threshold is min + prominence·(max − min).
std::vector<double> peak_angles(const RcsCurve& curve, double prominence = 0.5);

/// max_φ |f(180° − φ) − f(φ)| / max f over the grid.
double mirror_asymmetry(const RcsCurve& curve);

struct DiversityReport {
    std::vector<std::string> labels;
    /// RMS(c_i − c_j) / RMS(c_0): symmetric, row 0 is curve_distance(c_0, ·).
    std::vector<std::vector<double>> distance;
    std::vector<std::vector<double>> peaks_deg;
    std::vector<double> asymmetry;
    /// Index of the largest curve at every grid angle (ties: lowest index).
    std::vector<std::size_t> best_curve;
    double prominence;
};

DiversityReport diversity_report(std::span<const RcsCurve> curves, double prominence = 0.5);

/// Throws DomainError unless both curves share the exact angle grid.
void require_same_grid(const RcsCurve& a, const RcsCurve& b);

}  // namespace oamrcs
