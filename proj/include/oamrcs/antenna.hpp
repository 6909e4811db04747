#pragma once

namespace oamrcs {

/// Standard X-band (WR-90) wide side, used when no wide side is given.
inline constexpr double kDefaultWideSide = 0.02286;
/// WR-90 narrow side.
inline constexpr double kDefaultNarrowSide = 0.01016;

/// Arc leaky-wave waveguide operated in TE10. The narrow side is carried for
/// completeness and enters no formula.
struct WaveguideSpec {
    double wide_side;             // s_w, m
    double narrow_side;           // s_n, m
    double radius;                // inner arc radius r, m
    double free_space_wavelength; // λ0, m

    /// Throws DomainError unless s_w > λ0/2 and the rest are positive.
    void validate() const;
    /// |ℓe| realized by this geometry.
    double equivalent_mode() const;
};

/// λ0 / sqrt(1 − (λ0 / 2s_w)²).
///
/// This is the TE10 guided wavelength (cutoff at 2s_w). The original design
/// note calls the expression the cutoff wavelength and then sets the guided
/// wavelength equal to it; the value is the same either way.
/// Throws DomainError "mode below cutoff" when s_w <= λ0/2.
double guided_wavelength(double free_space_wavelength, double wide_side);

/// |ℓe| = (r + s_w/2)·π·sqrt((2/λ0)² − (1/s_w)²) = 2π(r + s_w/2)/λ_g.
double equivalent_mode(double radius, double wide_side, double free_space_wavelength);

/// Inverse of equivalent_mode: r = ℓ·λ_g/(2π) − s_w/2 for a positive real
/// mode. Throws DomainError "mode unrealizable at this wide side" when the
/// resulting radius would not be positive.
double design_radius(double mode, double wide_side, double free_space_wavelength);

struct ArcDesign {
    double mode;
    double guided_wavelength;  // m
    double effective_radius;   // a = r + s_w/2, m
    double radius;             // r, m
};

ArcDesign design_arc(double mode, double wide_side, double free_space_wavelength);

}  // namespace oamrcs
