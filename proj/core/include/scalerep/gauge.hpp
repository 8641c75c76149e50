#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "scalerep/error.hpp"

namespace scalerep {
namespace gauge {

using Complex = std::complex<double>;

/// Periodic 1D or 2D lattice; `sites` counts points per dimension.
struct Lattice {
    int dims = 1;
    int sites = 0;
    double dx = 0.1;

    Lattice(int dims_, int sites_, double dx_);

    int volume() const;
    int neighbor(int site, int mu) const;  // +1 step in direction mu, wrapped
    /// True when stepping from `site` in direction mu wraps around the torus.
    bool wraps(int site, int mu) const;
};

/// Real-valued potential A_mu(x), one value per site and direction.
struct GaugePotential {
    std::vector<std::vector<double>> A;  // [mu][site]
};

/// Link factors r_{mu,x} = exp(A_mu(x) * dx); strictly positive.
struct LinkFactor {
    std::vector<std::vector<double>> r;  // [mu][site]
};

/// One complex value per site: f(x) read in the structure attached to x.
struct ComplexField {
    std::vector<Complex> f;
};

GaugePotential zero_potential(const Lattice& lattice);
GaugePotential constant_potential(const Lattice& lattice, double a);
/// amp * sin(2*pi*coordinate/period) along each direction.
GaugePotential sine_potential(const Lattice& lattice, double amp, double period);

LinkFactor link_factor(const GaugePotential& A, const Lattice& lattice);

/// Forward difference (f(x+dx^mu) - f(x)) / dx with periodic wrap.
ComplexField ordinary_derivative(const ComplexField& f, int mu, const Lattice& lattice);

/// Covariant difference (r_{mu,x} f(x+dx^mu) - f(x)) / dx; equals the
/// ordinary derivative exactly when r == 1 everywhere.
ComplexField covariant_derivative(const ComplexField& f, const LinkFactor& r, int mu,
                                  const Lattice& lattice);

/// What the observer at x calls the neighbor's value a_y: r * a.
Complex local_representation(Complex a_y, double r_link);

/// The field transported link by link from seed at site 0 (1D lattices):
/// f(x + dx) = f(x) / r_{0,x}. Its covariant derivative vanishes on every
/// link except the wrap link, which carries the loop holonomy.
ComplexField transport_field(const Lattice& lattice, const LinkFactor& r, Complex seed);

struct TransportCheck {
    double max_abs_df = 0.0;          // all sites
    double max_abs_df_no_wrap = 0.0;  // wrap links excluded
    double max_abs_f = 0.0;
};

TransportCheck transport_check(const Lattice& lattice, const LinkFactor& r, Complex seed);

/// Finite-dimensional scaled Hilbert operations: scalar multiplication and
/// inner product divided by c (c > 0; other scales make the form indefinite).
struct ScaledHilbert {
    int dim = 0;
    double c = 1.0;

    ScaledHilbert(int dim_, double c_);
};

using Vec = std::vector<Complex>;

Vec hilbert_add(const Vec& u, const Vec& v);
Vec hilbert_sub(const Vec& u, const Vec& v);
Vec hilbert_scalar_mul(Complex s, const Vec& v, const ScaledHilbert& h);
Complex hilbert_inner(const Vec& u, const Vec& v, const ScaledHilbert& h);

/// Demo configuration; potential/field specs use the CLI syntax
/// ("zero" | "const:<a>" | "sine:amp=<a>,period=<p>" and
///  "const" | "linear" | "exp" | "transport").
struct DemoConfig {
    int dims = 1;
    int sites = 64;
    double dx = 0.1;
    std::string potential = "const:0";
    std::string field = "const";
};

/// Runs the lattice demo and renders the JSON report (per-site link factors,
/// f, ordinary and covariant derivatives, summary norms). Deterministic.
std::string run_demo_json(const DemoConfig& config);

}  // namespace gauge
}  // namespace scalerep
