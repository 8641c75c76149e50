#include <doctest.h>

#include <cmath>
#include <random>

#include <json.hpp>

#include "scalerep/gauge.hpp"

using namespace scalerep::gauge;
using scalerep::DimensionMismatch;
using scalerep::DomainError;

TEST_CASE("lattice geometry") {
    CHECK_THROWS_AS(Lattice(1, 1, 0.1), DomainError);
    CHECK_THROWS_AS(Lattice(3, 8, 0.1), DomainError);
    CHECK_THROWS_AS(Lattice(1, 8, 0.0), DomainError);

    const Lattice line(1, 4, 0.1);
    CHECK(line.volume() == 4);
    CHECK(line.neighbor(3, 0) == 0);
    CHECK(line.wraps(3, 0));
    CHECK(!line.wraps(2, 0));

    const Lattice plane(2, 3, 0.1);
    CHECK(plane.volume() == 9);
    CHECK(plane.neighbor(2, 0) == 0);      // (2,0) -> (0,0)
    CHECK(plane.neighbor(2, 1) == 5);      // (2,0) -> (2,1)
    CHECK(plane.neighbor(8, 1) == 2);      // (2,2) -> (2,0)
    CHECK(plane.wraps(8, 0));
    CHECK(plane.wraps(8, 1));
}

TEST_CASE("link factors") {
    const Lattice lat(1, 8, 0.1);
    const LinkFactor r0 = link_factor(zero_potential(lat), lat);
    for (double r : r0.r[0]) CHECK(r == 1.0);

    const LinkFactor rc = link_factor(constant_potential(lat, 0.3), lat);
    for (double r : rc.r[0]) CHECK(r == doctest::Approx(std::exp(0.03)).epsilon(1e-12));

    // product over directions equals exp of the summed potential
    const Lattice plane(2, 4, 0.05);
    GaugePotential A = constant_potential(plane, 0.0);
    std::mt19937_64 rng(7);
    for (int mu = 0; mu < 2; ++mu)
        for (int s = 0; s < plane.volume(); ++s)
            A.A[mu][s] = static_cast<double>(rng() % 1000) / 1000.0 - 0.5;
    const LinkFactor r = link_factor(A, plane);
    for (int s = 0; s < plane.volume(); ++s) {
        const double prod = r.r[0][s] * r.r[1][s];
        const double expect = std::exp((A.A[0][s] + A.A[1][s]) * plane.dx);
        CHECK(prod == doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("ordinary derivative") {
    const Lattice lat(1, 16, 0.1);
    ComplexField constf;
    constf.f.assign(lat.volume(), Complex(2.0, -1.0));
    for (const Complex& v : ordinary_derivative(constf, 0, lat).f) CHECK(v == Complex(0.0, 0.0));

    ComplexField linear;
    linear.f.resize(lat.volume());
    for (int s = 0; s < lat.volume(); ++s) linear.f[s] = Complex(s * lat.dx, 0.0);
    const ComplexField d = ordinary_derivative(linear, 0, lat);
    for (int s = 0; s + 1 < lat.volume(); ++s)
        CHECK(d.f[s].real() == doctest::Approx(1.0).epsilon(1e-12));

    // linearity within float tolerance
    std::mt19937_64 rng(11);
    auto rnd = [&rng]() { return static_cast<double>(rng() % 2000) / 1000.0 - 1.0; };
    ComplexField f, g;
    f.f.resize(lat.volume());
    g.f.resize(lat.volume());
    for (int s = 0; s < lat.volume(); ++s) {
        f.f[s] = Complex(rnd(), rnd());
        g.f[s] = Complex(rnd(), rnd());
    }
    ComplexField fg;
    fg.f.resize(lat.volume());
    for (int s = 0; s < lat.volume(); ++s) fg.f[s] = f.f[s] + g.f[s];
    const ComplexField dfg = ordinary_derivative(fg, 0, lat);
    const ComplexField df = ordinary_derivative(f, 0, lat);
    const ComplexField dg = ordinary_derivative(g, 0, lat);
    for (int s = 0; s < lat.volume(); ++s)
        CHECK(std::abs(dfg.f[s] - df.f[s] - dg.f[s]) < 1e-12);
}

TEST_CASE("covariant derivative collapses to the ordinary one at zero potential") {
    const Lattice lat(1, 16, 0.1);
    const LinkFactor r = link_factor(zero_potential(lat), lat);
    ComplexField f;
    f.f.resize(lat.volume());
    for (int s = 0; s < lat.volume(); ++s) f.f[s] = Complex(std::sin(0.3 * s), std::cos(0.4 * s));
    const ComplexField D = covariant_derivative(f, r, 0, lat);
    const ComplexField d = ordinary_derivative(f, 0, lat);
    for (int s = 0; s < lat.volume(); ++s) CHECK(D.f[s] == d.f[s]);  // bitwise
}

TEST_CASE("parallel transport annihilates the covariant derivative") {
    const Lattice lat(1, 64, 0.1);
    const LinkFactor r = link_factor(constant_potential(lat, 0.3), lat);
    const TransportCheck chk = transport_check(lat, r, Complex(1.0, 0.5));
    CHECK(chk.max_abs_df_no_wrap < 1e-12 * chk.max_abs_f);
    // the wrap link carries the loop holonomy exp(sum A dx) != 1
    CHECK(chk.max_abs_df > 1e-3);

    // zero total flux: four sine periods; every link, wrap included
    const LinkFactor rs = link_factor(sine_potential(lat, 0.2, 16.0), lat);
    const TransportCheck chk2 = transport_check(lat, rs, Complex(1.0, 0.5));
    CHECK(chk2.max_abs_df < 1e-12 * chk2.max_abs_f);
}

TEST_CASE("constant field, constant potential") {
    const Lattice lat(1, 32, 0.1);
    const double a = 0.4;
    const LinkFactor r = link_factor(constant_potential(lat, a), lat);
    ComplexField ones;
    ones.f.assign(lat.volume(), Complex(1.0, 0.0));
    const ComplexField D = covariant_derivative(ones, r, 0, lat);
    const double expect = std::expm1(a * lat.dx) / lat.dx;
    for (int s = 0; s < lat.volume(); ++s)
        CHECK(std::abs(D.f[s] - Complex(expect, 0.0)) < 1e-12);
    // (e^{a dx} - 1)/dx approaches a from above as dx -> 0
    CHECK(expect == doctest::Approx(a).epsilon(0.05));
}

TEST_CASE("local representation") {
    CHECK(local_representation(Complex(2.0, 1.0), 1.0) == Complex(2.0, 1.0));
    CHECK(local_representation(Complex(2.0, 1.0), 1.5) == Complex(3.0, 1.5));
    const Complex a(0.7, -0.2);
    const double r1 = 1.25, r2 = 0.8;
    CHECK(std::abs(local_representation(local_representation(a, r1), r2) -
                   local_representation(a, r1 * r2)) < 1e-15);
    CHECK_THROWS_AS(local_representation(a, 0.0), DomainError);
    CHECK_THROWS_AS(local_representation(a, -1.0), DomainError);
}

TEST_CASE("scaled hilbert operations") {
    CHECK_THROWS_AS(ScaledHilbert(0, 1.0), DomainError);
    CHECK_THROWS_AS(ScaledHilbert(2, 0.0), DomainError);
    CHECK_THROWS_AS(ScaledHilbert(2, -1.0), DomainError);

    const ScaledHilbert h1(2, 1.0);
    const Vec v = {Complex(1.0, 0.0), Complex(0.0, 1.0)};
    CHECK(hilbert_inner(v, v, h1) == Complex(2.0, 0.0));

    const ScaledHilbert h2(2, 2.0);
    CHECK(hilbert_inner(v, v, h2) == Complex(1.0, 0.0));

    // the scalar with correspondent c acts as the identity
    const Vec cv = {Complex(2.0, 0.0) * v[0], Complex(2.0, 0.0) * v[1]};
    const Vec back = hilbert_scalar_mul(Complex(2.0, 0.0), v, h2);
    for (int i = 0; i < 2; ++i) CHECK(back[i] == v[i]);
    (void)cv;

    CHECK_THROWS_AS(hilbert_inner(v, Vec{Complex(1.0, 0.0)}, h2), DimensionMismatch);

    // positivity and Cauchy-Schwarz for the scaled inner product
    std::mt19937_64 rng(17);
    auto rnd = [&rng]() { return static_cast<double>(rng() % 2000) / 1000.0 - 1.0; };
    const ScaledHilbert h(3, 2.5);
    for (int k = 0; k < 200; ++k) {
        Vec u(3), w(3);
        for (int i = 0; i < 3; ++i) {
            u[i] = Complex(rnd(), rnd());
            w[i] = Complex(rnd(), rnd());
        }
        const double uu = hilbert_inner(u, u, h).real();
        const double ww = hilbert_inner(w, w, h).real();
        CHECK(uu >= 0.0);
        const double uw = std::abs(hilbert_inner(u, w, h));
        CHECK(uw * uw <= uu * ww * (1.0 + 1e-12) + 1e-15);
    }
}

TEST_CASE("covariant derivative transforms covariantly under positive rescalings") {
    // rescale f by a site-dependent positive lambda and shift the potential by
    // -(ln lambda(x+dx) - ln lambda(x))/dx; the covariant derivative of the
    // rescaled field must be lambda(x) times the original one
    const Lattice lat(1, 32, 0.1);
    const GaugePotential A = constant_potential(lat, 0.25);
    const LinkFactor r = link_factor(A, lat);

    ComplexField f;
    f.f.resize(lat.volume());
    std::vector<double> lambda(lat.volume());
    for (int s = 0; s < lat.volume(); ++s) {
        f.f[s] = Complex(std::sin(0.3 * s) + 1.5, std::cos(0.2 * s));
        lambda[s] = std::exp(0.4 * std::sin(0.7 * s));
    }

    GaugePotential At = A;
    ComplexField ft;
    ft.f.resize(lat.volume());
    for (int s = 0; s < lat.volume(); ++s) {
        const int n = lat.neighbor(s, 0);
        At.A[0][s] = A.A[0][s] - (std::log(lambda[n]) - std::log(lambda[s])) / lat.dx;
        ft.f[s] = lambda[s] * f.f[s];
    }

    const ComplexField D = covariant_derivative(f, r, 0, lat);
    const ComplexField Dt = covariant_derivative(ft, link_factor(At, lat), 0, lat);
    for (int s = 0; s < lat.volume(); ++s)
        CHECK(std::abs(Dt.f[s] - lambda[s] * D.f[s]) < 1e-10 * (1.0 + std::abs(D.f[s])));
}

TEST_CASE("demo json") {
    DemoConfig config;
    config.sites = 16;
    config.potential = "const:0";
    config.field = "exp";
    const nlohmann::json j = nlohmann::json::parse(run_demo_json(config));
    CHECK(j.at("summary").at("max_abs_covariant_minus_ordinary") == 0.0);
    CHECK(j.at("f").size() == 16);
    CHECK(j.at("links").at("mu0").size() == 16);

    DemoConfig transport;
    transport.sites = 64;
    transport.potential = "sine:amp=0.2,period=16";
    transport.field = "transport";
    const nlohmann::json t = nlohmann::json::parse(run_demo_json(transport));
    CHECK(t.at("summary").at("max_abs_covariant").get<double>() < 1e-12);

    DemoConfig bad;
    bad.sites = 1;
    CHECK_THROWS_AS(run_demo_json(bad), DomainError);

    DemoConfig two_d;
    two_d.dims = 2;
    two_d.sites = 6;
    two_d.field = "linear";
    const nlohmann::json p = nlohmann::json::parse(run_demo_json(two_d));
    CHECK(p.at("f").size() == 36);
    CHECK(p.at("covariant").contains("mu1"));
}
