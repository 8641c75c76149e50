#include "scalerep/gauge.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

namespace scalerep {
namespace gauge {

Lattice::Lattice(int dims_, int sites_, double dx_) : dims(dims_), sites(sites_), dx(dx_) {
    if (dims != 1 && dims != 2) throw DomainError("lattice dims must be 1 or 2");
    if (sites < 2) throw DomainError("lattice needs at least 2 sites per dimension");
    if (!(dx > 0.0)) throw DomainError("lattice spacing must be positive");
}

int Lattice::volume() const {
    return dims == 1 ? sites : sites * sites;
}

int Lattice::neighbor(int site, int mu) const {
    if (mu < 0 || mu >= dims) throw DomainError("direction out of range");
    if (dims == 1) return (site + 1) % sites;
    const int x = site % sites;
    const int y = site / sites;
    if (mu == 0) return (x + 1) % sites + y * sites;
    return x + ((y + 1) % sites) * sites;
}

bool Lattice::wraps(int site, int mu) const {
    if (dims == 1) return site == sites - 1;
    const int coord = mu == 0 ? site % sites : site / sites;
    return coord == sites - 1;
}

GaugePotential zero_potential(const Lattice& lattice) {
    return constant_potential(lattice, 0.0);
}

GaugePotential constant_potential(const Lattice& lattice, double a) {
    GaugePotential p;
    p.A.assign(lattice.dims, std::vector<double>(lattice.volume(), a));
    return p;
}

GaugePotential sine_potential(const Lattice& lattice, double amp, double period) {
    if (!(period > 0.0)) throw DomainError("sine potential needs a positive period");
    GaugePotential p;
    p.A.assign(lattice.dims, std::vector<double>(lattice.volume(), 0.0));
    constexpr double two_pi = 6.283185307179586476925286766559;
    for (int mu = 0; mu < lattice.dims; ++mu) {
        for (int site = 0; site < lattice.volume(); ++site) {
            const int coord = lattice.dims == 1 ? site : (mu == 0 ? site % lattice.sites
                                                                  : site / lattice.sites);
            p.A[mu][site] = amp * std::sin(two_pi * coord / period);
        }
    }
    return p;
}

LinkFactor link_factor(const GaugePotential& A, const Lattice& lattice) {
    if (static_cast<int>(A.A.size()) != lattice.dims)
        throw DimensionMismatch("potential has " + std::to_string(A.A.size()) +
                                " directions on a " + std::to_string(lattice.dims) + "d lattice");
    LinkFactor lf;
    lf.r.assign(lattice.dims, std::vector<double>(lattice.volume(), 1.0));
    for (int mu = 0; mu < lattice.dims; ++mu) {
        if (static_cast<int>(A.A[mu].size()) != lattice.volume())
            throw DimensionMismatch("potential sites do not match the lattice");
        for (int site = 0; site < lattice.volume(); ++site) {
            if (!std::isfinite(A.A[mu][site]))
                throw DomainError("potential must be finite everywhere");
            lf.r[mu][site] = std::exp(A.A[mu][site] * lattice.dx);
        }
    }
    return lf;
}

ComplexField ordinary_derivative(const ComplexField& f, int mu, const Lattice& lattice) {
    ComplexField out;
    out.f.resize(lattice.volume());
    for (int site = 0; site < lattice.volume(); ++site)
        out.f[site] = (f.f[lattice.neighbor(site, mu)] - f.f[site]) / lattice.dx;
    return out;
}

ComplexField covariant_derivative(const ComplexField& f, const LinkFactor& r, int mu,
                                  const Lattice& lattice) {
    ComplexField out;
    out.f.resize(lattice.volume());
    for (int site = 0; site < lattice.volume(); ++site)
        out.f[site] =
            (r.r[mu][site] * f.f[lattice.neighbor(site, mu)] - f.f[site]) / lattice.dx;
    return out;
}

Complex local_representation(Complex a_y, double r_link) {
    if (!(r_link > 0.0)) throw DomainError("link factor must be positive");
    return r_link * a_y;
}

ComplexField transport_field(const Lattice& lattice, const LinkFactor& r, Complex seed) {
    if (lattice.dims != 1)
        throw UnsupportedOperation("transport field construction is defined on 1d lattices");
    ComplexField out;
    out.f.resize(lattice.sites);
    out.f[0] = seed;
    for (int site = 0; site + 1 < lattice.sites; ++site)
        out.f[site + 1] = out.f[site] / r.r[0][site];
    return out;
}

TransportCheck transport_check(const Lattice& lattice, const LinkFactor& r, Complex seed) {
    const ComplexField f = transport_field(lattice, r, seed);
    const ComplexField df = covariant_derivative(f, r, 0, lattice);
    TransportCheck out;
    for (int site = 0; site < lattice.sites; ++site) {
        const double a = std::abs(df.f[site]);
        out.max_abs_df = std::max(out.max_abs_df, a);
        if (!lattice.wraps(site, 0)) out.max_abs_df_no_wrap = std::max(out.max_abs_df_no_wrap, a);
        out.max_abs_f = std::max(out.max_abs_f, std::abs(f.f[site]));
    }
    return out;
}

ScaledHilbert::ScaledHilbert(int dim_, double c_) : dim(dim_), c(c_) {
    if (dim < 1) throw DomainError("hilbert dimension must be >= 1");
    if (!(c > 0.0)) throw DomainError("hilbert scale must be positive");
}

namespace {
void require_dim(const Vec& v, int dim, const char* who) {
    if (static_cast<int>(v.size()) != dim)
        throw DimensionMismatch(std::string(who) + ": vector has " + std::to_string(v.size()) +
                                " components, expected " + std::to_string(dim));
}
}  // namespace

Vec hilbert_add(const Vec& u, const Vec& v) {
    if (u.size() != v.size()) throw DimensionMismatch("add: vector sizes differ");
    Vec out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] + v[i];
    return out;
}

Vec hilbert_sub(const Vec& u, const Vec& v) {
    if (u.size() != v.size()) throw DimensionMismatch("sub: vector sizes differ");
    Vec out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] - v[i];
    return out;
}

Vec hilbert_scalar_mul(Complex s, const Vec& v, const ScaledHilbert& h) {
    require_dim(v, h.dim, "scalar_mul");
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i] / h.c;
    return out;
}

Complex hilbert_inner(const Vec& u, const Vec& v, const ScaledHilbert& h) {
    require_dim(u, h.dim, "inner");
    require_dim(v, h.dim, "inner");
    Complex acc = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) acc += std::conj(u[i]) * v[i];
    return acc / h.c;
}

// ---------------------------------------------------------------------------
// demo

namespace {

GaugePotential parse_potential(const std::string& spec, const Lattice& lattice) {
    if (spec == "zero") return zero_potential(lattice);
    if (spec.rfind("const:", 0) == 0) {
        return constant_potential(lattice, std::stod(spec.substr(6)));
    }
    if (spec.rfind("sine:", 0) == 0) {
        double amp = 0.0, period = 0.0;
        const std::string body = spec.substr(5);
        const auto comma = body.find(',');
        if (comma == std::string::npos || body.rfind("amp=", 0) != 0 ||
            body.compare(comma + 1, 7, "period=") != 0)
            throw ParseError(5, "sine:amp=<a>,period=<p>");
        amp = std::stod(body.substr(4, comma - 4));
        period = std::stod(body.substr(comma + 8));
        return sine_potential(lattice, amp, period);
    }
    throw ParseError(0, "potential spec zero | const:<a> | sine:amp=<a>,period=<p>");
}

ComplexField make_field(const std::string& spec, const Lattice& lattice, const LinkFactor& r) {
    ComplexField f;
    if (spec == "transport") return transport_field(lattice, r, Complex(1.0, 0.5));
    f.f.resize(lattice.volume());
    for (int site = 0; site < lattice.volume(); ++site) {
        const int coord = lattice.dims == 1 ? site : site % lattice.sites;
        if (spec == "const")
            f.f[site] = Complex(1.0, 0.5);
        else if (spec == "linear")
            f.f[site] = Complex(coord * lattice.dx, 0.0);
        else if (spec == "exp")
            f.f[site] = std::exp(Complex(coord * lattice.dx, 0.0));
        else
            throw ParseError(0, "field spec const | linear | exp | transport");
    }
    return f;
}

nlohmann::json complex_json(const Complex& z) {
    return nlohmann::json::array({z.real(), z.imag()});
}

nlohmann::json field_json(const ComplexField& f) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Complex& z : f.f) arr.push_back(complex_json(z));
    return arr;
}

}  // namespace

std::string run_demo_json(const DemoConfig& config) {
    const Lattice lattice(config.dims, config.sites, config.dx);
    const GaugePotential A = parse_potential(config.potential, lattice);
    const LinkFactor r = link_factor(A, lattice);
    const ComplexField f = make_field(config.field, lattice, r);

    nlohmann::json j;
    j["lattice"] = {{"dims", lattice.dims}, {"sites", lattice.sites}, {"dx", lattice.dx}};
    j["potential"] = config.potential;
    j["field"] = config.field;
    j["f"] = field_json(f);

    double max_ordinary = 0.0, max_covariant = 0.0, max_diff = 0.0;
    for (int mu = 0; mu < lattice.dims; ++mu) {
        const std::string key = "mu" + std::to_string(mu);
        const ComplexField d = ordinary_derivative(f, mu, lattice);
        const ComplexField D = covariant_derivative(f, r, mu, lattice);
        j["links"][key] = r.r[mu];
        j["ordinary"][key] = field_json(d);
        j["covariant"][key] = field_json(D);
        for (int site = 0; site < lattice.volume(); ++site) {
            max_ordinary = std::max(max_ordinary, std::abs(d.f[site]));
            max_covariant = std::max(max_covariant, std::abs(D.f[site]));
            max_diff = std::max(max_diff, std::abs(D.f[site] - d.f[site]));
        }
    }
    j["summary"] = {{"max_abs_ordinary", max_ordinary},
                    {"max_abs_covariant", max_covariant},
                    {"max_abs_covariant_minus_ordinary", max_diff}};
    return j.dump(2);
}

}  // namespace gauge
}  // namespace scalerep
