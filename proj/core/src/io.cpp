#include "conjlab/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace conjlab {

namespace {

void csv_header(std::ostream& os, const Header& header) {
    for (const auto& [k, v] : header) os << "# " << k << '=' << v << '\n';
}

} // namespace

std::string fmt(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::ofstream open_output(const std::filesystem::path& path) {
    const auto parent = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
    std::error_code ec;
    if (!std::filesystem::is_directory(parent, ec)) throw IoError("output directory does not exist: " + parent.string());
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("cannot open for writing: " + path.string());
    return os;
}

void write_json(const std::filesystem::path& path, const Json& j) {
    auto os = open_output(path);
    os << j.dump(2) << '\n';
    if (!os) throw IoError("write failed: " + path.string());
}

void write_profile_csv(const std::filesystem::path& path, const HelicoidProfile& p, const Header& header) {
    auto os = open_output(path);
    csv_header(os, header);
    os << "v,f,h\n";
    for (const auto& s : p.samples) os << fmt(s.v) << ',' << fmt(s.f) << ',' << fmt(s.h) << '\n';
    if (!os) throw IoError("write failed: " + path.string());
}

void write_solution_csv(const std::filesystem::path& path, const GraphSolution& sol, std::span<const double> nu,
                        const Header& header) {
    const auto& D = *sol.domain;
    if (nu.size() != D.nodes.size()) throw DomainError("nu field does not match the mesh");
    auto os = open_output(path);
    csv_header(os, header);
    os << "x,y,u,nu,tag\n";
    for (std::size_t i = 0; i < D.nodes.size(); ++i)
        os << fmt(D.nodes[i].x) << ',' << fmt(D.nodes[i].y) << ',' << fmt(sol.u[i]) << ',' << fmt(nu[i]) << ','
           << to_string(D.tags[i]) << '\n';
    if (!os) throw IoError("write failed: " + path.string());
}

void write_curve_csv(const std::filesystem::path& path, const PlanarCurve& c, const Header& header,
                     std::size_t stride) {
    if (stride == 0) throw DomainError("stride must be positive");
    auto os = open_output(path);
    csv_header(os, header);
    os << "s,x,y,phi,kg\n";
    for (std::size_t i = 0; i < c.samples.size(); ++i) {
        if (i % stride != 0 && i + 1 != c.samples.size()) continue;
        const auto& s = c.samples[i];
        os << fmt(s.s) << ',' << fmt(s.x) << ',' << fmt(s.y) << ',' << fmt(s.phi) << ',' << fmt(s.kg) << '\n';
    }
    if (!os) throw IoError("write failed: " + path.string());
}

void write_domain_svg(const std::filesystem::path& path, std::span<const SvgPanel> panels, const Header& header) {
    constexpr double size = 400.0, pad = 20.0;
    const double width = panels.size() * (size + 2 * pad);
    auto os = open_output(path);
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<!--\n";
    for (const auto& [k, v] : header) os << "  " << k << '=' << v << '\n';
    os << "-->\n";
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n",
                  width, size + 2 * pad + 20, width, size + 2 * pad + 20);
    os << buf;
    for (std::size_t k = 0; k < panels.size(); ++k) {
        const auto& P = panels[k];
        const double ox = k * (size + 2 * pad) + pad + size / 2, oy = pad + 20 + size / 2;
        auto X = [&](double x) { return ox + x * size / 2; };
        auto Y = [&](double y) { return oy - y * size / 2; };
        os << "<g>\n";
        std::snprintf(buf, sizeof buf, "<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"middle\" font-size=\"14\">", ox, pad + 8);
        os << buf << P.title << "</text>\n";
        if (P.boundary) {
            constexpr int R = 256;
            const auto W = winding_raster(P.boundary->polyline, R);
            const double px = 2.0 / R;
            os << "<g fill=\"#555\" stroke=\"none\">\n";
            for (int j = 0; j < R; ++j) {
                int i = 0;
                while (i < R) {
                    if (std::abs(W[static_cast<std::size_t>(j) * R + i]) < 2) {
                        ++i;
                        continue;
                    }
                    int e = i;
                    while (e < R && std::abs(W[static_cast<std::size_t>(j) * R + e]) >= 2) ++e;
                    std::snprintf(buf, sizeof buf, "<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\"/>\n",
                                  X(-1.0 + i * px), Y(-1.0 + (j + 1) * px), (e - i) * px * size / 2, px * size / 2);
                    os << buf;
                    i = e;
                }
            }
            os << "</g>\n";
        }
        std::snprintf(buf, sizeof buf, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"%.2f\" fill=\"none\" stroke=\"black\"/>\n", ox,
                      oy, size / 2);
        os << buf;
        if (P.boundary && !P.boundary->polyline.empty()) {
            os << "<polygon fill=\"#ddd\" fill-opacity=\"0.5\" fill-rule=\"nonzero\" stroke=\"#b00\" stroke-width=\"1\" points=\"";
            BasePoint last{1e9, 1e9};
            for (const auto& p : P.boundary->polyline) {
                if (std::hypot(p.x - last.x, p.y - last.y) < 1e-3) continue;
                std::snprintf(buf, sizeof buf, "%.2f,%.2f ", X(std::clamp(p.x, -1.0, 1.0)), Y(std::clamp(p.y, -1.0, 1.0)));
                os << buf;
                last = p;
            }
            os << "\"/>\n";
        }
        if (P.report) {
            std::snprintf(buf, sizeof buf,
                          "<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"middle\" font-size=\"11\">embedded=%s crossings=%zu "
                          "area2=%.4g</text>\n",
                          ox, pad + 20 + size + 14, P.report->embedded ? "true" : "false", P.report->crossing_count(),
                          P.report->multiplicity_2_area);
            os << buf;
        }
        os << "</g>\n";
    }
    os << "</svg>\n";
    if (!os) throw IoError("write failed: " + path.string());
}

void write_helicoid_obj(const std::filesystem::path& path, const Helicoid& hel, double xmax, double vmax, int nx, int nv,
                        const Header& header) {
    if (nx < 2 || nv < 2) throw DomainError("OBJ grid needs at least 2x2 vertices");
    if (hel.half_period().is_finite() && !(vmax < hel.half_period().value()))
        throw DomainError("vmax must stay inside the half period");
    auto os = open_output(path);
    for (const auto& [k, v] : header) os << "# " << k << '=' << v << '\n';
    std::vector<double> h(static_cast<std::size_t>(nv));
    for (int j = 0; j < nv; ++j) h[j] = hel.h(-vmax + 2.0 * vmax * j / (nv - 1));
    for (int j = 0; j < nv; ++j) {
        const double v = -vmax + 2.0 * vmax * j / (nv - 1);
        for (int i = 0; i < nx; ++i) {
            const double x = -xmax + 2.0 * xmax * i / (nx - 1);
            os << "v " << fmt(x) << ' ' << fmt(v) << ' ' << fmt(-x * h[j]) << '\n';
        }
    }
    for (int j = 0; j + 1 < nv; ++j)
        for (int i = 0; i + 1 < nx; ++i) {
            const int a = j * nx + i + 1, b = a + 1, c = a + nx, d = c + 1;
            os << "f " << a << ' ' << b << ' ' << d << '\n' << "f " << a << ' ' << d << ' ' << c << '\n';
        }
    if (!os) throw IoError("write failed: " + path.string());
}

} // namespace conjlab
