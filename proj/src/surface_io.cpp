#include "minsurf/surface_io.hpp"

#include "minsurf/errors.hpp"
#include "minsurf/format.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

namespace minsurf {

DiskMesh build_mesh(const DomainCase& c, int nr, int ntheta, double r_max)
{
    if (nr < 2)
        throw Error(ErrorKind::BadParameter, "mesh needs nr >= 2");
    if (ntheta < 8)
        throw Error(ErrorKind::BadParameter, "mesh needs ntheta >= 8");
    if (!(r_max > 0.0 && r_max <= 0.99))
        throw Error(ErrorKind::BadParameter, "mesh r_max must lie in (0, 0.99]");
    c.validate();

    DiskMesh mesh;
    mesh.domain = c;
    mesh.nr = nr;
    mesh.ntheta = ntheta;
    mesh.r_max = r_max;

    const std::vector<Complex> zs = polar_grid(GridSpec{nr, ntheta, r_max});
    mesh.vertices.reserve(zs.size());
    for (const Complex z : zs)
        mesh.vertices.push_back({z, surface_point(c, z)});

    const auto at = [ntheta](int ring, int j) { return 1 + (ring - 1) * ntheta + (j % ntheta); };
    mesh.faces.reserve(static_cast<std::size_t>(ntheta) * (2 * nr - 1));
    for (int j = 0; j < ntheta; ++j)
        mesh.faces.push_back({0, at(1, j), at(1, j + 1)});
    for (int i = 1; i < nr; ++i) {
        for (int j = 0; j < ntheta; ++j) {
            const int a = at(i, j);
            const int b = at(i, j + 1);
            const int cc = at(i + 1, j + 1);
            const int d = at(i + 1, j);
            mesh.faces.push_back({a, d, cc});
            mesh.faces.push_back({a, cc, b});
        }
    }
    return mesh;
}

MeshFormat parse_mesh_format(std::string_view text)
{
    if (text == "obj")
        return MeshFormat::OBJ;
    if (text == "ply")
        return MeshFormat::PLY;
    if (text == "csv")
        return MeshFormat::CSV;
    throw Error(ErrorKind::BadParameter, "unknown mesh format '" + std::string(text) + "'");
}

void export_mesh(const DiskMesh& mesh, MeshFormat format, std::ostream& out)
{
    switch (format) {
    case MeshFormat::OBJ:
        out << "# " << mesh.domain.describe() << " grid " << mesh.nr << "x" << mesh.ntheta
            << " r_max=" << format_real(mesh.r_max) << "\n";
        for (const auto& v : mesh.vertices)
            out << "v " << format_real(v.p.u) << ' ' << format_real(v.p.v) << ' ' << format_real(v.p.F) << '\n';
        for (const auto& f : mesh.faces)
            out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
        break;
    case MeshFormat::PLY:
        out << "ply\nformat ascii 1.0\n";
        out << "comment " << mesh.domain.describe() << '\n';
        out << "element vertex " << mesh.vertices.size() << '\n';
        out << "property double x\nproperty double y\nproperty double z\n";
        out << "element face " << mesh.faces.size() << '\n';
        out << "property list uchar int vertex_indices\nend_header\n";
        for (const auto& v : mesh.vertices)
            out << format_real(v.p.u) << ' ' << format_real(v.p.v) << ' ' << format_real(v.p.F) << '\n';
        for (const auto& f : mesh.faces)
            out << "3 " << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
        break;
    case MeshFormat::CSV:
        out << "r,theta,u,v,F\n";
        for (const auto& v : mesh.vertices) {
            double theta = std::arg(v.z);
            if (theta < 0.0)
                theta += 2.0 * std::numbers::pi;
            out << format_real(std::abs(v.z)) << ',' << format_real(theta) << ',' << format_real(v.p.u) << ','
                << format_real(v.p.v) << ',' << format_real(v.p.F) << '\n';
        }
        break;
    }
}

std::string export_mesh(const DiskMesh& mesh, MeshFormat format)
{
    std::ostringstream os;
    export_mesh(mesh, format, os);
    return os.str();
}

FigureData figure_data(const DomainCase& c, const std::vector<double>& rings, int spokes, int pts)
{
    if (pts < 16)
        throw Error(ErrorKind::BadParameter, "figure polylines need pts >= 16");
    if (spokes < 0)
        throw Error(ErrorKind::BadParameter, "spoke count must be non-negative");
    for (const double r : rings)
        if (!(r > 0.0 && r <= 0.99))
            throw Error(ErrorKind::BadParameter, "ring radii must lie in (0, 0.99]");
    c.validate();

    constexpr double two_pi = 2.0 * std::numbers::pi;
    FigureData fig;
    fig.domain = c;
    const auto image = [&](Complex z) {
        const Complex f = evaluate(c, z).f;
        return PlanePoint{f.real(), f.imag()};
    };
    for (const double r : rings) {
        Polyline line{"ring", r, {}};
        line.points.reserve(static_cast<std::size_t>(pts) + 1);
        for (int k = 0; k < pts; ++k)
            line.points.push_back(image(std::polar(r, two_pi * k / pts)));
        line.points.push_back(line.points.front());
        fig.curves.push_back(std::move(line));
    }
    const double reach = rings.empty() ? 0.99 : *std::max_element(rings.begin(), rings.end());
    for (int j = 0; j < spokes; ++j) {
        const double theta = two_pi * j / spokes;
        Polyline line{"spoke", theta, {}};
        line.points.reserve(static_cast<std::size_t>(pts));
        for (int k = 0; k < pts; ++k)
            line.points.push_back(image(std::polar(reach * k / (pts - 1), theta)));
        fig.curves.push_back(std::move(line));
    }
    return fig;
}

} // namespace minsurf
