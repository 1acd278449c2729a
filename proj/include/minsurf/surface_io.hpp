#pragma once

#include "minsurf/grid.hpp"
#include "minsurf/weierstrass.hpp"

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace minsurf {

struct MeshVertex {
    Complex z;
    SurfacePoint p;
};

/// Polar sampling of the disk: center vertex, nr rings of ntheta vertices,
/// center fan plus two triangles per ring quad, all counterclockwise in the
/// parameter disk.
struct DiskMesh {
    DomainCase domain;
    int nr = 0;
    int ntheta = 0;
    double r_max = 0.0;
    std::vector<MeshVertex> vertices;
    std::vector<std::array<int, 3>> faces;
};

/// nr >= 2, ntheta >= 8, 0 < r_max <= 0.99, otherwise BadParameter.
DiskMesh build_mesh(const DomainCase& c, int nr, int ntheta, double r_max);

enum class MeshFormat { OBJ, PLY, CSV };
MeshFormat parse_mesh_format(std::string_view text);

void export_mesh(const DiskMesh& mesh, MeshFormat format, std::ostream& out);
std::string export_mesh(const DiskMesh& mesh, MeshFormat format);

struct Polyline {
    std::string kind; ///< "ring" or "spoke"
    double parameter = 0.0; ///< ring radius or spoke angle
    std::vector<PlanePoint> points;
};

/// Images of circles |z| = r_k and of radial spokes under f, for plotting.
struct FigureData {
    DomainCase domain;
    std::vector<Polyline> curves;
};

/// Rings get pts + 1 samples (closed, last = first); spokes get pts samples on
/// [0, max(rings)] or [0, 0.99] when no rings are given.
FigureData figure_data(const DomainCase& c, const std::vector<double>& rings, int spokes, int pts);

} // namespace minsurf
