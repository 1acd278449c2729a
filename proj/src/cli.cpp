#include "minsurf/cli.hpp"

#include "minsurf/errors.hpp"
#include "minsurf/format.hpp"
#include "minsurf/json_io.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <optional>
#include <ostream>

namespace minsurf {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct CaseArgs {
    std::string family;
    std::optional<std::string> gamma;
    std::optional<std::string> alpha;
    std::optional<std::string> p;
    std::string sign = "+";

    void attach(CLI::App& cmd)
    {
        cmd.add_option("--family", family, "halfplane | strip | slit | jun")->required();
        cmd.add_option("--gamma", gamma, "half-plane angle in [0, 2pi): radians or pi/4, 3pi/4, ...");
        cmd.add_option("--alpha", alpha, "strip angle in [pi/2, pi): radians or pi/2, 2pi/3, ...");
        cmd.add_option("--p", p, "Jun base point RE,IM with IM > 0");
        cmd.add_option("--sign", sign, "dilatation branch b = +z or -z")->check(CLI::IsMember({"+", "-"}));
    }
};

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
        if (pos == std::string::npos)
            break;
        start = pos + 1;
    }
    return parts;
}

Complex parse_complex(const std::string& text, const char* what)
{
    const auto parts = split(text, ',');
    if (parts.size() != 2)
        throw Error(ErrorKind::BadParameter, std::string(what) + " must be RE,IM");
    return {parse_real(parts[0]), parse_real(parts[1])};
}

DomainCase build_case(const CaseArgs& a)
{
    DomainCase c;
    c.family = parse_family(a.family);
    c.sign = a.sign == "-" ? Sign::minus : Sign::plus;
    const auto reject = [&](const std::optional<std::string>& opt, const char* name) {
        if (opt)
            throw Error(ErrorKind::BadParameter,
                std::string(name) + " does not apply to family " + std::string(to_string(c.family)));
    };
    const auto need = [&](const std::optional<std::string>& opt, const char* name) -> const std::string& {
        if (!opt)
            throw Error(ErrorKind::BadParameter,
                "family " + std::string(to_string(c.family)) + " requires " + name);
        return *opt;
    };
    switch (c.family) {
    case Family::SlantedHalfPlane:
        reject(a.alpha, "--alpha");
        reject(a.p, "--p");
        c.gamma = parse_angle(need(a.gamma, "--gamma"));
        break;
    case Family::VerticalStrip:
        reject(a.gamma, "--gamma");
        reject(a.p, "--p");
        c.alpha = parse_angle(need(a.alpha, "--alpha"));
        break;
    case Family::SingleSlit:
        reject(a.gamma, "--gamma");
        reject(a.alpha, "--alpha");
        reject(a.p, "--p");
        break;
    case Family::JunUpperHalfPlane:
        reject(a.gamma, "--gamma");
        reject(a.alpha, "--alpha");
        c.p = parse_complex(need(a.p, "--p"), "--p");
        break;
    }
    c.validate();
    return c;
}

GridSpec parse_grid(const std::optional<std::string>& text, GridSpec grid, const std::optional<double>& rmax)
{
    if (text) {
        const auto parts = split(*text, 'x');
        if (parts.size() != 2)
            throw Error(ErrorKind::BadParameter, "--grid must be NRxNT");
        try {
            std::size_t used0 = 0;
            std::size_t used1 = 0;
            grid.nr = std::stoi(parts[0], &used0);
            grid.ntheta = std::stoi(parts[1], &used1);
            if (used0 != parts[0].size() || used1 != parts[1].size())
                throw std::invalid_argument("trailing characters");
        } catch (const std::logic_error&) {
            throw Error(ErrorKind::BadParameter, "--grid must be NRxNT");
        }
    }
    if (rmax)
        grid.r_max = *rmax;
    return grid;
}

std::string complex_text(Complex z) { return format_real(z.real()) + "," + format_real(z.imag()); }

} // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Harmonic univalent mappings onto slanted half-planes, strips and the slit plane, with the "
                 "associated minimal surfaces",
        "minsurf"};
    app.require_subcommand(1);

    CaseArgs eval_case, verify_case, mesh_case, figure_case;
    std::string z_text;
    bool eval_json = false;
    bool verify_json = false;
    std::optional<std::string> verify_grid, mesh_grid;
    std::optional<double> verify_rmax, mesh_rmax;
    unsigned long seed = 0;
    std::string mesh_out, figure_out;
    std::optional<std::string> mesh_format;
    std::string rings_text = "0.5,0.9,0.99";
    int spokes = 16;
    int pts = 128;

    auto* eval = app.add_subcommand("eval", "print h, g, f, u, v, F at one point");
    eval_case.attach(*eval);
    eval->add_option("--z", z_text, "disk point RE,IM")->required();
    eval->add_flag("--json", eval_json, "structured output");

    auto* verify = app.add_subcommand("verify", "run the invariant campaign on a polar grid");
    verify_case.attach(*verify);
    verify->add_option("--grid", verify_grid, "NRxNT (default 40x64)");
    verify->add_option("--rmax", verify_rmax, "outer radius (default 0.95)");
    verify->add_option("--seed", seed, "injectivity sample offset");
    verify->add_flag("--json", verify_json, "structured output");

    auto* mesh = app.add_subcommand("mesh", "write the surface as a triangle mesh");
    mesh_case.attach(*mesh);
    mesh->add_option("--out", mesh_out, "output path")->required();
    mesh->add_option("--format", mesh_format, "obj | ply | csv (default from extension)");
    mesh->add_option("--grid", mesh_grid, "NRxNT (default 80x128)");
    mesh->add_option("--rmax", mesh_rmax, "outer radius (default 0.99)");

    auto* figure = app.add_subcommand("figure", "write images of circles and spokes as JSON");
    figure_case.attach(*figure);
    figure->add_option("--out", figure_out, "output path")->required();
    figure->add_option("--rings", rings_text, "comma-separated radii in (0, 0.99]");
    figure->add_option("--spokes", spokes, "number of radial spokes");
    figure->add_option("--pts", pts, "samples per polyline (>= 16)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*eval) {
            const DomainCase c = build_case(eval_case);
            const EvalRecord r = eval_record(c, parse_complex(z_text, "--z"));
            if (eval_json) {
                out << to_json(r).dump(2) << '\n';
            } else {
                out << "case: " << c.describe() << '\n';
                out << "z=" << complex_text(r.z) << '\n';
                out << "h=" << complex_text(r.h) << '\n';
                out << "g=" << complex_text(r.g) << '\n';
                out << "f=" << complex_text(r.f) << '\n';
                out << "u=" << format_real(r.p.u) << " v=" << format_real(r.p.v) << " F=" << format_real(r.p.F)
                    << '\n';
            }
            return kExitOk;
        }
        if (*verify) {
            const DomainCase c = build_case(verify_case);
            const GridSpec grid = parse_grid(verify_grid, GridSpec{40, 64, 0.95}, verify_rmax);
            const VerificationReport rep = run_campaign(c, grid, seed);
            if (verify_json)
                out << to_json(rep).dump(2) << '\n';
            else
                out << rep.to_text();
            return rep.all_pass() ? kExitOk : kExitVerifyFailed;
        }
        if (*mesh) {
            const DomainCase c = build_case(mesh_case);
            const GridSpec grid = parse_grid(mesh_grid, GridSpec{80, 128, 0.99}, mesh_rmax);
            std::string fmt_text;
            if (mesh_format) {
                fmt_text = *mesh_format;
            } else {
                const auto dot = mesh_out.rfind('.');
                if (dot == std::string::npos)
                    throw Error(ErrorKind::BadParameter, "--format missing and --out has no extension");
                fmt_text = mesh_out.substr(dot + 1);
            }
            const MeshFormat fmt = parse_mesh_format(fmt_text);
            const DiskMesh m = build_mesh(c, grid.nr, grid.ntheta, grid.r_max);
            std::ofstream file(mesh_out);
            if (!file)
                throw Error(ErrorKind::BadParameter, "cannot open '" + mesh_out + "' for writing");
            export_mesh(m, fmt, file);
            out << "wrote " << m.vertices.size() << " vertices, " << m.faces.size() << " faces to " << mesh_out
                << '\n';
            return kExitOk;
        }
        if (*figure) {
            const DomainCase c = build_case(figure_case);
            std::vector<double> rings;
            if (!rings_text.empty())
                for (const auto& r : split(rings_text, ','))
                    rings.push_back(parse_real(r));
            const FigureData fig = figure_data(c, rings, spokes, pts);
            std::ofstream file(figure_out);
            if (!file)
                throw Error(ErrorKind::BadParameter, "cannot open '" + figure_out + "' for writing");
            file << to_json(fig).dump(2) << '\n';
            out << "wrote " << fig.curves.size() << " curves to " << figure_out << '\n';
            return kExitOk;
        }
    } catch (const Error& e) {
        err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace minsurf
