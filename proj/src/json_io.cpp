#include "minsurf/json_io.hpp"

#include "minsurf/errors.hpp"
#include "minsurf/format.hpp"

namespace minsurf {

namespace {

std::string real(double x) { return format_real(x); }

double get_real(const Json& j, const char* key)
{
    if (!j.contains(key) || !j.at(key).is_string())
        throw Error(ErrorKind::BadParameter, std::string("missing real field '") + key + "'");
    return parse_real(j.at(key).get<std::string>());
}

std::string get_string(const Json& j, const char* key)
{
    if (!j.contains(key) || !j.at(key).is_string())
        throw Error(ErrorKind::BadParameter, std::string("missing string field '") + key + "'");
    return j.at(key).get<std::string>();
}

Complex get_complex(const Json& j, const std::string& stem)
{
    return {get_real(j, (stem + "_re").c_str()), get_real(j, (stem + "_im").c_str())};
}

void put_complex(Json& j, const std::string& stem, Complex z)
{
    j[stem + "_re"] = real(z.real());
    j[stem + "_im"] = real(z.imag());
}

} // namespace

EvalRecord eval_record(const DomainCase& c, Complex z)
{
    const MapEval m = evaluate(c, z);
    return {c, z, m.h, m.g, m.f, surface_point(c, z)};
}

void put_case(Json& out, const DomainCase& c)
{
    out["family"] = std::string(to_string(c.family));
    switch (c.family) {
    case Family::SlantedHalfPlane: out["gamma"] = c.gamma.to_string(); break;
    case Family::VerticalStrip: out["alpha"] = c.alpha.to_string(); break;
    case Family::SingleSlit: break;
    case Family::JunUpperHalfPlane: put_complex(out, "p", c.p); break;
    }
    out["sign"] = c.sign == Sign::plus ? "+" : "-";
}

DomainCase case_from_json(const Json& j)
{
    DomainCase c;
    c.family = parse_family(get_string(j, "family"));
    switch (c.family) {
    case Family::SlantedHalfPlane: c.gamma = parse_angle(get_string(j, "gamma")); break;
    case Family::VerticalStrip: c.alpha = parse_angle(get_string(j, "alpha")); break;
    case Family::SingleSlit: break;
    case Family::JunUpperHalfPlane: c.p = get_complex(j, "p"); break;
    }
    const std::string s = get_string(j, "sign");
    if (s != "+" && s != "-")
        throw Error(ErrorKind::BadParameter, "sign must be + or -");
    c.sign = s == "+" ? Sign::plus : Sign::minus;
    return c;
}

Json to_json(const EvalRecord& r)
{
    Json j;
    put_case(j, r.domain);
    put_complex(j, "z", r.z);
    put_complex(j, "h", r.h);
    put_complex(j, "g", r.g);
    put_complex(j, "f", r.f);
    j["u"] = real(r.p.u);
    j["v"] = real(r.p.v);
    j["F"] = real(r.p.F);
    return j;
}

EvalRecord eval_record_from_json(const Json& j)
{
    EvalRecord r;
    r.domain = case_from_json(j);
    r.z = get_complex(j, "z");
    r.h = get_complex(j, "h");
    r.g = get_complex(j, "g");
    r.f = get_complex(j, "f");
    r.p = {get_real(j, "u"), get_real(j, "v"), get_real(j, "F")};
    return r;
}

Json to_json(const VerificationReport& rep)
{
    Json j;
    put_case(j, rep.domain);
    j["nr"] = rep.grid.nr;
    j["ntheta"] = rep.grid.ntheta;
    j["r_max"] = real(rep.grid.r_max);
    j["seed"] = rep.seed;
    j["elapsed_seconds"] = real(rep.elapsed_seconds);
    j["all_pass"] = rep.all_pass();
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
        Json item;
        item["name"] = c.name;
        item["max_residual"] = real(c.max_residual);
        item["threshold"] = real(c.threshold);
        item["pass"] = c.pass;
        item["detail"] = c.detail;
        checks.push_back(std::move(item));
    }
    j["checks"] = std::move(checks);
    return j;
}

VerificationReport report_from_json(const Json& j)
{
    VerificationReport rep;
    rep.domain = case_from_json(j);
    rep.grid.nr = j.at("nr").get<int>();
    rep.grid.ntheta = j.at("ntheta").get<int>();
    rep.grid.r_max = get_real(j, "r_max");
    rep.seed = j.at("seed").get<unsigned long>();
    rep.elapsed_seconds = get_real(j, "elapsed_seconds");
    for (const auto& item : j.at("checks")) {
        CheckResult c;
        c.name = get_string(item, "name");
        c.max_residual = get_real(item, "max_residual");
        c.threshold = get_real(item, "threshold");
        c.pass = item.at("pass").get<bool>();
        c.detail = get_string(item, "detail");
        rep.checks.push_back(std::move(c));
    }
    return rep;
}

Json to_json(const FigureData& fig)
{
    Json j;
    put_case(j, fig.domain);
    Json curves = Json::array();
    for (const auto& line : fig.curves) {
        Json item;
        item["kind"] = line.kind;
        item["parameter"] = real(line.parameter);
        Json u = Json::array();
        Json v = Json::array();
        for (const auto& pt : line.points) {
            u.push_back(real(pt.u));
            v.push_back(real(pt.v));
        }
        item["u"] = std::move(u);
        item["v"] = std::move(v);
        curves.push_back(std::move(item));
    }
    j["curves"] = std::move(curves);
    return j;
}

FigureData figure_from_json(const Json& j)
{
    FigureData fig;
    fig.domain = case_from_json(j);
    for (const auto& item : j.at("curves")) {
        Polyline line;
        line.kind = get_string(item, "kind");
        line.parameter = get_real(item, "parameter");
        const auto& u = item.at("u");
        const auto& v = item.at("v");
        if (u.size() != v.size())
            throw Error(ErrorKind::BadParameter, "curve u and v lengths differ");
        for (std::size_t k = 0; k < u.size(); ++k)
            line.points.push_back({parse_real(u[k].get<std::string>()), parse_real(v[k].get<std::string>())});
        fig.curves.push_back(std::move(line));
    }
    return fig;
}

} // namespace minsurf
