#pragma once

#include "minsurf/surface_io.hpp"
#include "minsurf/verify.hpp"

#include "json.hpp"

namespace minsurf {

// Flat snake_case objects; every real is a decimal string with 17
// significant digits so that a parse recovers the exact double.

using Json = nlohmann::ordered_json;

/// One point evaluation: h, g, f and the surface point (u, v, F).
struct EvalRecord {
    DomainCase domain;
    Complex z;
    Complex h;
    Complex g;
    Complex f;
    SurfacePoint p;
};

EvalRecord eval_record(const DomainCase& c, Complex z);

/// Adds family, gamma | alpha | p_re, p_im, and sign to `out`.
void put_case(Json& out, const DomainCase& c);
DomainCase case_from_json(const Json& j);

Json to_json(const EvalRecord& r);
EvalRecord eval_record_from_json(const Json& j);

Json to_json(const VerificationReport& rep);
VerificationReport report_from_json(const Json& j);

Json to_json(const FigureData& fig);
FigureData figure_from_json(const Json& j);

} // namespace minsurf
