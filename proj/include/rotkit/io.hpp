#pragma once

#include <array>
#include <string>
#include <vector>

#include "rotkit/infimax.hpp"
#include "rotkit/pipeline.hpp"
#include "rotkit/polygon.hpp"

namespace rotkit {

// Polygon wire format: {"chart":"delta"|"pi","vertices":[["p/q","r/s"],...]},
// vertices counterclockwise, rationals as strings throughout.
std::string polygon_json(const RatPolygon& p, const std::string& chart);
RatPolygon parse_polygon_json(const std::string& text, std::string* chart_out = nullptr);

std::string report_json(const RotsetReport& r);
std::string report_csv(const RotsetReport& r);     // rows: polygon,x,y
std::string scan_csv(const PlateauList& pl);       // t,plateau_id,n_vertices,closed
std::string deviation_csv(const DeviationProfile& prof);  // r,dev,max_dev

struct OrbitRow {
    int64_t step;
    EightPoint point;
    std::array<int, 2> g;
};
std::string orbit_csv(const std::vector<OrbitRow>& rows);  // step,circle,pos,gamma_x,gamma_y

struct RenderSpec {
    double x0 = -0.05, x1 = 1.05, y0 = -0.05, y1 = 0.6;
    int width = 800, height = 480;
    std::string outer_stroke = "#1a1a8c";
    std::string inner_stroke = "#c03030";
    std::string fill = "#d0d8f0";
};
// Outer polygon solid, inner polygon dashed, vertices labelled "p/q".
std::string svg_rotset(const RotsetReport& r, const RenderSpec& spec = {});

}  // namespace rotkit
