#include "rotkit/io.hpp"

#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace rotkit {

using json = nlohmann::ordered_json;

namespace {

json polygon_obj(const RatPolygon& p, const std::string& chart) {
    json j;
    j["chart"] = chart;
    json verts = json::array();
    for (const Pt& v : p.vertices()) verts.push_back({rat_str(v[0]), rat_str(v[1])});
    j["vertices"] = verts;
    return j;
}

std::string fixed6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string sci(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

std::string polygon_json(const RatPolygon& p, const std::string& chart) {
    return polygon_obj(p, chart).dump();
}

RatPolygon parse_polygon_json(const std::string& text, std::string* chart_out) {
    json j = json::parse(text);
    if (!j.contains("chart") || !j.contains("vertices"))
        throw std::invalid_argument("polygon json: missing fields");
    if (chart_out) *chart_out = j["chart"].get<std::string>();
    std::vector<Pt> pts;
    for (const auto& v : j["vertices"])
        pts.push_back({parse_rat(v[0].get<std::string>()), parse_rat(v[1].get<std::string>())});
    RatPolygon p = RatPolygon::hull_of(pts);
    if (p.vertices() != pts)
        throw std::invalid_argument("polygon json: vertices not a canonical convex list");
    return p;
}

std::string report_json(const RotsetReport& r) {
    json j;
    j["t"] = rat_str(r.t);
    j["order"] = r.order;
    j["max_period"] = r.max_period;
    j["kneading_depth"] = r.kneading_depth;
    j["theta"] = r.theta_prefix.str();
    j["kneading"] = r.kneading.str();
    j["kneading_exact"] = r.kneading_exact;
    j["closed"] = r.closed;
    j["classification"] = r.classification;
    if (!r.closed) j["classification_depth"] = r.class_depth;
    j["gap_bound"] = rat_str(r.gap);
    j["outer"] = polygon_obj(r.outer, "pi");
    j["inner"] = polygon_obj(r.inner, "pi");
    json wits = json::array();
    for (const Witness& w : r.witnesses) {
        json jw;
        jw["word"] = w.word.str();
        jw["freq"] = {rat_str(w.frequency[0]), rat_str(w.frequency[1]), rat_str(w.frequency[2])};
        Pt p = project_pi(w.frequency);
        jw["pi"] = {rat_str(p[0]), rat_str(p[1])};
        wits.push_back(jw);
    }
    j["witnesses"] = wits;
    return j.dump(2) + "\n";
}

std::string report_csv(const RotsetReport& r) {
    std::string s = "polygon,x,y\n";
    for (const Pt& v : r.outer.vertices())
        s += "outer," + rat_str(v[0]) + "," + rat_str(v[1]) + "\n";
    for (const Pt& v : r.inner.vertices())
        s += "inner," + rat_str(v[0]) + "," + rat_str(v[1]) + "\n";
    return s;
}

std::string scan_csv(const PlateauList& pl) {
    std::string s = "t,plateau_id,n_vertices,closed\n";
    for (int i = 0; i < pl.steps; ++i) {
        s += rat_str(pl.grid[i]) + "," + std::to_string(pl.plateau_id[i]) + "," +
             std::to_string(pl.n_vertices[i]) + "," + (pl.closed[i] ? "1" : "0") + "\n";
    }
    return s;
}

std::string deviation_csv(const DeviationProfile& prof) {
    std::string s = "r,dev,max_dev\n";
    for (const auto& smp : prof.samples)
        s += std::to_string(smp.r) + "," + sci(smp.dev) + "," + sci(smp.max_dev) + "\n";
    return s;
}

std::string orbit_csv(const std::vector<OrbitRow>& rows) {
    std::string s = "step,circle,pos,gamma_x,gamma_y\n";
    for (const auto& row : rows) {
        s += std::to_string(row.step) + ",";
        s += row.point.circle == Circle::S1 ? "S1," : "S2,";
        s += rat_str(row.point.pos) + "," + std::to_string(row.g[0]) + "," +
             std::to_string(row.g[1]) + "\n";
    }
    return s;
}

std::string svg_rotset(const RotsetReport& r, const RenderSpec& spec) {
    auto px = [&](const Rat& x) {
        return fixed6((rat_d(x) - spec.x0) / (spec.x1 - spec.x0) * spec.width);
    };
    auto py = [&](const Rat& y) {
        return fixed6(spec.height - (rat_d(y) - spec.y0) / (spec.y1 - spec.y0) * spec.height);
    };
    auto path = [&](const RatPolygon& p) {
        std::string d;
        for (size_t i = 0; i < p.vertices().size(); ++i) {
            d += (i == 0 ? "M" : "L");
            d += px(p.vertices()[i][0]) + " " + py(p.vertices()[i][1]) + " ";
        }
        d += "Z";
        return d;
    };

    std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                    std::to_string(spec.width) + "\" height=\"" + std::to_string(spec.height) +
                    "\">\n";
    // axes through the origin of the chart
    s += "<line x1=\"" + px(Rat(0)) + "\" y1=\"0\" x2=\"" + px(Rat(0)) + "\" y2=\"" +
         std::to_string(spec.height) + "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
    s += "<line x1=\"0\" y1=\"" + py(Rat(0)) + "\" x2=\"" + std::to_string(spec.width) +
         "\" y2=\"" + py(Rat(0)) + "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
    if (!r.outer.empty())
        s += "<path d=\"" + path(r.outer) + "\" fill=\"" + spec.fill + "\" stroke=\"" +
             spec.outer_stroke + "\" stroke-width=\"2\"/>\n";
    if (!r.inner.empty())
        s += "<path d=\"" + path(r.inner) + "\" fill=\"none\" stroke=\"" + spec.inner_stroke +
             "\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"/>\n";
    for (const Pt& v : r.outer.vertices()) {
        s += "<circle cx=\"" + px(v[0]) + "\" cy=\"" + py(v[1]) +
             "\" r=\"3\" fill=\"" + spec.outer_stroke + "\"/>\n";
        s += "<text x=\"" + px(v[0]) + "\" y=\"" + py(v[1]) +
             "\" dx=\"6\" dy=\"-6\" font-size=\"12\" font-family=\"monospace\">(" +
             rat_str(v[0]) + ", " + rat_str(v[1]) + ")</text>\n";
    }
    s += "</svg>\n";
    return s;
}

}  // namespace rotkit
