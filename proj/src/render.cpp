#include "homcov/render.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "homcov/io.hpp"

namespace homcov {
namespace {

constexpr std::array<const char*, 10> kPalette = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::vector<Vec> homothet_vertices(const ConvexBody& body, const Vec& center, double gamma) {
    std::vector<Vec> out;
    for (const auto& v : body.vertices()) out.push_back(center + gamma * v);
    return out;
}

}  // namespace

std::string render_svg(const ConvexBody& body, const HomothetCover& cover) {
    if (body.ambient_dim() != 2)
        throw std::invalid_argument("render_svg: svg output requires a 2D body");

    double lo_x = 1e300, lo_y = 1e300, hi_x = -1e300, hi_y = -1e300;
    auto grow = [&](const Vec& p) {
        lo_x = std::min(lo_x, p[0]);
        lo_y = std::min(lo_y, p[1]);
        hi_x = std::max(hi_x, p[0]);
        hi_y = std::max(hi_y, p[1]);
    };
    for (const auto& v : body.vertices()) grow(v);
    for (const auto& c : cover.centers)
        for (const auto& v : homothet_vertices(body, c, cover.gamma)) grow(v);

    const double extent = std::max({hi_x - lo_x, hi_y - lo_y, 1e-12});
    const double px = 800.0, margin = 0.05 * px;
    const double s = (px - 2.0 * margin) / extent;
    auto map_x = [&](double x) { return margin + (x - lo_x) * s; };
    auto map_y = [&](double y) { return px - margin - (y - lo_y) * s; };  // y up

    auto poly = [&](const std::vector<Vec>& ring) {
        std::ostringstream pts;
        for (const auto& v : ring) pts << map_x(v[0]) << "," << map_y(v[1]) << " ";
        return pts.str();
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
           "viewBox=\"0 0 800 800\">\n";
    for (size_t i = 0; i < cover.centers.size(); ++i) {
        svg << "  <polygon points=\"" << poly(homothet_vertices(body, cover.centers[i], cover.gamma))
            << "\" fill=\"" << kPalette[i % kPalette.size()]
            << "\" fill-opacity=\"0.35\" stroke=\"" << kPalette[i % kPalette.size()]
            << "\" stroke-width=\"1\"/>\n";
    }
    svg << "  <polygon points=\"" << poly(body.vertices())
        << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
    svg << "</svg>\n";
    return svg.str();
}

std::string render_obj(const ConvexBody& body, const HomothetCover& cover) {
    if (body.ambient_dim() != 3)
        throw std::invalid_argument("render_obj: obj output requires a 3D body");
    if (!body.full_dimensional())
        throw std::invalid_argument("render_obj: body has no facets to mesh");

    std::ostringstream obj;
    obj << "# homothetic cover mesh\n";
    int base = 1;
    auto emit_group = [&](const std::string& name, const std::vector<Vec>& verts) {
        obj << "g " << name << "\n";
        for (const auto& v : verts)
            obj << "v " << format_double(v[0]) << " " << format_double(v[1]) << " "
                << format_double(v[2]) << "\n";
        for (const auto& ring : body.facet_vertices()) {
            obj << "f";
            for (int idx : ring) obj << " " << base + idx;
            obj << "\n";
        }
        base += static_cast<int>(verts.size());
    };

    emit_group("body", body.vertices());
    for (size_t i = 0; i < cover.centers.size(); ++i)
        emit_group("homothet_" + std::to_string(i),
                   homothet_vertices(body, cover.centers[i], cover.gamma));
    return obj.str();
}

}  // namespace homcov
