#include "homcov/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include <json.hpp>

namespace homcov {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

double parse_double(const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0')
        throw io_error("not a decimal number: '" + s + "'");
    return v;
}

namespace {

using nlohmann::json;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw io_error(path + ": " + e.what());
    }
    return j;
}

std::vector<Vec> parse_rows(const json& rows, int dim, const std::string& what) {
    std::vector<Vec> out;
    if (!rows.is_array()) throw io_error(what + " must be an array of coordinate rows");
    for (const auto& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != dim)
            throw io_error(what + ": coordinate row does not match dim");
        std::vector<double> coords;
        for (const auto& cell : row) {
            if (!cell.is_string()) throw io_error(what + ": coordinates must be decimal strings");
            coords.push_back(parse_double(cell.get<std::string>()));
        }
        Vec v = Vec::of(coords);
        if (!v.finite()) throw io_error(what + ": non-finite coordinate");
        out.push_back(v);
    }
    return out;
}

json rows_to_json(const std::vector<Vec>& rows) {
    json out = json::array();
    for (const auto& v : rows) {
        json row = json::array();
        for (int i = 0; i < v.dim(); ++i) row.push_back(format_double(v[i]));
        out.push_back(row);
    }
    return out;
}

void atomic_write(const std::string& path, const std::string& text) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw io_error("cannot write " + tmp);
        out << text;
        if (!out) throw io_error("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw io_error("cannot rename " + tmp + " to " + path);
}

}  // namespace

BodyFile read_body_file(const std::string& path) {
    const json j = load_json(path);
    BodyFile f;
    try {
        f.name = j.at("name").get<std::string>();
        f.dim = j.at("dim").get<int>();
    } catch (const json::exception& e) {
        throw io_error(path + ": " + e.what());
    }
    if (f.dim < 2 || f.dim > 3) throw io_error(path + ": dim must be 2 or 3");
    f.vertices = parse_rows(j.at("vertices"), f.dim, path + ": vertices");
    if (f.vertices.empty()) throw io_error(path + ": vertices must be non-empty");
    return f;
}

CoverFile read_cover_file(const std::string& path) {
    const json j = load_json(path);
    CoverFile f;
    try {
        f.body = j.at("body").get<std::string>();
        const auto& g = j.at("gamma");
        f.gamma = g.is_string() ? parse_double(g.get<std::string>()) : g.get<double>();
    } catch (const json::exception& e) {
        throw io_error(path + ": " + e.what());
    }
    if (!(f.gamma > 0.0) || f.gamma > 1.0) throw io_error(path + ": gamma must be in (0, 1]");
    const auto& centers = j.at("centers");
    if (!centers.is_array() || centers.empty())
        throw io_error(path + ": centers must be a non-empty array");
    const int dim = static_cast<int>(centers.front().size());
    f.centers = parse_rows(centers, dim, path + ": centers");
    return f;
}

void write_body_file(const std::string& path, const BodyFile& body) {
    json j;
    j["name"] = body.name;
    j["dim"] = body.dim;
    j["vertices"] = rows_to_json(body.vertices);
    atomic_write(path, j.dump(2) + "\n");
}

void write_cover_file(const std::string& path, const CoverFile& cover) {
    json j;
    j["body"] = cover.body;
    j["gamma"] = format_double(cover.gamma);
    j["centers"] = rows_to_json(cover.centers);
    atomic_write(path, j.dump(2) + "\n");
}

}  // namespace homcov
