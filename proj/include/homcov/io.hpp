#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "homcov/body.hpp"
#include "homcov/covering.hpp"

namespace homcov {

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Canonical decimal formatting: 17 significant digits, round-trips any
/// double bit-for-bit through parse_double.
std::string format_double(double x);
double parse_double(const std::string& s);

struct BodyFile {
    std::string name;
    int dim = 0;
    std::vector<Vec> vertices;

    ConvexBody to_body() const { return convex_hull(vertices, dim); }
};

struct CoverFile {
    std::string body;  // body name reference
    double gamma = 0.0;
    std::vector<Vec> centers;

    HomothetCover to_cover() const { return {gamma, centers, body}; }
};

BodyFile read_body_file(const std::string& path);
CoverFile read_cover_file(const std::string& path);

/// Writes are atomic (temp file + rename); coordinates and gamma are stored
/// as canonical decimal strings.
void write_body_file(const std::string& path, const BodyFile& body);
void write_cover_file(const std::string& path, const CoverFile& cover);

}  // namespace homcov
