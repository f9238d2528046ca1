#pragma once

#include <string>

#include "homcov/body.hpp"
#include "homcov/covering.hpp"

namespace homcov {

/// 2D figure: body outline plus one translucent polygon layer per homothet.
/// Unit-scale bodies map to 800 px with a 5% margin.
std::string render_svg(const ConvexBody& body, const HomothetCover& cover);

/// 3D mesh: body facets plus each homothet as a named group.
std::string render_obj(const ConvexBody& body, const HomothetCover& cover);

}  // namespace homcov
