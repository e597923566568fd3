#pragma once

#include <compare>
#include <string>

namespace rgh {

/**
 * Topological type of a bordered surface: genus g, h boundary circles,
 * r labeled marked points on the boundary, s labeled marked points in the
 * interior.
 */
struct Signature {
    int g = 0;
    int h = 0;
    int r = 0;
    int s = 0;

    auto operator<=>(const Signature&) const = default;

    bool shape_ok() const { return g >= 0 && h >= 1 && r >= 0 && s >= 0; }

    // Types whose cell catalog is empty by definition: the disc/sphere-like
    // cases (0,1,*) with r + 2s < 3 and the bare annulus (0,2,0,0).
    bool excluded() const {
        return (g == 0 && h == 1 && r + 2 * s < 3) ||
               (g == 0 && h == 2 && r == 0 && s == 0);
    }

    // Dimension of the top stratum.
    int top_dim() const { return 6 * g - 6 + 3 * h + r + 2 * s; }

    std::string str() const {
        return "(" + std::to_string(g) + "," + std::to_string(h) + "," +
               std::to_string(r) + "," + std::to_string(s) + ")";
    }
};

} // namespace rgh
