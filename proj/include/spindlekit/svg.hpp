#pragma once

#include "spindlekit/arc_region.hpp"
#include "spindlekit/certificates.hpp"
#include "spindlekit/geometry.hpp"

#include <string>
#include <vector>

namespace spindlekit {

/// Deterministic 2-d SVG builder: fixed 800x800 viewport fit to the scene
/// bounding box with a 20% margin, y axis pointing up, every coordinate
/// printed with six decimals. Equal scenes render byte-identical files.
/// Tooltips show angles in degrees; everything else stays in radians
/// upstream.
class SvgScene {
  public:
    void add_point(const Vec& p, const std::string& cls, const std::string& tooltip = "");
    void add_segment(const Vec& a, const Vec& b, const std::string& cls);
    void add_circle(const Vec& center, double r, const std::string& cls, bool dashed);
    void add_arc(const Vec& center, double r, double lo, double hi, const std::string& cls,
                 const std::string& tooltip = "");

    bool empty() const;
    std::string render() const;

  private:
    struct Dot {
        Vec p;
        std::string cls, tip;
    };
    struct Seg {
        Vec a, b;
        std::string cls;
    };
    struct Circle {
        Vec c;
        double r;
        std::string cls;
        bool dashed;
    };
    struct Arc {
        Vec c;
        double r, lo, hi;
        std::string cls, tip;
    };

    std::vector<Dot> dots_;
    std::vector<Seg> segs_;
    std::vector<Circle> circles_;
    std::vector<Arc> arcs_;
};

/// Input points as dots (labels become tooltips).
void add_point_set(SvgScene& scene, const PointSet& S);

/// Certificate normals as ticks out of their base points; far certificates
/// also add the dashed enclosing circle B(s - r z; r).
void add_certificates(SvgScene& scene, const std::vector<NormalCertificate>& certs,
                      double tick_length, bool with_balls);

/// Region boundary arcs plus its vertices.
void add_region(SvgScene& scene, const ArcRegion& region, const Tolerance& tol);

}  // namespace spindlekit
