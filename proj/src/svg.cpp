#include "spindlekit/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace spindlekit {

namespace {

std::string fmt6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

std::string degrees(double radians) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", radians * 180.0 / std::numbers::pi);
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out.push_back(ch);
        }
    }
    return out;
}

void require_2d(const Vec& p) {
    if (p.size() != 2) throw std::invalid_argument("svg rendering is 2-d only");
}

struct Box {
    double xmin = std::numeric_limits<double>::infinity();
    double xmax = -std::numeric_limits<double>::infinity();
    double ymin = std::numeric_limits<double>::infinity();
    double ymax = -std::numeric_limits<double>::infinity();
    void take(double x, double y) {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
    bool valid() const { return xmin <= xmax; }
};

}  // namespace

void SvgScene::add_point(const Vec& p, const std::string& cls, const std::string& tooltip) {
    require_2d(p);
    dots_.push_back({p, cls, tooltip});
}

void SvgScene::add_segment(const Vec& a, const Vec& b, const std::string& cls) {
    require_2d(a);
    require_2d(b);
    segs_.push_back({a, b, cls});
}

void SvgScene::add_circle(const Vec& center, double r, const std::string& cls, bool dashed) {
    require_2d(center);
    if (!(r > 0.0) || !std::isfinite(r)) throw std::invalid_argument("svg circle needs r > 0");
    circles_.push_back({center, r, cls, dashed});
}

void SvgScene::add_arc(const Vec& center, double r, double lo, double hi, const std::string& cls,
                       const std::string& tooltip) {
    require_2d(center);
    if (!(r > 0.0) || !std::isfinite(r)) throw std::invalid_argument("svg arc needs r > 0");
    if (hi < lo) throw std::invalid_argument("svg arc span is inverted");
    arcs_.push_back({center, r, lo, hi, cls, tooltip});
}

bool SvgScene::empty() const {
    return dots_.empty() && segs_.empty() && circles_.empty() && arcs_.empty();
}

std::string SvgScene::render() const {
    Box box;
    for (const Dot& d : dots_) box.take(d.p(0), d.p(1));
    for (const Seg& s : segs_) {
        box.take(s.a(0), s.a(1));
        box.take(s.b(0), s.b(1));
    }
    for (const Circle& c : circles_) {
        box.take(c.c(0) - c.r, c.c(1) - c.r);
        box.take(c.c(0) + c.r, c.c(1) + c.r);
    }
    for (const Arc& a : arcs_) {
        box.take(a.c(0) - a.r, a.c(1) - a.r);
        box.take(a.c(0) + a.r, a.c(1) + a.r);
    }
    if (!box.valid()) {
        box.take(-1.0, -1.0);
        box.take(1.0, 1.0);
    }

    double side = std::max({box.xmax - box.xmin, box.ymax - box.ymin, 1e-6}) * 1.4;
    double cx = 0.5 * (box.xmin + box.xmax);
    double cy = 0.5 * (box.ymin + box.ymax);
    double scale = 800.0 / side;
    auto X = [&](double x) { return 400.0 + (x - cx) * scale; };
    auto Y = [&](double y) { return 400.0 - (y - cy) * scale; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 800\" "
           "width=\"800\" height=\"800\">\n";
    out << "<style>\n"
           ".pt{fill:#1f6feb;stroke:none}\n"
           ".vertex{fill:#d29922;stroke:none}\n"
           ".probe{fill:#cf222e;stroke:none}\n"
           ".tick{stroke:#cf222e;stroke-width:2;fill:none}\n"
           ".region{stroke:#116329;stroke-width:2.5;fill:none}\n"
           ".ball{stroke:#8250df;stroke-width:1;fill:none}\n"
           ".aux{stroke:#57606a;stroke-width:1;fill:none}\n"
           "</style>\n";

    for (const Circle& c : circles_) {
        out << "<circle class=\"" << c.cls << "\" cx=\"" << fmt6(X(c.c(0))) << "\" cy=\""
            << fmt6(Y(c.c(1))) << "\" r=\"" << fmt6(c.r * scale) << "\"";
        if (c.dashed) out << " stroke-dasharray=\"6 4\"";
        out << "/>\n";
    }

    for (const Arc& a : arcs_) {
        double span = a.hi - a.lo;
        std::string tip = a.tip.empty() ? "" : "<title>" + xml_escape(a.tip) + "</title>";
        if (span >= tau - 1e-12) {
            out << "<circle class=\"" << a.cls << "\" cx=\"" << fmt6(X(a.c(0))) << "\" cy=\""
                << fmt6(Y(a.c(1))) << "\" r=\"" << fmt6(a.r * scale) << "\">" << tip
                << "</circle>\n";
            continue;
        }
        double x0 = a.c(0) + a.r * std::cos(a.lo), y0 = a.c(1) + a.r * std::sin(a.lo);
        double x1 = a.c(0) + a.r * std::cos(a.hi), y1 = a.c(1) + a.r * std::sin(a.hi);
        if (span <= 1e-12) {
            out << "<circle class=\"" << a.cls << "\" cx=\"" << fmt6(X(x0)) << "\" cy=\""
                << fmt6(Y(y0)) << "\" r=\"2.500000\" fill=\"currentColor\">" << tip
                << "</circle>\n";
            continue;
        }
        // y flip mirrors orientation, so a counterclockwise span uses sweep 0
        out << "<path class=\"" << a.cls << "\" d=\"M " << fmt6(X(x0)) << " " << fmt6(Y(y0))
            << " A " << fmt6(a.r * scale) << " " << fmt6(a.r * scale) << " 0 "
            << (span > std::numbers::pi ? 1 : 0) << " 0 " << fmt6(X(x1)) << " " << fmt6(Y(y1))
            << "\">" << tip << "</path>\n";
    }

    for (const Seg& s : segs_) {
        out << "<line class=\"" << s.cls << "\" x1=\"" << fmt6(X(s.a(0))) << "\" y1=\""
            << fmt6(Y(s.a(1))) << "\" x2=\"" << fmt6(X(s.b(0))) << "\" y2=\"" << fmt6(Y(s.b(1)))
            << "\"/>\n";
    }

    for (const Dot& d : dots_) {
        out << "<circle class=\"" << d.cls << "\" cx=\"" << fmt6(X(d.p(0))) << "\" cy=\""
            << fmt6(Y(d.p(1))) << "\" r=\"4.000000\">";
        if (!d.tip.empty()) out << "<title>" << xml_escape(d.tip) << "</title>";
        out << "</circle>\n";
    }

    out << "</svg>\n";
    return out.str();
}

void add_point_set(SvgScene& scene, const PointSet& S) {
    if (S.dim() != 2) throw std::invalid_argument("svg rendering is 2-d only");
    for (int i = 0; i < S.size(); ++i) {
        std::string tip = S.labels().empty() ? "p" + std::to_string(i)
                                             : S.labels()[static_cast<std::size_t>(i)];
        tip += " (" + fmt6(S[i](0)) + ", " + fmt6(S[i](1)) + ")";
        scene.add_point(S[i], "pt", tip);
    }
}

void add_certificates(SvgScene& scene, const std::vector<NormalCertificate>& certs,
                      double tick_length, bool with_balls) {
    for (const NormalCertificate& c : certs) {
        if (c.base_point.size() != 2) throw std::invalid_argument("svg rendering is 2-d only");
        Vec tip_pt = c.base_point + tick_length * c.direction.u;
        scene.add_segment(c.base_point, tip_pt, "tick");
        double deg_angle = wrap_angle(c.direction.angle());
        scene.add_point(tip_pt, "probe", "normal at index " + std::to_string(c.base_index) +
                                             ": " + degrees(deg_angle) + " deg");
        if (with_balls && std::isfinite(c.radius) && c.kind == CertKind::far_realized)
            scene.add_circle(c.base_point - c.radius * c.direction.u, c.radius, "ball", true);
    }
}

void add_region(SvgScene& scene, const ArcRegion& region, const Tolerance& tol) {
    if (region.empty_flag) return;
    for (const BoundaryArc& arc : region.boundary) {
        const Vec& a = region.generators[static_cast<std::size_t>(arc.generator)];
        scene.add_arc(a, region.radius, arc.span.lo, arc.span.hi, "region",
                      "arc of generator " + std::to_string(arc.generator) + ": " +
                          degrees(arc.span.lo) + " deg to " + degrees(arc.span.hi) + " deg");
    }
    for (const Vec& v : region.vertices(tol)) scene.add_point(v, "vertex", "");
}

}  // namespace spindlekit
