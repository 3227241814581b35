#include "mmt/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace mmt {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.4f", v + 0.0);  // normalize -0
    return buf;
}

std::string mult_label(const IntVec& m) {
    std::string s = "(";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(m[i]);
    }
    return s + ")";
}

struct Frame {
    double x0, y0, x1, y1;  // world bbox
    double to_x(double x) const { return (x - x0) / (x1 - x0) * (kWidth - 80) + 40; }
    double to_y(double y) const { return kHeight - 40 - (y - y0) / (y1 - y0) * (kHeight - 80); }
};

Frame fit(double x0, double y0, double x1, double y1) {
    if (x1 - x0 < 1e-12) {
        x0 -= 1;
        x1 += 1;
    }
    if (y1 - y0 < 1e-12) {
        y0 -= 1;
        y1 += 1;
    }
    const double padx = (x1 - x0) * 0.1;
    const double pady = (y1 - y0) * 0.1;
    return Frame{x0 - padx, y0 - pady, x1 + padx, y1 + pady};
}

std::string header() {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" "
           "viewBox=\"0 0 640 480\">\n";
}

std::string axes(const Frame& f) {
    std::string s;
    const double ox = std::clamp(f.to_x(0.0), 0.0, kWidth);
    const double oy = std::clamp(f.to_y(0.0), 0.0, kHeight);
    s += "  <line x1=\"0\" y1=\"" + num(oy) + "\" x2=\"" + num(kWidth) + "\" y2=\"" + num(oy) +
         "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    s += "  <line x1=\"" + num(ox) + "\" y1=\"0\" x2=\"" + num(ox) + "\" y2=\"" + num(kHeight) +
         "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    return s;
}

}  // namespace

template <int Tag>
std::string render_network_svg(const BasicNetwork<Tag>& net) {
    if (net.dim != 2) throw DomainError("render: only two-dimensional networks are supported");
    double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
    bool any = false;
    for (const Point& p : net.vertices) {
        if (!any) {
            x0 = x1 = p[0];
            y0 = y1 = p[1];
            any = true;
        }
        x0 = std::min(x0, p[0]);
        x1 = std::max(x1, p[0]);
        y0 = std::min(y0, p[1]);
        y1 = std::max(y1, p[1]);
    }
    if (!any) {
        x0 = y0 = -1;
        x1 = y1 = 1;
    }
    const Frame f = fit(x0, y0, x1, y1);

    std::string s = header();
    s += axes(f);
    for (const Edge& e : net.edges) {
        const Point& a = net.vertices[e.tail];
        const Point& b = net.vertices[e.head];
        s += "  <line x1=\"" + num(f.to_x(a[0])) + "\" y1=\"" + num(f.to_y(a[1])) + "\" x2=\"" +
             num(f.to_x(b[0])) + "\" y2=\"" + num(f.to_y(b[1])) +
             "\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
        const double mx = (f.to_x(a[0]) + f.to_x(b[0])) / 2;
        const double my = (f.to_y(a[1]) + f.to_y(b[1])) / 2;
        s += "  <text x=\"" + num(mx + 4) + "\" y=\"" + num(my - 4) +
             "\" font-size=\"12\" fill=\"#205080\">" + mult_label(e.mult) + "</text>\n";
    }
    const Boundary b = boundary_of(net);
    for (const BoundaryAtom& atom : b.atoms) {
        const double cx = f.to_x(atom.point[0]);
        const double cy = f.to_y(atom.point[1]);
        s += "  <circle cx=\"" + num(cx) + "\" cy=\"" + num(cy) +
             "\" r=\"4\" fill=\"#000000\"/>\n";
        s += "  <text x=\"" + num(cx + 6) + "\" y=\"" + num(cy + 12) +
             "\" font-size=\"12\" fill=\"#802020\">" + mult_label(atom.weight) + "</text>\n";
    }
    s += "</svg>\n";
    return s;
}

std::string render_ball_svg(const NormBall& ball) {
    if (ball.labels != 2) throw DomainError("render: only two-dimensional balls are supported");
    std::vector<RealVec> pts = extreme_points(ball);
    std::sort(pts.begin(), pts.end(), [](const RealVec& a, const RealVec& b) {
        return std::atan2(a[1], a[0]) < std::atan2(b[1], b[0]);
    });
    double r = 1.0;
    for (const RealVec& p : pts) r = std::max({r, std::abs(p[0]), std::abs(p[1])});
    const Frame f = fit(-r, -r, r, r);

    std::string s = header();
    s += axes(f);
    if (!pts.empty()) {
        std::string poly;
        for (const RealVec& p : pts) {
            if (!poly.empty()) poly += " ";
            poly += num(f.to_x(p[0])) + "," + num(f.to_y(p[1]));
        }
        s += "  <polygon points=\"" + poly +
             "\" fill=\"#b0c4de\" fill-opacity=\"0.5\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
        for (const RealVec& p : pts) {
            s += "  <circle cx=\"" + num(f.to_x(p[0])) + "\" cy=\"" + num(f.to_y(p[1])) +
                 "\" r=\"3\" fill=\"#000000\"/>\n";
            char label[64];
            std::snprintf(label, sizeof(label), "(%.3g,%.3g)", p[0] + 0.0, p[1] + 0.0);
            s += "  <text x=\"" + num(f.to_x(p[0]) + 5) + "\" y=\"" + num(f.to_y(p[1]) - 5) +
                 "\" font-size=\"12\" fill=\"#205080\">" + label + "</text>\n";
        }
    }
    s += "</svg>\n";
    return s;
}

template std::string render_network_svg<0>(const Network&);
template std::string render_network_svg<1>(const LabeledNetwork&);

}  // namespace mmt
