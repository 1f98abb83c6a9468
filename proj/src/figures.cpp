#include "curvatura/figures.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "curvatura/parallelism.hpp"
#include "curvatura/quad.hpp"
#include "curvatura/trig.hpp"

namespace curvatura {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct XY {
    double x = 0, y = 0;
};

// Scene accumulates primitives in projected plane coordinates and emits the
// SVG with a bbox-fitted viewport at the end.
class Scene {
public:
    explicit Scene(const SpaceForm& s) : s_(s) {}

    XY project(const Point& p) const {
        switch (s_.kind) {
            case Kind::Euclidean:
                return {p.x(), p.y()};
            case Kind::Spherical:
                // orthographic view down the first axis
                return {p.coords[1], p.coords[2]};
            case Kind::Hyperbolic: {
                double R = s_.radius;
                return {p.coords[1] / (R + p.coords[0]), p.coords[2] / (R + p.coords[0])};
            }
        }
        return {};
    }

    void add_segment(const Point& a, const Point& b, const std::string& cls) {
        if (s_.kind == Kind::Hyperbolic) {
            arcs_.push_back({project(a), project(b), project(midpoint(s_, a, b)), cls});
            grow(arcs_.back().u);
            grow(arcs_.back().v);
            return;
        }
        Polyline pl{{}, cls};
        if (s_.kind == Kind::Euclidean) {
            pl.pts = {project(a), project(b)};
        } else {
            TangentDir dir = direction(s_, a, b);
            double len = distance(s_, a, b);
            for (int i = 0; i <= 48; ++i) pl.pts.push_back(project(exp_map(s_, dir, len * i / 48)));
        }
        for (const XY& p : pl.pts) grow(p);
        polylines_.push_back(std::move(pl));
    }

    // A stretch of the complete geodesic through l.base, [-extent, extent].
    void add_line(const Line& l, double extent, const std::string& cls) {
        add_segment(exp_map(s_, l.dir, -extent), exp_map(s_, l.dir, extent), cls);
    }

    void add_point(const Point& p, const std::string& label) {
        dots_.push_back({project(p), label});
        grow(dots_.back().at);
    }

    // Locus circle of given metric radius around a center.
    void add_metric_circle(const Point& center, double radius, const std::string& cls) {
        Polyline pl{{}, cls};
        Vec3 u = (s_.kind == Kind::Euclidean) ? Vec3{0, 1, 0}
                                              : rotate90(s_, center, direction_seed(center));
        for (int i = 0; i <= 96; ++i) {
            Vec3 dir = rotate_tangent(s_, center, u, 2 * kPi * i / 96);
            pl.pts.push_back(project(exp_map(s_, TangentDir{center, dir}, radius)));
        }
        for (const XY& p : pl.pts) grow(p);
        polylines_.push_back(std::move(pl));
    }

    void add_right_angle_mark(const Point& at, const Vec3& t1, const Vec3& t2) {
        double eps = 0.08 * s_.radius;
        marks_.push_back({project(exp_map(s_, TangentDir{at, t1}, eps)), project(at),
                          project(exp_map(s_, TangentDir{at, t2}, eps))});
    }

    std::string svg() const {
        double minx = bb_minx_, maxx = bb_maxx_, miny = bb_miny_, maxy = bb_maxy_;
        if (s_.kind != Kind::Euclidean) {
            // fixed frame around the model disk
            double r = (s_.kind == Kind::Hyperbolic) ? 1.0 : s_.radius;
            minx = std::min(minx, -r);
            maxx = std::max(maxx, r);
            miny = std::min(miny, -r);
            maxy = std::max(maxy, r);
        }
        double padw = 0.08 * std::max(maxx - minx, 1e-6);
        double padh = 0.08 * std::max(maxy - miny, 1e-6);
        minx -= padw;
        maxx += padw;
        miny -= padh;
        maxy += padh;
        double scale = 600.0 / std::max(maxx - minx, maxy - miny);
        double width = (maxx - minx) * scale, height = (maxy - miny) * scale;
        auto sx = [&](double x) { return (x - minx) * scale; };
        auto sy = [&](double y) { return (maxy - y) * scale; };  // y up

        std::ostringstream os;
        os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width)
           << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " "
           << fmt(height) << "\">\n";
        os << "<style>.geo{stroke:#1b1b1b;fill:none;stroke-width:1.6}"
              ".aux{stroke:#7a7a7a;fill:none;stroke-width:1.1;stroke-dasharray:6 4}"
              ".locus{stroke:#b4232a;fill:none;stroke-width:1.1;stroke-dasharray:2 3}"
              ".frame{stroke:#bbb;fill:none;stroke-width:1}"
              ".mark{stroke:#1b1b1b;fill:none;stroke-width:1}"
              ".pt{fill:#1b1b1b}text{font:italic 15px serif;fill:#1b1b1b}</style>\n";

        if (s_.kind == Kind::Hyperbolic)
            os << "<circle class=\"frame\" cx=\"" << fmt(sx(0)) << "\" cy=\"" << fmt(sy(0))
               << "\" r=\"" << fmt(scale) << "\"/>\n";
        if (s_.kind == Kind::Spherical)
            os << "<circle class=\"frame\" cx=\"" << fmt(sx(0)) << "\" cy=\"" << fmt(sy(0))
               << "\" r=\"" << fmt(scale * s_.radius) << "\"/>\n";

        for (const Polyline& pl : polylines_) {
            os << "<path class=\"" << pl.cls << "\" d=\"M " << fmt(sx(pl.pts[0].x)) << " "
               << fmt(sy(pl.pts[0].y));
            for (size_t i = 1; i < pl.pts.size(); ++i)
                os << " L " << fmt(sx(pl.pts[i].x)) << " " << fmt(sy(pl.pts[i].y));
            os << "\"/>\n";
        }
        for (const Arc& a : arcs_) emit_arc(os, a, sx, sy, scale);
        for (const Mark& m : marks_) {
            XY c{m.a.x + m.b2.x - m.v.x, m.a.y + m.b2.y - m.v.y};
            os << "<path class=\"mark\" d=\"M " << fmt(sx(m.a.x)) << " " << fmt(sy(m.a.y)) << " L "
               << fmt(sx(c.x)) << " " << fmt(sy(c.y)) << " L " << fmt(sx(m.b2.x)) << " "
               << fmt(sy(m.b2.y)) << "\"/>\n";
        }
        for (const Dot& d : dots_) {
            os << "<circle class=\"pt\" cx=\"" << fmt(sx(d.at.x)) << "\" cy=\"" << fmt(sy(d.at.y))
               << "\" r=\"3\"/>\n";
            if (!d.label.empty())
                os << "<text x=\"" << fmt(sx(d.at.x) + 7) << "\" y=\"" << fmt(sy(d.at.y) - 7)
                   << "\">" << d.label << "</text>\n";
        }
        os << "</svg>\n";
        return os.str();
    }

private:
    struct Polyline {
        std::vector<XY> pts;
        std::string cls;
    };
    struct Arc {
        XY u, v, mid;  // disk coordinates; mid picks the correct branch
        std::string cls;
    };
    struct Dot {
        XY at;
        std::string label;
    };
    struct Mark {
        XY a, v, b2;
    };

    Vec3 direction_seed(const Point& p) const {
        // any unit tangent at p
        double R2 = s_.radius * s_.radius;
        Vec3 axis{0, 1, 0};
        Vec3 w = axis - p.coords * (s_.form(p.coords, axis) / R2);
        double n2 = (s_.kind == Kind::Hyperbolic) ? -s_.form(w, w) : dot(w, w);
        if (n2 < 1e-12 * R2) {
            axis = Vec3{0, 0, 1};
            w = axis - p.coords * (s_.form(p.coords, axis) / R2);
            n2 = (s_.kind == Kind::Hyperbolic) ? -s_.form(w, w) : dot(w, w);
        }
        return w * (1.0 / std::sqrt(n2));
    }

    static std::string fmt(double v) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.2f", v);
        return std::string(buf);
    }

    template <class FX, class FY>
    void emit_arc(std::ostringstream& os, const Arc& a, FX&& sx, FY&& sy, double scale) const {
        // Circle through u and v orthogonal to the unit circle: 2 c.u = |u|^2+1.
        double det = 2 * (a.u.x * a.v.y - a.u.y * a.v.x);
        double ru = a.u.x * a.u.x + a.u.y * a.u.y + 1;
        double rv = a.v.x * a.v.x + a.v.y * a.v.y + 1;
        if (std::abs(det) < 1e-7) {  // diameter: a straight chord
            os << "<path class=\"" << a.cls << "\" d=\"M " << fmt(sx(a.u.x)) << " "
               << fmt(sy(a.u.y)) << " L " << fmt(sx(a.v.x)) << " " << fmt(sy(a.v.y)) << "\"/>\n";
            return;
        }
        double cx = (ru * a.v.y - rv * a.u.y) / det;
        double cy = (rv * a.u.x - ru * a.v.x) / det;
        double r = std::sqrt(std::max(0.0, cx * cx + cy * cy - 1.0));
        // choose the sweep whose arc passes through the projected midpoint
        auto ang = [&](const XY& p) { return std::atan2(p.y - cy, p.x - cx); };
        double au = ang(a.u), av = ang(a.v), am = ang(a.mid);
        double span_ccw = std::fmod(av - au + 4 * kPi, 2 * kPi);
        double off_ccw = std::fmod(am - au + 4 * kPi, 2 * kPi);
        bool ccw = off_ccw <= span_ccw;  // midpoint reached going counterclockwise
        int large = (ccw ? span_ccw : 2 * kPi - span_ccw) > kPi ? 1 : 0;
        // screen y flips orientation: ccw in the disk is sweep=1 on screen
        int sweep = ccw ? 1 : 0;
        os << "<path class=\"" << a.cls << "\" d=\"M " << fmt(sx(a.u.x)) << " " << fmt(sy(a.u.y))
           << " A " << fmt(r * scale) << " " << fmt(r * scale) << " 0 " << large << " " << sweep
           << " " << fmt(sx(a.v.x)) << " " << fmt(sy(a.v.y)) << "\"/>\n";
    }

    void grow(const XY& p) {
        bb_minx_ = std::min(bb_minx_, p.x);
        bb_maxx_ = std::max(bb_maxx_, p.x);
        bb_miny_ = std::min(bb_miny_, p.y);
        bb_maxy_ = std::max(bb_maxy_, p.y);
    }

    SpaceForm s_;
    std::vector<Polyline> polylines_;
    std::vector<Arc> arcs_;
    std::vector<Dot> dots_;
    std::vector<Mark> marks_;
    double bb_minx_ = 1e300, bb_maxx_ = -1e300, bb_miny_ = 1e300, bb_maxy_ = -1e300;
};

SpaceForm space_from_params(const ojson& params) {
    const ojson& sp = params.at("space");
    std::string kind = sp.at("kind").get<std::string>();
    double radius = sp.contains("radius") ? sp["radius"].get<double>() : 1.0;
    if (kind == "spherical") return SpaceForm::spherical(radius);
    if (kind == "euclidean") return SpaceForm::euclidean();
    if (kind == "hyperbolic") return SpaceForm::hyperbolic(radius);
    throw SchemaError("space.kind must be spherical, euclidean or hyperbolic");
}

double p_num(const ojson& params, const char* key) {
    if (!params.contains(key) || !params[key].is_number())
        throw SchemaError(std::string("figure params need number \"") + key + "\"");
    return params[key].get<double>();
}

std::vector<double> p_list(const ojson& params, const char* key) {
    if (!params.contains(key) || !params[key].is_array())
        throw SchemaError(std::string("figure params need array \"") + key + "\"");
    std::vector<double> out;
    for (const ojson& v : params[key]) out.push_back(v.get<double>());
    return out;
}

// --- the figures -------------------------------------------------------------

std::string fig1(const ojson& params) {
    SpaceForm s = space_from_params(params);
    Scene sc(s);
    Point A = origin(s);
    Vec3 u = base_dir(s).vec;
    Vec3 w = rotate90(s, A, u);
    double c = p_num(params, "c"), b = p_num(params, "b");
    Point B = exp_map(s, TangentDir{A, u}, c);
    Point C = exp_map(s, TangentDir{A, w}, b);
    Point D = exp_map(s, TangentDir{A, u}, c + p_num(params, "beyond"));
    Point E = exp_map(s, TangentDir{C, -direction(s, C, D).vec}, p_num(params, "ext"));
    sc.add_segment(A, D, "geo");
    sc.add_segment(C, A, "geo");
    sc.add_segment(C, B, "geo");
    sc.add_segment(E, D, "geo");
    sc.add_right_angle_mark(A, u, w);
    sc.add_point(A, "A");
    sc.add_point(B, "B");
    sc.add_point(C, "C");
    sc.add_point(D, "D");
    sc.add_point(E, "E");
    return sc.svg();
}

std::string fig2(const ojson& params) {
    SpaceForm s = space_from_params(params);
    if (s.kind == Kind::Spherical) throw RenderDomain("fig2 needs a plane with parallels");
    Scene sc(s);
    double p = p_num(params, "p");
    Point F = origin(s);
    TangentDir along = base_dir(s);
    Vec3 up = rotate90(s, F, along.vec);
    Point G = exp_map(s, TangentDir{F, up}, p);
    std::vector<double> dists = p_list(params, "distances");
    double reach = *std::max_element(dists.begin(), dists.end());
    sc.add_segment(exp_map(s, along, -0.25 * reach), exp_map(s, along, 1.15 * reach), "geo");
    sc.add_segment(F, G, "geo");
    sc.add_right_angle_mark(F, along.vec, up);
    for (double d : dists) {
        Point A = exp_map(s, along, d);
        sc.add_segment(G, A, "aux");
        sc.add_point(A, dists.back() == d ? "A" : "");
    }
    // the limiting direction at the parallelism angle
    double ang = angle_of_parallelism(s, p);
    Vec3 down = -exp_map_tangent(s, TangentDir{F, up}, p).vec;
    Vec3 ray = rotate_tangent(s, G, down, ang);
    sc.add_segment(G, exp_map(s, TangentDir{G, ray}, 1.4 * reach), "locus");
    sc.add_point(F, "F");
    sc.add_point(G, "G");
    sc.add_point(exp_map(s, along, -0.22 * reach), "B");
    sc.add_point(exp_map(s, along, 1.12 * reach), "D");
    return sc.svg();
}

std::string fig3(const ojson& params) {
    SpaceForm s = space_from_params(params);
    Scene sc(s);
    double seg = p_num(params, "s"), theta = p_num(params, "theta");
    int n = params.at("n").get<int>();
    PolygonChain chain = build_chain(s, seg, theta, n);
    for (int i = 0; i < n; ++i) sc.add_segment(chain.vertices[i], chain.vertices[i + 1], "geo");
    const char* names[] = {"A", "B", "C", "D", "E", "F"};
    for (int i = 0; i < std::min<int>(6, n + 1); ++i) sc.add_point(chain.vertices[i], names[i]);
    // bisectors of the first two segments, and the locus they determine
    for (int i = 0; i < 2; ++i) {
        Line bis = perpendicular_at(s, line_through(s, chain.vertices[i], chain.vertices[i + 1]),
                                    midpoint(s, chain.vertices[i], chain.vertices[i + 1]));
        sc.add_line(bis, 1.8 * seg, "aux");
    }
    ChainCenter cc = classify_chain_center(chain);
    if (const auto* circ = std::get_if<ChainCircle>(&cc)) {
        sc.add_metric_circle(circ->center, circ->radius, "locus");
        sc.add_point(circ->center, "O");
    } else if (const auto* eq = std::get_if<ChainEquidistant>(&cc)) {
        sc.add_line(eq->axis, (n + 1) * seg, "locus");
    }
    return sc.svg();
}

std::string fig4(const ojson& params) {
    SpaceForm s = space_from_params(params);
    Scene sc(s);
    double base = p_num(params, "base"), cb = p_num(params, "cb"), de = p_num(params, "de");
    Point B = origin(s);
    TangentDir along = base_dir(s);
    Line baseline = line_from(s, B, along.vec);
    Point D = exp_map(s, along, base);
    Point C = exp_map(s, TangentDir{B, rotate90(s, B, line_tangent_at(s, baseline, B))}, cb);
    Point E = exp_map(s, TangentDir{D, rotate90(s, D, line_tangent_at(s, baseline, D))}, de);
    Point F = midpoint(s, B, D);
    Line bisector = perpendicular_at(s, baseline, F);
    LinePairClass pc = classify_line_pair(s, line_through(s, E, C), bisector);
    const auto* hit = std::get_if<LinesIntersect>(&pc);
    if (!hit) throw RenderDomain("summit line misses the bisector for these parameters");
    Point G = hit->point;
    if (s.kind == Kind::Spherical) {
        Point G2{-G.coords};
        if (distance(s, G2, F) < distance(s, G, F)) G = G2;
    }
    sc.add_segment(B, D, "geo");
    sc.add_segment(B, C, "geo");
    sc.add_segment(D, E, "geo");
    sc.add_segment(C, E, "geo");
    sc.add_segment(F, G, "aux");
    sc.add_right_angle_mark(B, line_tangent_at(s, baseline, B),
                            rotate90(s, B, line_tangent_at(s, baseline, B)));
    sc.add_right_angle_mark(D, line_tangent_at(s, baseline, D),
                            rotate90(s, D, line_tangent_at(s, baseline, D)));
    sc.add_point(B, "B");
    sc.add_point(C, "C");
    sc.add_point(D, "D");
    sc.add_point(E, "E");
    sc.add_point(F, "F");
    sc.add_point(G, "G");
    return sc.svg();
}

std::string fig6(const ojson& params) {
    SpaceForm s = space_from_params(params);
    Scene sc(s);
    FoldResult f = fold_lambert(s, p_num(params, "base"), p_num(params, "leg"));
    const SaccheriQuad& q = f.saccheri;
    sc.add_segment(q.P0, q.P1, "geo");
    sc.add_segment(q.P0, q.S0, "geo");
    sc.add_segment(q.P1, q.S1, "geo");
    sc.add_segment(q.S0, q.S1, "geo");
    // fold line through the midpoints of base and summit
    Point M = midpoint(s, q.P0, q.P1);
    Point N = midpoint(s, q.S0, q.S1);
    sc.add_segment(M, N, "aux");
    Vec3 base_t = direction(s, q.P0, q.P1).vec;
    sc.add_right_angle_mark(q.P0, base_t, direction(s, q.P0, q.S0).vec);
    sc.add_right_angle_mark(q.P1, -direction(s, q.P1, q.P0).vec, direction(s, q.P1, q.S1).vec);
    sc.add_right_angle_mark(M, direction(s, M, q.P1).vec, direction(s, M, N).vec);
    // labels as in the folded picture: right angles at the base corners c, C
    sc.add_point(q.P0, "c");
    sc.add_point(q.P1, "C");
    sc.add_point(q.S0, "d");
    sc.add_point(q.S1, "D");
    sc.add_point(M, "A");
    sc.add_point(N, "B");
    return sc.svg();
}

std::string fig7(const ojson& params) {
    SpaceForm s = space_from_params(params);
    if (s.kind != Kind::Hyperbolic) throw RenderDomain("fig7 shows a hyperbolic phenomenon");
    Scene sc(s);
    double h0 = p_num(params, "h0");
    std::vector<double> ts = p_list(params, "t");
    Point A = origin(s);
    TangentDir along = base_dir(s);
    Line base_ae = line_from(s, A, along.vec);
    Vec3 up = rotate90(s, A, along.vec);
    TangentDir riser{A, up};
    Point B = exp_map(s, riser, h0);
    Vec3 riser_at_b = exp_map_tangent(s, riser, h0).vec;
    Line line_bh = line_from(s, B, -rotate90(s, B, riser_at_b));

    double reach = 1.3 * *std::max_element(ts.begin(), ts.end());
    sc.add_segment(exp_map(s, along, -0.15 * reach), exp_map(s, along, 1.1 * reach), "geo");
    sc.add_segment(exp_map(s, line_bh.dir, -0.15 * reach), exp_map(s, line_bh.dir, 1.1 * reach),
                   "geo");
    sc.add_segment(A, B, "geo");
    sc.add_right_angle_mark(A, along.vec, up);
    sc.add_right_angle_mark(B, line_bh.dir.vec, -riser_at_b);
    const char* foot_names[] = {"E", "F", "G", "", "", "", "", ""};
    int idx = 0;
    for (double t : ts) {
        Point P = exp_map(s, along, t);
        Line erected = perpendicular_at(s, base_ae, P);
        // draw each perpendicular far enough to show whether it crosses BH
        double len = 2.2 * (h0 + 1.0);
        Vec3 dirv = erected.dir.vec;
        if (dot(dirv, up) < 0) dirv = -dirv;  // same side as B
        sc.add_segment(P, exp_map(s, TangentDir{P, dirv}, len), "aux");
        sc.add_point(P, idx < 8 ? foot_names[idx] : "");
        ++idx;
    }
    sc.add_point(A, "A");
    sc.add_point(B, "B");
    sc.add_point(exp_map(s, line_bh.dir, 1.05 * reach), "H");
    return sc.svg();
}

std::string fig_profile(const ojson& params) {
    SpaceForm s = space_from_params(params);
    Scene sc(s);
    double h0 = p_num(params, "h0");
    std::vector<double> ts = p_list(params, "t");
    PerpProfile prof = perpendicular_profile(s, h0, ts);
    Point A = origin(s);
    TangentDir along = base_dir(s);
    Line base = line_from(s, A, along.vec);
    Vec3 up = rotate90(s, A, along.vec);
    TangentDir riser{A, up};
    Point B = exp_map(s, riser, h0);
    Vec3 riser_at_b = exp_map_tangent(s, riser, h0).vec;
    TangentDir fwd{B, -rotate90(s, B, riser_at_b)};

    double reach = *std::max_element(ts.begin(), ts.end());
    sc.add_segment(exp_map(s, along, -0.1 * reach), exp_map(s, along, 1.15 * reach), "geo");
    sc.add_segment(exp_map(s, fwd, -0.1 * reach), exp_map(s, fwd, 1.05 * reach), "geo");
    sc.add_segment(A, B, "geo");
    sc.add_right_angle_mark(A, along.vec, up);
    for (const ProfileSample& smp : prof.samples) {
        Point P = exp_map(s, fwd, smp.t);
        FootResult fr = foot_of_perpendicular(s, P, base);
        if (fr.h > 1e-9) sc.add_segment(P, fr.foot, "aux");
    }
    sc.add_point(A, "A");
    sc.add_point(B, "B");
    return sc.svg();
}

}  // namespace

std::vector<std::string> figure_ids() {
    return {"fig1", "fig2", "fig3", "fig4", "fig6", "fig7", "profile"};
}

ojson default_figure_params(const std::string& id) {
    ojson hyp{{"kind", "hyperbolic"}, {"radius", 1.0}};
    if (id == "fig1")
        return ojson{{"space", hyp}, {"b", 0.9}, {"c", 1.2}, {"beyond", 0.9}, {"ext", 0.8}};
    if (id == "fig2")
        return ojson{{"space", hyp}, {"p", 1.0}, {"distances", {0.75, 1.5, 3.0, 6.0}}};
    if (id == "fig3")
        return ojson{{"space", ojson{{"kind", "euclidean"}}},
                     {"s", 1.0},
                     {"theta", 2 * kPi / 3},
                     {"n", 6}};
    if (id == "fig4") return ojson{{"space", hyp}, {"base", 1.6}, {"cb", 0.5}, {"de", 0.9}};
    if (id == "fig6") return ojson{{"space", hyp}, {"base", 1.6}, {"leg", 0.7}};
    if (id == "fig7")
        return ojson{{"space", hyp}, {"h0", 1.0}, {"t", {0.3, 0.55, 0.7, 0.85, 1.1}}};
    if (id == "profile")
        return ojson{{"space", ojson{{"kind", "spherical"}, {"radius", 1.0}}},
                     {"h0", kPi / 4},
                     {"t", {0.2, 0.4, 0.6, 0.8, 1.0, 1.2, 1.4}}};
    throw SchemaError("unknown figure id: " + id);
}

std::string render_figure(const std::string& id, const ojson& params) {
    ojson merged = default_figure_params(id);
    for (auto it = params.begin(); it != params.end(); ++it) merged[it.key()] = it.value();
    if (id == "fig1") return fig1(merged);
    if (id == "fig2") return fig2(merged);
    if (id == "fig3") return fig3(merged);
    if (id == "fig4") return fig4(merged);
    if (id == "fig6") return fig6(merged);
    if (id == "fig7") return fig7(merged);
    if (id == "profile") return fig_profile(merged);
    throw SchemaError("unknown figure id: " + id);
}

}  // namespace curvatura
