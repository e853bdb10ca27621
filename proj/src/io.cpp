#include "kshadow/io.h"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace kshadow {

namespace {

using nlohmann::json;

json scalar_json(const Scalar& s) {
    if (s.is_integer()) {
        mpz_class n = s.numerator();
        if (n.fits_slong_p()) return static_cast<long>(n.get_si());
    }
    return s.str();
}

Scalar scalar_from_json(const json& v, const std::string& what) {
    if (v.is_number_integer()) return Scalar(static_cast<long long>(v.get<long long>()));
    if (v.is_number_unsigned()) {
        auto parsed = Scalar::parse(std::to_string(v.get<unsigned long long>()));
        if (parsed) return *parsed;
    }
    if (v.is_number_float())
        throw std::invalid_argument(what +
                                    ": decimal coordinates must be strings like \"2.25\", "
                                    "not JSON floats");
    if (v.is_string()) {
        auto parsed = Scalar::parse(v.get<std::string>());
        if (parsed) return *parsed;
        throw std::invalid_argument(what + ": cannot parse \"" + v.get<std::string>() +
                                    "\" as an exact number");
    }
    throw std::invalid_argument(what + ": expected an integer or a number string");
}

json point_json(const Point2& p) { return json::array({scalar_json(p.x), scalar_json(p.y)}); }

Point2 point_from_json(const json& v, const std::string& what) {
    if (!v.is_array() || v.size() != 2)
        throw std::invalid_argument(what + ": expected a [x, y] pair");
    return Point2{scalar_from_json(v[0], what + " x"), scalar_from_json(v[1], what + " y")};
}

json segment_json(const Segment& s) {
    return json{{"a", point_json(s.a)}, {"b", point_json(s.b)}};
}

const char* tag_name(BoundaryTag t) {
    switch (t) {
        case BoundaryTag::Wall: return "wall";
        case BoundaryTag::Window: return "window";
        case BoundaryTag::Internal: return "internal";
    }
    return "?";
}

const char* kind_name(ShadowKind k) {
    return k == ShadowKind::VertexShadow ? "vertex" : "edge";
}

const char* event_name(ShadowEvent::Type t) {
    switch (t) {
        case ShadowEvent::Type::Appear: return "appear";
        case ShadowEvent::Type::Disappear: return "disappear";
        case ShadowEvent::Type::Merge: return "merge";
        case ShadowEvent::Type::Split: return "split";
    }
    return "?";
}

json face_json(const RegionFace& f) {
    json cycle = json::array();
    for (const Point2& p : f.cycle) cycle.push_back(point_json(p));
    json tags = json::array();
    for (BoundaryTag t : f.tags) tags.push_back(tag_name(t));
    return json{{"cycle", cycle}, {"tags", tags}};
}

std::string dump_doc(const json& doc) { return doc.dump(2) + "\n"; }

std::vector<Point2> cell_cycle(const CellDecomposition& D, int cell) {
    std::vector<Point2> pts;
    for (int h : D.arr.faces[cell].outer) pts.push_back(D.arr.half_segment(h).a);
    return pts;
}

}  // namespace

SimplePolygon polygon_from_json(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw std::invalid_argument("polygon file is not valid JSON");
    if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
        throw std::invalid_argument("polygon file needs a \"vertices\" array");
    std::vector<Point2> pts;
    int i = 0;
    for (const json& v : doc["vertices"]) {
        pts.push_back(point_from_json(v, "vertex " + std::to_string(i)));
        ++i;
    }
    std::string name;
    if (doc.contains("name")) {
        if (!doc["name"].is_string())
            throw std::invalid_argument("polygon \"name\" must be a string");
        name = doc["name"].get<std::string>();
    }
    ValidationResult vr = validate_polygon(std::move(pts), std::move(name));
    if (!vr.ok()) throw std::invalid_argument("invalid polygon: " + vr.issue->describe());
    return *vr.polygon;
}

std::string polygon_to_json(const SimplePolygon& P) {
    json doc;
    if (!P.name.empty()) doc["name"] = P.name;
    json vs = json::array();
    for (int i = 0; i < P.n(); ++i) vs.push_back(point_json(P.vertex(i)));
    doc["vertices"] = vs;
    return dump_doc(doc);
}

SimplePolygon load_polygon_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read polygon file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return polygon_from_json(buf.str());
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
    if (!out) throw std::runtime_error("failed writing file: " + path);
}

std::string region_to_json(const VisibilityRegion& R, const std::vector<Shadow>& shadows) {
    json doc;
    doc["k"] = R.k;
    doc["source"] = point_json(R.source);
    doc["area"] = scalar_json(R.area);
    json faces = json::array();
    for (const RegionFace& f : R.faces) faces.push_back(face_json(f));
    doc["faces"] = faces;
    json windows = json::array();
    for (const Segment& w : R.windows) windows.push_back(segment_json(w));
    doc["windows"] = windows;
    json items = json::array();
    for (const Shadow& s : shadows) {
        items.push_back(json{{"kind", kind_name(s.kind)},
                             {"area", scalar_json(s.area)},
                             {"features", s.features}});
    }
    doc["shadows"] = json{{"count", shadows.size()}, {"items", items}};
    return dump_doc(doc);
}

std::string decomposition_to_json(const CellDecomposition& D) {
    DecompositionStats st = decomposition_stats(D);
    json doc;
    doc["name"] = D.polygon.name;
    doc["n"] = st.n;
    doc["k"] = st.k;
    doc["segment_count"] = st.segment_count;
    doc["vertex_count"] = st.vertex_count;
    doc["cell_count"] = st.cell_count;
    json segs = json::array();
    for (const PartitionSegment& s : D.segments) {
        json e = segment_json(s.seg);
        e["source_vertex"] = s.source_vertex;
        e["level"] = s.level;
        segs.push_back(e);
    }
    doc["segments"] = segs;
    json cells = json::array();
    for (int f = 0; f < static_cast<int>(D.arr.faces.size()); ++f) {
        json cycle = json::array();
        for (const Point2& p : cell_cycle(D, f)) cycle.push_back(point_json(p));
        cells.push_back(json{{"id", f}, {"area", scalar_json(D.arr.faces[f].area)},
                             {"cycle", cycle}});
    }
    doc["cells"] = cells;
    return dump_doc(doc);
}

std::string invariance_to_json(const CellDecomposition& D, const InvarianceReport& report,
                               int samples_per_cell, uint64_t seed) {
    json doc;
    doc["name"] = D.polygon.name;
    doc["n"] = D.polygon.n();
    doc["k"] = D.k;
    doc["samples_per_cell"] = samples_per_cell;
    doc["seed"] = seed;
    doc["all_pass"] = report.all_pass;
    doc["cells_checked"] = report.cells_checked;
    doc["signatures_compared"] = report.signatures_compared;
    json failures = json::array();
    for (const InvarianceCellReport& c : report.cells) {
        if (c.pass) continue;
        failures.push_back(json{{"cell", c.cell},
                                {"samples", c.samples},
                                {"duplicate_features", c.duplicate_features},
                                {"witness_a", point_json(c.witness_a)},
                                {"witness_b", point_json(c.witness_b)}});
    }
    doc["failures"] = failures;
    return dump_doc(doc);
}

std::string plan_to_json(const CellDecomposition& D, const Plan& plan,
                         const ReplayReport& replay) {
    json doc;
    doc["name"] = D.polygon.name;
    doc["k"] = D.k;
    doc["length"] = plan.cells.size();
    doc["cells"] = plan.cells;
    json wps = json::array();
    for (const Point2& p : plan.waypoints) wps.push_back(point_json(p));
    doc["waypoints"] = wps;
    json steps = json::array();
    for (const ReplayStep& st : replay.steps) {
        json events = json::array();
        for (const ShadowEvent& e : st.events) {
            events.push_back(json{{"type", event_name(e.type)},
                                  {"old", e.old_indices},
                                  {"new", e.new_indices}});
        }
        steps.push_back(json{{"from", st.from_cell},
                             {"to", st.to_cell},
                             {"events", events},
                             {"ambiguous", st.ambiguous},
                             {"contaminated", st.contaminated}});
    }
    doc["replay"] = json{{"pass", replay.pass},
                         {"final_contamination", replay.final_contamination},
                         {"steps", steps}};
    return dump_doc(doc);
}

namespace {

// Shared scaffolding for the SVG emitters: fixed-precision coordinates with
// y flipped into screen orientation, inside a viewBox padded around the
// polygon's bounding box.
struct Canvas {
    Scalar xmin, ymin, xmax, ymax, pad, flip_sum;

    explicit Canvas(const SimplePolygon& P) {
        BBox bb = P.bbox();
        xmin = bb.xmin;
        ymin = bb.ymin;
        xmax = bb.xmax;
        ymax = bb.ymax;
        Scalar span = max(xmax - xmin, ymax - ymin);
        pad = span / Scalar(20) + Scalar(1, 2);
        flip_sum = ymin + ymax;
    }

    std::string sx(const Scalar& x) const { return x.decimal(6); }
    std::string sy(const Scalar& y) const { return (flip_sum - y).decimal(6); }
    std::string at(const Point2& p) const { return sx(p.x) + "," + sy(p.y); }
    double unit() const {
        double s = (max(xmax - xmin, ymax - ymin)).approx();
        return s > 0 ? s / 200.0 : 0.01;
    }

    std::string header(int frames = 1) const {
        Scalar w = xmax - xmin + pad * Scalar(2);
        Scalar h = ymax - ymin + pad * Scalar(2);
        std::ostringstream out;
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
            << (xmin - pad).decimal(6) << " " << (ymin - pad).decimal(6) << " " << w.decimal(6)
            << " " << (h * Scalar(frames)).decimal(6) << "\">\n";
        return out.str();
    }
    std::string frame_shift(int i) const {
        Scalar h = ymax - ymin + pad * Scalar(2);
        return (h * Scalar(i)).decimal(6);
    }
};

std::string path_of(const Canvas& cv, const std::vector<Point2>& cycle) {
    std::ostringstream out;
    for (size_t i = 0; i < cycle.size(); ++i)
        out << (i == 0 ? "M" : " L") << cv.at(cycle[i]);
    out << " Z";
    return out.str();
}

std::string polygon_path(const Canvas& cv, const SimplePolygon& P) {
    std::vector<Point2> cyc;
    for (int i = 0; i < P.n(); ++i) cyc.push_back(P.vertex(i));
    return path_of(cv, cyc);
}

void emit_shadow(std::ostringstream& out, const Canvas& cv, const Shadow& s,
                 const std::string& fill) {
    for (const RegionFace& f : s.faces)
        out << "  <path d=\"" << path_of(cv, f.cycle) << "\" fill=\"" << fill
            << "\" stroke=\"none\"/>\n";
}

void emit_boundary(std::ostringstream& out, const Canvas& cv, const SimplePolygon& P) {
    out << "  <path d=\"" << polygon_path(cv, P) << "\" fill=\"none\" stroke=\"black\""
        << " stroke-width=\"" << 2.0 * cv.unit() << "\"/>\n";
}

// Maps each concrete shadow to its slot in the canonically sorted signature;
// duplicate entries claim slots in order.
std::vector<int> shadow_slots(const std::vector<Shadow>& shadows, const ShadowSignature& sig) {
    std::vector<int> slot(shadows.size(), -1);
    std::vector<char> used(sig.shadows.size(), 0);
    for (size_t i = 0; i < shadows.size(); ++i) {
        for (size_t j = 0; j < sig.shadows.size(); ++j) {
            if (used[j]) continue;
            if (sig.shadows[j].first == shadows[i].kind &&
                sig.shadows[j].second == shadows[i].features) {
                slot[i] = static_cast<int>(j);
                used[j] = 1;
                break;
            }
        }
    }
    return slot;
}

}  // namespace

std::string region_to_svg(const SimplePolygon& P, const VisibilityRegion& R,
                          const std::vector<Shadow>& shadows) {
    Canvas cv(P);
    std::ostringstream out;
    out << cv.header();
    for (const RegionFace& f : R.faces)
        out << "  <path d=\"" << path_of(cv, f.cycle)
            << "\" fill=\"#cfe3f7\" stroke=\"none\"/>\n";
    for (const Shadow& s : shadows) emit_shadow(out, cv, s, "#5b5b6e");
    for (const Segment& w : R.windows)
        out << "  <line x1=\"" << cv.sx(w.a.x) << "\" y1=\"" << cv.sy(w.a.y) << "\" x2=\""
            << cv.sx(w.b.x) << "\" y2=\"" << cv.sy(w.b.y)
            << "\" stroke=\"#1f6fb2\" stroke-width=\"" << 1.2 * cv.unit()
            << "\" stroke-dasharray=\"" << 3.0 * cv.unit() << " " << 2.0 * cv.unit()
            << "\"/>\n";
    emit_boundary(out, cv, P);
    out << "  <circle cx=\"" << cv.sx(R.source.x) << "\" cy=\"" << cv.sy(R.source.y)
        << "\" r=\"" << 3.0 * cv.unit() << "\" fill=\"#c22\"/>\n";
    out << "</svg>\n";
    return out.str();
}

std::string decomposition_to_svg(const CellDecomposition& D) {
    Canvas cv(D.polygon);
    std::ostringstream out;
    out << cv.header();
    for (int f = 0; f < static_cast<int>(D.arr.faces.size()); ++f) {
        int hue = (f * 47) % 360;
        out << "  <path d=\"" << path_of(cv, cell_cycle(D, f)) << "\" fill=\"hsl(" << hue
            << ",55%,82%)\" stroke=\"none\"/>\n";
    }
    for (const PartitionSegment& s : D.segments)
        out << "  <line x1=\"" << cv.sx(s.seg.a.x) << "\" y1=\"" << cv.sy(s.seg.a.y)
            << "\" x2=\"" << cv.sx(s.seg.b.x) << "\" y2=\"" << cv.sy(s.seg.b.y)
            << "\" stroke=\"#444\" stroke-width=\"" << 1.0 * cv.unit() << "\"/>\n";
    emit_boundary(out, cv, D.polygon);
    out << "</svg>\n";
    return out.str();
}

std::string plan_to_svg(const CellDecomposition& D, const Plan& plan,
                        const ReplayReport& replay) {
    Canvas cv(D.polygon);
    int frames = static_cast<int>(plan.cells.size());
    std::ostringstream out;
    out << cv.header(frames > 0 ? frames : 1);
    out << "  <defs><pattern id=\"dirty\" width=\"" << 4.0 * cv.unit() << "\" height=\""
        << 4.0 * cv.unit() << "\" patternUnits=\"userSpaceOnUse\"><path d=\"M0," << 4.0 * cv.unit()
        << " L" << 4.0 * cv.unit() << ",0\" stroke=\"#b02020\" stroke-width=\"" << 1.0 * cv.unit()
        << "\"/></pattern></defs>\n";
    for (int i = 0; i < frames; ++i) {
        out << "  <g transform=\"translate(0 " << cv.frame_shift(i) << ")\">\n";
        const Point2& wp = plan.waypoints[i];
        std::vector<Shadow> shadows = shadows_of(D.polygon, wp, D.k);
        ShadowSignature sig = shadow_signature(D.polygon, wp, D.k);
        std::vector<int> slot = shadow_slots(shadows, sig);
        uint64_t mask;
        if (i == 0) {
            mask = sig.shadows.empty() ? 0 : ~uint64_t(0) >> (64 - sig.shadows.size());
        } else if (i - 1 < static_cast<int>(replay.steps.size())) {
            mask = replay.steps[i - 1].contaminated;
        } else {
            mask = 0;  // replay ended early; later frames show clean geometry
        }
        for (size_t s = 0; s < shadows.size(); ++s) {
            bool dirty = slot[s] >= 0 && (mask >> slot[s]) & 1;
            emit_shadow(out, cv, shadows[s], dirty ? "url(#dirty)" : "#9fb79f");
        }
        emit_boundary(out, cv, D.polygon);
        out << "    <circle cx=\"" << cv.sx(wp.x) << "\" cy=\"" << cv.sy(wp.y) << "\" r=\""
            << 3.0 * cv.unit() << "\" fill=\"#c22\"/>\n";
        out << "  </g>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string bench_csv_header() { return "n,k,segments,vertices,cells,wall_ms\n"; }

std::string bench_csv_row(const DecompositionStats& stats, long wall_ms) {
    std::ostringstream out;
    out << stats.n << "," << stats.k << "," << stats.segment_count << "," << stats.vertex_count
        << "," << stats.cell_count << "," << wall_ms << "\n";
    return out.str();
}

}  // namespace kshadow
