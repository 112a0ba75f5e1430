#include "arcrope/curve_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "arcrope/errors.hpp"

namespace arcrope {

namespace {

void append_number(std::string& out, double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out += ' ';
    out += buf;
}

}  // namespace

std::string emit_curve(const PiecewiseCurve& c) {
    std::string out = "curve closed=" + std::string(c.closed ? "1" : "0") +
                      " pieces=" + std::to_string(c.pieces.size()) + "\n";
    for (const CurvePiece& p : c.pieces) {
        if (const auto* seg = std::get_if<LineSegment>(&p)) {
            out += "seg";
            for (double v : {seg->start.x, seg->start.y, seg->start.z, seg->end.x, seg->end.y,
                             seg->end.z}) {
                append_number(out, v);
            }
        } else {
            const auto& arc = std::get<CircularArc>(p);
            out += "arc";
            for (double v : {arc.center.x, arc.center.y, arc.center.z, arc.normal.x,
                             arc.normal.y, arc.normal.z, arc.start.x, arc.start.y, arc.start.z,
                             arc.sweep}) {
                append_number(out, v);
            }
        }
        out += '\n';
    }
    return out;
}

std::string emit_curves(const std::vector<PiecewiseCurve>& curves) {
    std::string out;
    for (const PiecewiseCurve& c : curves) out += emit_curve(c);
    return out;
}

std::vector<PiecewiseCurve> parse_curves(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    std::vector<PiecewiseCurve> curves;
    long long remaining = 0;

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind)) continue;
        if (kind.front() == '#') continue;

        if (kind == "curve") {
            if (remaining > 0) {
                throw ParseError(line_no, "previous curve block is incomplete");
            }
            std::string closed_field, pieces_field;
            if (!(ls >> closed_field >> pieces_field) ||
                closed_field.rfind("closed=", 0) != 0 || pieces_field.rfind("pieces=", 0) != 0) {
                throw ParseError(line_no, "expected 'curve closed=<0|1> pieces=<n>'");
            }
            PiecewiseCurve c;
            c.closed = closed_field.substr(7) == "1";
            try {
                remaining = std::stoll(pieces_field.substr(7));
            } catch (const std::exception&) {
                throw ParseError(line_no, "bad piece count");
            }
            curves.push_back(std::move(c));
            continue;
        }

        if (curves.empty() || remaining <= 0) {
            throw ParseError(line_no, "piece record outside a curve block");
        }
        if (kind == "seg") {
            LineSegment seg;
            if (!(ls >> seg.start.x >> seg.start.y >> seg.start.z >> seg.end.x >> seg.end.y >>
                  seg.end.z)) {
                throw ParseError(line_no, "bad seg record (want 6 numbers)");
            }
            curves.back().pieces.push_back(seg);
        } else if (kind == "arc") {
            CircularArc arc;
            if (!(ls >> arc.center.x >> arc.center.y >> arc.center.z >> arc.normal.x >>
                  arc.normal.y >> arc.normal.z >> arc.start.x >> arc.start.y >> arc.start.z >>
                  arc.sweep)) {
                throw ParseError(line_no, "bad arc record (want 10 numbers)");
            }
            curves.back().pieces.push_back(arc);
        } else {
            throw ParseError(line_no, "unknown record '" + kind + "'");
        }
        --remaining;
    }

    if (remaining > 0) {
        throw ParseError(0, "last curve block is incomplete");
    }
    if (curves.empty()) {
        throw ParseError(0, "no curves in input");
    }
    return curves;
}

PiecewiseCurve parse_single_curve(const std::string& text) {
    std::vector<PiecewiseCurve> curves = parse_curves(text);
    if (curves.size() != 1) {
        throw ParseError(0, "expected exactly one curve, found " + std::to_string(curves.size()));
    }
    return std::move(curves.front());
}

std::vector<PiecewiseCurve> load_curves(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(0, "cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_curves(buf.str());
}

void save_curves(const std::vector<PiecewiseCurve>& curves, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw ParseError(0, "cannot write '" + path + "'");
    }
    out << emit_curves(curves);
}

}  // namespace arcrope
