#include "arcrope/presentation_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <numeric>
#include <sstream>

#include "arcrope/errors.hpp"

namespace arcrope {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

bool parse_theta(const std::string& tok, double& theta,
                 std::optional<std::pair<long long, long long>>& fraction) {
    const auto slash = tok.find('/');
    if (slash != std::string::npos) {
        long long p = 0, q = 0;
        try {
            std::size_t used = 0;
            p = std::stoll(tok.substr(0, slash), &used);
            if (used != slash) return false;
            q = std::stoll(tok.substr(slash + 1), &used);
            if (used != tok.size() - slash - 1) return false;
        } catch (const std::exception&) {
            return false;
        }
        if (q <= 0 || p < 0 || p >= q) return false;
        const long long g = std::gcd(p, q);
        fraction = std::pair<long long, long long>{p / g, q / g};
        theta = kTau * static_cast<double>(fraction->first) / static_cast<double>(fraction->second);
        return true;
    }
    try {
        std::size_t used = 0;
        theta = std::stod(tok, &used);
        if (used != tok.size()) return false;
    } catch (const std::exception&) {
        return false;
    }
    if (theta < 0.0 || theta >= kTau) {
        theta = std::fmod(theta, kTau);
        if (theta < 0.0) theta += kTau;
    }
    fraction.reset();
    return true;
}

}  // namespace

ArcPresentation parse_presentation(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    int declared_alpha = -1;
    std::vector<ArcTriple> arcs;

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;          // blank
        if (first.front() == '#') continue;    // comment

        if (!header_seen) {
            if (first != "arcpres") {
                throw ParseError(line_no, "expected header 'arcpres alpha=<n>'");
            }
            std::string field;
            if (!(ls >> field) || field.rfind("alpha=", 0) != 0) {
                throw ParseError(line_no, "expected 'alpha=<n>' after 'arcpres'");
            }
            try {
                declared_alpha = std::stoi(field.substr(6));
            } catch (const std::exception&) {
                throw ParseError(line_no, "bad alpha value '" + field.substr(6) + "'");
            }
            header_seen = true;
            continue;
        }

        ArcTriple arc;
        std::string theta_tok;
        try {
            arc.x = std::stoi(first);
        } catch (const std::exception&) {
            throw ParseError(line_no, "bad level '" + first + "'");
        }
        if (!(ls >> arc.y >> theta_tok)) {
            throw ParseError(line_no, "expected '<x> <y> <theta>'");
        }
        if (!parse_theta(theta_tok, arc.theta, arc.theta_fraction)) {
            throw ParseError(line_no, "bad page angle '" + theta_tok +
                                          "' (decimal radians or fraction p/q of a turn)");
        }
        std::string extra;
        if (ls >> extra) {
            throw ParseError(line_no, "trailing data '" + extra + "'");
        }
        arcs.push_back(arc);
    }

    if (!header_seen) {
        throw ParseError(0, "empty presentation file");
    }
    if (declared_alpha != static_cast<int>(arcs.size())) {
        throw ParseError(0, "header declares alpha=" + std::to_string(declared_alpha) +
                                " but file has " + std::to_string(arcs.size()) + " arcs");
    }
    return validate(std::move(arcs));
}

std::string emit_presentation(const ArcPresentation& a) {
    std::ostringstream out;
    out << "arcpres alpha=" << a.alpha() << '\n';
    char buf[64];
    for (const ArcTriple& arc : a.arcs) {
        out << arc.x << ' ' << arc.y << ' ';
        if (arc.theta_fraction) {
            out << arc.theta_fraction->first << '/' << arc.theta_fraction->second;
        } else {
            std::snprintf(buf, sizeof(buf), "%.17g", arc.theta);
            out << buf;
        }
        out << '\n';
    }
    return out.str();
}

ArcPresentation load_presentation(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(0, "cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_presentation(buf.str());
}

void save_presentation(const ArcPresentation& a, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw ParseError(0, "cannot write '" + path + "'");
    }
    out << emit_presentation(a);
}

}  // namespace arcrope
