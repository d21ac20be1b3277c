#include "simpmap/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace simpmap {

namespace {

constexpr const char* filtration_header = "# simpfilt v1";

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_real(const std::string& tok, int line) {
    if (tok == "inf") return infinite_death;
    std::size_t used = 0;
    double val = 0.0;
    try {
        val = std::stod(tok, &used);
    } catch (const std::exception&) {
        throw parse_error(line, "expected a number, got '" + tok + "'");
    }
    if (used != tok.size()) throw parse_error(line, "trailing junk in number '" + tok + "'");
    return val;
}

int parse_int(const std::string& tok, int line) {
    std::size_t used = 0;
    long val = 0;
    try {
        val = std::stol(tok, &used);
    } catch (const std::exception&) {
        throw parse_error(line, "expected an integer, got '" + tok + "'");
    }
    if (used != tok.size()) throw parse_error(line, "trailing junk in integer '" + tok + "'");
    return static_cast<int>(val);
}

std::vector<std::string> tokens(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_parameter("cannot open " + path);
    return in;
}

}  // namespace

std::string format_grade(double g) {
    if (std::isinf(g)) return "inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", g);
    return buf;
}

filtration parse_filtration(std::istream& in) {
    filtration f;
    std::string raw;
    int line = 0;
    bool header_seen = false;
    bool grade_set = false;
    double grade = 0.0;
    int auto_grade = 0;

    while (std::getline(in, raw)) {
        ++line;
        const std::string s = trim(raw);
        if (!header_seen) {
            if (s != filtration_header)
                throw parse_error(line, std::string("expected header '") + filtration_header + "'");
            header_seen = true;
            continue;
        }
        if (s.empty() || s[0] == '#') continue;

        const auto tok = tokens(s);
        if (tok[0] == "t") {
            if (tok.size() != 2) throw parse_error(line, "'t' takes exactly one grade");
            const double g = parse_real(tok[1], line);
            if (!std::isfinite(g)) throw parse_error(line, "grade must be finite");
            if ((grade_set && g < grade) || (!grade_set && auto_grade > 0 && g < auto_grade))
                throw parse_error(line, "grades must be non-decreasing");
            grade = g;
            grade_set = true;
        } else if (tok[0] == "i") {
            if (tok.size() < 2) throw parse_error(line, "'i' needs at least one vertex");
            std::vector<vertex_id> vs;
            for (std::size_t i = 1; i < tok.size(); ++i) {
                const int v = parse_int(tok[i], line);
                if (v < 0) throw parse_error(line, "vertex ids are nonnegative");
                vs.push_back(v);
            }
            simplex sigma;
            try {
                sigma = simplex(std::move(vs));
            } catch (const invalid_parameter& e) {
                throw parse_error(line, e.what());
            }
            const double g = grade_set ? grade : static_cast<double>(++auto_grade);
            f.ops.push_back(elementary_op::make_insert(std::move(sigma), g));
        } else if (tok[0] == "c") {
            if (tok.size() != 3) throw parse_error(line, "'c' takes exactly two vertices");
            const int u = parse_int(tok[1], line);
            const int v = parse_int(tok[2], line);
            if (u < 0 || v < 0) throw parse_error(line, "vertex ids are nonnegative");
            if (u == v) throw parse_error(line, "collapse needs two distinct vertices");
            const double g = grade_set ? grade : static_cast<double>(++auto_grade);
            f.ops.push_back(elementary_op::make_collapse(u, v, g));
        } else {
            throw parse_error(line, "unknown directive '" + tok[0] + "'");
        }
    }
    // a file with no content at all parses as the empty filtration
    return f;
}

void write_filtration(std::ostream& out, const filtration& f) {
    out << filtration_header << '\n';
    bool grade_set = false;
    double grade = 0.0;
    for (const auto& op : f.ops) {
        if (!grade_set || op.grade != grade) {
            out << "t " << format_grade(op.grade) << '\n';
            grade = op.grade;
            grade_set = true;
        }
        if (op.is_insert()) {
            out << 'i';
            for (vertex_id v : op.sigma) out << ' ' << v;
            out << '\n';
        } else {
            out << 'c' << ' ' << op.u << ' ' << op.v << '\n';
        }
    }
}

persistence_diagram parse_diagram(std::istream& in) {
    persistence_diagram d;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::string s = trim(raw);
        if (s.empty() || s[0] == '#') continue;
        const auto tok = tokens(s);
        if (tok.size() != 3) throw parse_error(line, "expected 'dim birth death'");
        const int dim = parse_int(tok[0], line);
        if (dim < 0) throw parse_error(line, "dimension is nonnegative");
        const double birth = parse_real(tok[1], line);
        const double death = parse_real(tok[2], line);
        if (!std::isfinite(birth)) throw parse_error(line, "birth must be finite");
        if (std::isnan(death)) throw parse_error(line, "death must be a number");
        if (death < birth) throw parse_error(line, "death precedes birth");
        d.add(dim, birth, death);
    }
    return d;
}

void write_diagram(std::ostream& out, const persistence_diagram& d) {
    persistence_diagram sorted = d;
    sorted.sort();
    for (const auto& p : sorted.pairs)
        out << p.dim << ' ' << format_grade(p.birth) << ' ' << format_grade(p.death) << '\n';
}

point_cloud parse_points(std::istream& in) {
    point_cloud cloud;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::string s = trim(raw);
        if (s.empty() || s[0] == '#') continue;
        const auto tok = tokens(s);
        std::vector<double> coords;
        coords.reserve(tok.size());
        for (const auto& t : tok) {
            const double c = parse_real(t, line);
            if (!std::isfinite(c)) throw parse_error(line, "coordinates must be finite");
            coords.push_back(c);
        }
        if (!cloud.points.empty() && coords.size() != cloud.points[0].size())
            throw parse_error(line, "points must share one dimension");
        cloud.points.push_back(std::move(coords));
    }
    return cloud;
}

filtration load_filtration(const std::string& path) {
    auto in = open_in(path);
    return parse_filtration(in);
}

persistence_diagram load_diagram(const std::string& path) {
    auto in = open_in(path);
    return parse_diagram(in);
}

point_cloud load_points(const std::string& path) {
    auto in = open_in(path);
    return parse_points(in);
}

void save_filtration(const std::string& path, const filtration& f) {
    std::ofstream out(path);
    if (!out) throw invalid_parameter("cannot write " + path);
    write_filtration(out, f);
}

void save_diagram(const std::string& path, const persistence_diagram& d) {
    std::ofstream out(path);
    if (!out) throw invalid_parameter("cannot write " + path);
    write_diagram(out, d);
}

}  // namespace simpmap
