#pragma once

#include <iosfwd>
#include <string>

#include "simpmap/diagram.hpp"
#include "simpmap/filtration.hpp"
#include "simpmap/tda.hpp"

namespace simpmap {

// Filtration files ("simpfilt v1"): a `# simpfilt v1` header, then one
// directive per line. `t <grade>` sets the current grade (non-decreasing),
// `i v0 v1 ... vk` inserts a simplex, `c u v` collapses (u,v) onto u. Files
// without any `t` line grade the k-th op as the integer k, starting at 1.
filtration parse_filtration(std::istream& in);            // parse_error
void write_filtration(std::ostream& out, const filtration& f);

// Diagram files: `dim birth death` per line, `inf` for essential deaths,
// nine significant digits, sorted by (dim, birth, death).
persistence_diagram parse_diagram(std::istream& in);       // parse_error
void write_diagram(std::ostream& out, const persistence_diagram& d);

// Point files: one point per line, whitespace-separated reals, uniform
// dimension. Blank lines and `#` comments are skipped.
point_cloud parse_points(std::istream& in);                // parse_error

filtration load_filtration(const std::string& path);
persistence_diagram load_diagram(const std::string& path);
point_cloud load_points(const std::string& path);
void save_filtration(const std::string& path, const filtration& f);
void save_diagram(const std::string& path, const persistence_diagram& d);

std::string format_grade(double g);  // %.9g with an `inf` token

}  // namespace simpmap
