#pragma once

#include <stdexcept>
#include <string>

namespace simpmap {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// complex
struct missing_face : error { using error::error; };
struct duplicate_simplex : error { using error::error; };
struct not_in_complex : error { using error::error; };

// annotation
struct unknown_simplex : error { using error::error; };
struct zero_vector : error { using error::error; };
struct not_a_face : error { using error::error; };

// engine
struct dead_vertex : error { using error::error; };
struct same_vertex : error { using error::error; };
struct retired_vertex : error { using error::error; };
struct not_simplicial : error { using error::error; };

// oracle
struct not_inclusion_only : error { using error::error; };

// diagram
struct nonpositive_coordinate : error { using error::error; };

// io / cli
struct invalid_parameter : error { using error::error; };

struct parse_error : error {
    int line;
    parse_error(int line_no, const std::string& what)
        : error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

}  // namespace simpmap
