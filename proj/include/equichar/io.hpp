#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "equichar/action.hpp"
#include "equichar/group.hpp"
#include "equichar/simplicial.hpp"

namespace equichar {

/// A complex file: either maximal simplices or a graph whose flag
/// complex is meant.
struct ComplexFile {
    std::string name;
    SimplicialComplex complex;
    bool flag_mode = false;
};

/// {"name", "vertices", "maximal_simplices"} or
/// {"name", "vertices", "graph_edges", "flag": true}. Numeric vertex names
/// are read as strings. Throws InputError on malformed input.
ComplexFile parse_complex_json(const std::string& text);
ComplexFile load_complex_file(const std::string& path);

/// Writes the maximal-simplex form, vertices in complex order.
std::string complex_to_json(const std::string& name, const SimplicialComplex& x);

/// {"name", "p"?, "points"?, "generators": ["(1 2)(3 4)", ...]}.
struct GroupFile {
    std::string name;
    std::optional<std::int64_t> p;
    std::optional<std::vector<std::string>> points;
    std::vector<std::string> generators;
};

GroupFile parse_group_json(const std::string& text);
GroupFile load_group_file(const std::string& path);

/// Points named in cycle strings, in order of first appearance.
std::vector<std::string> points_in_cycles(const std::vector<std::string>& cycles);

/// Group on the file's "points", or on the points its generators mention
/// when the field is absent. Checks the declared prime if any
/// (PreconditionError when the order is not a power of it).
FiniteGroup build_group(const GroupFile& g);

/// Group acting on the vertices of the complex. Declared points must be
/// vertices; unnamed vertices are fixed.
GroupAction build_action(const ComplexFile& x, const GroupFile& g);

std::string read_text_file(const std::string& path);

} // namespace equichar
