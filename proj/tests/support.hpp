#pragma once

#include <random>
#include <string>

#include "equichar/action.hpp"
#include "equichar/io.hpp"

namespace equichar::testing {

inline std::string corpus(const std::string& rel) { return std::string(EQUICHAR_CORPUS_DIR) + "/" + rel; }

inline SimplicialComplex complex_named(const std::string& name) {
    return load_complex_file(corpus("complexes/" + name + ".json")).complex;
}

inline FiniteGroup group_named(const std::string& name) {
    return build_group(load_group_file(corpus("groups/" + name + ".json")));
}

inline GroupAction action_of(const std::string& complex, const std::string& group) {
    return build_action(load_complex_file(corpus("complexes/" + complex + ".json")),
                        load_group_file(corpus("groups/" + group + ".json")));
}

// Fixed seed: failures must reproduce.
inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(20240611);
    return gen;
}

} // namespace equichar::testing
