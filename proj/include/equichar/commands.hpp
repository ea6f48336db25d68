#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "equichar/io.hpp"

namespace equichar {

enum class Verdict { Ok = 0, Negative = 1 };

/// Human-readable text plus one JSON document with "schema": "equichar/1".
struct Report {
    Verdict verdict = Verdict::Ok;
    std::string text;
    std::string json;
};

struct CommandOptions {
    std::optional<ComplexFile> complex;
    std::optional<GroupFile> group;
    std::optional<ComplexFile> pattern;
    std::optional<std::int64_t> p, q, m, n;
    bool force = false;
};

const std::vector<std::string>& command_names();

/// Runs one subcommand. Missing or unusable options raise InputError;
/// mathematical preconditions raise PreconditionError.
Report run_command(const std::string& name, const CommandOptions& opt);

} // namespace equichar
