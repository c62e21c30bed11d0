#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "palab/instance.hpp"

namespace palab {

/// Instance file format, exactly:
///   {"d": int, "p": float, "points": [[float, ...], ...]}
/// Numbers are serialized with 17 significant digits, so a save/load round
/// trip reproduces every coordinate bit-exactly.
std::string instance_to_json(const Instance& inst);

/// Parses and validates; `context` names the source (file name) in errors.
Instance instance_from_json(std::string_view text, std::string_view context);

void save_instance(const Instance& inst, const std::filesystem::path& path);
Instance load_instance(const std::filesystem::path& path);

}  // namespace palab
