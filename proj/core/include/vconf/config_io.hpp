#pragma once

#include <filesystem>
#include <string>

#include "vconf/cluster_partitions.hpp"
#include "vconf/geometry.hpp"

namespace vconf {

// {"p": int, "q": int, "clusters": [{"points": [[coord, ...], ...]}, ...]}
// A coordinate is a JSON integer, an "a/b" string or a decimal string.
// Malformed documents raise ParseError; geometric violations keep their own
// codes (VerticalityViolation, CollisionError, ...).
VerticalConfiguration parse_configuration(const std::string& json_text);
VerticalConfiguration load_configuration(const std::filesystem::path& path);
std::string configuration_to_json(const VerticalConfiguration& config);

// {"p": int, "k": int, "points": [{"y": [...], "partition": [[int, ...], ...],
// "xi": [[coord, ...], ...]}]}; partitions must be irreducible.
LabeledConfiguration parse_labeled_configuration(const std::string& json_text);
LabeledConfiguration load_labeled_configuration(const std::filesystem::path& path);
std::string labeled_configuration_to_json(const LabeledConfiguration& theta);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace vconf
