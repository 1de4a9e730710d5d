#pragma once

#include <filesystem>

#include <json.hpp>

#include "openspace/pipeline.hpp"

namespace openspace::config {

/// Full configuration as JSON; every key that apply_json understands.
nlohmann::ordered_json to_json(const pipeline::PipelineConfig& cfg);

/// Overwrites the fields named in `doc`; absent keys keep their current
/// values. Unknown keys, wrong types and invalid values throw Error naming
/// the offending key path.
void apply_json(pipeline::PipelineConfig& cfg, const nlohmann::json& doc);

/// Built-in defaults overridden by the file's contents.
pipeline::PipelineConfig load_config(const std::filesystem::path& path);

}  // namespace openspace::config
