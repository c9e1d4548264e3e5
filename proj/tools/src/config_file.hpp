#pragma once

#include <map>
#include <string>
#include <string_view>

namespace mlpoly::cli {

/// Flat key=value settings. Section headers such as [series] prefix nothing;
/// keys are looked up by their bare name.
using ConfigMap = std::map<std::string, std::string>;

/// Throws std::runtime_error with the offending line number on malformed input.
ConfigMap parse_config(std::string_view text);
ConfigMap load_config(const std::string& path);

}  // namespace mlpoly::cli
