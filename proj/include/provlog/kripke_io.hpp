#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "provlog/kripke.hpp"

namespace provlog {

/// {"worlds": [...], "rel": [[a, b], ...], "val": {"p": [...]}}
/// World ids may be strings or integers; integers are read as their decimal
/// text and written back as integers.
[[nodiscard]] nlohmann::json frame_to_json( const Frame& fr );
[[nodiscard]] nlohmann::json model_to_json( const Model& m );

// Throws PreconditionError on malformed input.
[[nodiscard]] Frame frame_from_json( const nlohmann::json& j );
[[nodiscard]] Model model_from_json( const nlohmann::json& j );

// Graphviz digraph; the marked world is drawn as a double circle.
[[nodiscard]] std::string frame_to_dot( const Frame& fr, std::optional< std::size_t > marked = std::nullopt );
[[nodiscard]] std::string model_to_dot( const Model& m, std::optional< std::size_t > marked = std::nullopt );

} // namespace provlog
