#pragma once

#include <string>

#include "ocl/graph.hpp"

namespace ocl {

/// Parses the canonical JSON instance document:
///   {"n": <int>, "edges": [[u,v],...], "order": [<int>,...],
///    "predictions": {"<vertex>": "<label>", ...} | null}
/// Schema violations raise ValidationError with the offending JSON path.
OnlineInstance parse_instance(const std::string& text);

/// Canonical serialization: compact JSON, keys sorted, edges in canonical
/// (u < v, lexicographic) order. parse_instance(serialize_instance(x))
/// reproduces x exactly.
std::string serialize_instance(const OnlineInstance& inst);

} // namespace ocl
