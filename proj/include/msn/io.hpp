#pragma once

#include <string>

#include "msn/core.hpp"
#include "msn/geometry.hpp"

namespace msn {

/// NetworkFile: {"n": int, "kind": "rcmsn"|"cmsn", "events": [[u,v],...]}
/// ArrangementFile: {"lines": [{"slope": "p/q"|"vertical", "intercept": "p/q"},...]}
/// Rationals are serialized as strings so no value passes through floats.

std::string network_to_json(const Cmsn& net);
Cmsn network_from_json(const std::string& text);

std::string arrangement_to_json(const Arrangement& arr);
Arrangement arrangement_from_json(const std::string& text);

enum class InputShape { network, arrangement };

/// Auto-detects by shape: an "events" key means NetworkFile, "lines" means
/// ArrangementFile. Throws Error otherwise.
InputShape detect_shape(const std::string& text);

}  // namespace msn
