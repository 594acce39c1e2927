#pragma once

#include <json.hpp>

namespace fcsph {

/// Insertion-ordered JSON so that reports serialize deterministically.
using Json = nlohmann::ordered_json;

}  // namespace fcsph
