#pragma once

#include <string>
#include <string_view>

#include "turan/graph.hpp"

namespace turan {

/// graph6 encoding (no ">>graph6<<" header, no newline). Supports the
/// single-byte size form only, i.e. n <= 62; larger orders raise
/// kGraph6UnsupportedSize.
std::string encode_graph6(const Graph& g);

/// Inverse of encode_graph6. Rejects anything that is not exactly one
/// well-formed single-byte-size graph6 record; a trailing '\n' or '\r\n' is
/// tolerated so stream lines can be passed directly.
Graph decode_graph6(std::string_view text);

}  // namespace turan
