#ifndef SCM_GRAPH6_HPP
#define SCM_GRAPH6_HPP

#include <string>
#include <string_view>

#include "scm/graph.hpp"

namespace scm {

// Bit-exact graph6 codec (McKay's format): header N(n), then the upper
// adjacency triangle in column-major order packed into 6-bit chunks offset
// by 63. Short form for n <= 62, long forms above.
std::string encode_graph6(const Graph& g);
// Throws std::invalid_argument on malformed header, truncated bit field,
// nonzero padding, or trailing bytes. An optional trailing newline is allowed.
Graph decode_graph6(std::string_view bytes);

} // namespace scm

#endif
