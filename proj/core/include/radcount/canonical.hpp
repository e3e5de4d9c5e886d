#pragma once

// Canonical form and digest for (quiver, summand vector) pairs. Two inputs
// get the same digest exactly when they are isomorphic as vertex-weighted
// directed multigraphs, which makes the digest usable as a cache key that is
// stable under vertex/arrow relabeling and file reordering.

#include "radcount/quiver.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace radcount {

// Lexicographically least byte encoding over all admissible vertex orders.
// Exact (backtracking over color-preserving permutations), intended for the
// tiny quivers this library handles; throws std::invalid_argument if the
// search space would be unreasonably large.
std::vector<std::uint8_t> canonical_form(const Quiver& q, const SummandVector& d);

// Lowercase hex SHA-256 of canonical_form().
std::string canonical_hash(const Quiver& q, const SummandVector& d);

// SHA-256 of an arbitrary byte string, lowercase hex. Exposed for tests.
std::string sha256_hex(const std::uint8_t* data, std::size_t len);

} // namespace radcount
