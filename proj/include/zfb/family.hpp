#pragma once

#include <map>
#include <string>

#include "zfb/graph.hpp"

namespace zfb {

/// Named graph families for corpus generation. Supported names and their
/// parameters:
///   path n, cycle n (n >= 3), complete n, star n (n >= 2, center 0),
///   complete_bipartite a b, random_gnp n p seed.
/// random_gnp draws each pair (u, v), u < v in ascending order, from a
/// mt19937_64 seeded with seed; the edge is present when
/// (next() >> 11) * 2^-53 < p, which keeps corpora identical across
/// platforms. Throws BadParams on anything malformed.
Graph generate_family(const std::string& name,
                      const std::map<std::string, std::string>& params);

/// Parses "name" or "name:key=val,key=val" into a generate_family call.
Graph generate_family_spec(const std::string& spec);

} // namespace zfb
