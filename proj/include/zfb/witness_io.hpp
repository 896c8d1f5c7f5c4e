#pragma once

#include <string>
#include <vector>

#include "zfb/transfer.hpp"

namespace zfb {

/// Serializes a TransferResult to the versioned witness document described
/// in docs/witness_schema.md. Field order is fixed; output is stable across
/// runs and platforms.
std::string witness_to_json(const TransferResult& r);

/// Re-checks a serialized witness from scratch against the graph embedded
/// in it: chain structure, both orientations, the covering paths and the
/// forcing set. Returns every violated clause (empty = witness verifies).
/// Throws MalformedGraph6 / Error on documents that cannot be interpreted.
std::vector<std::string> verify_witness_json(const std::string& json_text);

} // namespace zfb
