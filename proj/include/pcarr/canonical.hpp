#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pcarr/arrangement.hpp"

namespace pcarr {

// Canonical byte string identifying an arrangement up to homeomorphism of the
// sphere cell decomposition, reflections included. Computed as the
// lexicographic minimum over all starting darts and both orientations of a
// breadth-first flag encoding; equal codes iff isomorphic.
using CanonicalCode = std::vector<uint8_t>;

CanonicalCode canonical_code(const Arrangement& a);

// Rebuild an arrangement from a code produced by canonical_code.
Arrangement decode(const CanonicalCode& code);

std::string code_to_hex(const CanonicalCode& code);
CanonicalCode code_from_hex(const std::string& hex);

}  // namespace pcarr
