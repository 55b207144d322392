#pragma once

#include <stdexcept>
#include <string>

namespace sectavg {

// Base class for every error this library throws on purpose.
// Anything else escaping (std::logic_error etc.) is a bug.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// input is geometrically degenerate for the requested operation
struct DegenerateInput : Error { using Error::Error; };

// a direction argument was the zero vector
struct ZeroDirection : Error { using Error::Error; };

// support interval has zero length (flat body viewed along its plane)
struct ZeroWidth : Error { using Error::Error; };

// slicing level hits a vertex exactly
struct NonGenericLevel : Error { using Error::Error; };

// cutting plane passes through a vertex
struct NonGenericCut : Error { using Error::Error; };

// cutting level lies outside the open support interval
struct EmptySide : Error { using Error::Error; };

// operation defined for a different ambient dimension
struct UnsupportedDimension : Error { using Error::Error; };

// generator set does not span the ambient space
struct RankDeficient : Error { using Error::Error; };

// explicit zonotope construction capped to keep 2^n subset sums small
struct TooManyGenerators : Error { using Error::Error; };

// builtin gallery lookup with an unknown name or bad parameters
struct UnknownExample : Error { using Error::Error; };

// full fragment tracking would exceed the population cap
struct PopulationCapExceeded : Error { using Error::Error; };

// tiling window contains no full-dimensional tile
struct NoTiles : Error { using Error::Error; };

// malformed textual input (rational literals, JSON documents, CLI values)
struct ParseError : Error { using Error::Error; };

} // namespace sectavg
