#ifndef RDES_MODEL_IO_HPP_
#define RDES_MODEL_IO_HPP_

#include <string>
#include <variant>

#include "rdes/plant.hpp"
#include "rdes/spec_transducer.hpp"

namespace rdes {

using Model = std::variant<OpenDes, SpecTransducer>;

/// Parses a model document, dispatching on its "kind" field. Structural
/// invariants (determinism, declared symbols, disjoint name spaces) are
/// checked here; reachability and input-enabledness are left to
/// validate_plant.
Model parse_model(const std::string& text);

OpenDes parse_plant(const std::string& text);
SpecTransducer parse_spec(const std::string& text);

/// Canonical printing: fixed key order, sorted arrays, one input event per
/// transition entry, two-space indentation, trailing newline. Parsing the
/// output reproduces the model exactly, and canonical files round-trip
/// byte-for-byte.
std::string print_model(const OpenDes& plant);
std::string print_model(const SpecTransducer& spec);

/// Stable content hash of the canonical form, used to tie supervisors to
/// the plant they were synthesized for.
std::string fingerprint(const OpenDes& plant);

} // namespace rdes

#endif // RDES_MODEL_IO_HPP_
