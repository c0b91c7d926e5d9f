#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "cers/coding.hpp"
#include "cers/matching.hpp"
#include "cers/resonance.hpp"
#include "cers/spec.hpp"

namespace cers {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Spec file shape:
///   {"root": "F1",
///    "faces": [{"id": "F1", "length": 6,
///               "attachments": [{"neighbor": "F2", "position": 3}]}, ...]}
/// Parsing checks shape only; semantic rules live in validate_spec.
CersSpec parse_spec(const std::string& json_text);
CersSpec load_spec(const std::string& path);

/// Deterministic serialization; canonical forms carry "canonical": true.
std::string spec_to_json(const CersSpec& spec, bool canonical = false);

std::string matchings_to_json(const std::vector<Matching>& matchings);
std::string matchings_to_text(const std::vector<Matching>& matchings);

std::string codes_to_text(const CodeSet& codes);
/// Bundles codes, the face ordering, and the coded matchings.
std::string coding_to_json(const PlaneCers& g, const CodedMatchingMap& map);

/// Vertices labeled by code when a map is supplied, else by index; edges
/// labeled by the rotated face.
std::string resonance_to_dot(const ResonanceGraph& r, const PlaneCers& g,
                             const CodedMatchingMap* map = nullptr);
std::string resonance_to_json(const ResonanceGraph& r, const PlaneCers& g,
                              const CodedMatchingMap* map = nullptr);
std::string resonance_to_text(const ResonanceGraph& r, const PlaneCers& g,
                              const CodedMatchingMap* map = nullptr);

std::string validation_to_json(const ValidationReport& report);

}  // namespace cers
