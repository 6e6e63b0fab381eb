#pragma once

#include <stdexcept>
#include <string>

namespace prochouse {

// Input-file problems: the document itself is malformed.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// The document parsed but violates an invariant; message carries the offending record.
struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& msg) : std::runtime_error(msg) {}
};

struct EmptyRegistry : std::runtime_error {
    EmptyRegistry() : std::runtime_error("room spec registry is empty") {}
};

// Region growing could not realize the spec on this boundary; caller resamples the boundary.
struct SubdivisionFailure : std::runtime_error {
    explicit SubdivisionFailure(const std::string& msg) : std::runtime_error(msg) {}
};

// Room adjacency cannot satisfy the spec's connectivity constraints; caller resamples the plan.
struct ConnectivityInfeasible : std::runtime_error {
    explicit ConnectivityInfeasible(const std::string& msg) : std::runtime_error(msg) {}
};

// Rejection sampling ran out of attempts while placing an opening.
struct PlacementExhausted : std::runtime_error {
    explicit PlacementExhausted(const std::string& msg) : std::runtime_error(msg) {}
};

// No cell of the navigation grid can hold the agent.
struct NoFreeCell : std::runtime_error {
    explicit NoFreeCell(const std::string& msg) : std::runtime_error(msg) {}
};

struct NoReachableTarget : std::runtime_error {
    NoReachableTarget() : std::runtime_error("no object type has a reachable instance") {}
};

// The full retry budget was spent without producing a valid house.
struct GenerationFailure : std::runtime_error {
    explicit GenerationFailure(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace prochouse
