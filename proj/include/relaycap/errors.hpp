#pragma once

#include <stdexcept>
#include <string>

namespace relaycap {

// Base class for all domain errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DuplicateNodeIdError : public Error {
public:
    explicit DuplicateNodeIdError(const std::string& id)
        : Error("duplicate node id: " + id), node_id(id) {}
    std::string node_id;
};

// An (origin, destination) pair with demand has no hub-relay path.
class DisconnectedDemandPairError : public Error {
public:
    DisconnectedDemandPairError(const std::string& origin, const std::string& destination)
        : Error("no hub-relay path from " + origin + " to " + destination),
          origin_id(origin), destination_id(destination) {}
    std::string origin_id;
    std::string destination_id;
};

class EmptyHistoryError : public Error {
public:
    EmptyHistoryError() : Error("demand history is empty") {}
};

class UnreachableDemandError : public Error {
public:
    UnreachableDemandError(const std::string& origin, const std::string& destination)
        : Error("demand pair " + origin + " -> " + destination +
                " cannot be routed in the network"),
          origin_id(origin), destination_id(destination) {}
    std::string origin_id;
    std::string destination_id;
};

class InfeasibleError : public Error {
public:
    explicit InfeasibleError(const std::string& msg) : Error(msg) {}
};

class HorizonMismatchError : public Error {
public:
    HorizonMismatchError(std::size_t expected, std::size_t got)
        : Error("simulation horizon is " + std::to_string(expected) +
                " days but " + std::to_string(got) + " daily demand maps were supplied") {}
};

// File I/O failure; always carries the offending path.
class IoError : public Error {
public:
    IoError(const std::string& path, const std::string& what)
        : Error(path + ": " + what), path(path) {}
    std::string path;
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

} // namespace relaycap
