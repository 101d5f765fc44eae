#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gcsub {

using Vec3 = Eigen::Vector3d;
using IVec3 = Eigen::Vector3i;

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using FaceId = std::uint32_t;

inline constexpr std::uint32_t kInvalidId = 0xffffffffu;

// Error hierarchy. Every failure surfaced by the library derives from Error so
// callers (the CLI in particular) can map categories onto exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A face circuit or edge list that does not describe a graph.
class StructuralError : public Error {
public:
    using Error::Error;
};

// Whole-graph subdivision requested on a graph with edges in more than two faces.
class BranchedGraphError : public Error {
public:
    using Error::Error;
};

// Precondition violations on numeric or id arguments.
class DomainError : public Error {
public:
    using Error::Error;
};

// Predicted memory use exceeds the configured vertex cap.
class ResourceCapError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& file, std::size_t line, const std::string& what)
        : Error(file + ":" + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class IoError : public Error {
public:
    using Error::Error;
};

// Selects between the OpenMP kernels and the serial reference kernels.
enum class Exec { serial, parallel };

}  // namespace gcsub
