#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wienerseq {

using Vertex = std::uint32_t;

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph6 / edge-list / sequence / spec text.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A parameter or input lies outside an operation's supported domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A distance operation was handed a disconnected graph. Carries one pair of
// vertices with no path between them.
class DisconnectedGraphError : public Error {
 public:
  DisconnectedGraphError(Vertex u, Vertex v)
      : Error("graph is disconnected: no path between vertices " +
              std::to_string(u) + " and " + std::to_string(v)),
        u_(u),
        v_(v) {}

  Vertex first() const noexcept { return u_; }
  Vertex second() const noexcept { return v_; }

 private:
  Vertex u_;
  Vertex v_;
};

}  // namespace wienerseq
