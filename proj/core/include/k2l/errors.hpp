#pragma once

#include <stdexcept>
#include <string>

namespace k2l {

/// Base class for all precondition / input errors thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SelfLoopError : public Error {
 public:
  explicit SelfLoopError(int u)
      : Error("self loop at vertex " + std::to_string(u)), vertex(u) {}
  int vertex;
};

class VertexOutOfRangeError : public Error {
 public:
  VertexOutOfRangeError(int u, int n)
      : Error("vertex " + std::to_string(u) + " out of range [0," +
              std::to_string(n) + ")"),
        vertex(u) {}
  int vertex;
};

class NotAnEdgeError : public Error {
 public:
  NotAnEdgeError(int u, int v)
      : Error("no edge " + std::to_string(u) + "-" + std::to_string(v)),
        u(u),
        v(v) {}
  int u, v;
};

class TooSmallError : public Error {
 public:
  using Error::Error;
};

class TooLargeError : public Error {
 public:
  using Error::Error;
};

class ParamTooSmallError : public Error {
 public:
  using Error::Error;
};

/// S and T overlap, touch by an edge, or are empty: no vertex cut disjoint
/// from both sides can separate them.
class NotSeparableError : public Error {
 public:
  using Error::Error;
};

class TerminalsDisconnectedError : public Error {
 public:
  using Error::Error;
};

class IterationCapExceededError : public Error {
 public:
  using Error::Error;
};

class TooCloseError : public Error {
 public:
  using Error::Error;
};

class InvalidCutSequenceError : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace k2l
