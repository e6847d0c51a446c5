#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace hankel {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedFacets : public Error {
 public:
  using Error::Error;
};

class InvalidEdge : public Error {
 public:
  using Error::Error;
};

/// An edge set violating the closed-labeling condition. The witness (i, k, j)
/// has {i, j} an edge, i < k < j, and {i, k} or {k, j} missing.
class NotClosed : public Error {
 public:
  NotClosed(int i, int k, int j)
      : Error("edge set is not closed: {" + std::to_string(i) + "," + std::to_string(j) +
              "} is an edge but vertex " + std::to_string(k) + " breaks the interval"),
        witness_{i, k, j} {}

  const std::array<int, 3>& witness() const noexcept { return witness_; }

 private:
  std::array<int, 3> witness_;
};

class DegenerateInput : public Error {
 public:
  using Error::Error;
};

class RingMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class ZeroIdeal : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class IncompleteTable : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace hankel
