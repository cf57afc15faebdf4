#ifndef SUBDIVSYM_ERROR_HPP
#define SUBDIVSYM_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace subdivsym {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Raised by metric operations that need a connected graph.
class DisconnectedGraph : public Error {
 public:
  DisconnectedGraph() : Error("graph is disconnected") {}
  explicit DisconnectedGraph(const std::string& what) : Error(what) {}
};

/// A group generator that does not preserve the graph's edge set.
class NotAnAutomorphism : public Error {
 public:
  explicit NotAnAutomorphism(std::size_t generator_index)
      : Error("generator " + std::to_string(generator_index) +
              " is not an automorphism of the graph"),
        index_(generator_index) {}

  std::size_t generator_index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class MalformedSubdivision : public Error {
 public:
  using Error::Error;
};

/// Text-format error; line numbers are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace subdivsym

#endif  // SUBDIVSYM_ERROR_HPP
