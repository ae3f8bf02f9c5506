#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace symisr {

using Vertex = int;

// Base of every error the library raises on bad input. Logic errors inside
// the library surface as std::logic_error instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition violations: out-of-range vertices, self-loops, bad parameters.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class NotIndependent : public Error {
 public:
  using Error::Error;
};

// The graph is outside the class an algorithm requires.
class WrongClass : public Error {
 public:
  using Error::Error;
};

class P4Found : public WrongClass {
 public:
  explicit P4Found(std::array<Vertex, 4> witness)
      : WrongClass("induced P4 " + std::to_string(witness[0]) + "-" + std::to_string(witness[1]) +
                   "-" + std::to_string(witness[2]) + "-" + std::to_string(witness[3])),
        witness_(witness) {}
  const std::array<Vertex, 4>& witness() const { return witness_; }

 private:
  std::array<Vertex, 4> witness_;
};

class CapExceeded : public Error {
 public:
  CapExceeded(std::size_t count, std::size_t cap)
      : Error("independent set cap exceeded: " + std::to_string(count) + " > " +
              std::to_string(cap)),
        count_(count) {}
  std::size_t count() const { return count_; }

 private:
  std::size_t count_;
};

}  // namespace symisr
