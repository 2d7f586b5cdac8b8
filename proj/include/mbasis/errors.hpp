#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mbasis {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph input: endpoint out of range, self-loop, duplicate label.
class InvalidGraph : public Error {
 public:
  using Error::Error;
};

/// A distance-based operation was handed a disconnected graph.
class DisconnectedGraph : public Error {
 public:
  DisconnectedGraph() : Error("graph is not connected") {}
  explicit DisconnectedGraph(const std::string& what) : Error(what) {}
};

/// Input accepted by the model but outside what an operation supports
/// (n = 1 for analysis, n > 64 for the search kernel, ...).
class UnsupportedInput : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Raised by graph builders. `kind` names the violated precondition.
class ConstructionError : public Error {
 public:
  enum class Kind {
    PartIsPath,
    AnchorIsVoid,
    PartDisconnected,
    TooFewParts,
    ResultDisconnected,
    MalformedClause,
    NotUnicyclic,
    UnknownName,
    BadParameter,
  };

  ConstructionError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// The exact search ran out of nodes or time. No partial answer is given;
/// the bounds known at the moment of abort are attached instead.
class SearchBudgetExceeded : public Error {
 public:
  SearchBudgetExceeded(std::size_t lower_bound, std::size_t upper_bound, std::uint64_t nodes)
      : Error("search budget exceeded after " + std::to_string(nodes) +
              " nodes (metric dimension in [" + std::to_string(lower_bound) + ", " +
              std::to_string(upper_bound) + "])"),
        lower_bound_(lower_bound),
        upper_bound_(upper_bound),
        nodes_(nodes) {}

  std::size_t lower_bound() const noexcept { return lower_bound_; }
  std::size_t upper_bound() const noexcept { return upper_bound_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::size_t lower_bound_;
  std::size_t upper_bound_;
  std::uint64_t nodes_;
};

}  // namespace mbasis
