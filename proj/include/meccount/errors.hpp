#pragma once

#include <stdexcept>
#include <string>

namespace meccount {

// Exit codes surfaced by the CLI. Library errors carry one so the front end
// can map failures to distinct process exit codes without string matching.
enum class ErrorCode : int {
  Generic = 1,
  ParseError = 2,
  NotATree = 3,
  NotChordal = 4,
  TooLarge = 5,
  Disagreement = 6,
  InfeasibleSpec = 7,
  NotConnected = 8,
  InvalidInput = 9,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct ParseError : Error {
  explicit ParseError(const std::string& w) : Error(ErrorCode::ParseError, w) {}
};
struct NotATree : Error {
  explicit NotATree(const std::string& w) : Error(ErrorCode::NotATree, w) {}
};
struct NotChordal : Error {
  explicit NotChordal(const std::string& w) : Error(ErrorCode::NotChordal, w) {}
};
struct NotConnected : Error {
  explicit NotConnected(const std::string& w)
      : Error(ErrorCode::NotConnected, w) {}
};
struct TooLarge : Error {
  explicit TooLarge(const std::string& w) : Error(ErrorCode::TooLarge, w) {}
};
struct Disagreement : Error {
  explicit Disagreement(const std::string& w)
      : Error(ErrorCode::Disagreement, w) {}
};
struct InfeasibleSpec : Error {
  explicit InfeasibleSpec(const std::string& w)
      : Error(ErrorCode::InfeasibleSpec, w) {}
};
struct VertexOutOfRange : Error {
  explicit VertexOutOfRange(const std::string& w)
      : Error(ErrorCode::InvalidInput, w) {}
};
struct SeedNotClique : Error {
  explicit SeedNotClique(const std::string& w)
      : Error(ErrorCode::InvalidInput, w) {}
};
struct EdgeNotInTree : Error {
  explicit EdgeNotInTree(const std::string& w)
      : Error(ErrorCode::InvalidInput, w) {}
};
struct NotADirectedEdge : Error {
  explicit NotADirectedEdge(const std::string& w)
      : Error(ErrorCode::InvalidInput, w) {}
};
struct NotSynchronous : Error {
  explicit NotSynchronous(const std::string& w)
      : Error(ErrorCode::InvalidInput, w) {}
};
struct WindowMismatch : Error {
  explicit WindowMismatch(const std::string& w)
      : Error(ErrorCode::InvalidInput, w) {}
};
struct InvalidCliqueTree : Error {
  explicit InvalidCliqueTree(const std::string& w)
      : Error(ErrorCode::InvalidInput, w) {}
};
struct NoMatch : Error {
  explicit NoMatch(const std::string& w) : Error(ErrorCode::Generic, w) {}
};

}  // namespace meccount
