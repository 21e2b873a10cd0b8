#pragma once
#include <stdexcept>
#include <string>

namespace pathhom {

// User-facing input problems: bad files, broken invariants of the input data.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& file, int line, const std::string& msg)
      : std::runtime_error(file + ":" + std::to_string(line) + ": " + msg) {}
};

// A property that is guaranteed by a theorem failed to hold; this always
// indicates a bug in the library, never in the input.
class InternalInvariantError : public std::logic_error {
 public:
  InternalInvariantError(std::string code, const std::string& msg)
      : std::logic_error(code + ": " + msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

inline void require(bool ok, const char* code, const std::string& msg) {
  if (!ok) throw ValidationError(code, msg);
}

inline void internal_check(bool ok, const char* code, const std::string& msg) {
  if (!ok) throw InternalInvariantError(code, msg);
}

}  // namespace pathhom
