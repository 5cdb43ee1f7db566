/*
   Copyright 2026 The elimcert authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ELIMCERT_ERRORS_HPP
#define ELIMCERT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace elimcert {

enum class ErrorKind {
    Structural,        // incompatible operands (field / nvars / order mismatch), malformed values
    Precondition,      // documented precondition violated by the caller
    InconsistentInput, // input contradicts its own claims (e.g. s < n - q with dim q)
    Budget,            // configured resource cap exceeded
    Genericity,        // random draws exhausted the retry budget
    BoundViolation,    // a computed certificate misses its declared degree bound (bug signal)
    Internal,          // a runtime self-check failed (bug signal)
    Parse,             // text input rejected
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

struct StructuralError : Error {
    explicit StructuralError(const std::string& w) : Error(ErrorKind::Structural, w) {}
};
struct PreconditionError : Error {
    explicit PreconditionError(const std::string& w) : Error(ErrorKind::Precondition, w) {}
};
struct InconsistentInputError : Error {
    explicit InconsistentInputError(const std::string& w) : Error(ErrorKind::InconsistentInput, w) {}
};
struct BudgetError : Error {
    explicit BudgetError(const std::string& w) : Error(ErrorKind::Budget, w) {}
};
struct GenericityError : Error {
    explicit GenericityError(const std::string& w) : Error(ErrorKind::Genericity, w) {}
};
struct BoundViolationError : Error {
    explicit BoundViolationError(const std::string& w) : Error(ErrorKind::BoundViolation, w) {}
};
struct InternalError : Error {
    explicit InternalError(const std::string& w) : Error(ErrorKind::Internal, w) {}
};

class ParseError : public Error {
  public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error(ErrorKind::Parse,
                "parse error at line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace elimcert

#endif
