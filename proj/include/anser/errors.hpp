/*
   Copyright 2026 The anser authors

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

#ifndef ANSER_ERRORS_HPP
#define ANSER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace anser {

/// Base class of every exception thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class InvalidScalar : public Error {
public:
    explicit InvalidScalar(const std::string& what) : Error(what) {}
};

class UndefinedPower : public Error {
public:
    explicit UndefinedPower(const std::string& what) : Error(what) {}
};

class UndefinedArgument : public Error {
public:
    explicit UndefinedArgument(const std::string& what) : Error(what) {}
};

class WindowViolation : public Error {
public:
    explicit WindowViolation(const std::string& what) : Error(what) {}
};

class DuplicateExponent : public Error {
public:
    explicit DuplicateExponent(const std::string& what) : Error(what) {}
};

class OrientationMismatch : public Error {
public:
    explicit OrientationMismatch(const std::string& what) : Error(what) {}
};

class PrecisionExceeded : public Error {
public:
    explicit PrecisionExceeded(const std::string& what) : Error(what) {}
};

class DivisionByZero : public Error {
public:
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

class NoExponentInverse : public Error {
public:
    explicit NoExponentInverse(const std::string& what) : Error(what) {}
};

class NonPositiveDegree : public Error {
public:
    explicit NonPositiveDegree(const std::string& what) : Error(what) {}
};

class NonPositiveLeading : public Error {
public:
    explicit NonPositiveLeading(const std::string& what) : Error(what) {}
};

class TooFewVariables : public Error {
public:
    explicit TooFewVariables(const std::string& what) : Error(what) {}
};

class VariableMismatch : public Error {
public:
    explicit VariableMismatch(const std::string& what) : Error(what) {}
};

class InvalidPartition : public Error {
public:
    explicit InvalidPartition(const std::string& what) : Error(what) {}
};

class UnsupportedBasis : public Error {
public:
    explicit UnsupportedBasis(const std::string& what) : Error(what) {}
};

class BoundMismatch : public Error {
public:
    explicit BoundMismatch(const std::string& what) : Error(what) {}
};

/// Syntax error with 1-based source position.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error(what + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

} // namespace anser

#endif
