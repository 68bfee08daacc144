/*
   Copyright 2026 The expocalc Authors

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

#pragma once

#include <stdexcept>
#include <string>

namespace expocalc {

/// Base of every domain-level failure. The CLI maps these to exit code 2.
class DomainError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Operands live in different groups, dimensions or shapes.
class StructuralError : public DomainError {
   public:
    using DomainError::DomainError;
};

/// Division by zero and similar field-level failures.
class ArithmeticError : public DomainError {
   public:
    using DomainError::DomainError;
};

/// A root of unity of order n was requested in Q(zeta_N) with n not dividing N.
class UnsupportedEmbedding : public DomainError {
   public:
    using DomainError::DomainError;
};

/// An argument violates a documented precondition (distinctness, ranges, limits).
class PreconditionError : public DomainError {
   public:
    using DomainError::DomainError;
};

class NotGeneralizedPolynomial : public DomainError {
   public:
    using DomainError::DomainError;
};

class NotFiniteGroup : public DomainError {
   public:
    using DomainError::DomainError;
};

class DecompositionFailure : public DomainError {
   public:
    using DomainError::DomainError;
};

class IllPosedInstance : public DomainError {
   public:
    using DomainError::DomainError;
};

class NoCertificate : public DomainError {
   public:
    using DomainError::DomainError;
};

class NotLiftedForm : public DomainError {
   public:
    using DomainError::DomainError;
};

/// Numeric experiment parameters beyond the range where doubles stay well scaled.
class OverflowGuard : public DomainError {
   public:
    using DomainError::DomainError;
};

/// Raised by the expression parser; carries a 1-based source position.
class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string& message, int line, int column)
        : std::runtime_error(message), line_(line), column_(column) {}
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

   private:
    int line_;
    int column_;
};

}  // namespace expocalc
