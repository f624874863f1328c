/*
 * Copyright 2026 the momlab authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace momlab {

/// Error with a stable machine-readable code ("insufficient-moments",
/// "positivity", "singular-gram", "domain", "config", "precision",
/// "internal").  The CLI forwards the code verbatim.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

private:
  std::string code_;
};

struct InsufficientMomentsError : Error {
  explicit InsufficientMomentsError(const std::string& what)
      : Error("insufficient-moments", what) {}
};

struct PositivityError : Error {
  explicit PositivityError(const std::string& what)
      : Error("positivity", what) {}
};

struct SingularGramError : Error {
  explicit SingularGramError(const std::string& what)
      : Error("singular-gram", what) {}
};

struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error("domain", what) {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& what) : Error("config", what) {}
};

struct PrecisionError : Error {
  explicit PrecisionError(const std::string& what)
      : Error("precision", what) {}
};

struct InternalError : Error {
  explicit InternalError(const std::string& what) : Error("internal", what) {}
};

}  // namespace momlab
