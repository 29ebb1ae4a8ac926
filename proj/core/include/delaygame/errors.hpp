/*
 * Copyright 2026 The delaygame Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace delaygame {

/** Base class of every error raised by the library. */
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/** Malformed arguments: unknown state or letter, empty word, mismatched objects. */
class InputError : public Error {
public:
    using Error::Error;
};

/** Text or JSON input that does not follow the file format. */
class FormatError : public Error {
public:
    FormatError(std::size_t line, const std::string &what)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

    /** 1-based line number, or 0 when not applicable. */
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/** A construction would exceed the configured size budget. */
class ResourceError : public Error {
public:
    using Error::Error;
};

/** An operation was called outside its precondition (unreachable target, losing player, ...). */
class PreconditionError : public Error {
public:
    using Error::Error;
};

/** Size limits shared by the arena and strategy constructions. */
struct Budget {
    std::size_t max_vertices = 1'000'000;
    std::size_t max_strategy_states = 1'000'000;
    std::size_t max_candidates = std::size_t{1} << 24;
};

} // namespace delaygame
