/*
 *   Copyright 2026 The morita authors
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

#ifndef MORITA_ERRORS_HPP_
#define MORITA_ERRORS_HPP_

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace morita {

/// Stable error identifiers. These are part of the tool's contract: the CLI
/// surfaces them verbatim in reports and maps them onto exit codes.
enum class Errc {
  out_of_range_entry,
  not_associative,
  not_inverse,
  not_idempotent,
  not_orthodox,
  internal_not_congruence,
  not_compatible,
  not_homomorphism,
  not_regular,
  mcalister_violation,
  base_not_inverse,
  empty_index_set,
  search_space_too_large,
  no_local_units,
  not_inverse_base,
  partial_mapping,
  biset_invalid,
  kernel_mismatch,
  internal_inconsistency,
};

/// Canonical upper-case name, e.g. "NOT_ASSOCIATIVE".
std::string_view errc_name(Errc c) noexcept;

/// Violation of a documented precondition or domain invariant. `details`
/// carries the counterexample witness as key/value pairs, e.g.
/// {"a","1"},{"b","0"},{"c","0"} for an associativity failure.
class DomainError : public std::runtime_error {
 public:
  DomainError(Errc code, const std::string& message,
              std::map<std::string, std::string> details = {});

  Errc code() const noexcept {
    return code_;
  }

  const std::map<std::string, std::string>& details() const noexcept {
    return details_;
  }

 private:
  Errc code_;
  std::map<std::string, std::string> details_;
};

/// Malformed input: unreadable file, ragged grid, bad JSON shape.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& message);
};

}  // namespace morita

#endif  // MORITA_ERRORS_HPP_
