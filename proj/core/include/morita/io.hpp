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

#ifndef MORITA_IO_HPP_
#define MORITA_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "biset.hpp"
#include "rees.hpp"
#include "semigroup.hpp"

namespace morita {

// Semigroup files: either the canonical text form
//   semigroup <n>
//   # label <i> <name>        (optional, one per element)
//   <n rows of n integers>
// or a JSON document {"order": n, "table": [[...]], "labels": [...]}.
// Auto-detected by the first non-space character.

FiniteSemigroup parse_semigroup(std::string_view text);
FiniteSemigroup load_semigroup(const std::filesystem::path& path);
std::string semigroup_to_text(const FiniteSemigroup& S);

// Sandwich files: `sandwich <m>` followed by m rows of m element ids, or
// JSON {"index_size": m, "entries": [[...]]}. Binding to the base
// semigroup happens at load time.

struct SandwichGrid {
  int index_size = 0;
  std::vector<int> entries;
};

SandwichGrid parse_sandwich(std::string_view text);
SandwichGrid load_sandwich(const std::filesystem::path& path);
std::string sandwich_to_text(const SandwichFunction& p);

// Biset files: JSON only.
//   {"S": <semigroup>, "T": <semigroup>, "X_size": m,
//    "left_action": |S| x m, "right_action": m x |T|,
//    "bra": m x m, "ket": m x m}

EquivalenceBiset parse_biset(std::string_view text);
EquivalenceBiset load_biset(const std::filesystem::path& path);
std::string biset_to_json(const EquivalenceBiset& B);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

/// FNV-1a 64-bit digest, as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace morita

#endif  // MORITA_IO_HPP_
