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

#include "morita/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace morita {

namespace {

using nlohmann::json;

bool looks_like_json(std::string_view text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    return c == '{';
  }
  return false;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

std::vector<std::vector<int>> json_grid(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw ParseError(std::string("missing or non-array \"") + key + "\"");
  }
  std::vector<std::vector<int>> rows;
  for (const auto& row : j[key]) {
    if (!row.is_array()) {
      throw ParseError(std::string("\"") + key + "\" rows must be arrays");
    }
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) {
        throw ParseError(std::string("\"") + key +
                         "\" entries must be integers");
      }
      r.push_back(v.get<int>());
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<int> flatten(const std::vector<std::vector<int>>& rows,
                         size_t expect_rows, size_t expect_cols,
                         const char* key) {
  if (rows.size() != expect_rows) {
    throw ParseError(std::string("\"") + key + "\" has the wrong row count");
  }
  std::vector<int> flat;
  for (const auto& r : rows) {
    if (r.size() != expect_cols) {
      throw ParseError(std::string("\"") + key +
                       "\" has the wrong column count");
    }
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return flat;
}

struct TextGrid {
  int n = 0;
  std::vector<std::vector<int>> rows;
  std::vector<std::pair<int, std::string>> labels;
};

// Shared reader for `semigroup <n>` / `sandwich <m>` texts.
TextGrid parse_text_grid(std::string_view text, const std::string& header) {
  std::istringstream in{std::string(text)};
  std::string line;
  TextGrid out;
  bool header_seen = false;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank line
    if (first == "#") {
      std::string kind;
      if (ls >> kind && kind == "label") {
        int id;
        std::string name;
        if (!(ls >> id >> name)) {
          throw ParseError("malformed label line: " + line);
        }
        out.labels.emplace_back(id, name);
      }
      continue;  // other comments ignored
    }
    if (!header_seen) {
      if (first != header) {
        throw ParseError("expected header \"" + header + " <n>\"");
      }
      if (!(ls >> out.n) || out.n <= 0) {
        throw ParseError("header size must be a positive integer");
      }
      header_seen = true;
      continue;
    }
    std::vector<int> row;
    row.push_back([&] {
      try {
        size_t pos = 0;
        int v = std::stoi(first, &pos);
        if (pos != first.size()) throw std::invalid_argument(first);
        return v;
      } catch (const std::exception&) {
        throw ParseError("non-integer entry: " + first);
      }
    }());
    std::string tok;
    while (ls >> tok) {
      try {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        row.push_back(v);
      } catch (const std::exception&) {
        throw ParseError("non-integer entry: " + tok);
      }
    }
    out.rows.push_back(std::move(row));
  }
  if (!header_seen) {
    throw ParseError("missing \"" + header + "\" header");
  }
  if (out.rows.size() != static_cast<size_t>(out.n)) {
    throw ParseError("expected " + std::to_string(out.n) + " rows, got " +
                     std::to_string(out.rows.size()));
  }
  for (const auto& r : out.rows) {
    if (r.size() != static_cast<size_t>(out.n)) {
      throw ParseError("row width does not match the header size");
    }
  }
  return out;
}

std::vector<std::string> materialize_labels(
    int n, const std::vector<std::pair<int, std::string>>& given) {
  if (given.empty()) return {};
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = "x" + std::to_string(i);
  }
  for (const auto& [id, name] : given) {
    if (id < 0 || id >= n) {
      throw ParseError("label id out of range: " + std::to_string(id));
    }
    labels[id] = name;
  }
  return labels;
}

std::string sanitize(const std::string& label) {
  std::string out = label;
  for (char& c : out) {
    if (c == ' ' || c == '\t') c = '_';
  }
  return out;
}

}  // namespace

FiniteSemigroup parse_semigroup(std::string_view text) {
  if (looks_like_json(text)) {
    const json j = parse_json(text);
    if (!j.contains("order") || !j["order"].is_number_integer()) {
      throw ParseError("missing integer \"order\"");
    }
    const int n = j["order"].get<int>();
    if (n <= 0) {
      throw ParseError("\"order\" must be positive");
    }
    auto rows = json_grid(j, "table");
    std::vector<std::string> labels;
    if (j.contains("labels")) {
      if (!j["labels"].is_array() ||
          j["labels"].size() != static_cast<size_t>(n)) {
        throw ParseError("\"labels\" must list one name per element");
      }
      for (const auto& v : j["labels"]) {
        if (!v.is_string()) throw ParseError("labels must be strings");
        labels.push_back(v.get<std::string>());
      }
    }
    if (rows.size() != static_cast<size_t>(n)) {
      throw ParseError("\"table\" row count does not match \"order\"");
    }
    return FiniteSemigroup::from_rows(rows, std::move(labels));
  }
  TextGrid g = parse_text_grid(text, "semigroup");
  return FiniteSemigroup::from_rows(g.rows,
                                    materialize_labels(g.n, g.labels));
}

FiniteSemigroup load_semigroup(const std::filesystem::path& path) {
  return parse_semigroup(read_file(path));
}

std::string semigroup_to_text(const FiniteSemigroup& S) {
  std::ostringstream out;
  const int n = S.order();
  out << "semigroup " << n << "\n";
  if (S.has_labels()) {
    for (int i = 0; i < n; ++i) {
      out << "# label " << i << " " << sanitize(S.label(i)) << "\n";
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      out << S.product(a, b) << (b + 1 == n ? "" : " ");
    }
    out << "\n";
  }
  return out.str();
}

SandwichGrid parse_sandwich(std::string_view text) {
  if (looks_like_json(text)) {
    const json j = parse_json(text);
    if (!j.contains("index_size") || !j["index_size"].is_number_integer()) {
      throw ParseError("missing integer \"index_size\"");
    }
    const int m = j["index_size"].get<int>();
    if (m <= 0) {
      throw ParseError("\"index_size\" must be positive");
    }
    auto rows = json_grid(j, "entries");
    return SandwichGrid{
        m, flatten(rows, static_cast<size_t>(m), static_cast<size_t>(m),
                   "entries")};
  }
  TextGrid g = parse_text_grid(text, "sandwich");
  std::vector<int> flat;
  for (const auto& r : g.rows) {
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return SandwichGrid{g.n, std::move(flat)};
}

SandwichGrid load_sandwich(const std::filesystem::path& path) {
  return parse_sandwich(read_file(path));
}

std::string sandwich_to_text(const SandwichFunction& p) {
  std::ostringstream out;
  const int m = p.index_size();
  out << "sandwich " << m << "\n";
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      out << p.at(i, j) << (j + 1 == m ? "" : " ");
    }
    out << "\n";
  }
  return out.str();
}

namespace {

json semigroup_json(const FiniteSemigroup& S) {
  json j;
  j["order"] = S.order();
  std::vector<std::vector<int>> rows(S.order(), std::vector<int>(S.order()));
  for (int a = 0; a < S.order(); ++a) {
    for (int b = 0; b < S.order(); ++b) {
      rows[a][b] = S.product(a, b);
    }
  }
  j["table"] = rows;
  if (S.has_labels()) {
    j["labels"] = S.labels();
  }
  return j;
}

}  // namespace

EquivalenceBiset parse_biset(std::string_view text) {
  const json j = parse_json(text);
  if (!j.contains("S") || !j.contains("T")) {
    throw ParseError("biset document needs \"S\" and \"T\"");
  }
  FiniteSemigroup S = parse_semigroup(j["S"].dump());
  FiniteSemigroup T = parse_semigroup(j["T"].dump());
  if (!j.contains("X_size") || !j["X_size"].is_number_integer()) {
    throw ParseError("missing integer \"X_size\"");
  }
  const int m = j["X_size"].get<int>();
  if (m <= 0) {
    throw ParseError("\"X_size\" must be positive");
  }
  EquivalenceBiset B{std::move(S), std::move(T), m, {}, {}, {}, {}};
  B.left_action = flatten(json_grid(j, "left_action"),
                          static_cast<size_t>(B.left.order()),
                          static_cast<size_t>(m), "left_action");
  B.right_action = flatten(json_grid(j, "right_action"),
                           static_cast<size_t>(m),
                           static_cast<size_t>(B.right.order()),
                           "right_action");
  B.bra = flatten(json_grid(j, "bra"), static_cast<size_t>(m),
                  static_cast<size_t>(m), "bra");
  B.ket = flatten(json_grid(j, "ket"), static_cast<size_t>(m),
                  static_cast<size_t>(m), "ket");
  return B;
}

EquivalenceBiset load_biset(const std::filesystem::path& path) {
  return parse_biset(read_file(path));
}

std::string biset_to_json(const EquivalenceBiset& B) {
  json j;
  j["S"] = semigroup_json(B.left);
  j["T"] = semigroup_json(B.right);
  j["X_size"] = B.carrier_size;
  auto grid = [](const std::vector<int>& flat, int rows, int cols) {
    std::vector<std::vector<int>> out(rows, std::vector<int>(cols));
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) {
        out[r][c] = flat[static_cast<size_t>(r) * cols + c];
      }
    }
    return out;
  };
  j["left_action"] = grid(B.left_action, B.left.order(), B.carrier_size);
  j["right_action"] = grid(B.right_action, B.carrier_size, B.right.order());
  j["bra"] = grid(B.bra, B.carrier_size, B.carrier_size);
  j["ket"] = grid(B.ket, B.carrier_size, B.carrier_size);
  return j.dump(2) + "\n";
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot read file: " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ParseError("cannot write file: " + path.string());
  }
  out << text;
}

std::string fnv1a_hex(std::string_view bytes) {
  uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xF];
    h >>= 4;
  }
  return out;
}

}  // namespace morita
