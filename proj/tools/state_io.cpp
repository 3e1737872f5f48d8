// Copyright 2026 The pptdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "state_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace pptdist::cli {

namespace {

using nlohmann::json;

int require_dim(const json &doc, const char *key, const std::string &origin) {
  if (!doc.contains(key) || !doc[key].is_number_integer()) {
    throw StateFileError(origin + ": missing or non-integer \"" +
                         std::string(key) + "\"");
  }
  const int value = doc[key].get<int>();
  if (value < 1) {
    throw StateFileError(origin + ": \"" + std::string(key) +
                         "\" must be a positive integer, got " +
                         std::to_string(value));
  }
  return value;
}

} // namespace

std::string format_number(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

StateFile parse_state(const std::string &text, const std::string &origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception &e) {
    throw StateFileError(origin + ": " + e.what());
  }
  if (!doc.is_object()) {
    throw StateFileError(origin + ": top-level document must be an object");
  }

  StateFile file;
  file.dim_a = require_dim(doc, "dim_a", origin);
  file.dim_b = require_dim(doc, "dim_b", origin);
  const int side = file.dim_a * file.dim_b;

  if (!doc.contains("matrix") || !doc["matrix"].is_array()) {
    throw StateFileError(origin + ": missing \"matrix\" array");
  }
  const json &rows = doc["matrix"];
  if (static_cast<int>(rows.size()) != side) {
    throw StateFileError(
        origin + ": matrix has " + std::to_string(rows.size()) +
        " rows, expected side dim_a*dim_b = " + std::to_string(side));
  }
  file.matrix.resize(side, side);
  for (int r = 0; r < side; ++r) {
    const json &row = rows[r];
    if (!row.is_array() || static_cast<int>(row.size()) != side) {
      throw StateFileError(origin + ": matrix row " + std::to_string(r) +
                           " has " + std::to_string(row.size()) +
                           " entries, expected side dim_a*dim_b = " +
                           std::to_string(side));
    }
    for (int c = 0; c < side; ++c) {
      const json &entry = row[c];
      if (!entry.is_array() || entry.size() != 2 ||
          !entry[0].is_number() || !entry[1].is_number()) {
        throw StateFileError(origin + ": matrix entry [" + std::to_string(r) +
                             "][" + std::to_string(c) +
                             "] must be a [real, imaginary] pair");
      }
      file.matrix(r, c) =
          Complex(entry[0].get<double>(), entry[1].get<double>());
    }
  }

  if (doc.contains("metadata")) {
    const json &meta = doc["metadata"];
    if (!meta.is_object()) {
      throw StateFileError(origin + ": \"metadata\" must be an object");
    }
    if (meta.contains("label")) {
      file.metadata.label = meta["label"].get<std::string>();
    }
    if (meta.contains("seed")) {
      file.metadata.seed = meta["seed"].get<std::uint64_t>();
    }
    if (meta.contains("generator")) {
      file.metadata.generator = meta["generator"].get<std::string>();
    }
  }
  return file;
}

StateFile read_state_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) {
    throw StateFileError(path + ": cannot open file");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_state(buffer.str(), path);
}

BipartiteOperator to_operator(const StateFile &file) {
  return {file.dim_a, file.dim_b, file.matrix};
}

std::string serialize_state(const BipartiteOperator &op,
                            const StateFileMetadata &metadata) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"dim_a\": " << op.dim_a() << ",\n";
  out << "  \"dim_b\": " << op.dim_b() << ",\n";
  out << "  \"matrix\": [\n";
  const int side = op.side();
  for (int r = 0; r < side; ++r) {
    out << "    [";
    for (int c = 0; c < side; ++c) {
      const Complex value = op(r, c);
      out << (c == 0 ? "" : ", ") << "[" << format_number(value.real()) << ", "
          << format_number(value.imag()) << "]";
    }
    out << (r + 1 < side ? "],\n" : "]\n");
  }
  out << "  ]";

  const bool has_meta = metadata.label.has_value() ||
                        metadata.seed.has_value() ||
                        metadata.generator.has_value();
  if (has_meta) {
    out << ",\n  \"metadata\": {";
    bool first = true;
    auto emit = [&](const char *key, const std::string &value) {
      out << (first ? "" : ", ") << "\"" << key << "\": \"" << value << "\"";
      first = false;
    };
    if (metadata.generator) {
      emit("generator", *metadata.generator);
    }
    if (metadata.label) {
      emit("label", *metadata.label);
    }
    if (metadata.seed) {
      out << (first ? "" : ", ") << "\"seed\": " << *metadata.seed;
      first = false;
    }
    out << "}";
  }
  out << "\n}\n";
  return out.str();
}

void write_state_file(const std::string &path, const BipartiteOperator &op,
                      const StateFileMetadata &metadata) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw StateFileError(path + ": cannot open file for writing");
  }
  out << serialize_state(op, metadata);
}

} // namespace pptdist::cli
