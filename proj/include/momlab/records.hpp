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

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "momlab/scalar.hpp"

namespace momlab {

/// One emitted number.  Self-describing: the (command, params) pair alone
/// suffices to re-run the computation; exact values always carry their
/// fraction next to the rounded decimal so downstream consumers lose
/// nothing.
struct ResultRecord {
  std::string experiment_id;
  std::string command;
  std::string params;       // canonical "key=value;..." tuple
  std::string name;         // which quantity this row carries
  std::string value;        // decimal at ceil(P * log10(2)) digits
  std::string exact_value;  // "p/q" when exact, empty otherwise
  bool is_exact = false;
  std::string provenance;   // invariants re-checked during this run
};

inline int decimal_digits_for_bits(unsigned bits) {
  return static_cast<int>(std::ceil(bits * 0.3010299956639812)) + 1;
}

/// Decimal rendering at full working precision.
inline std::string scalar_decimal(const Scalar& v, unsigned bits) {
  return v.to_approx(bits).to_string(decimal_digits_for_bits(bits));
}

inline ResultRecord make_record(const std::string& command, const std::string& params,
                                const std::string& name, const Scalar& v,
                                unsigned bits, const std::string& provenance) {
  ResultRecord r;
  r.command = command;
  r.params = params;
  r.experiment_id = command + "[" + params + "]";
  r.name = name;
  r.value = scalar_decimal(v, bits);
  r.is_exact = v.is_exact();
  if (r.is_exact) r.exact_value = v.to_string();
  r.provenance = provenance;
  return r;
}

inline ResultRecord make_text_record(const std::string& command,
                                     const std::string& params,
                                     const std::string& name,
                                     const std::string& text,
                                     const std::string& provenance) {
  ResultRecord r;
  r.command = command;
  r.params = params;
  r.experiment_id = command + "[" + params + "]";
  r.name = name;
  r.value = text;
  r.is_exact = false;
  r.provenance = provenance;
  return r;
}

inline std::string csv_escape(const std::string& s) {
  bool needs = s.find_first_of(",\"\n") != std::string::npos;
  if (!needs) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline void write_csv(std::ostream& os, const std::vector<ResultRecord>& records) {
  os << "experiment_id,command,params,name,value,exact_value,is_exact,provenance\n";
  for (const ResultRecord& r : records) {
    os << csv_escape(r.experiment_id) << ',' << csv_escape(r.command) << ','
       << csv_escape(r.params) << ',' << csv_escape(r.name) << ','
       << csv_escape(r.value) << ',' << csv_escape(r.exact_value) << ','
       << (r.is_exact ? "true" : "false") << ',' << csv_escape(r.provenance)
       << '\n';
  }
}

inline std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

// records are flat string/bool tuples, so a hand-rolled emitter keeps the
// library tree free of the vendored parser
inline void write_json(std::ostream& os, const std::vector<ResultRecord>& records) {
  auto field = [&os](const char* key, const std::string& val, bool comma = true) {
    os << "    \"" << key << "\": \"" << json_escape(val) << '"'
       << (comma ? ",\n" : "\n");
  };
  os << "[\n";
  for (std::size_t i = 0; i < records.size(); ++i) {
    const ResultRecord& r = records[i];
    os << "  {\n";
    field("experiment_id", r.experiment_id);
    field("command", r.command);
    field("params", r.params);
    field("name", r.name);
    field("value", r.value);
    field("exact_value", r.exact_value);
    os << "    \"is_exact\": " << (r.is_exact ? "true" : "false") << ",\n";
    field("provenance", r.provenance, false);
    os << "  }" << (i + 1 < records.size() ? "," : "") << '\n';
  }
  os << "]\n";
}

}  // namespace momlab
