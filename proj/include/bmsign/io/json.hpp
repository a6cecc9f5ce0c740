// Copyright 2026 The bmsign Authors
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

// JSON reading and writing for A∞ structure definitions and sign contexts.
// Needs nlohmann/json (json.hpp) on the include path; the rest of the library does not.

#pragma once

#include <bmsign/ainfty.hpp>
#include <bmsign/signs.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace bmsign::io {

using Json = nlohmann::ordered_json;

/// A malformed input file. `where` is "line L, column C" for syntax errors and a
/// JSON pointer such as "/operations/0/values/2" for content errors.
class FormatError : public std::runtime_error {
 public:
  FormatError(std::string where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

namespace detail {

inline std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

// Field access that reports the JSON pointer of the offending value.
class Reader {
 public:
  const Json& at(const Json& obj, const std::string& path, const char* key) const {
    if (!obj.is_object()) throw FormatError(path.empty() ? "/" : path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw FormatError(path.empty() ? "/" : path, std::string("missing field '") + key + "'");
    return *it;
  }
  std::string str(const Json& v, const std::string& path) const {
    if (!v.is_string()) throw FormatError(path, "expected a string");
    return v.get<std::string>();
  }
  long long integer(const Json& v, const std::string& path) const {
    if (!v.is_number_integer()) throw FormatError(path, "expected an integer");
    return v.get<long long>();
  }
  const Json& array(const Json& v, const std::string& path) const {
    if (!v.is_array()) throw FormatError(path, "expected an array");
    return v;
  }
  /// A rational given as an integer or a string "p/q".
  Rational rational(const Json& v, const std::string& path) const {
    if (v.is_number_integer()) return Rational(v.get<long>());
    try {
      return parse_rational(str(v, path));
    } catch (const InvalidArgument& e) {
      throw FormatError(path, e.what());
    }
  }
  novikov::NovikovElement novikov(const Json& v, const std::string& path) const {
    if (v.is_number_integer()) return novikov::NovikovElement(v.get<long>());
    try {
      return novikov::parse(str(v, path));
    } catch (const ParseError& e) {
      throw FormatError(path, e.what());
    }
  }
};

}  // namespace detail

/// Structure definition:
///   {"cutoff": "2", "spectrum": ["0", "1/2"],
///    "components": [{"name": "R", "dim": 1, "mu": 0}],
///    "spaces": [{"component": "R", "basis": [{"name": "x", "degree": 0}]}],
///    "operations": [{"k": 2, "energy": "0", "tag": "", "inputs": ["R", "R"], "output": "R",
///                    "values": [{"in": ["x", "x"], "out": {"x": "1 + T^(1/2)"}}]}]}
/// `cutoff_override` replaces the file's cutoff when given.
inline ainfty::FilteredAInfty structure_from_json(const Json& doc, std::optional<Rational> cutoff_override = {}) {
  detail::Reader rd;
  Rational cutoff = cutoff_override ? *cutoff_override : Rational(1);
  if (!cutoff_override && doc.is_object() && doc.contains("cutoff")) cutoff = rd.rational(doc["cutoff"], "/cutoff");
  if (cutoff <= 0) throw FormatError("/cutoff", "cutoff must be positive");
  std::vector<Rational> levels{Rational(0)};
  if (doc.is_object() && doc.contains("spectrum")) {
    const Json& sp = rd.array(doc["spectrum"], "/spectrum");
    for (std::size_t i = 0; i < sp.size(); ++i) levels.push_back(rd.rational(sp[i], "/spectrum/" + std::to_string(i)));
  }
  novikov::GappedSpectrum spectrum = novikov::GappedSpectrum::from_levels({Rational(0)});
  try {
    spectrum = novikov::GappedSpectrum::from_levels(levels);
  } catch (const InvalidArgument& e) {
    throw FormatError("/spectrum", e.what());
  }

  std::map<std::string, strata::ComponentData> comps;
  const Json& cs = rd.array(rd.at(doc, "", "components"), "/components");
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const std::string p = "/components/" + std::to_string(i);
    strata::ComponentData c;
    c.name = rd.str(rd.at(cs[i], p, "name"), p + "/name");
    c.dimension = cs[i].contains("dim") ? rd.integer(cs[i]["dim"], p + "/dim") : 0;
    c.maslov_parity = parity(cs[i].contains("mu") ? rd.integer(cs[i]["mu"], p + "/mu") : 0);
    if (!comps.emplace(c.name, c).second) throw FormatError(p + "/name", "duplicate component '" + c.name + "'");
  }

  std::vector<ainfty::HomSpace> spaces;
  const Json& ss = rd.array(rd.at(doc, "", "spaces"), "/spaces");
  for (std::size_t i = 0; i < ss.size(); ++i) {
    const std::string p = "/spaces/" + std::to_string(i);
    const std::string name = rd.str(rd.at(ss[i], p, "component"), p + "/component");
    auto it = comps.find(name);
    if (it == comps.end()) throw FormatError(p + "/component", "unknown component '" + name + "'");
    ainfty::HomSpace h{it->second, {}};
    const Json& basis = rd.array(rd.at(ss[i], p, "basis"), p + "/basis");
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const std::string q = p + "/basis/" + std::to_string(b);
      h.basis.push_back({rd.str(rd.at(basis[b], q, "name"), q + "/name"), rd.integer(rd.at(basis[b], q, "degree"), q + "/degree")});
      for (std::size_t e = 0; e + 1 < h.basis.size(); ++e)
        if (h.basis[e].name == h.basis.back().name) throw FormatError(q + "/name", "duplicate generator '" + h.basis.back().name + "'");
    }
    spaces.push_back(std::move(h));
  }

  std::optional<ainfty::FilteredAInfty> a;
  try {
    a.emplace(std::move(spaces), novikov::EnergyCutoff(cutoff), spectrum);
  } catch (const InvalidArgument& e) {
    throw FormatError("/spaces", e.what());
  }

  if (!doc.contains("operations")) return *a;
  const Json& ops = rd.array(doc["operations"], "/operations");
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const std::string p = "/operations/" + std::to_string(i);
    const Json& o = ops[i];
    ainfty::Operation op;
    op.k = static_cast<int>(rd.integer(rd.at(o, p, "k"), p + "/k"));
    op.B.energy = o.contains("energy") ? rd.rational(o["energy"], p + "/energy") : Rational(0);
    op.B.tag = o.contains("tag") ? rd.str(o["tag"], p + "/tag") : "";
    auto comp = [&](const Json& v, const std::string& q) {
      try {
        return a->component_index(rd.str(v, q));
      } catch (const InvalidArgument& e) {
        throw FormatError(q, e.what());
      }
    };
    const Json& ins = rd.array(rd.at(o, p, "inputs"), p + "/inputs");
    for (std::size_t c = 0; c < ins.size(); ++c) op.inputs.push_back(comp(ins[c], p + "/inputs/" + std::to_string(c)));
    op.output = comp(rd.at(o, p, "output"), p + "/output");
    if (static_cast<int>(op.inputs.size()) != op.k) throw FormatError(p + "/inputs", "expected k input components");
    const Json& vals = rd.array(rd.at(o, p, "values"), p + "/values");
    for (std::size_t v = 0; v < vals.size(); ++v) {
      const std::string q = p + "/values/" + std::to_string(v);
      const Json& in = rd.array(rd.at(vals[v], q, "in"), q + "/in");
      if (static_cast<int>(in.size()) != op.k) throw FormatError(q + "/in", "expected k input generators");
      std::vector<int> tuple;
      for (std::size_t x = 0; x < in.size(); ++x) {
        const std::string r = q + "/in/" + std::to_string(x);
        try {
          tuple.push_back(a->spaces()[op.inputs[x]].index_of(rd.str(in[x], r)));
        } catch (const InvalidArgument& e) {
          throw FormatError(r, e.what());
        }
      }
      const Json& out = rd.at(vals[v], q, "out");
      if (!out.is_object()) throw FormatError(q + "/out", "expected an object of generator: coefficient");
      auto& slot = op.values[tuple];
      if (!slot.empty()) throw FormatError(q + "/in", "input tuple listed twice");
      for (const auto& [gname, coeff] : out.items()) {
        const std::string r = q + "/out/" + gname;
        int idx = 0;
        try {
          idx = a->spaces()[op.output].index_of(gname);
        } catch (const InvalidArgument& e) {
          throw FormatError(r, e.what());
        }
        slot[idx] = slot[idx] + rd.novikov(coeff, r);
      }
    }
    try {
      a->add_operation(std::move(op));
    } catch (const InvalidArgument& e) {
      throw FormatError(p, e.what());
    }
  }
  return *a;
}

inline ainfty::FilteredAInfty structure_from_text(std::string_view text, std::optional<Rational> cutoff_override = {}) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(detail::line_col(text, e.byte == 0 ? 0 : e.byte - 1), "invalid JSON");
  }
  return structure_from_json(doc, cutoff_override);
}

inline ainfty::FilteredAInfty load_structure(const std::string& path, std::optional<Rational> cutoff_override = {}) {
  std::ifstream in(path);
  if (!in) throw FormatError(path, "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return structure_from_text(ss.str(), cutoff_override);
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.where(), std::string(e.what()).substr(e.where().size() + 2));
  }
}

/// The inverse of structure_from_json for undeformed structures.
inline Json structure_to_json(const ainfty::FilteredAInfty& a) {
  if (a.is_deformed()) throw InvalidArgument("deformed structures are evaluated lazily and have no table form");
  Json doc;
  doc["cutoff"] = to_string(a.cutoff().value());
  Json sp = Json::array();
  for (const auto& l : a.spectrum().levels())
    if (l != 0) sp.push_back(to_string(l));
  doc["spectrum"] = sp;
  Json cs = Json::array(), ss = Json::array();
  for (const auto& h : a.spaces()) {
    cs.push_back({{"name", h.component.name}, {"dim", h.component.dimension}, {"mu", h.component.maslov_parity}});
    Json basis = Json::array();
    for (const auto& g : h.basis) basis.push_back({{"name", g.name}, {"degree", g.degree}});
    ss.push_back({{"component", h.component.name}, {"basis", basis}});
  }
  doc["components"] = cs;
  doc["spaces"] = ss;
  Json ops = Json::array();
  for (const auto& op : a.operations()) {
    Json o;
    o["k"] = op.k;
    o["energy"] = to_string(op.B.energy);
    o["tag"] = op.B.tag;
    Json ins = Json::array();
    for (int c : op.inputs) ins.push_back(a.spaces()[c].component.name);
    o["inputs"] = ins;
    o["output"] = a.spaces()[op.output].component.name;
    Json vals = Json::array();
    for (const auto& [tuple, out] : op.values) {
      if (out.empty()) continue;
      Json in = Json::array();
      for (int i = 0; i < op.k; ++i) in.push_back(a.spaces()[op.inputs[i]].basis[tuple[i]].name);
      Json o2 = Json::object();
      for (const auto& [idx, c] : out) o2[a.spaces()[op.output].basis[idx].name] = c.to_string();
      vals.push_back({{"in", in}, {"out", o2}});
    }
    o["values"] = vals;
    ops.push_back(o);
  }
  doc["operations"] = ops;
  return doc;
}

/// Sign context as {"k", "j", "k_outer", "k_inner", "degs", "mus", "mu_node", "mu_out", "dim_out", "dim_node"}.
inline Json context_to_json(const signs::SignContext& c) {
  return Json{{"k", c.k},           {"j", c.j},           {"k_outer", c.k_outer}, {"k_inner", c.k_inner},
              {"degs", c.degs},     {"mus", c.mus},       {"mu_node", c.mu_node}, {"mu_out", c.mu_out},
              {"dim_out", c.dim_out}, {"dim_node", c.dim_node}};
}

inline signs::SignContext context_from_json(const Json& doc) {
  detail::Reader rd;
  signs::SignContext c;
  auto num = [&](const char* key) { return rd.integer(rd.at(doc, "", key), std::string("/") + key); };
  auto list = [&](const char* key) {
    std::vector<long long> out;
    const Json& v = rd.array(rd.at(doc, "", key), std::string("/") + key);
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(rd.integer(v[i], std::string("/") + key + "/" + std::to_string(i)));
    return out;
  };
  c.k = static_cast<int>(num("k"));
  c.j = static_cast<int>(num("j"));
  c.k_outer = static_cast<int>(num("k_outer"));
  c.k_inner = static_cast<int>(num("k_inner"));
  c.degs = list("degs");
  c.mus = list("mus");
  c.mu_node = num("mu_node");
  c.mu_out = num("mu_out");
  c.dim_out = num("dim_out");
  c.dim_node = doc.contains("dim_node") ? num("dim_node") : 0;
  try {
    c.validate();
  } catch (const InvalidArgument& e) {
    throw FormatError("/", e.what());
  }
  return c;
}

}  // namespace bmsign::io
