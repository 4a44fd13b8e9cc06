#include "fnlab/io.hpp"

#include <fstream>
#include <sstream>

namespace fnlab::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

/// Runs fn, turning JSON type/shape errors into ParseError.
template <class Fn>
auto guarded(const char* what, Fn&& fn) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    bad(std::string(what) + ": " + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object with \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing \"") + key + "\"");
  return *it;
}

std::vector<std::size_t> index_list(const Json& j, std::size_t n, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<std::size_t> out;
  for (const auto& v : j) {
    if (!v.is_number_unsigned()) bad(std::string(what) + " must hold non-negative integers");
    auto x = v.get<std::size_t>();
    if (x >= n) throw Error(ErrorCode::IndexOutOfRange, std::string(what) + " mentions " + std::to_string(x), {x});
    out.push_back(x);
  }
  return out;
}

SetMap map_from_json(const Json& j, std::size_t n, const char* name) {
  if (!j.is_array()) bad(std::string(name) + " must be an array of sets");
  if (j.size() != n) throw Error(ErrorCode::MapNotTotal, std::string(name) + " needs one set per element");
  SetMap out;
  for (const auto& s : j) {
    ElementSet e(n);
    for (auto x : index_list(s, n, name)) e.insert(x);
    out.push_back(std::move(e));
  }
  return out;
}

Json map_to_json(const SetMap& m) {
  Json out = Json::array();
  for (const auto& s : m) out.push_back(s.members());
  return out;
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + e.what(),
                {line, col});
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json_file(const std::filesystem::path& path) { return parse_json(read_text_file(path)); }

Json poset_to_json(const Poset& p) {
  Json j;
  j["n"] = p.size();
  Json covers = Json::array();
  for (auto [lo, hi] : p.covers()) covers.push_back({lo, hi});
  j["covers"] = covers;
  if (!p.labels().empty()) j["labels"] = p.labels();
  return j;
}

Poset poset_from_json(const Json& j, const Limits& limits) {
  return guarded("poset", [&] {
    const auto n = field(j, "n").get<std::size_t>();
    if (n > limits.max_poset_elements)
      throw Error(ErrorCode::SizeExceeded, "poset has " + std::to_string(n) + " elements");
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    const Json& c = field(j, "covers");
    if (!c.is_array()) bad("covers must be an array");
    for (const auto& e : c) {
      auto ends = index_list(e, n, "cover");
      if (ends.size() != 2) bad("a cover is a [lo, hi] pair");
      covers.emplace_back(ends[0], ends[1]);
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
      labels = j["labels"].get<std::vector<std::string>>();
      if (labels.size() != n) bad("labels must name every element");
    }
    return Poset::from_covers(n, covers, std::move(labels), limits);
  });
}

Json algebra_to_json(const AlgebraDoc& doc) {
  const auto& b = doc.algebra;
  Json j;
  j["kind"] = doc.kind;
  j["params"] = doc.params;
  j["element_count"] = b.size();
  j["atoms"] = b.ambient_atoms();
  if (b.carrier()) j["carrier"] = *b.carrier();
  if (!doc.generators.empty()) j["generators"] = doc.generators;
  return j;
}

AlgebraDoc algebra_from_json(const Json& j) {
  return guarded("algebra", [&] {
    AlgebraDoc doc;
    doc.kind = field(j, "kind").get<std::string>();
    if (j.contains("params")) doc.params = j["params"];
    const auto k = field(j, "atoms").get<unsigned>();
    if (k > kMaxAmbientAtoms) throw Error(ErrorCode::SizeExceeded, "more than 64 ambient atoms");
    if (j.contains("carrier"))
      doc.algebra = BooleanAlgebra::from_carrier(k, j["carrier"].get<std::vector<Mask>>());
    else
      doc.algebra = BooleanAlgebra::powerset(k);
    if (j.contains("generators")) doc.generators = j["generators"].get<std::vector<Mask>>();
    if (j.contains("element_count") && j["element_count"].get<std::uint64_t>() != doc.algebra.size())
      bad("element_count does not match the algebra");
    return doc;
  });
}

Poset structure_from_json(const Json& j, const Limits& limits) {
  if (j.is_object() && j.contains("kind")) return algebra_from_json(j).algebra.as_poset(limits);
  return poset_from_json(j, limits);
}

Json pair_to_json(const FnPair& pair) {
  Json j;
  j["poset"] = poset_to_json(*pair.poset);
  j["f"] = map_to_json(pair.f);
  j["g"] = map_to_json(pair.g);
  return j;
}

FnPair pair_from_json(const Json& j, const std::filesystem::path& base_dir, const Limits& limits) {
  return guarded("pair", [&] {
    const Json& ref = field(j, "poset");
    Poset p = ref.is_string() ? structure_from_json(read_json_file(base_dir / ref.get<std::string>()), limits)
                              : structure_from_json(ref, limits);
    const std::size_t n = p.size();
    FnPair pair{share(std::move(p)), map_from_json(field(j, "f"), n, "f"), map_from_json(field(j, "g"), n, "g")};
    return pair;
  });
}

Json verdict_to_json(const Verdict& v) {
  Json j;
  j["valid"] = v.valid;
  if (v.violation)
    j["violation"] = {{"p", v.violation->p}, {"q", v.violation->q}, {"clause", v.violation->clause}};
  else
    j["violation"] = nullptr;
  if (v.interpolants) {
    Json list = Json::array();
    for (const auto& w : *v.interpolants) list.push_back({{"p", w.p}, {"q", w.q}, {"r", w.r}, {"s", w.s}});
    j["interpolants"] = list;
  }
  return j;
}

Verdict verdict_from_json(const Json& j) {
  return guarded("verdict", [&] {
    Verdict v;
    v.valid = field(j, "valid").get<bool>();
    if (j.contains("violation") && !j["violation"].is_null()) {
      const Json& w = j["violation"];
      v.violation = Violation{field(w, "p").get<std::size_t>(), field(w, "q").get<std::size_t>(),
                              field(w, "clause").get<int>()};
    }
    if (j.contains("interpolants")) {
      std::vector<Interpolant> list;
      for (const auto& w : j["interpolants"])
        list.push_back({field(w, "p").get<std::size_t>(), field(w, "q").get<std::size_t>(),
                        field(w, "r").get<std::size_t>(), field(w, "s").get<std::size_t>()});
      v.interpolants = std::move(list);
    }
    return v;
  });
}

std::string frontier_to_csv(const Frontier& f) {
  std::string out = "a,b\n";
  for (const auto& c : f.points) out += std::to_string(c.a) + "," + std::to_string(c.b) + "\n";
  if (!f.complete) {
    out += "# INCONCLUSIVE";
    if (f.stalled_at) out += ": budget exhausted at " + std::to_string(f.stalled_at->a) + "," + std::to_string(f.stalled_at->b);
    out += "\n";
  }
  return out;
}

FrontierCsv frontier_from_csv(std::string_view text) {
  FrontierCsv out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line == "a,b") continue;
    if (line.starts_with("# INCONCLUSIVE")) {
      out.complete = false;
      continue;
    }
    if (line.starts_with("#")) continue;
    const auto comma = line.find(',');
    try {
      if (comma == std::string::npos) throw std::invalid_argument("no comma");
      std::size_t used = 0;
      const auto a = std::stoull(line.substr(0, comma), &used);
      if (used != comma) throw std::invalid_argument("junk");
      const auto rest = line.substr(comma + 1);
      const auto b = std::stoull(rest, &used);
      if (used != rest.size()) throw std::invalid_argument("junk");
      out.points.push_back({a, b});
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ", column 1: expected a,b", {lineno, 1});
    }
  }
  return out;
}

}  // namespace fnlab::io
