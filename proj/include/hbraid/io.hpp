#pragma once

// Presentation serialization: a JSON document and a line-oriented text form.
//
// Text form:
//   # family: homotopy
//   # n: 3
//   # g: 1
//   # closed: true
//   # lh_bound: 1
//   # generators: a1.1 a1.2 s1 s2
//   # relator-family: LH 3 1 1
//   s1 s2 s1 s2^-1 s1^-1 s2^-1  # R2[1]
// Header lines are optional; a relator line is a word, optionally followed by
// "# label".

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hbraid/error.hpp"
#include "hbraid/presentation.hpp"
#include "hbraid/word.hpp"

namespace hbraid {

using Json = nlohmann::ordered_json;

inline Json to_json(const RelatorFamily& f) {
  return Json{{"kind", to_string(f.kind)}, {"n", f.n}, {"g", f.g}, {"bound", f.bound}};
}

inline RelatorFamily relator_family_from_json(const Json& j) {
  return {family_kind_from_string(j.at("kind").get<std::string>()), j.at("n").get<int>(), j.at("g").get<int>(),
          j.at("bound").get<int>()};
}

inline Json to_json(const Presentation& p) {
  Json j;
  j["family"] = to_string(p.family);
  j["n"] = p.n;
  j["g"] = p.g;
  j["closed"] = p.closed;
  j["lh_bound"] = p.lh_bound ? Json(*p.lh_bound) : Json(nullptr);
  Json gens = Json::array();
  for (const auto& s : p.generators) gens.push_back(to_string(s));
  j["generators"] = gens;
  Json rels = Json::array();
  for (const auto& r : p.relators) rels.push_back(Json{{"id", r.label}, {"word", to_string(r.word)}});
  j["relators"] = rels;
  Json fams = Json::array();
  for (const auto& f : p.families) fams.push_back(to_json(f));
  j["families"] = fams;
  return j;
}

inline Presentation presentation_from_json(const Json& j) {
  try {
    Presentation p;
    p.family = family_from_string(j.at("family").get<std::string>());
    p.n = j.at("n").get<int>();
    p.g = j.at("g").get<int>();
    p.closed = j.at("closed").get<bool>();
    if (j.contains("lh_bound") && !j.at("lh_bound").is_null()) p.lh_bound = j.at("lh_bound").get<int>();
    const Alphabet a = p.alphabet();
    for (const auto& s : j.at("generators")) p.generators.push_back(parse_symbol(s.get<std::string>()));
    for (const auto& r : j.at("relators")) {
      if (r.is_string())
        p.relators.push_back({"r" + std::to_string(p.relators.size() + 1), parse_word(r.get<std::string>(), a)});
      else
        p.relators.push_back({r.at("id").get<std::string>(), parse_word(r.at("word").get<std::string>(), a)});
    }
    if (j.contains("families"))
      for (const auto& f : j.at("families")) p.families.push_back(relator_family_from_json(f));
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed presentation JSON: ") + e.what());
  }
}

inline std::string to_json_string(const Presentation& p) { return to_json(p).dump(2) + "\n"; }

inline Presentation parse_presentation_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return presentation_from_json(j);
}

inline std::string to_text(const Presentation& p) {
  std::ostringstream out;
  out << "# family: " << to_string(p.family) << "\n";
  out << "# n: " << p.n << "\n";
  out << "# g: " << p.g << "\n";
  out << "# closed: " << (p.closed ? "true" : "false") << "\n";
  out << "# lh_bound: " << (p.lh_bound ? std::to_string(*p.lh_bound) : "none") << "\n";
  out << "# generators:";
  for (const auto& s : p.generators) out << ' ' << to_string(s);
  out << "\n";
  for (const auto& f : p.families)
    out << "# relator-family: " << to_string(f.kind) << ' ' << f.n << ' ' << f.g << ' ' << f.bound << "\n";
  for (const auto& r : p.relators) out << to_string(r.word) << "  # " << r.label << "\n";
  return out.str();
}

inline Presentation parse_presentation_text(const std::string& text) {
  Presentation p;
  bool have_generators = false;
  std::vector<std::pair<std::string, std::string>> raw;  // (word, label)
  std::istringstream in(text);
  std::string line;
  auto trim = [](std::string s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      std::string body = trim(t.substr(1));
      auto colon = body.find(':');
      if (colon == std::string::npos) continue;
      std::string key = trim(body.substr(0, colon));
      std::string val = trim(body.substr(colon + 1));
      try {
        if (key == "family") p.family = family_from_string(val);
        else if (key == "n") p.n = std::stoi(val);
        else if (key == "g") p.g = std::stoi(val);
        else if (key == "closed") p.closed = (val == "true");
        else if (key == "lh_bound") p.lh_bound = val == "none" ? std::nullopt : std::optional<int>(std::stoi(val));
        else if (key == "generators") {
          have_generators = true;
          std::istringstream gs(val);
          std::string tok;
          while (gs >> tok) p.generators.push_back(parse_symbol(tok));
        } else if (key == "relator-family") {
          std::istringstream fs(val);
          std::string kind;
          RelatorFamily f;
          if (!(fs >> kind >> f.n >> f.g >> f.bound)) throw ParseError("bad relator-family line");
          f.kind = family_kind_from_string(kind);
          p.families.push_back(f);
        }
      } catch (const std::logic_error&) {
        throw ParseError("bad header line: " + t);
      }
      continue;
    }
    auto hash = t.find('#');
    std::string word = trim(t.substr(0, hash));
    std::string label = hash == std::string::npos ? std::string() : trim(t.substr(hash + 1));
    raw.emplace_back(word, label);
  }
  const Alphabet a = p.alphabet();
  for (auto& [w, label] : raw) {
    if (label.empty()) label = "r" + std::to_string(p.relators.size() + 1);
    p.relators.push_back({label, parse_word(w, a)});
  }
  if (!have_generators) {
    std::vector<Symbol> seen;
    for (const auto& r : p.relators)
      for (const auto& l : r.word.letters())
        if (std::find(seen.begin(), seen.end(), l.sym) == seen.end()) seen.push_back(l.sym);
    std::sort(seen.begin(), seen.end());
    p.generators = seen;
  }
  return p;
}

}  // namespace hbraid
