#pragma once

// Presentations of group extensions 1 -> A -> E -> G -> 1 assembled from a
// presentation of A, a presentation of G, lifts of the G-generators and the
// kernel words expressing lifted relators and conjugates. Also Tietze
// generator elimination.

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hbraid/error.hpp"
#include "hbraid/io.hpp"
#include "hbraid/presentation.hpp"
#include "hbraid/word.hpp"

namespace hbraid {

struct ExtensionData {
  Presentation kernel;
  Presentation quotient;
  // quotient generator -> lifted generator (a single letter)
  std::map<Symbol, Word> lifts;
  // quotient relator label -> kernel word
  std::map<std::string, Word> rel_words;
  // (quotient generator y, kernel generator x) -> kernel word for y~ x y~^-1
  std::map<std::pair<Symbol, Symbol>, Word> conj_words;
};

inline std::string conj_key(const Symbol& y, const Symbol& x) { return to_string(y) + "," + to_string(x); }

inline Json to_json(const ExtensionData& d) {
  Json j;
  j["kernel"] = to_json(d.kernel);
  j["quotient"] = to_json(d.quotient);
  Json lifts = Json::object();
  for (const auto& [y, w] : d.lifts) lifts[to_string(y)] = to_string(w);
  j["lifts"] = lifts;
  Json rel = Json::object();
  for (const auto& [label, w] : d.rel_words) rel[label] = to_string(w);
  j["rel_words"] = rel;
  Json conj = Json::object();
  for (const auto& [key, w] : d.conj_words) conj[conj_key(key.first, key.second)] = to_string(w);
  j["conj_words"] = conj;
  return j;
}

inline ExtensionData extension_data_from_json(const Json& j) {
  try {
    ExtensionData d;
    d.kernel = presentation_from_json(j.at("kernel"));
    d.quotient = presentation_from_json(j.at("quotient"));
    for (const auto& [k, v] : j.at("lifts").items()) d.lifts[parse_symbol(k)] = parse_word(v.get<std::string>());
    for (const auto& [k, v] : j.at("rel_words").items()) d.rel_words[k] = parse_word(v.get<std::string>());
    for (const auto& [k, v] : j.at("conj_words").items()) {
      auto comma = k.find(',');
      if (comma == std::string::npos) throw ParseError("conj_words key '" + k + "' is not of the form y,x");
      d.conj_words[{parse_symbol(k.substr(0, comma)), parse_symbol(k.substr(comma + 1))}] =
          parse_word(v.get<std::string>());
    }
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed extension data: ") + e.what());
  }
}

inline ExtensionData parse_extension_json(const std::string& text) {
  try {
    return extension_data_from_json(Json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

namespace detail {

inline Symbol single_letter(const Word& w, const std::string& what) {
  if (w.length() != 1 || w.letters()[0].exp != 1) throw Error(what + " must be a single generator, got " + to_string(w));
  return w.letters()[0].sym;
}

inline void push_unique(std::vector<Symbol>& v, const Symbol& s) {
  for (const auto& x : v)
    if (x == s) return;
  v.push_back(s);
}

}  // namespace detail

// Generators: kernel generators, then the lifts. Relators:
//   T1  kernel relators (families expanded at their bound)
//   T2  lifted quotient relator times the inverse of its kernel word
//   T3  y~ x y~^-1 times the inverse of its kernel word
inline Presentation assemble_extension(const ExtensionData& d) {
  Presentation out;
  const bool braid_case = d.kernel.family == FamilyTag::Pure && d.quotient.family == FamilyTag::Symmetric;
  out.family = braid_case ? FamilyTag::Extension : FamilyTag::Custom;
  out.n = d.kernel.n;
  out.g = d.kernel.g;
  out.closed = d.kernel.closed;
  out.lh_bound = d.kernel.lh_bound;
  const Alphabet al = out.alphabet();

  out.generators = d.kernel.generators;
  std::map<Symbol, Symbol> lift_of;
  for (const auto& y : d.quotient.generators) {
    auto it = d.lifts.find(y);
    if (it == d.lifts.end()) throw IncompleteData("no lift for quotient generator " + to_string(y));
    Symbol ly = detail::single_letter(it->second, "lift of " + to_string(y));
    lift_of[y] = ly;
    detail::push_unique(out.generators, ly);
  }

  detail::RelatorBuilder b{al, {}};
  for (const auto& r : all_relators(d.kernel)) b.add("T1:" + r.label, r.word);

  for (const auto& r : all_relators(d.quotient)) {
    auto it = d.rel_words.find(r.label);
    if (it == d.rel_words.end()) throw IncompleteData("no kernel word for quotient relator " + r.label);
    std::vector<Letter> lifted;
    for (const auto& l : r.word.letters()) {
      auto li = lift_of.find(l.sym);
      if (li == lift_of.end()) throw IncompleteData("quotient relator " + r.label + " uses unlisted generator " + to_string(l.sym));
      lifted.push_back({li->second, l.exp});
    }
    b.add("T2:" + r.label, Word::reduce(lifted, al), it->second);
  }

  for (const auto& y : d.quotient.generators)
    for (const auto& x : d.kernel.generators) {
      auto it = d.conj_words.find({y, x});
      if (it == d.conj_words.end()) throw IncompleteData("no conjugation word for " + conj_key(y, x));
      Word yl = Word::letter(lift_of[y], 1, al);
      b.add("T3:" + conj_key(y, x), yl * Word::letter(x, 1, al) * invert(yl), it->second);
    }
  out.relators = std::move(b.out);
  return out;
}

// ---------------------------------------------------------------------------
// Tietze elimination.

// Removes `gen` using the relator labelled `label`, in which gen must occur
// exactly once. From U gen V = 1 it substitutes gen := U^-1 V^-1
// (U gen^-1 V = 1 gives gen := V U) everywhere and drops relators that become
// freely trivial. Families are expanded first.
inline Presentation tietze_eliminate(const Presentation& p, const Symbol& gen, const std::string& label) {
  Presentation q = materialize(p);
  auto it = std::find_if(q.relators.begin(), q.relators.end(), [&](const Relator& r) { return r.label == label; });
  if (it == q.relators.end()) throw Error("no relator labelled " + label);
  const auto& ls = it->word.letters();
  std::optional<std::size_t> pos;
  for (std::size_t k = 0; k < ls.size(); ++k)
    if (ls[k].sym == gen) {
      if (pos) throw Error("relator " + label + " does not isolate " + to_string(gen) + " (it occurs more than once)");
      pos = k;
    }
  if (!pos) throw Error("relator " + label + " does not isolate " + to_string(gen) + " (it does not occur)");
  const Alphabet al = q.alphabet();
  Word U = Word::reduce(std::span<const Letter>(ls.data(), *pos), al);
  Word V = Word::reduce(std::span<const Letter>(ls.data() + *pos + 1, ls.size() - *pos - 1), al);
  const Word def = ls[*pos].exp > 0 ? invert(U) * invert(V) : V * U;
  const Word def_inv = invert(def);
  q.relators.erase(it);

  std::vector<Relator> kept;
  for (auto& r : q.relators) {
    if (!r.word.contains(gen)) {
      kept.push_back(std::move(r));
      continue;
    }
    Word w(al);
    for (const auto& l : r.word.letters())
      w = w * (l.sym == gen ? (l.exp > 0 ? def : def_inv) : Word::letter(l.sym, l.exp, al));
    if (!w.empty()) kept.push_back({r.label, std::move(w)});
  }
  q.relators = std::move(kept);
  q.generators.erase(std::remove(q.generators.begin(), q.generators.end(), gen), q.generators.end());
  return q;
}

// ---------------------------------------------------------------------------
// Built-in data for the link-homotopy braid group as an extension of the
// symmetric group by the homotopy string links: lifts d_i -> s_i,
// d_i^2 -> t_{i,i+1}, and the conjugates of a_{i,r}, t_{i,j} by s_k.

inline Word conjugation_word_a(int k, int i, int r, Alphabet al = Alphabet::unbounded()) {
  const Word t = Word::letter(tgen(k, k + 1), 1, al);
  auto A = [&](int j) { return Word::letter(surf_a(j, r), 1, al); };
  const bool even = r % 2 == 0;
  if (i == k) return even ? A(k + 1) * invert(t) : t * A(k + 1);
  if (i == k + 1) return even ? t * A(k) : A(k) * invert(t);
  return A(i);
}

inline Word conjugation_word_t(int k, int i, int j, Alphabet al = Alphabet::unbounded()) {
  auto T = [&](int a, int b) { return Word::letter(tgen(a, b), 1, al); };
  if (k == i - 1) return T(i - 1, j);
  if (k == i) return j == i + 1 ? T(i, i + 1) : T(i, i + 1) * T(i + 1, j) * invert(T(i, i + 1));
  if (k == j - 1) return T(i, j - 1);
  if (k == j) return T(j, j + 1) * T(i, j + 1) * invert(T(j, j + 1));
  return T(i, j);
}

inline ExtensionData homotopy_extension_data(int n, int g, bool closed, int lh_bound) {
  ExtensionData d;
  d.kernel = pure_homotopy_presentation(n, g, closed, lh_bound);
  d.quotient = symmetric_presentation(n);
  const Alphabet al = Alphabet::surface(n, g);
  for (const auto& y : d.quotient.generators) d.lifts[y] = Word::letter(y, 1, al);
  for (const auto& r : d.quotient.relators) {
    Word w(al);
    if (r.label.rfind("SR3", 0) == 0) {
      int i = r.word.letters().front().sym.i;
      w = Word::letter(tgen(i, i + 1), 1, al);
    }
    d.rel_words[r.label] = w;
  }
  for (int k = 1; k <= n - 1; ++k)
    for (const auto& x : d.kernel.generators) {
      Word w = x.kind == SymbolKind::SurfA ? conjugation_word_a(k, x.i, x.j, al) : conjugation_word_t(k, x.i, x.j, al);
      d.conj_words[{sigma(k), x}] = w;
    }
  return d;
}

// Adds R7..R9 to an assembled presentation and eliminates every t_{j,k}
// (via R9), then a_{i,r} for i = 2..n (via R7/R8), leaving a_{1,r} and s_i.
inline Presentation reduce_to_surface_generators(const Presentation& assembled) {
  Presentation p = materialize(assembled);
  const int n = p.n, g = p.g;
  auto aux = auxiliary_relators(n, g, p.alphabet());
  for (auto& r : aux) r.label = "aux:" + r.label;
  p.relators.insert(p.relators.end(), aux.begin(), aux.end());
  for (int j = 1; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k) p = tietze_eliminate(p, tgen(j, k), "aux:R9" + detail::idx({j, k}));
  for (int i = 2; i <= n; ++i)
    for (int r = 1; r <= 2 * g; ++r)
      p = tietze_eliminate(p, surf_a(i, r), std::string(r % 2 == 0 ? "aux:R7" : "aux:R8") + detail::idx({i - 1, r}));
  return p;
}

}  // namespace hbraid
