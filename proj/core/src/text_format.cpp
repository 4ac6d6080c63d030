// Copyright 2026 The crnreach Authors
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

#include "crnreach/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>
#include <sstream>

namespace crnreach {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message), line_(line), column_(column) {}

namespace {

enum class Tok { Ident, Number, Plus, Arrow, Colon, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;  // 1-based
};

bool identStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool identChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '^' || c == '*' || c == '\'';
}

std::string_view stripComment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

std::vector<Token> tokenize(std::string_view line, std::size_t lineNo) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (identStart(c)) {
      std::size_t j = i;
      while (j < line.size() && identChar(line[j])) ++j;
      out.push_back({Tok::Ident, std::string(line.substr(i, j - i)), i + 1});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      out.push_back({Tok::Number, std::string(line.substr(i, j - i)), i + 1});
      i = j;
    } else if (c == '+') {
      out.push_back({Tok::Plus, "+", i + 1});
      ++i;
    } else if (c == ':') {
      out.push_back({Tok::Colon, ":", i + 1});
      ++i;
    } else if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      out.push_back({Tok::Arrow, "->", i + 1});
      i += 2;
    } else {
      throw ParseError(lineNo, i + 1, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", line.size() + 1});
  return out;
}

struct Term {
  std::string species;
  Count count;
  std::size_t column;
};

struct Cursor {
  const std::vector<Token>& toks;
  std::size_t line;
  std::size_t pos = 0;

  const Token& peek() const { return toks[pos]; }
  const Token& next() { return toks[pos++]; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line, peek().column, msg); }
  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what);
    return next();
  }
};

// multiset := '0' | term ('+' term)* ; term := [number] ident
std::vector<Term> parseMultiset(Cursor& cur) {
  std::vector<Term> terms;
  if (cur.peek().kind == Tok::Number && cur.peek().text == "0" &&
      cur.toks[cur.pos + 1].kind != Tok::Ident) {
    cur.next();
    return terms;
  }
  for (;;) {
    Count k = 1;
    const std::size_t column = cur.peek().column;
    if (cur.peek().kind == Tok::Number) {
      k = parseCount(cur.next().text);
      if (k == 0) throw ParseError(cur.line, column, "coefficient must be positive");
    }
    const Token& name = cur.expect(Tok::Ident, "species name");
    terms.push_back({name.text, k, column});
    if (cur.peek().kind != Tok::Plus) break;
    cur.next();
  }
  return terms;
}

struct RuleLine {
  std::vector<Term> lhs, rhs;
  std::size_t line;
};

struct ConfigLine {
  std::string name;
  std::vector<Term> terms;
  std::size_t line;
};

struct ProblemLine {
  std::vector<Token> toks;
  std::size_t line;
};

std::vector<std::string_view> splitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = text.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == text.size()) break;
    start = nl + 1;
  }
  return lines;
}

}  // namespace

CrnDocument parseCrnDocument(std::string_view text) {
  std::vector<std::string> species;
  std::map<std::string, std::size_t> index;
  auto declare = [&](const std::string& name) {
    if (index.emplace(name, species.size()).second) species.push_back(name);
  };
  std::vector<RuleLine> rules;
  std::vector<ConfigLine> configs;
  std::optional<ProblemLine> problem;
  bool sawSpecies = false;

  const auto lines = splitLines(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const std::size_t lineNo = n + 1;
    const auto toks = tokenize(stripComment(lines[n]), lineNo);
    if (toks.front().kind == Tok::End) continue;
    Cursor cur{toks, lineNo};
    const bool keyword = toks[0].kind == Tok::Ident;
    if (keyword && toks[0].text == "species" && toks[1].kind == Tok::Colon) {
      if (sawSpecies) cur.fail("duplicate species declaration");
      if (!rules.empty()) cur.fail("species declaration must precede rules");
      sawSpecies = true;
      cur.pos = 2;
      while (cur.peek().kind != Tok::End) {
        const Token& t = cur.expect(Tok::Ident, "species name");
        if (index.count(t.text)) throw ParseError(lineNo, t.column, "species '" + t.text + "' declared twice");
        declare(t.text);
      }
    } else if (keyword && toks[0].text == "config" && toks[1].kind == Tok::Ident && toks[2].kind == Tok::Colon) {
      cur.pos = 3;
      ConfigLine c{toks[1].text, parseMultiset(cur), lineNo};
      cur.expect(Tok::End, "end of line");
      for (const auto& other : configs) {
        if (other.name == c.name) throw ParseError(lineNo, toks[1].column, "config '" + c.name + "' defined twice");
      }
      configs.push_back(std::move(c));
    } else if (keyword && toks[0].text == "problem" && toks[1].kind == Tok::Colon) {
      if (problem) cur.fail("duplicate problem line");
      problem = ProblemLine{toks, lineNo};
    } else {
      RuleLine r;
      r.line = lineNo;
      r.lhs = parseMultiset(cur);
      cur.expect(Tok::Arrow, "'->'");
      r.rhs = parseMultiset(cur);
      cur.expect(Tok::End, "end of line");
      for (const auto& t : r.lhs) declare(t.species);
      for (const auto& t : r.rhs) declare(t.species);
      rules.push_back(std::move(r));
    }
  }

  for (const auto& name : species) {
    if (!isValidSpeciesName(name)) throw ParseError(1, 1, "invalid species name '" + name + "'");
  }
  const std::size_t width = species.size();
  std::vector<Rule> built;
  for (std::size_t k = 0; k < rules.size(); ++k) {
    Configuration lhs(width), rhs(width);
    for (const auto& t : rules[k].lhs) lhs.add(index.at(t.species), t.count);
    for (const auto& t : rules[k].rhs) rhs.add(index.at(t.species), t.count);
    try {
      built.emplace_back(static_cast<RuleId>(k), std::move(lhs), std::move(rhs));
    } catch (const Error& e) {
      throw ParseError(rules[k].line, 1, e.what());
    }
  }
  CrnDocument doc{Crn(std::move(species), std::move(built)), {}, std::nullopt};

  for (const auto& c : configs) {
    Configuration conf = doc.crn.zero();
    for (const auto& t : c.terms) {
      auto s = doc.crn.findSpecies(t.species);
      if (!s) throw ParseError(c.line, t.column, "unknown species '" + t.species + "' in config " + c.name);
      conf.add(*s, t.count);
    }
    doc.configs.emplace(c.name, std::move(conf));
  }

  if (problem) {
    Cursor cur{problem->toks, problem->line, 2};
    const Token& kind = cur.expect(Tok::Ident, "reach, produce or universal");
    if (kind.text == "reach") {
      doc.problem = Reach{};
    } else if (kind.text == "universal") {
      doc.problem = UniversalReach{};
    } else if (kind.text == "produce") {
      const Token& s = cur.expect(Tok::Ident, "species name");
      auto idx = doc.crn.findSpecies(s.text);
      if (!idx) throw ParseError(problem->line, s.column, "unknown species '" + s.text + "'");
      const Token& k = cur.expect(Tok::Number, "count");
      Count kv = parseCount(k.text);
      if (kv < 1) throw ParseError(problem->line, k.column, "production count must be at least 1");
      doc.problem = Production{*idx, kv};
    } else {
      throw ParseError(problem->line, kind.column, "unknown problem '" + kind.text + "'");
    }
    cur.expect(Tok::End, "end of line");
  }
  return doc;
}

Crn parseCrn(std::string_view text) { return parseCrnDocument(text).crn; }

Instance parseInstance(std::string_view text) {
  CrnDocument doc = parseCrnDocument(text);
  Problem problem = doc.problem.value_or(Reach{});
  auto init = doc.configs.find("init");
  if (init == doc.configs.end()) throw ParseError(1, 1, "missing 'config init'");
  auto target = doc.configs.find("target");
  Configuration d = doc.crn.zero();
  if (target != doc.configs.end()) {
    d = target->second;
  } else if (!std::holds_alternative<Production>(problem)) {
    throw ParseError(1, 1, "missing 'config target'");
  }
  return Instance(std::move(doc.crn), init->second, std::move(d), std::move(problem));
}

std::string formatMultiset(const Crn& crn, const Configuration& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (c[i] != 1) out += toString(c[i]);
    out += crn.speciesName(i);
  }
  return out.empty() ? "0" : out;
}

std::string formatRule(const Crn& crn, const Rule& r) {
  return formatMultiset(crn, r.reactants()) + " -> " + formatMultiset(crn, r.products());
}

std::string formatCrn(const Crn& crn) {
  std::string out = "species:";
  for (const auto& s : crn.speciesNames()) out += " " + s;
  out += "\n";
  for (const auto& r : crn.rules()) out += formatRule(crn, r) + "\n";
  return out;
}

std::string formatInstance(const Instance& instance) {
  const Crn& crn = instance.crn();
  std::string out = formatCrn(crn);
  out += "config init: " + formatMultiset(crn, instance.initial()) + "\n";
  const auto* prod = std::get_if<Production>(&instance.problem());
  if (!prod) out += "config target: " + formatMultiset(crn, instance.target()) + "\n";
  if (prod) {
    out += "problem: produce " + crn.speciesName(prod->species) + " " + toString(prod->k) + "\n";
  } else {
    out += "problem: " + problemName(instance.problem()) + "\n";
  }
  return out;
}

namespace {

// Whitespace-separated words of each non-empty line, with its 1-based number.
std::vector<std::pair<std::size_t, std::vector<std::string>>> wordLines(std::string_view text, char comment) {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> out;
  const auto lines = splitLines(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    std::string_view line = lines[n];
    const auto c = line.find(comment);
    if (c != std::string_view::npos) line = line.substr(0, c);
    std::istringstream in{std::string(line)};
    std::vector<std::string> words;
    for (std::string w; in >> w;) words.push_back(w);
    if (!words.empty()) out.emplace_back(n + 1, std::move(words));
  }
  return out;
}

std::size_t parseIndex(const std::string& word, std::size_t line) {
  if (word.empty() || !std::all_of(word.begin(), word.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw ParseError(line, 1, "expected a non-negative integer, got '" + word + "'");
  }
  try {
    return std::stoull(word);
  } catch (const std::exception&) {
    throw ParseError(line, 1, "integer out of range '" + word + "'");
  }
}

void expectWords(const std::vector<std::string>& words, std::size_t n, std::size_t line) {
  if (words.size() != n) {
    throw ParseError(line, 1, "'" + words[0] + "' expects " + std::to_string(n - 1) + " argument(s)");
  }
}

}  // namespace

Digraph parseDigraph(std::string_view text) {
  Digraph g;
  std::map<std::string, std::size_t> index;
  auto vertex = [&](const std::string& name, std::size_t line) {
    auto it = index.find(name);
    if (it == index.end()) throw ParseError(line, 1, "unknown vertex '" + name + "'");
    return it->second;
  };
  for (const auto& [line, w] : wordLines(text, '#')) {
    if (w[0] == "vertices") {
      for (std::size_t i = 1; i < w.size(); ++i) {
        if (!isValidSpeciesName(w[i])) throw ParseError(line, 1, "invalid vertex name '" + w[i] + "'");
        if (!index.emplace(w[i], g.vertices.size()).second) throw ParseError(line, 1, "duplicate vertex '" + w[i] + "'");
        g.vertices.push_back(w[i]);
      }
    } else if (w[0] == "edge") {
      expectWords(w, 3, line);
      g.edges.emplace_back(vertex(w[1], line), vertex(w[2], line));
    } else if (w[0] == "source") {
      expectWords(w, 2, line);
      g.source = vertex(w[1], line);
    } else if (w[0] == "target") {
      expectWords(w, 2, line);
      g.target = vertex(w[1], line);
    } else {
      throw ParseError(line, 1, "unknown directive '" + w[0] + "'");
    }
  }
  return g;
}

std::string formatDigraph(const Digraph& g) {
  std::string out = "vertices";
  for (const auto& v : g.vertices) out += " " + v;
  out += "\n";
  for (const auto& [u, v] : g.edges) out += "edge " + g.vertices[u] + " " + g.vertices[v] + "\n";
  if (g.source) out += "source " + g.vertices[*g.source] + "\n";
  if (g.target) out += "target " + g.vertices[*g.target] + "\n";
  return out;
}

Hypergraph parseHypergraph(std::string_view text) {
  Hypergraph h;
  bool sized = false;
  for (const auto& [line, w] : wordLines(text, '#')) {
    if (w[0] == "n") {
      expectWords(w, 2, line);
      h.xCount = h.yCount = h.zCount = parseIndex(w[1], line);
      sized = true;
    } else if (w[0] == "parts") {
      expectWords(w, 4, line);
      h.xCount = parseIndex(w[1], line);
      h.yCount = parseIndex(w[2], line);
      h.zCount = parseIndex(w[3], line);
      sized = true;
    } else if (w[0] == "e") {
      expectWords(w, 4, line);
      if (!sized) throw ParseError(line, 1, "hyperedge before the partition sizes");
      std::array<std::size_t, 3> e{};
      const std::array<std::size_t, 3> limit{h.xCount, h.yCount, h.zCount};
      for (std::size_t k = 0; k < 3; ++k) {
        const std::size_t v = parseIndex(w[k + 1], line);
        if (v < 1 || v > limit[k]) throw ParseError(line, 1, "vertex index " + w[k + 1] + " out of range");
        e[k] = v - 1;
      }
      h.edges.push_back(e);
    } else {
      throw ParseError(line, 1, "unknown directive '" + w[0] + "'");
    }
  }
  return h;
}

std::string formatHypergraph(const Hypergraph& h) {
  std::string out;
  if (h.xCount == h.yCount && h.yCount == h.zCount) {
    out = "n " + std::to_string(h.xCount) + "\n";
  } else {
    out = "parts " + std::to_string(h.xCount) + " " + std::to_string(h.yCount) + " " + std::to_string(h.zCount) + "\n";
  }
  for (const auto& e : h.edges) {
    out += "e " + std::to_string(e[0] + 1) + " " + std::to_string(e[1] + 1) + " " + std::to_string(e[2] + 1) + "\n";
  }
  return out;
}

Cnf parseDimacs(std::string_view text) {
  Cnf f;
  bool header = false;
  std::size_t declaredClauses = 0;
  std::vector<int> clause;
  const auto lines = splitLines(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const std::size_t line = n + 1;
    std::istringstream in{std::string(lines[n])};
    std::string first;
    if (!(in >> first) || first == "c" || first[0] == 'c') continue;
    if (first == "%") break;
    if (first == "p") {
      std::string fmt, vars, clauses;
      if (!(in >> fmt >> vars >> clauses) || fmt != "cnf") throw ParseError(line, 1, "malformed problem line");
      f.variables = parseIndex(vars, line);
      declaredClauses = parseIndex(clauses, line);
      header = true;
      continue;
    }
    if (!header) throw ParseError(line, 1, "clause before the 'p cnf' header");
    std::string word = first;
    do {
      long lit = 0;
      try {
        std::size_t used = 0;
        lit = std::stol(word, &used);
        if (used != word.size()) throw std::invalid_argument(word);
      } catch (const std::exception&) {
        throw ParseError(line, 1, "invalid literal '" + word + "'");
      }
      if (lit == 0) {
        f.clauses.push_back(std::move(clause));
        clause.clear();
      } else {
        if (static_cast<std::size_t>(std::labs(lit)) > f.variables) {
          throw ParseError(line, 1, "literal " + word + " exceeds the declared variable count");
        }
        clause.push_back(static_cast<int>(lit));
      }
    } while (in >> word);
  }
  if (!clause.empty()) f.clauses.push_back(std::move(clause));
  if (header && f.clauses.size() != declaredClauses) {
    throw ParseError(lines.size(), 1,
                     "header declares " + std::to_string(declaredClauses) + " clauses, found " +
                         std::to_string(f.clauses.size()));
  }
  return f;
}

std::string formatDimacs(const Cnf& f) {
  std::string out = "p cnf " + std::to_string(f.variables) + " " + std::to_string(f.clauses.size()) + "\n";
  for (const auto& c : f.clauses) {
    for (int lit : c) out += std::to_string(lit) + " ";
    out += "0\n";
  }
  return out;
}

GadgetSystem parseGadgetSystem(std::string_view text) {
  GadgetSystem sys;
  bool start = false, target = false;
  auto port = [](const std::string& word, std::size_t line) {
    const auto dot = word.rfind('.');
    if (dot == std::string::npos || dot == 0 || dot + 1 == word.size()) {
      throw ParseError(line, 1, "expected <gadget>.<port>, got '" + word + "'");
    }
    return PortRef{word.substr(0, dot), word.substr(dot + 1)};
  };
  for (const auto& [line, w] : wordLines(text, '#')) {
    if (w[0] == "toggle") {
      expectWords(w, 3, line);
      if (w[2] != "unlocked" && w[2] != "locked") throw ParseError(line, 1, "toggle state must be unlocked or locked");
      Gadget g;
      g.name = w[1];
      g.kind = GadgetKind::ToggleLock;
      g.locked = w[2] == "locked";
      sys.gadgets.push_back(g);
    } else if (w[0] == "rotate") {
      expectWords(w, 3, line);
      Gadget g;
      g.name = w[1];
      g.kind = GadgetKind::Rotate;
      g.rotatePorts = parseIndex(w[2], line);
      sys.gadgets.push_back(g);
    } else if (w[0] == "wire") {
      expectWords(w, 4, line);
      sys.wires.push_back({w[1], port(w[2], line), port(w[3], line)});
    } else if (w[0] == "start") {
      expectWords(w, 3, line);
      if (w[2] != "forward" && w[2] != "backward") throw ParseError(line, 1, "direction must be forward or backward");
      sys.startWire = w[1];
      sys.startForward = w[2] == "forward";
      start = true;
    } else if (w[0] == "target") {
      expectWords(w, 2, line);
      sys.targetWire = w[1];
      target = true;
    } else {
      throw ParseError(line, 1, "unknown directive '" + w[0] + "'");
    }
  }
  for (const auto& g : sys.gadgets) {
    if (!isValidSpeciesName(g.name)) throw ParseError(1, 1, "invalid gadget name '" + g.name + "'");
  }
  for (const auto& w : sys.wires) {
    if (!isValidSpeciesName(w.name)) throw ParseError(1, 1, "invalid wire name '" + w.name + "'");
  }
  if (!start) throw ParseError(1, 1, "missing 'start' line");
  if (!target) throw ParseError(1, 1, "missing 'target' line");
  return sys;
}

std::string formatGadgetSystem(const GadgetSystem& sys) {
  std::string out;
  for (const auto& g : sys.gadgets) {
    if (g.kind == GadgetKind::ToggleLock) {
      out += "toggle " + g.name + (g.locked ? " locked\n" : " unlocked\n");
    } else {
      out += "rotate " + g.name + " " + std::to_string(g.rotatePorts) + "\n";
    }
  }
  for (const auto& w : sys.wires) {
    out += "wire " + w.name + " " + w.endpointA.gadget + "." + w.endpointA.port + " " + w.endpointB.gadget + "." +
           w.endpointB.port + "\n";
  }
  out += "start " + sys.startWire + (sys.startForward ? " forward\n" : " backward\n");
  out += "target " + sys.targetWire + "\n";
  return out;
}

OrderedCertificate parseCertificate(std::string_view text) {
  OrderedCertificate cert;
  for (const auto& [line, w] : wordLines(text, '#')) {
    if (w[0] != "block") throw ParseError(line, 1, "unknown directive '" + w[0] + "'");
    expectWords(w, 3, line);
    const std::size_t id = parseIndex(w[1], line);
    if (id > std::numeric_limits<RuleId>::max()) throw ParseError(line, 1, "rule id out of range");
    Count m;
    try {
      m = parseCount(w[2]);
    } catch (const std::exception&) {
      throw ParseError(line, 1, "invalid multiplicity '" + w[2] + "'");
    }
    cert.blocks.push_back({static_cast<RuleId>(id), m});
  }
  return cert;
}

std::string formatCertificate(const OrderedCertificate& cert) {
  std::string out;
  for (const auto& b : cert.blocks) out += "block " + std::to_string(b.rule) + " " + toString(b.multiplicity) + "\n";
  return out;
}

}  // namespace crnreach
