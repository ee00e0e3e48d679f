#include "ordlab/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace ordlab {

namespace {

struct Token {
  std::string text;
  int line;
  int col;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') {
        ++i;
      }
      continue;
    }
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++i;
      continue;
    }
    if (c == ';' || c == ',' || c == '=') {
      out.push_back({std::string(1, c), line, col});
      ++col;
      ++i;
      continue;
    }
    // a word token: letters, digits, '_', '^', '-'
    const int start_col = col;
    std::string tok;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
           text[i] != ';' && text[i] != ',' && text[i] != '=' && text[i] != '#') {
      tok += text[i];
      ++i;
      ++col;
    }
    out.push_back({tok, line, start_col});
  }
  return out;
}

// "x" or "x^-3"
std::pair<std::string, long long> split_gen_token(const Token& t) {
  const auto caret = t.text.find('^');
  if (caret == std::string::npos) {
    return {t.text, 1};
  }
  const std::string name = t.text.substr(0, caret);
  const std::string expstr = t.text.substr(caret + 1);
  if (name.empty() || expstr.empty()) {
    throw ParseError(t.line, t.col, "malformed generator token '" + t.text + "'");
  }
  size_t pos = 0;
  long long exp = 0;
  try {
    exp = std::stoll(expstr, &pos);
  } catch (const std::exception&) {
    throw ParseError(t.line, t.col, "bad exponent in '" + t.text + "'");
  }
  if (pos != expstr.size()) {
    throw ParseError(t.line, t.col, "bad exponent in '" + t.text + "'");
  }
  if (exp == 0) {
    throw ParseError(t.line, t.col, "zero exponent in '" + t.text + "'");
  }
  return {name, exp};
}

Word parse_word_tokens(const std::vector<Token>& toks, size_t begin, size_t end,
                       const Presentation& p) {
  Word w;
  for (size_t i = begin; i < end; ++i) {
    auto [name, exp] = split_gen_token(toks[i]);
    const int idx = p.gen_index(name);
    if (idx < 0) {
      throw ParseError(toks[i].line, toks[i].col, "undeclared generator '" + name + "'");
    }
    w.push_syllable(idx, exp);
  }
  return w;
}

size_t find_token(const std::vector<Token>& toks, size_t from, const std::string& what) {
  for (size_t i = from; i < toks.size(); ++i) {
    if (toks[i].text == what) {
      return i;
    }
  }
  return toks.size();
}

}  // namespace

int Presentation::gen_index(const std::string& name) const {
  for (size_t i = 0; i < gens.size(); ++i) {
    if (gens[i] == name) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

Presentation parse_presentation(const std::string& text) {
  const auto toks = tokenize(text);
  Presentation p;
  size_t i = 0;
  if (toks.empty() || toks[0].text != "gens") {
    const int l = toks.empty() ? 1 : toks[0].line;
    const int c = toks.empty() ? 1 : toks[0].col;
    throw ParseError(l, c, "expected 'gens' declaration");
  }
  size_t semi = find_token(toks, 1, ";");
  if (semi == toks.size()) {
    throw ParseError(toks[0].line, toks[0].col, "unterminated 'gens' statement");
  }
  if (semi == 1) {
    throw ParseError(toks[0].line, toks[0].col, "empty generator list");
  }
  std::set<std::string> seen;
  for (size_t j = 1; j < semi; ++j) {
    const std::string& name = toks[j].text;
    if (name.find('^') != std::string::npos) {
      throw ParseError(toks[j].line, toks[j].col, "invalid generator name '" + name + "'");
    }
    if (!seen.insert(name).second) {
      throw ParseError(toks[j].line, toks[j].col, "duplicate generator '" + name + "'");
    }
    p.gens.push_back(name);
  }
  i = semi + 1;

  while (i < toks.size()) {
    if (toks[i].text == "rel") {
      semi = find_token(toks, i + 1, ";");
      if (semi == toks.size()) {
        throw ParseError(toks[i].line, toks[i].col, "unterminated 'rel' statement");
      }
      if (semi == i + 1) {
        throw ParseError(toks[i].line, toks[i].col, "empty relator");
      }
      p.relators.push_back(parse_word_tokens(toks, i + 1, semi, p));
      i = semi + 1;
    } else if (toks[i].text == "peripheral") {
      if (i + 1 >= toks.size()) {
        throw ParseError(toks[i].line, toks[i].col, "truncated 'peripheral' statement");
      }
      PeripheralDecl decl;
      decl.name = toks[i + 1].text;
      if (i + 2 >= toks.size() || toks[i + 2].text != "=") {
        throw ParseError(toks[i + 1].line, toks[i + 1].col, "expected '=' after peripheral name");
      }
      const size_t comma = find_token(toks, i + 3, ",");
      semi = find_token(toks, i + 3, ";");
      if (comma == toks.size() || semi == toks.size() || comma > semi) {
        throw ParseError(toks[i].line, toks[i].col,
                         "peripheral needs two comma-separated words ending in ';'");
      }
      decl.mu = parse_word_tokens(toks, i + 3, comma, p);
      decl.lambda = parse_word_tokens(toks, comma + 1, semi, p);
      if (decl.mu.empty() || decl.lambda.empty()) {
        throw ParseError(toks[i].line, toks[i].col, "peripheral basis words must be nontrivial");
      }
      for (auto& q : p.peripherals) {
        if (q.name == decl.name) {
          throw ParseError(toks[i + 1].line, toks[i + 1].col,
                           "duplicate peripheral '" + decl.name + "'");
        }
      }
      p.peripherals.push_back(std::move(decl));
      i = semi + 1;
    } else {
      throw ParseError(toks[i].line, toks[i].col,
                       "expected 'rel' or 'peripheral', got '" + toks[i].text + "'");
    }
  }
  return p;
}

std::string format_presentation(const Presentation& p) {
  std::string out = "gens";
  for (auto& g : p.gens) {
    out += ' ';
    out += g;
  }
  out += ";\n";
  for (auto& r : p.relators) {
    out += "rel " + format_word(r, p.gens) + ";\n";
  }
  for (auto& q : p.peripherals) {
    out += "peripheral " + q.name + " = " + format_word(q.mu, p.gens) + " , " +
           format_word(q.lambda, p.gens) + ";\n";
  }
  return out;
}

bool operator==(const Presentation& a, const Presentation& b) {
  if (a.gens != b.gens || a.relators != b.relators ||
      a.peripherals.size() != b.peripherals.size()) {
    return false;
  }
  for (size_t i = 0; i < a.peripherals.size(); ++i) {
    if (a.peripherals[i].name != b.peripherals[i].name ||
        a.peripherals[i].mu != b.peripherals[i].mu ||
        a.peripherals[i].lambda != b.peripherals[i].lambda) {
      return false;
    }
  }
  return true;
}

Word parse_word(const std::string& text, const Presentation& p) {
  const auto toks = tokenize(text);
  if (toks.size() == 1 && toks[0].text == "1") {
    return Word{};
  }
  return parse_word_tokens(toks, 0, toks.size(), p);
}

}  // namespace ordlab
