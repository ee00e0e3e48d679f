#ifndef ORDLAB_PRESENTATION_HPP_
#define ORDLAB_PRESENTATION_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "ordlab/word.hpp"

namespace ordlab {

struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(int line_, int col_, const std::string& msg)
      : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                           std::to_string(col_) + ": " + msg),
        line(line_),
        col(col_) {}
};

struct PeripheralDecl {
  std::string name;
  Word mu;
  Word lambda;
};

// A finite presentation plus named peripheral Z^2 subgroup data, as read from
// the presentation file format:
//
//   gens <name>+ ;
//   rel <word> ;                      (zero or more)
//   peripheral <name> = <word> , <word> ;   (zero or more)
//
// where <word> is whitespace-separated <gen> or <gen>^<int> tokens and '#'
// starts a comment running to end of line.
struct Presentation {
  std::vector<std::string> gens;
  std::vector<Word> relators;
  std::vector<PeripheralDecl> peripherals;

  int gen_index(const std::string& name) const;  // -1 if absent
};

Presentation parse_presentation(const std::string& text);

// Serialises so that parse_presentation(format_presentation(p)) == p.
std::string format_presentation(const Presentation& p);

bool operator==(const Presentation& a, const Presentation& b);

// Parses a single word over the given presentation's generators (used by the
// CLI for --element/--order arguments).
Word parse_word(const std::string& text, const Presentation& p);

}  // namespace ordlab

#endif  // ORDLAB_PRESENTATION_HPP_
