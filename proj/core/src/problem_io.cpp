// SPDX-License-Identifier: Apache-2.0
#include "sdfp/problem_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>
#include <vector>

namespace sdfp {

namespace {

struct Token {
  std::string text;
  int line = 0;
};

// Tokenizes the text, dropping '#' comments to end of line and recording the
// 1-based line of every token.
std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  int line = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      ++i;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
    } else {
      std::size_t start = i;
      while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\r' &&
             text[i] != '\n' && text[i] != '#') {
        ++i;
      }
      tokens.push_back(Token{std::string(text.substr(start, i - start)), line});
    }
  }
  return tokens;
}

class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  bool done() const { return pos_ >= tokens_.size(); }
  int current_line() const {
    if (done()) return tokens_.empty() ? 1 : tokens_.back().line;
    return tokens_[pos_].line;
  }

  const Token& next(const char* what) {
    if (done()) {
      throw ParseError(current_line(), std::string("unexpected end of input, expected ") + what);
    }
    return tokens_[pos_++];
  }

  long next_int(const char* what) {
    const Token& tok = next(what);
    char* end = nullptr;
    const long value = std::strtol(tok.text.c_str(), &end, 10);
    if (end == tok.text.c_str() || *end != '\0') {
      throw ParseError(tok.line, std::string("expected integer ") + what + ", got '" +
                                     tok.text + "'");
    }
    return value;
  }

  double next_double(const char* what) {
    const Token& tok = next(what);
    char* end = nullptr;
    const double value = std::strtod(tok.text.c_str(), &end);
    if (end == tok.text.c_str() || *end != '\0') {
      throw ParseError(tok.line, std::string("expected number ") + what + ", got '" +
                                     tok.text + "'");
    }
    return value;
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

ConstraintMap parse_problem(std::string_view text) {
  TokenStream stream(tokenize(text));

  const Token& magic = stream.next("format tag 'SDFP'");
  if (magic.text != "SDFP") {
    throw ParseError(magic.line, "expected format tag 'SDFP', got '" + magic.text + "'");
  }
  const long version = stream.next_int("format version");
  if (version != 1) {
    throw ParseError(stream.current_line(),
                     "unsupported format version " + std::to_string(version));
  }

  const long m = stream.next_int("constraint count m");
  if (m < 0) throw ParseError(stream.current_line(), "m must be nonnegative");
  const long l = stream.next_int("block count l");
  if (l < 1) throw ParseError(stream.current_line(), "l must be at least 1");

  std::vector<int> sizes;
  sizes.reserve(static_cast<std::size_t>(l));
  for (long s = 0; s < l; ++s) {
    const long size = stream.next_int("block size");
    if (size < 1) throw ParseError(stream.current_line(), "block sizes must be positive");
    sizes.push_back(static_cast<int>(size));
  }
  const BlockStructure structure(sizes);

  std::vector<std::vector<Eigen::MatrixXd>> raw;
  raw.reserve(static_cast<std::size_t>(m));
  for (long i = 0; i < m; ++i) raw.push_back(BlockVec::zero(structure).blocks());

  std::set<std::tuple<long, long, long, long>> seen;
  while (!stream.done()) {
    const int entry_line = stream.current_line();
    const long k = stream.next_int("constraint index k");
    const long s = stream.next_int("block index s");
    const long i = stream.next_int("row index i");
    const long j = stream.next_int("column index j");
    const double v = stream.next_double("entry value");

    if (k < 1 || k > m) throw ParseError(entry_line, "constraint index out of range");
    if (s < 1 || s > l) throw ParseError(entry_line, "block index out of range");
    const int ns = structure.size(static_cast<int>(s - 1));
    if (i < 1 || j < 1 || i > ns || j > ns) {
      throw ParseError(entry_line, "matrix indices out of range for block " + std::to_string(s));
    }
    if (i > j) throw ParseError(entry_line, "entries must satisfy i <= j (upper triangle)");
    if (!seen.insert({k, s, i, j}).second) {
      throw ParseError(entry_line, "duplicate entry");
    }

    Eigen::MatrixXd& block = raw[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(s - 1)];
    block(i - 1, j - 1) = v;
    block(j - 1, i - 1) = v;  // symmetric completion
  }

  std::vector<BlockVec> out;
  out.reserve(static_cast<std::size_t>(m));
  for (long i = 0; i < m; ++i) {
    out.emplace_back(structure, std::move(raw[static_cast<std::size_t>(i)]));
  }
  return ConstraintMap(structure, std::move(out));
}

std::string serialize_problem(const ConstraintMap& map) {
  std::ostringstream out;
  out << "SDFP 1\n";
  out << map.num_rows() << ' ' << map.structure().block_count() << '\n';
  for (int s = 0; s < map.structure().block_count(); ++s) {
    out << (s ? " " : "") << map.structure().size(s);
  }
  out << '\n';

  char buf[64];
  for (int k = 0; k < map.num_rows(); ++k) {
    for (int s = 0; s < map.structure().block_count(); ++s) {
      const Eigen::MatrixXd& block = map.row(k).block(s);
      for (int i = 0; i < block.rows(); ++i) {
        for (int j = i; j < block.cols(); ++j) {
          if (block(i, j) == 0.0) continue;
          std::snprintf(buf, sizeof(buf), "%.17g", block(i, j));
          out << (k + 1) << ' ' << (s + 1) << ' ' << (i + 1) << ' ' << (j + 1) << ' ' << buf
              << '\n';
        }
      }
    }
  }
  return out.str();
}

ConstraintMap load_problem(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open problem file: " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_problem(buffer.str());
}

void save_problem(const ConstraintMap& map, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("cannot open output file: " + path.string());
  }
  out << serialize_problem(map);
}

}  // namespace sdfp
