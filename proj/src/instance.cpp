#include "subsum/instance.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

#include "subsum/errors.hpp"

namespace subsum {

ProblemInstance::ProblemInstance(std::vector<Value> values, Wide target, Index cardinality)
    : values_(std::move(values)), target_(target), cardinality_(cardinality) {
  for (const Value v : values_) {
    if (v > kValueCap || v < -kValueCap) throw CapacityError("value magnitude exceeds 2^62");
  }
  if (target_ > kTargetCap || target_ < -kTargetCap) {
    throw CapacityError("target magnitude exceeds 2^120");
  }
}

ProblemInstance ProblemInstance::with_target(Wide target) const {
  return ProblemInstance(values_, target, cardinality_);
}

ProblemInstance ProblemInstance::with_cardinality(Index cardinality) const {
  return ProblemInstance(values_, target_, cardinality);
}

FeasibleRange feasible_range(const ProblemInstance& inst) {
  const Index n = inst.size();
  const Index m = inst.cardinality();
  if (m > n) {
    throw InfeasibleCardinality("cardinality " + std::to_string(m) + " exceeds set size " +
                                std::to_string(n));
  }
  std::vector<Value> sorted(inst.values().begin(), inst.values().end());
  std::sort(sorted.begin(), sorted.end());
  FeasibleRange r;
  for (Index i = 0; i < m; ++i) {
    r.s_min += sorted[i];
    r.s_max += sorted[n - 1 - i];
  }
  return r;
}

bool in_range(const ProblemInstance& inst) { return feasible_range(inst).contains(inst.target()); }

Wide total_sum(const ProblemInstance& inst) {
  Wide total = 0;
  for (const Value v : inst.values()) total = checked_add(total, v);
  return total;
}

ProblemInstance complement_transform(const ProblemInstance& inst) {
  if (inst.cardinality() > inst.size()) {
    throw InfeasibleCardinality("complement_transform requires m <= n");
  }
  const Wide target = checked_sub(total_sum(inst), inst.target());
  return ProblemInstance(std::vector<Value>(inst.values().begin(), inst.values().end()), target,
                         inst.size() - inst.cardinality());
}

namespace {

struct Token {
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t line = 1;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view row = text.substr(pos, eol - pos);
    const std::size_t first = row.find_first_not_of(" \t\r\f\v");
    if (first != std::string_view::npos && row[first] != '#') {
      std::size_t i = first;
      while (i < row.size()) {
        while (i < row.size() && std::isspace(static_cast<unsigned char>(row[i]))) ++i;
        if (i >= row.size()) break;
        const std::size_t start = i;
        while (i < row.size() && !std::isspace(static_cast<unsigned char>(row[i]))) ++i;
        tokens.push_back({row.substr(start, i - start), line, start + 1});
      }
    }
    pos = eol + 1;
    ++line;
  }
  return tokens;
}

Wide parse_token(const Token& tok, const char* what) {
  Wide v = 0;
  if (!parse_wide(tok.text, v)) {
    throw ParseError(tok.line, tok.column,
                     std::string("malformed ") + what + " '" + std::string(tok.text) + "'");
  }
  return v;
}

Index parse_count(const Token& tok, const char* what) {
  const Wide v = parse_token(tok, what);
  if (v < 0 || v > std::numeric_limits<Index>::max()) {
    throw ParseError(tok.line, tok.column, std::string(what) + " out of range");
  }
  return static_cast<Index>(v);
}

}  // namespace

ProblemInstance parse_instance(std::string_view text) {
  const std::vector<Token> tokens = tokenize(text);
  if (tokens.size() < 3) {
    const std::size_t line = tokens.empty() ? 1 : tokens.back().line;
    throw ParseError(line, 1, "expected header 'n m S'");
  }
  const Index n = parse_count(tokens[0], "n");
  const Index m = parse_count(tokens[1], "m");
  const Wide target = parse_token(tokens[2], "target");
  if (target > kTargetCap || target < -kTargetCap) {
    throw ParseError(tokens[2].line, tokens[2].column, "target magnitude exceeds 2^120");
  }
  if (tokens.size() - 3 != n) {
    const Token& where = tokens.size() - 3 > n ? tokens[3 + n] : tokens.back();
    throw ParseError(where.line, where.column,
                     "expected " + std::to_string(n) + " values, found " +
                         std::to_string(tokens.size() - 3));
  }
  std::vector<Value> values;
  values.reserve(n);
  for (Index i = 0; i < n; ++i) {
    const Token& tok = tokens[3 + i];
    const Wide v = parse_token(tok, "value");
    if (v > kValueCap || v < -kValueCap) {
      throw ParseError(tok.line, tok.column, "value magnitude exceeds 2^62");
    }
    values.push_back(static_cast<Value>(v));
  }
  return ProblemInstance(std::move(values), target, m);
}

ProblemInstance read_instance(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

ProblemInstance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open instance file '" + path + "'");
  return read_instance(in);
}

std::string render_instance(const ProblemInstance& inst) {
  std::string out = std::to_string(inst.size()) + " " + std::to_string(inst.cardinality()) + " " +
                    to_string(inst.target()) + "\n";
  for (Index i = 0; i < inst.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(inst.values()[i]);
  }
  out += '\n';
  return out;
}

}  // namespace subsum
