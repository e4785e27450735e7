#include "ideal_file.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "gdc/errors.hpp"

namespace gdc::cli {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t start = 0, number = 1;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back({number++, std::move(line)});
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

bool blank(const std::string& s) { return s.find_first_not_of(" \t") == std::string::npos; }

[[noreturn]] void fail(const std::string& source, std::size_t line, std::size_t column, const std::string& what) {
  throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what, 0, line, column);
}

/// Returns the text after "key:" or fails.
std::string header(const std::string& source, const Line& line, const std::string& key) {
  const std::size_t first = line.text.find_first_not_of(" \t");
  if (first == std::string::npos || line.text.compare(first, key.size() + 1, key + ":") != 0)
    fail(source, line.number, first == std::string::npos ? 1 : first + 1, "expected '" + key + ":'");
  return line.text.substr(first + key.size() + 1);
}

Polynomial parse_at(const std::string& source, const Line& line, std::size_t offset, std::string_view text,
                    const Ring& ring) {
  try {
    return parse_polynomial(text, ring);
  } catch (const ParseError& e) {
    fail(source, line.number, offset + e.offset() + 1, e.what());
  } catch (const Error& e) {
    fail(source, line.number, offset + 1, e.what());
  }
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

IdealFile parse_ideal_file(std::string_view text, std::string source) {
  const auto lines = split_lines(text);
  if (lines.size() < 3)
    fail(source, lines.size(), 1, "expected 'ring:', 'char:' and 'gens:' header lines");

  std::vector<std::string> names;
  {
    std::istringstream words(header(source, lines[0], "ring"));
    for (std::string w; words >> w;) names.push_back(w);
    if (names.empty()) fail(source, 1, 1, "the ring has no variables");
  }
  Ring ring;
  try {
    for (const auto& n : names) {
      if (!std::isalpha(static_cast<unsigned char>(n[0])) ||
          n.find_first_not_of("ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789_") != std::string::npos)
        throw InvalidInput("'" + n + "' is not a valid variable name");
    }
    ring = make_ring(names);
  } catch (const Error& e) {
    fail(source, 1, 1, e.what());
  }

  const std::string ch = header(source, lines[1], "char");
  {
    std::istringstream words(ch);
    std::string value, extra;
    words >> value >> extra;
    if (value != "0" || !extra.empty()) fail(source, 2, 1, "only characteristic 0 is supported");
  }
  if (!blank(header(source, lines[2], "gens"))) fail(source, 3, 1, "'gens:' must be alone on its line");

  std::vector<Polynomial> gens;
  for (std::size_t k = 3; k < lines.size(); ++k) {
    if (blank(lines[k].text)) continue;
    gens.push_back(parse_at(source, lines[k], 0, lines[k].text, ring));
  }
  return {std::move(source), ring, Ideal(ring, std::move(gens))};
}

IdealFile load_ideal_file(const std::string& path) { return parse_ideal_file(read_file(path), path); }

ComponentSet parse_component_file(std::string_view text, const Ring& ring, const std::string& source) {
  std::vector<std::vector<Polynomial>> primes;
  for (const auto& line : split_lines(text)) {
    if (blank(line.text)) continue;
    std::vector<Polynomial> gens;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.text.find(',', start);
      const std::string piece = line.text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (blank(piece)) fail(source, line.number, start + 1, "empty generator");
      gens.push_back(parse_at(source, line, start, piece, ring));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    primes.push_back(std::move(gens));
  }
  if (primes.empty()) throw InvalidInput(source + ": no components given");

  auto is_variable = [](const Polynomial& p) {
    return p.is_monomial() && p.terms().front().coefficient.is_one() && p.total_degree() == 1;
  };
  bool all_variables = true;
  for (const auto& gens : primes)
    for (const auto& g : gens) all_variables = all_variables && is_variable(g);
  if (all_variables) {
    std::vector<VariablePrime> vps;
    for (const auto& gens : primes) {
      std::vector<std::size_t> vars;
      for (const auto& g : gens) {
        const auto& e = g.terms().front().monomial;
        for (std::size_t i = 0; i < e.size(); ++i)
          if (e[i] > 0) vars.push_back(i);
      }
      vps.emplace_back(std::move(vars));
    }
    return ComponentSet::from_variable_primes(ring, std::move(vps));
  }
  std::vector<Ideal> ideals;
  for (auto& gens : primes) ideals.emplace_back(ring, std::move(gens));
  return ComponentSet::from_trusted_primes(ring, std::move(ideals));
}

ComponentSet load_component_file(const std::string& path, const Ring& ring) {
  return parse_component_file(read_file(path), ring, path);
}

}  // namespace gdc::cli
