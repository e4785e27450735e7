#pragma once

#include <string>
#include <string_view>

#include "gdc/connect.hpp"
#include "gdc/groebner.hpp"

namespace gdc::cli {

struct IdealFile {
  std::string source;
  Ring ring;
  Ideal ideal;
};

/// Parses the three-header ideal format. Any error rejects the whole file
/// with a ParseError carrying a 1-based line and column.
IdealFile parse_ideal_file(std::string_view text, std::string source = "<input>");
IdealFile load_ideal_file(const std::string& path);

/// One prime per nonblank line, generators separated by commas. Lines made
/// only of variables become variable primes; anything else is a trusted prime.
ComponentSet load_component_file(const std::string& path, const Ring& ring);
ComponentSet parse_component_file(std::string_view text, const Ring& ring, const std::string& source = "<input>");

std::string read_file(const std::string& path);

}  // namespace gdc::cli
