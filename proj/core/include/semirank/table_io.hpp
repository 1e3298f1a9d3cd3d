#pragma once

#include <iosfwd>
#include <string>

#include "semirank/semigroup.hpp"

namespace semirank {

// Text Cayley table format:
//
//   semigroup <m>
//   <m lines of m whitespace-separated 0-based indices>
//   labels                 (optional)
//   <m lines, one label each>
//
// The canonical form written below uses single spaces and '\n' line ends,
// so reading and rewriting a canonical file reproduces it byte for byte.
void write_table(std::ostream& out, FiniteSemigroup const& s);
std::string to_table_text(FiniteSemigroup const& s);

// Throws TableError with a line number on malformed input, and on a
// non-associative table unless trust is Trust::trusted.
FiniteSemigroup read_table(std::istream& in, Trust trust = Trust::checked,
                           std::string name = {});
FiniteSemigroup read_table_file(std::string const& path, Trust trust = Trust::checked);

}  // namespace semirank
