#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "efountain/semigroup.hpp"

namespace efountain {

// Cayley table file: line 1 holds the size m, the next m lines hold m
// whitespace-separated 0-based indices each, optionally followed by a
// "labels:" line and one label per line.
FiniteSemigroup read_cayley_table(std::istream& in);
FiniteSemigroup read_cayley_table_file(const std::string& path);
std::string write_cayley_table(const FiniteSemigroup& s);

// Transformation generator file: line 1 holds the degree n, each further
// nonempty line holds n space-separated 1-based images.
std::vector<Transformation> read_transformations(std::istream& in);
FiniteSemigroup read_transformations_file(const std::string& path);

// E-set file: whitespace-separated 0-based indices.
IndexSet read_e_set(std::istream& in, int size);
IndexSet read_e_set_file(const std::string& path, int size);

void write_text_file(const std::string& path, const std::string& text);

}  // namespace efountain
