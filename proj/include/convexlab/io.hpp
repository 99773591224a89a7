#pragma once

// Text formats: versioned headers, one named member per line as a bitstring.
// Parsers carry an origin label so errors read origin:line: message.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "convexlab/cubical.hpp"
#include "convexlab/set_system.hpp"

namespace convexlab {

struct NamedSetSystem {
  SetSystem system;
  std::vector<std::string> names;
};

struct NamedCubicalSystem {
  CubicalSetSystem system;
  std::vector<std::string> names;
};

// exactly one of the two is filled, based on the file's header line
struct ParsedSystem {
  bool cubical = false;
  NamedSetSystem flat;
  NamedCubicalSystem cells;

  // cubical members viewed over the cell ground set, for flat analyses
  NamedSetSystem flattened() const {
    if (!cubical) return flat;
    return NamedSetSystem{cells.system.as_set_system(), cells.names};
  }
};

NamedSetSystem parse_set_system(std::istream& in, const std::string& origin);
NamedCubicalSystem parse_cubical_system(std::istream& in, const std::string& origin);
ParsedSystem parse_any_system(std::istream& in, const std::string& origin);
ParsedSystem load_system(const std::string& path);

void write_set_system(std::ostream& out, const NamedSetSystem& sys);
void write_cubical_system(std::ostream& out, const NamedCubicalSystem& sys);
void save_set_system(const std::string& path, const NamedSetSystem& sys);
void save_cubical_system(const std::string& path, const NamedCubicalSystem& sys);

PointSet parse_points(std::istream& in, const std::string& origin);
PointSet load_points(const std::string& path);
void write_points(std::ostream& out, const PointSet& points);
void save_points(const std::string& path, const PointSet& points);

// "table v1" header, then one strictly-increasing "key value" pair per line
std::vector<std::pair<std::uint64_t, std::uint64_t>> parse_table(std::istream& in,
                                                                 const std::string& origin);
std::vector<std::pair<std::uint64_t, std::uint64_t>> load_table(const std::string& path);

}  // namespace convexlab
