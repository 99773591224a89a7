#include "convexlab/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "convexlab/error.hpp"

namespace convexlab {

namespace {

struct LineReader {
  std::istream& in;
  std::string origin;
  std::size_t line_no = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw input_error(origin + ":" + std::to_string(line_no) + ": " + why);
  }

  // next nonempty line, stripped of a trailing carriage return
  bool next(std::string& out) {
    while (std::getline(in, out)) {
      ++line_no;
      if (!out.empty() && out.back() == '\r') out.pop_back();
      if (out.find_first_not_of(" \t") != std::string::npos) return true;
    }
    return false;
  }

  std::uint64_t number(const std::string& token) const {
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
      fail("'" + token + "' is not a number");
    try {
      return std::stoull(token);
    } catch (const std::out_of_range&) {
      fail("'" + token + "' is out of range");
    }
  }
};

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream s(line);
  std::string tok;
  while (s >> tok) out.push_back(tok);
  return out;
}

void read_members(LineReader& r, std::size_t width, std::vector<Bitset>& sets,
                  std::vector<std::string>& names) {
  std::string line;
  while (r.next(line)) {
    const auto toks = tokens_of(line);
    if (toks.size() != 2)
      r.fail("expected '<name> <bitstring>', got " + std::to_string(toks.size()) + " fields");
    if (toks[1].size() != width)
      r.fail("member '" + toks[0] + "' has " + std::to_string(toks[1].size()) +
             " bits, expected " + std::to_string(width));
    for (char c : toks[1])
      if (c != '0' && c != '1') r.fail("member '" + toks[0] + "' has a character besides 0/1");
    sets.push_back(Bitset::from_bitstring(toks[1]));
    names.push_back(toks[0]);
  }
}

}  // namespace

NamedSetSystem parse_set_system(std::istream& in, const std::string& origin) {
  LineReader r{in, origin};
  std::string line;
  if (!r.next(line) || line != "convexlab-setsystem v1")
    r.fail("expected header 'convexlab-setsystem v1'");
  if (!r.next(line)) r.fail("expected 'ground <n>'");
  const auto toks = tokens_of(line);
  if (toks.size() != 2 || toks[0] != "ground") r.fail("expected 'ground <n>'");
  NamedSetSystem out;
  out.system.ground_size = static_cast<std::size_t>(r.number(toks[1]));
  std::vector<Bitset> sets;
  read_members(r, out.system.ground_size, sets, out.names);
  for (auto& s : sets) out.system.add(std::move(s));
  return out;
}

NamedCubicalSystem parse_cubical_system(std::istream& in, const std::string& origin) {
  LineReader r{in, origin};
  std::string line;
  if (!r.next(line) || line != "convexlab-cubical v1")
    r.fail("expected header 'convexlab-cubical v1'");
  if (!r.next(line)) r.fail("expected 'dims <d0> <d1> [...]'");
  const auto toks = tokens_of(line);
  if (toks.size() < 3 || toks[0] != "dims") r.fail("expected 'dims <d0> <d1> [...]'");
  NamedCubicalSystem out;
  for (std::size_t i = 1; i < toks.size(); ++i)
    out.system.dims.push_back(static_cast<std::size_t>(r.number(toks[i])));
  std::vector<Bitset> sets;
  read_members(r, out.system.cell_count(), sets, out.names);
  out.system.sets = std::move(sets);
  try {
    out.system.validate();
  } catch (const input_error& e) {
    r.fail(e.what());
  }
  return out;
}

ParsedSystem parse_any_system(std::istream& in, const std::string& origin) {
  // peek the header, then hand the full stream to the matching parser
  std::string first;
  std::streampos start = in.tellg();
  if (!std::getline(in, first))
    throw input_error(origin + ":1: empty input, expected a format header");
  if (!first.empty() && first.back() == '\r') first.pop_back();
  in.clear();
  in.seekg(start);
  ParsedSystem out;
  if (first == "convexlab-cubical v1") {
    out.cubical = true;
    out.cells = parse_cubical_system(in, origin);
  } else {
    out.cubical = false;
    out.flat = parse_set_system(in, origin);
  }
  return out;
}

ParsedSystem load_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open '" + path + "'");
  return parse_any_system(in, path);
}

void write_set_system(std::ostream& out, const NamedSetSystem& sys) {
  out << "convexlab-setsystem v1\n";
  out << "ground " << sys.system.ground_size << "\n";
  for (std::size_t i = 0; i < sys.system.size(); ++i) {
    const std::string name = i < sys.names.size() ? sys.names[i] : "s" + std::to_string(i);
    out << name << " " << sys.system.sets[i].to_bitstring() << "\n";
  }
}

void write_cubical_system(std::ostream& out, const NamedCubicalSystem& sys) {
  out << "convexlab-cubical v1\n";
  out << "dims";
  for (std::size_t d : sys.system.dims) out << " " << d;
  out << "\n";
  for (std::size_t i = 0; i < sys.system.size(); ++i) {
    const std::string name = i < sys.names.size() ? sys.names[i] : "s" + std::to_string(i);
    out << name << " " << sys.system.sets[i].to_bitstring() << "\n";
  }
}

void save_set_system(const std::string& path, const NamedSetSystem& sys) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write '" + path + "'");
  write_set_system(out, sys);
}

void save_cubical_system(const std::string& path, const NamedCubicalSystem& sys) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write '" + path + "'");
  write_cubical_system(out, sys);
}

PointSet parse_points(std::istream& in, const std::string& origin) {
  LineReader r{in, origin};
  std::string line;
  if (!r.next(line)) r.fail("expected 'points <i1> <i2> ...'");
  const auto toks = tokens_of(line);
  if (toks.empty() || toks[0] != "points") r.fail("expected 'points <i1> <i2> ...'");
  PointSet out;
  for (std::size_t i = 1; i < toks.size(); ++i)
    out.push_back(static_cast<std::size_t>(r.number(toks[i])));
  return out;
}

PointSet load_points(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open '" + path + "'");
  return parse_points(in, path);
}

void write_points(std::ostream& out, const PointSet& points) {
  out << "points";
  for (std::size_t p : points) out << " " << p;
  out << "\n";
}

void save_points(const std::string& path, const PointSet& points) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write '" + path + "'");
  write_points(out, points);
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> parse_table(std::istream& in,
                                                                 const std::string& origin) {
  LineReader r{in, origin};
  std::string line;
  if (!r.next(line) || line != "table v1") r.fail("expected header 'table v1'");
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  while (r.next(line)) {
    const auto toks = tokens_of(line);
    if (toks.size() != 2) r.fail("expected '<key> <value>'");
    const std::uint64_t k = r.number(toks[0]);
    const std::uint64_t v = r.number(toks[1]);
    if (!out.empty() && k <= out.back().first)
      r.fail("keys must be strictly increasing, " + toks[0] + " follows " +
             std::to_string(out.back().first));
    out.emplace_back(k, v);
  }
  return out;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open '" + path + "'");
  return parse_table(in, path);
}

}  // namespace convexlab
