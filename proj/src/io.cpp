#include "bec/io.hpp"

#include <fstream>
#include <sstream>

namespace bec {

namespace {

// Line-oriented reader that skips '#' comments and blank lines while
// tracking the 1-based line number for error messages.
class LineReader {
 public:
  LineReader(const std::filesystem::path& path)
      : path_(path.string()), in_(path) {
    if (!in_) throw ParseError(path_, 0, "cannot open file");
  }

  bool next(std::string& out) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      size_t first = line.find_first_not_of(" \t");
      if (first == std::string::npos) continue;
      if (line[first] == '#') continue;
      out = line;
      return true;
    }
    return false;
  }

  std::string require(const std::string& what) {
    std::string line;
    if (!next(line)) throw ParseError(path_, line_no_ + 1, "unexpected end of file, expected " + what);
    return line;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(path_, line_no_, what);
  }

  int line_no() const { return line_no_; }

 private:
  std::string path_;
  std::ifstream in_;
  int line_no_ = 0;
};

std::vector<long long> parse_ints(LineReader& r, const std::string& line,
                                  size_t count, const std::string& what) {
  std::istringstream ss(line);
  std::vector<long long> vals;
  long long v;
  while (ss >> v) vals.push_back(v);
  std::string rest;
  if (vals.size() != count || (ss.clear(), ss >> rest))
    r.fail("expected " + what);
  return vals;
}

}  // namespace

BecInstance read_instance(const std::filesystem::path& path) {
  LineReader r(path);
  std::string line = r.require("magic line");
  if (line != "bec 1") r.fail("bad magic, expected 'bec 1'");

  auto counts = parse_ints(r, r.require("counts line"), 3,
                           "<input_count> <output_count> <edge_count>");
  BecInstance g;
  g.input_count = static_cast<int>(counts[0]);
  g.output_count = static_cast<int>(counts[1]);
  long long m = counts[2];
  if (g.input_count < 0 || g.output_count < 0 || m < 0)
    r.fail("counts must be nonnegative");

  for (long long i = 0; i < m; ++i) {
    auto vals = parse_ints(r, r.require("edge line"), 3,
                           "<input_index> <output_index> <bound>");
    Edge e{static_cast<int>(vals[0]), static_cast<int>(vals[1]),
           static_cast<int>(vals[2])};
    if (e.input < 0 || e.input >= g.input_count)
      r.fail("edge input index out of range");
    if (e.output < 0 || e.output >= g.output_count)
      r.fail("edge output index out of range");
    if (e.bound < 1) r.fail("edge bound must be >= 1");
    g.edges.push_back(e);
  }
  return g;
}

void write_instance(const BecInstance& g, const std::filesystem::path& path,
                    const std::vector<std::string>& comments) {
  g.check();
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "bec 1\n";
  for (const auto& c : comments) out << "# " << c << "\n";
  out << g.input_count << " " << g.output_count << " " << g.edge_count()
      << "\n";
  for (const Edge& e : g.edges)
    out << e.input << " " << e.output << " " << e.bound << "\n";
}

Coloring read_coloring(const std::filesystem::path& path) {
  LineReader r(path);
  std::string line = r.require("magic line");
  if (line != "becc 1") r.fail("bad magic, expected 'becc 1'");

  auto counts = parse_ints(r, r.require("count line"), 1, "<edge_count>");
  long long m = counts[0];
  if (m < 0) r.fail("edge count must be nonnegative");

  Coloring c(static_cast<int>(m));
  for (long long i = 0; i < m; ++i) {
    std::string tok = r.require("color line");
    size_t a = tok.find_first_not_of(" \t");
    size_t b = tok.find_last_not_of(" \t");
    tok = tok.substr(a, b - a + 1);
    if (tok == "-") {
      c.colors[i] = Coloring::kUncolored;
      continue;
    }
    auto vals = parse_ints(r, tok, 1, "<color> or -");
    if (vals[0] < 1) r.fail("color must be >= 1");
    c.colors[i] = static_cast<int>(vals[0]);
  }
  return c;
}

void write_coloring(const Coloring& c, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "becc 1\n" << c.edge_count() << "\n";
  for (int color : c.colors) {
    if (color == Coloring::kUncolored)
      out << "-\n";
    else
      out << color << "\n";
  }
}

}  // namespace bec
