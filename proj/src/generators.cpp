#include "bec/generators.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "bec/io.hpp"

namespace bec {

BecInstance build_bn(int n) {
  if (n < 1) throw std::invalid_argument("build_bn: n must be >= 1");
  BecInstance g;
  g.input_count = n;
  g.output_count = 2 * n - 1;
  g.edges.reserve(static_cast<size_t>(n) * n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= i; ++j) g.edges.push_back({i - 1, j - 1, j});
    for (int j = i + 1; j <= n; ++j) g.edges.push_back({i - 1, n + i - 1, j});
  }
  return g;
}

namespace {

// Portable seeded randomness: mt19937-64 with modulo reduction. The tiny
// modulo bias is irrelevant for benchmarking and keeps draws identical
// across platforms.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  int below(int n) { return static_cast<int>(eng_() % static_cast<uint64_t>(n)); }

  void shuffle(std::vector<int>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i)
      std::swap(v[i], v[below(i + 1)]);
  }

  // First `count` entries of a Fisher-Yates pass over 1..limit.
  std::vector<int> sample_distinct(int count, int limit) {
    std::vector<int> pool(limit);
    for (int i = 0; i < limit; ++i) pool[i] = i + 1;
    for (int t = 0; t < count; ++t)
      std::swap(pool[t], pool[t + below(limit - t)]);
    pool.resize(count);
    return pool;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace

BecInstance gen_random(const RandomSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("gen_random: n must be >= 1");
  if (spec.delta < 1 || spec.delta > spec.n)
    throw std::invalid_argument("gen_random: need 1 <= delta <= n");
  if (spec.bmax < spec.delta)
    throw std::invalid_argument("gen_random: need bmax >= delta");

  Rng rng(spec.seed);
  BecInstance g;
  g.input_count = spec.n;
  g.output_count = spec.n;
  g.edges.reserve(static_cast<size_t>(spec.n) * spec.delta);

  std::vector<int> perm(spec.n);
  for (int r = 0; r < spec.delta; ++r) {
    for (int i = 0; i < spec.n; ++i) perm[i] = i;
    rng.shuffle(perm);
    for (int i = 0; i < spec.n; ++i) g.edges.push_back({i, perm[i], 1});
  }

  // Input i owns edge ids r*n + i; assign its distinct bounds in id order.
  for (int i = 0; i < spec.n; ++i) {
    std::vector<int> bounds = rng.sample_distinct(spec.delta, spec.bmax);
    for (int r = 0; r < spec.delta; ++r)
      g.edges[static_cast<size_t>(r) * spec.n + i].bound = bounds[r];
  }
  return g;
}

void check_partial(const PartialColoredGraph& g) {
  const BecInstance& inst = g.graph;
  if (g.k < 1) throw std::invalid_argument("partial: k must be >= 1");
  if (inst.input_count < 0 || inst.output_count < 0)
    throw std::invalid_argument("partial: negative vertex count");
  for (const Edge& e : inst.edges) {
    if (e.input < 0 || e.input >= inst.input_count ||
        e.output < 0 || e.output >= inst.output_count)
      throw std::invalid_argument("partial: edge endpoint out of range");
    if (e.bound < 0 || e.bound > g.k)
      throw std::invalid_argument("partial: precolor out of range 0..k");
  }
  // Precolored edges must form a proper partial coloring.
  auto clash = [&](Side side, int count) {
    std::vector<std::vector<int>> at(count);
    for (const Edge& e : inst.edges) {
      if (e.bound == 0) continue;
      int v = side == Side::Input ? e.input : e.output;
      at[v].push_back(e.bound);
    }
    for (auto& lst : at) {
      std::sort(lst.begin(), lst.end());
      if (std::adjacent_find(lst.begin(), lst.end()) != lst.end()) return true;
    }
    return false;
  };
  if (clash(Side::Input, inst.input_count) ||
      clash(Side::Output, inst.output_count))
    throw std::invalid_argument("partial: precoloring is not proper");
}

BecInstance reduce_completion(const PartialColoredGraph& g) {
  check_partial(g);
  const BecInstance& src = g.graph;
  const int k = g.k;

  BecInstance out;
  out.input_count = src.input_count;
  out.output_count = src.output_count;

  auto new_input = [&out]() { return out.input_count++; };
  auto new_output = [&out]() { return out.output_count++; };

  // Uncolored edges keep their endpoints; per input they take the
  // distinct bounds k+1, k+2, ... in ascending edge-id order.
  std::vector<int> next_free(src.input_count, k + 1);
  for (const Edge& e : src.edges) {
    if (e.bound != 0) continue;
    int b = next_free[e.input]++;
    if (b > 2 * k)
      throw std::invalid_argument(
          "reduce_completion: more than k uncolored edges at an input");
    out.edges.push_back({e.input, e.output, b});
  }

  // One gadget per precolored edge, grouped per original edge. An edge
  // precolored k-i contributes outer edges with bound 3k-i and i inner
  // parallel edges with bounds 3k-i+1..3k; i = 0 keeps the edge direct.
  for (const Edge& e : src.edges) {
    if (e.bound == 0) continue;
    int i = k - e.bound;
    if (i == 0) {
      out.edges.push_back({e.input, e.output, 3 * k});
      continue;
    }
    int a = new_output();  // joined to the original input
    int b = new_input();   // joined to the original output
    out.edges.push_back({e.input, a, 3 * k - i});
    for (int t = 1; t <= i; ++t) out.edges.push_back({b, a, 3 * k - i + t});
    out.edges.push_back({b, e.output, 3 * k - i});
  }

  // Forcing component per input: in any coloring with max color <= 3k
  // the leaf edges take exactly their bounds, the w1-w2 group takes
  // 1..k, the u-w1 group takes k+1..2k, so bounds k+1..2k at u are
  // pushed above 2k.
  for (int u = 0; u < src.input_count; ++u) {
    int w1 = new_output();
    int w2 = new_input();
    for (int t = 1; t <= k; ++t) out.edges.push_back({u, w1, t});
    for (int t = 1; t <= k; ++t) out.edges.push_back({w2, w1, t});
    for (int t = 1; t <= k; ++t)
      out.edges.push_back({new_input(), w1, 2 * k + t});
    for (int t = 1; t <= 2 * k; ++t)
      out.edges.push_back({w2, new_output(), k + t});
  }
  return out;
}

PartialColoredGraph read_partial(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, "cannot open file");
  std::string line;
  int line_no = 0;
  auto next = [&](const std::string& what) {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      size_t first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') continue;
      return line;
    }
    throw ParseError(path.string(), line_no + 1,
                     "unexpected end of file, expected " + what);
  };

  if (next("magic line") != "becp 1")
    throw ParseError(path.string(), line_no, "bad magic, expected 'becp 1'");

  PartialColoredGraph g;
  {
    std::istringstream ss(next("counts line"));
    long long ic, oc, m, k;
    if (!(ss >> ic >> oc >> m >> k) || ic < 0 || oc < 0 || m < 0 || k < 1)
      throw ParseError(path.string(), line_no,
                       "expected <inputs> <outputs> <edges> <k>");
    g.graph.input_count = static_cast<int>(ic);
    g.graph.output_count = static_cast<int>(oc);
    g.k = static_cast<int>(k);
    for (long long t = 0; t < m; ++t) {
      std::istringstream es(next("edge line"));
      long long i, o, c;
      if (!(es >> i >> o >> c))
        throw ParseError(path.string(), line_no,
                         "expected <input> <output> <precolor>");
      g.graph.edges.push_back({static_cast<int>(i), static_cast<int>(o),
                               static_cast<int>(c)});
    }
  }
  check_partial(g);
  return g;
}

void write_partial(const PartialColoredGraph& g,
                   const std::filesystem::path& path) {
  check_partial(g);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "becp 1\n";
  out << g.graph.input_count << " " << g.graph.output_count << " "
      << g.graph.edge_count() << " " << g.k << "\n";
  for (const Edge& e : g.graph.edges)
    out << e.input << " " << e.output << " " << e.bound << "\n";
}

}  // namespace bec
