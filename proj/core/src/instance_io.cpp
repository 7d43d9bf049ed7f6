#include "sfvs/instance_io.hpp"

#include <charconv>
#include <istream>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "sfvs/errors.hpp"

namespace sfvs {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

long long to_int(std::string_view s, std::size_t line, const char* what) {
  long long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw ParseError(line, std::string("bad ") + what + " '" + std::string(s) + "'");
  return v;
}

Rational to_rational(std::string_view s, std::size_t line) {
  try {
    return Rational::parse(s);
  } catch (const std::exception&) {
    throw ParseError(line, "bad rational '" + std::string(s) + "'");
  }
}

}  // namespace

Instance read_instance(std::istream& in) {
  std::optional<int> n;
  long long m = 0;
  std::vector<Edge> edges;
  std::set<Edge> seen_edges;
  std::vector<Vertex> terms;
  std::set<Vertex> seen_terms;
  std::vector<std::optional<Rational>> weights;
  std::optional<Rational> threshold;

  std::string raw;
  std::size_t line = 0;
  auto vertex = [&](std::string_view s) {
    const long long v = to_int(s, line, "vertex id");
    if (v < 1 || v > *n) throw ParseError(line, "vertex id " + std::string(s) + " outside 1.." + std::to_string(*n));
    return static_cast<Vertex>(v - 1);
  };
  auto expect = [&](const std::vector<std::string_view>& t, std::size_t count) {
    if (t.size() != count) throw ParseError(line, "expected " + std::to_string(count - 1) + " fields after '" + std::string(t[0]) + "'");
    if (!n) throw ParseError(line, "'" + std::string(t[0]) + "' line before the 'p' header");
  };

  while (std::getline(in, raw)) {
    ++line;
    const auto t = tokens(raw);
    if (t.empty() || t[0] == "c") continue;
    if (t[0] == "p") {
      if (n) throw ParseError(line, "second 'p' header");
      if (t.size() != 4 || t[1] != "sfvs") throw ParseError(line, "header must be 'p sfvs <n> <m>'");
      const long long nv = to_int(t[2], line, "vertex count");
      m = to_int(t[3], line, "edge count");
      if (nv < 0 || m < 0 || nv > (1 << 26)) throw ParseError(line, "vertex and edge counts must be non-negative");
      n = static_cast<int>(nv);
      weights.assign(static_cast<std::size_t>(nv), std::nullopt);
    } else if (t[0] == "e") {
      expect(t, 3);
      Vertex u = vertex(t[1]);
      Vertex v = vertex(t[2]);
      if (u == v) throw ParseError(line, "self-loop on vertex " + std::string(t[1]));
      if (u > v) std::swap(u, v);
      if (!seen_edges.insert({u, v}).second) throw ParseError(line, "duplicate edge");
      edges.emplace_back(u, v);
    } else if (t[0] == "t") {
      expect(t, 2);
      const Vertex u = vertex(t[1]);
      if (!seen_terms.insert(u).second) throw ParseError(line, "duplicate terminal " + std::string(t[1]));
      terms.push_back(u);
    } else if (t[0] == "w") {
      expect(t, 3);
      const Vertex u = vertex(t[1]);
      Rational w = to_rational(t[2], line);
      if (!w.is_positive()) throw ParseError(line, "weights must be positive");
      auto& slot = weights[static_cast<std::size_t>(u)];
      if (slot) throw ParseError(line, "duplicate weight for vertex " + std::string(t[1]));
      slot = std::move(w);
    } else if (t[0] == "k") {
      expect(t, 2);
      if (threshold) throw ParseError(line, "duplicate threshold");
      threshold = to_rational(t[1], line);
    } else {
      throw ParseError(line, "unknown line type '" + std::string(t[0]) + "'");
    }
  }
  if (!n) throw ParseError(line == 0 ? 1 : line, "missing 'p sfvs <n> <m>' header");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError(line, "header promises " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));

  std::vector<Rational> w;
  bool any = false;
  for (const auto& x : weights) any = any || x.has_value();
  if (any)
    for (const auto& x : weights) w.push_back(x.value_or(Rational(1)));
  Instance inst(Graph::from_edges(*n, edges), VertexSet(static_cast<std::size_t>(*n), std::span<const Vertex>(terms)),
                std::move(w));
  inst.set_threshold(std::move(threshold));
  return inst;
}

Instance parse_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_instance(in);
}

void write_instance(std::ostream& out, const Instance& inst) {
  const Graph& g = inst.graph();
  out << "p sfvs " << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  inst.terminals().for_each([&](Vertex v) { out << "t " << v + 1 << '\n'; });
  const Rational one(1);
  for (Vertex v = 0; v < g.order(); ++v)
    if (inst.weight(v) != one) out << "w " << v + 1 << ' ' << inst.weight(v).str() << '\n';
  if (inst.threshold()) out << "k " << inst.threshold()->str() << '\n';
}

std::string format_instance(const Instance& inst) {
  std::ostringstream out;
  write_instance(out, inst);
  return out.str();
}

}  // namespace sfvs
