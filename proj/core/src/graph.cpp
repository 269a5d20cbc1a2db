#include "knothodge/graph.hpp"

#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace knothodge {

HalfEdgeGraph::HalfEdgeGraph(int externals, int internals, std::vector<Edge> edges)
    : externals_(externals), internals_(internals), edges_(std::move(edges)) {
  if (externals < 0 || internals < 0) throw std::invalid_argument("HalfEdgeGraph: negative vertex count");
  const int n = vertex_count();
  for (const auto& e : edges_) {
    if (e.tail < 0 || e.tail >= n || e.head < 0 || e.head >= n) {
      throw std::invalid_argument("HalfEdgeGraph: edge endpoint out of range");
    }
  }
}

std::vector<int> HalfEdgeGraph::valences() const {
  std::vector<int> val(static_cast<std::size_t>(vertex_count()), 0);
  for (const auto& e : edges_) {
    ++val[static_cast<std::size_t>(e.tail)];
    ++val[static_cast<std::size_t>(e.head)];
  }
  return val;
}

bool HalfEdgeGraph::is_connected() const {
  const int n = vertex_count();
  if (n == 0) return true;
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      a = parent[static_cast<std::size_t>(a)];
    }
    return a;
  };
  int components = n;
  for (const auto& e : edges_) {
    const int a = find(e.tail);
    const int b = find(e.head);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --components;
    }
  }
  return components == 1;
}

bool HalfEdgeGraph::is_admissible() const {
  if (externals_ < 1 || !is_connected()) return false;
  const auto val = valences();
  for (int v = 0; v < vertex_count(); ++v) {
    const int d = val[static_cast<std::size_t>(v)];
    if (is_external(v) ? d != 1 : d < 3) return false;
  }
  return true;
}

std::string HalfEdgeGraph::str() const {
  std::ostringstream os;
  os << "i=" << externals_ << " v=" << internals_ << " |";
  for (const auto& e : edges_) os << ' ' << e.tail << '>' << e.head;
  return os.str();
}

namespace {

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument("HalfEdgeGraph::parse: bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

HalfEdgeGraph HalfEdgeGraph::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tok_i, tok_v, bar;
  if (!(in >> tok_i >> tok_v >> bar) || tok_i.rfind("i=", 0) != 0 || tok_v.rfind("v=", 0) != 0 || bar != "|") {
    throw std::invalid_argument("HalfEdgeGraph::parse: expected 'i=<n> v=<n> | ...'");
  }
  const int ext = parse_int(std::string_view(tok_i).substr(2), "external count");
  const int in_count = parse_int(std::string_view(tok_v).substr(2), "internal count");
  std::vector<Edge> edges;
  std::string tok;
  while (in >> tok) {
    const auto gt = tok.find('>');
    if (gt == std::string::npos) throw std::invalid_argument("HalfEdgeGraph::parse: bad edge '" + tok + "'");
    const std::string_view sv(tok);
    edges.push_back({parse_int(sv.substr(0, gt), "tail"), parse_int(sv.substr(gt + 1), "head")});
  }
  return HalfEdgeGraph(ext, in_count, std::move(edges));
}

}  // namespace knothodge
