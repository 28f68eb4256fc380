#include "extremal/family_json.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "extremal/errors.hpp"

namespace extremal {
namespace {

using nlohmann::json;

int line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

int read_int(const json& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(std::string("field '") + key + "'", "missing");
  const json& v = doc.at(key);
  if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "'", "expected an integer");
  return v.get<int>();
}

}  // namespace

std::string family_to_json(const Family& f) {
  std::string out = "{\"n\": " + std::to_string(f.n()) + ", \"k\": " + std::to_string(f.k()) + ", \"edges\": [";
  bool first_edge = true;
  for (Edge e : f) {
    if (!first_edge) out += ',';
    first_edge = false;
    out += '[';
    bool first_v = true;
    for (int v : e.vertices()) {
      if (!first_v) out += ',';
      first_v = false;
      out += std::to_string(v);
    }
    out += ']';
  }
  out += "]}";
  return out;
}

Family family_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("line " + std::to_string(line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1)),
                     "malformed JSON");
  }
  if (!doc.is_object()) throw ParseError("document", "expected a JSON object");

  const int n = read_int(doc, "n");
  const int k = read_int(doc, "k");
  if (n < 0) throw ParseError("field 'n'", "must be nonnegative");
  if (n > kMaxVertices) throw ParseError("field 'n'", "exceeds the supported maximum of 64");
  if (k < 0 || k > n) throw ParseError("field 'k'", "must satisfy 0 <= k <= n");
  if (!doc.contains("edges")) throw ParseError("field 'edges'", "missing");
  const json& edges = doc.at("edges");
  if (!edges.is_array()) throw ParseError("field 'edges'", "expected an array");

  std::vector<Edge> out;
  out.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "field 'edges[" + std::to_string(i) + "]'";
    const json& e = edges[i];
    if (!e.is_array()) throw ParseError(where, "expected an array of vertices");
    if (static_cast<int>(e.size()) != k)
      throw ParseError(where, "has " + std::to_string(e.size()) + " vertices, expected k=" + std::to_string(k));
    std::uint64_t mask = 0;
    for (std::size_t j = 0; j < e.size(); ++j) {
      const std::string vwhere = "field 'edges[" + std::to_string(i) + "][" + std::to_string(j) + "]'";
      if (!e[j].is_number_integer()) throw ParseError(vwhere, "expected an integer vertex");
      const long long v = e[j].get<long long>();
      if (v < 1 || v > n)
        throw ParseError(vwhere, "vertex " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]");
      const std::uint64_t bit = std::uint64_t{1} << (v - 1);
      if (mask & bit) throw ParseError(vwhere, "vertex " + std::to_string(v) + " repeated");
      mask |= bit;
    }
    out.push_back(Edge::from_mask(mask));
  }
  std::vector<std::size_t> order(out.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return out[a] < out[b]; });
  for (std::size_t i = 1; i < order.size(); ++i)
    if (out[order[i]] == out[order[i - 1]])
      throw ParseError("field 'edges[" + std::to_string(order[i]) + "]'",
                       "duplicate of edges[" + std::to_string(order[i - 1]) + "]");
  return Family(n, k, std::move(out));
}

Family read_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return family_from_json(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.where(), std::string(e.what()).substr(e.where().size() + 2));
  }
}

void write_family_file(const std::string& path, const Family& f) {
  std::ofstream out(path);
  if (!out) throw ArgumentError("cannot open " + path + " for writing");
  out << family_to_json(f) << '\n';
  if (!out) throw ArgumentError("failed writing " + path);
}

}  // namespace extremal
