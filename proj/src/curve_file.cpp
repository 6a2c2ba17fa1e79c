#include "nodal/curve_file.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace nodal {

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

const LineBundle* CurveFile::find_bundle(std::string_view name) const {
  for (const auto& [n, b] : bundles)
    if (n == name) return &b;
  return nullptr;
}

const PointDivisor* CurveFile::find_divisor(std::string_view name) const {
  for (const auto& [n, d] : divisors)
    if (n == name) return &d;
  return nullptr;
}

namespace {

struct RawVertex {
  std::string id;
  int weight = 0;
  int line = 0;
};
struct RawEdge {
  std::string a, b, label;
  int line = 0;
};
struct RawBranch {
  std::string label;
  int end = 0;
  Rational at;
  int line = 0;
};
struct RawBundle {
  std::string name;
  enum Kind { explicit_degrees, canonical, from_divisor } kind = explicit_degrees;
  std::string degrees, divisor;
  std::vector<std::pair<std::string, Rational>> glue;
  int line = 0;
};
struct RawDivisorTerm {
  std::string name, component;
  Rational at;
  int mult = 1;
  int line = 0;
};

std::vector<std::string> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

int parse_int(const std::string& s, int line, const char* what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError(line, std::string("bad ") + what + " '" + s + "'");
  return v;
}

Rational parse_coordinate(const std::string& s, int line) {
  try {
    return parse_rational(s);
  } catch (const std::exception&) {
    throw ParseError(line, "bad rational '" + s + "'");
  }
}

std::pair<std::string, std::string> split_key(const std::string& tok, int line) {
  const auto eq = tok.find('=');
  if (eq == std::string::npos || eq == 0) throw ParseError(line, "expected key=value, got '" + tok + "'");
  return {tok.substr(0, eq), tok.substr(eq + 1)};
}

}  // namespace

CurveFile parse_curve_file(std::string_view text) {
  std::vector<RawVertex> raw_vertices;
  std::vector<RawEdge> raw_edges;
  std::vector<RawBranch> raw_branches;
  std::vector<RawBundle> raw_bundles;
  std::vector<RawDivisorTerm> raw_terms;
  std::set<std::string, std::less<>> vertex_ids;

  int line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto tok = tokenize(line);
    if (tok.empty()) continue;
    const std::string& kw = tok[0];
    if (kw == "vertex") {
      if (tok.size() < 2) throw ParseError(line_no, "vertex needs an id");
      RawVertex v{tok[1], 0, line_no};
      if (!vertex_ids.insert(v.id).second) throw ParseError(line_no, "duplicate vertex id " + v.id);
      int loops = 0;
      for (std::size_t i = 2; i < tok.size(); ++i) {
        auto [key, value] = split_key(tok[i], line_no);
        if (key == "genus") {
          v.weight = parse_int(value, line_no, "genus");
          if (v.weight < 0) throw ParseError(line_no, "negative genus on vertex " + v.id);
        } else if (key == "loops") {
          loops = parse_int(value, line_no, "loop count");
          if (loops < 0) throw ParseError(line_no, "negative loop count on vertex " + v.id);
        } else {
          throw ParseError(line_no, "unknown vertex attribute '" + key + "'");
        }
      }
      raw_vertices.push_back(v);
      for (int j = 1; j <= loops; ++j) raw_edges.push_back({v.id, v.id, v.id + ".L" + std::to_string(j), line_no});
    } else if (kw == "edge") {
      if (tok.size() < 3 || tok.size() > 4) throw ParseError(line_no, "usage: edge <id> <id> [label]");
      for (int k = 1; k <= 2; ++k)
        if (!vertex_ids.count(tok[static_cast<std::size_t>(k)]))
          throw ParseError(line_no, "dangling vertex id " + tok[static_cast<std::size_t>(k)]);
      raw_edges.push_back({tok[1], tok[2], tok.size() == 4 ? tok[3] : std::string{}, line_no});
    } else if (kw == "branch") {
      if (tok.size() != 5 || tok[3] != "at") throw ParseError(line_no, "usage: branch <edge> <0|1> at <rational>");
      const int end = parse_int(tok[2], line_no, "edge end");
      if (end != 0 && end != 1) throw ParseError(line_no, "edge end must be 0 or 1");
      raw_branches.push_back({tok[1], end, parse_coordinate(tok[4], line_no), line_no});
    } else if (kw == "bundle") {
      if (tok.size() < 3) throw ParseError(line_no, "bundle needs a name and a definition");
      RawBundle b;
      b.name = tok[1];
      b.line = line_no;
      if (tok[2] == "canonical") {
        if (tok.size() != 3) throw ParseError(line_no, "usage: bundle <name> canonical");
        b.kind = RawBundle::canonical;
      } else if (tok[2] == "from-divisor") {
        if (tok.size() != 4) throw ParseError(line_no, "usage: bundle <name> from-divisor <divisor>");
        b.kind = RawBundle::from_divisor;
        b.divisor = tok[3];
      } else {
        auto [key, value] = split_key(tok[2], line_no);
        if (key != "degree") throw ParseError(line_no, "expected degree=(...)");
        b.degrees = value;
        std::size_t i = 3;
        if (i < tok.size()) {
          if (tok[i] != "glue") throw ParseError(line_no, "expected 'glue'");
          for (++i; i < tok.size(); ++i) {
            auto [label, val] = split_key(tok[i], line_no);
            b.glue.emplace_back(label, parse_coordinate(val, line_no));
          }
        }
      }
      raw_bundles.push_back(std::move(b));
    } else if (kw == "divisor") {
      if (!(tok.size() == 5 || (tok.size() == 7 && tok[5] == "mult")) || tok[3] != "at")
        throw ParseError(line_no, "usage: divisor <name> <component> at <rational> [mult <n>]");
      RawDivisorTerm t{tok[1], tok[2], parse_coordinate(tok[4], line_no), 1, line_no};
      if (tok.size() == 7) t.mult = parse_int(tok[6], line_no, "multiplicity");
      if (t.mult == 0) throw ParseError(line_no, "multiplicity must be nonzero");
      if (!vertex_ids.count(t.component)) throw ParseError(line_no, "dangling vertex id " + t.component);
      raw_terms.push_back(t);
    } else {
      throw ParseError(line_no, "unknown directive '" + kw + "'");
    }
  }
  if (raw_vertices.empty()) throw ParseError(std::max(line_no, 1), "empty curve description");

  std::vector<RawVertex> sorted = raw_vertices;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return natural_less(a.id, b.id); });
  std::map<std::string, int, std::less<>> index;
  std::vector<Vertex> vertices;
  for (const auto& v : sorted) {
    index[v.id] = static_cast<int>(vertices.size());
    vertices.push_back({v.id, v.weight});
  }
  std::vector<Edge> edges;
  std::map<std::string, int, std::less<>> edge_index;
  for (std::size_t k = 0; k < raw_edges.size(); ++k) {
    const auto& r = raw_edges[k];
    std::string label = r.label.empty() ? "e" + std::to_string(k + 1) : r.label;
    if (!edge_index.emplace(label, static_cast<int>(k)).second) throw ParseError(r.line, "duplicate edge label " + label);
    edges.push_back({index.at(r.a), index.at(r.b), label});
  }

  CurveFile file{DualGraph(vertices, edges), nullptr, {}, {}};

  if (!raw_branches.empty()) {
    std::vector<std::array<std::optional<Rational>, 2>> coords(edges.size());
    for (const auto& b : raw_branches) {
      auto it = edge_index.find(b.label);
      if (it == edge_index.end()) throw ParseError(b.line, "unknown edge label " + b.label);
      auto& slot = coords[static_cast<std::size_t>(it->second)][static_cast<std::size_t>(b.end)];
      if (slot) throw ParseError(b.line, "branch coordinate given twice");
      slot = b.at;
    }
    for (const auto& v : sorted)
      if (v.weight != 0) throw ParseError(v.line, "realized components must have genus 0; use loops");
    std::vector<std::array<Rational, 2>> branches;
    for (std::size_t k = 0; k < edges.size(); ++k) {
      for (int end = 0; end < 2; ++end)
        if (!coords[k][static_cast<std::size_t>(end)])
          throw ParseError(raw_edges[k].line, "edge " + edges[k].label + " end " + std::to_string(end) +
                                                  " has no branch coordinate");
      branches.push_back({*coords[k][0], *coords[k][1]});
    }
    try {
      file.curve = make_curve(file.graph, std::move(branches));
    } catch (const std::invalid_argument& e) {
      throw ParseError(raw_branches.back().line, e.what());
    }
  }

  for (const auto& t : raw_terms) {
    if (!file.curve) throw ParseError(t.line, "unrealized curve: divisors need branch coordinates");
    auto it = std::find_if(file.divisors.begin(), file.divisors.end(), [&](const auto& d) { return d.first == t.name; });
    if (it == file.divisors.end()) {
      file.divisors.emplace_back(t.name, PointDivisor{});
      it = std::prev(file.divisors.end());
    }
    const int c = index.at(t.component);
    if (file.curve->is_branch_point(c, t.at)) throw ParseError(t.line, "divisor hits node");
    it->second.push_back({c, t.at, t.mult});
  }

  for (const auto& b : raw_bundles) {
    if (!file.curve) throw ParseError(b.line, "unrealized curve: bundles need branch coordinates");
    if (file.find_bundle(b.name)) throw ParseError(b.line, "duplicate bundle name " + b.name);
    try {
      if (b.kind == RawBundle::canonical) {
        file.bundles.emplace_back(b.name, canonical_bundle(file.curve));
      } else if (b.kind == RawBundle::from_divisor) {
        const PointDivisor* d = file.find_divisor(b.divisor);
        if (!d) throw ParseError(b.line, "unknown divisor " + b.divisor);
        file.bundles.emplace_back(b.name, bundle_from_divisor(file.curve, *d));
      } else {
        Multidegree deg = parse_multidegree(b.degrees);
        if (static_cast<int>(deg.size()) != file.graph.size())
          throw ParseError(b.line, "multidegree has " + std::to_string(deg.size()) + " entries, expected " +
                                       std::to_string(file.graph.size()));
        std::vector<Rational> glue(edges.size(), Rational(1));
        for (const auto& [label, value] : b.glue) {
          auto it = edge_index.find(label);
          if (it == edge_index.end()) throw ParseError(b.line, "unknown edge label " + label);
          if (value == 0) throw ParseError(b.line, "gluing constants must be nonzero");
          glue[static_cast<std::size_t>(it->second)] = value;
        }
        file.bundles.emplace_back(b.name, LineBundle(file.curve, std::move(deg), std::move(glue)));
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(b.line, e.what());
    }
  }
  return file;
}

CurveFile read_curve_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_curve_file(buf.str());
}

std::string write_curve_file(const DualGraph& graph, const GraphCurve* curve, const std::vector<NamedBundle>& bundles,
                             const std::vector<NamedDivisor>& divisors, const std::vector<std::string>& comments) {
  std::ostringstream out;
  for (const auto& c : comments) out << "# " << c << "\n";
  for (const auto& v : graph.vertices()) out << "vertex " << v.id << " genus=" << v.weight << "\n";
  for (const auto& e : graph.edges())
    out << "edge " << graph.vertex(e.u).id << " " << graph.vertex(e.v).id << " " << e.label << "\n";
  if (curve) {
    for (int e = 0; e < graph.edge_count(); ++e)
      for (int end = 0; end < 2; ++end)
        out << "branch " << graph.edge(e).label << " " << end << " at " << to_string(curve->branch(e, end)) << "\n";
  }
  for (const auto& [name, divisor] : divisors)
    for (const auto& t : *divisor)
      out << "divisor " << name << " " << graph.vertex(t.component).id << " at " << to_string(t.coordinate) << " mult "
          << t.multiplicity << "\n";
  for (const auto& [name, bundle] : bundles) {
    out << "bundle " << name << " degree=" << format_multidegree(bundle->degrees());
    bool first = true;
    for (int e = 0; e < graph.edge_count(); ++e) {
      if (bundle->gluing(e) == 1) continue;
      out << (first ? " glue " : " ") << graph.edge(e).label << "=" << to_string(bundle->gluing(e));
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace nodal
