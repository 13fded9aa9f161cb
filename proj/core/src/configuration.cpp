#include "bcc/configuration.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace bcc {

namespace {

// Lexicographically minimal rotation; any rotation of the same cyclic
// sequence canonicalizes to the same list.
std::vector<int> canonical_rotation(std::vector<int> seq) {
  const int n = static_cast<int>(seq.size());
  if (n < 2) return seq;
  int best = 0;
  for (int cand = 1; cand < n; ++cand) {
    for (int k = 0; k < n; ++k) {
      int a = seq[(cand + k) % n];
      int b = seq[(best + k) % n];
      if (a != b) {
        if (a < b) best = cand;
        break;
      }
    }
  }
  std::rotate(seq.begin(), seq.begin() + best, seq.end());
  return seq;
}

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  std::string current;
  for (char ch : line) {
    if (ch == '#') break;
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

int parse_positive_int(const std::string& token, int line) {
  std::size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(token, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, "expected a positive integer, got '" + token + "'");
  }
  if (pos != token.size() || value < 1) {
    throw ParseError(line, "expected a positive integer, got '" + token + "'");
  }
  return value;
}

}  // namespace

BrauerConfig::BrauerConfig(const ConfigInput& input) {
  std::vector<ConfigInput::Vertex> vertices = input.vertices;
  std::sort(vertices.begin(), vertices.end(),
            [](const auto& a, const auto& b) { return a.name < b.name; });
  for (const auto& v : vertices) {
    if (v.multiplicity < 1) {
      throw std::invalid_argument("vertex '" + v.name + "': multiplicity must be positive");
    }
    if (!vertex_index_.emplace(v.name, static_cast<int>(vertex_names_.size())).second) {
      throw std::invalid_argument("duplicate vertex '" + v.name + "'");
    }
    vertex_names_.push_back(v.name);
    multiplicity_.push_back(v.multiplicity);
  }

  std::vector<ConfigInput::Polygon> polygons = input.polygons;
  std::sort(polygons.begin(), polygons.end(),
            [](const auto& a, const auto& b) { return a.name < b.name; });
  for (const auto& p : polygons) {
    if (!polygon_index_.emplace(p.name, static_cast<int>(polygon_names_.size())).second) {
      throw std::invalid_argument("duplicate polygon '" + p.name + "'");
    }
    polygon_names_.push_back(p.name);
    std::vector<int> members;
    members.reserve(p.members.size());
    for (const auto& m : p.members) {
      auto it = vertex_index_.find(m);
      if (it == vertex_index_.end()) {
        throw std::invalid_argument("polygon '" + p.name + "' references unknown vertex '" + m + "'");
      }
      members.push_back(it->second);
    }
    std::sort(members.begin(), members.end());
    members_.push_back(std::move(members));
  }

  occ_.assign(vertex_names_.size(), std::vector<int>(polygon_names_.size(), 0));
  for (int p = 0; p < polygon_count(); ++p) {
    for (int v : members_[p]) ++occ_[v][p];
  }
  valency_.assign(vertex_names_.size(), 0);
  for (int v = 0; v < vertex_count(); ++v) {
    for (int p = 0; p < polygon_count(); ++p) valency_[v] += occ_[v][p];
  }

  orientation_.assign(vertex_names_.size(), {});
  for (const auto& o : input.orders) {
    auto vit = vertex_index_.find(o.vertex);
    if (vit == vertex_index_.end()) {
      throw std::invalid_argument("order for unknown vertex '" + o.vertex + "'");
    }
    if (!orientation_[vit->second].empty()) {
      throw std::invalid_argument("duplicate order for vertex '" + o.vertex + "'");
    }
    std::vector<int> seq;
    seq.reserve(o.polygons.size());
    for (const auto& name : o.polygons) {
      auto pit = polygon_index_.find(name);
      if (pit == polygon_index_.end()) {
        throw std::invalid_argument("order for vertex '" + o.vertex +
                                    "' references unknown polygon '" + name + "'");
      }
      seq.push_back(pit->second);
    }
    orientation_[vit->second] = canonical_rotation(std::move(seq));
  }

  // Valency-one sequences are forced; fill them in when absent.
  for (int v = 0; v < vertex_count(); ++v) {
    if (!orientation_[v].empty() || valency_[v] != 1) continue;
    for (int p = 0; p < polygon_count(); ++p) {
      if (occ_[v][p] > 0) {
        orientation_[v] = {p};
        break;
      }
    }
  }
}

int BrauerConfig::vertex_index(std::string_view name) const {
  auto it = vertex_index_.find(std::string(name));
  if (it == vertex_index_.end()) {
    throw std::out_of_range("unknown vertex '" + std::string(name) + "'");
  }
  return it->second;
}

int BrauerConfig::polygon_index(std::string_view name) const {
  auto it = polygon_index_.find(std::string(name));
  if (it == polygon_index_.end()) {
    throw std::out_of_range("unknown polygon '" + std::string(name) + "'");
  }
  return it->second;
}

std::span<const int> BrauerConfig::polygon_members(int p) const {
  return members_.at(p);
}

std::span<const int> BrauerConfig::successor_sequence(int v) const {
  return orientation_.at(v);
}

int BrauerConfig::occ(int v, int p) const { return occ_.at(v).at(p); }

int BrauerConfig::val(int v) const { return valency_.at(v); }

int BrauerConfig::occ(std::string_view vertex, std::string_view polygon) const {
  return occ(vertex_index(vertex), polygon_index(polygon));
}

int BrauerConfig::val(std::string_view vertex) const { return val(vertex_index(vertex)); }

BrauerConfig parse_config(std::string_view text) {
  ConfigInput input;
  std::map<std::string, int> vertex_lines;
  std::map<std::string, int> polygon_lines;
  std::map<std::string, int> order_lines;
  struct PendingRef {
    int line;
    std::string message;
  };

  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string_view line =
        text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;

    std::vector<std::string> tokens = tokenize(line);
    if (tokens.empty()) continue;

    const std::string& kind = tokens[0];
    if (kind == "vertex") {
      if (tokens.size() != 2 && tokens.size() != 4) {
        throw ParseError(line_no, "expected 'vertex <name> [mult <k>]'");
      }
      ConfigInput::Vertex v;
      v.name = tokens[1];
      if (tokens.size() == 4) {
        if (tokens[2] != "mult") throw ParseError(line_no, "expected 'mult', got '" + tokens[2] + "'");
        v.multiplicity = parse_positive_int(tokens[3], line_no);
      }
      if (!vertex_lines.emplace(v.name, line_no).second) {
        throw ParseError(line_no, "duplicate vertex '" + v.name + "'");
      }
      input.vertices.push_back(std::move(v));
    } else if (kind == "polygon") {
      if (tokens.size() < 4 || tokens[2] != ":") {
        throw ParseError(line_no, "expected 'polygon <name> : <vertex>+'");
      }
      ConfigInput::Polygon p;
      p.name = tokens[1];
      p.members.assign(tokens.begin() + 3, tokens.end());
      if (!polygon_lines.emplace(p.name, line_no).second) {
        throw ParseError(line_no, "duplicate polygon '" + p.name + "'");
      }
      for (const auto& m : p.members) {
        if (!vertex_lines.count(m)) {
          throw ParseError(line_no, "polygon '" + p.name + "' references unknown vertex '" + m + "'");
        }
      }
      input.polygons.push_back(std::move(p));
    } else if (kind == "order") {
      if (tokens.size() < 4 || tokens[2] != ":") {
        throw ParseError(line_no, "expected 'order <vertex> : <polygon>+'");
      }
      ConfigInput::Order o;
      o.vertex = tokens[1];
      o.polygons.assign(tokens.begin() + 3, tokens.end());
      if (!vertex_lines.count(o.vertex)) {
        throw ParseError(line_no, "order for unknown vertex '" + o.vertex + "'");
      }
      if (!order_lines.emplace(o.vertex, line_no).second) {
        throw ParseError(line_no, "duplicate order for vertex '" + o.vertex + "'");
      }
      for (const auto& name : o.polygons) {
        if (!polygon_lines.count(name)) {
          throw ParseError(line_no, "order references unknown polygon '" + name + "'");
        }
      }
      input.orders.push_back(std::move(o));
    } else {
      throw ParseError(line_no, "unknown directive '" + kind + "'");
    }
  }

  if (input.vertices.empty()) throw ParseError(0, "no vertices declared");
  return BrauerConfig(input);
}

std::string serialize(const BrauerConfig& cfg) {
  std::ostringstream out;
  for (int v = 0; v < cfg.vertex_count(); ++v) {
    out << "vertex " << cfg.vertex_name(v);
    if (cfg.multiplicity(v) != 1) out << " mult " << cfg.multiplicity(v);
    out << '\n';
  }
  for (int p = 0; p < cfg.polygon_count(); ++p) {
    out << "polygon " << cfg.polygon_name(p) << " :";
    for (int v : cfg.polygon_members(p)) out << ' ' << cfg.vertex_name(v);
    out << '\n';
  }
  for (int v = 0; v < cfg.vertex_count(); ++v) {
    if (cfg.val(v) <= 1) continue;
    out << "order " << cfg.vertex_name(v) << " :";
    for (int p : cfg.successor_sequence(v)) out << ' ' << cfg.polygon_name(p);
    out << '\n';
  }
  return out.str();
}

ValidationReport validate(const BrauerConfig& cfg) {
  ValidationReport report;
  for (int v = 0; v < cfg.vertex_count(); ++v) {
    if (cfg.val(v) == 0) {
      report.violations.push_back(
          {"C1", "vertex '" + cfg.vertex_name(v) + "' occurs in no polygon"});
    }
  }
  for (int p = 0; p < cfg.polygon_count(); ++p) {
    if (cfg.polygon_members(p).size() < 2) {
      report.violations.push_back(
          {"C2", "polygon '" + cfg.polygon_name(p) + "' has " +
                     std::to_string(cfg.polygon_members(p).size()) + " member(s), needs at least 2"});
    }
  }
  for (int p = 0; p < cfg.polygon_count(); ++p) {
    bool ok = false;
    for (int v : cfg.polygon_members(p)) {
      if (cfg.val(v) * cfg.multiplicity(v) > 1) {
        ok = true;
        break;
      }
    }
    if (!ok && !cfg.polygon_members(p).empty()) {
      report.violations.push_back(
          {"C3", "polygon '" + cfg.polygon_name(p) +
                     "' has no vertex with val*mult > 1"});
    }
  }
  for (int v = 0; v < cfg.vertex_count(); ++v) {
    auto seq = cfg.successor_sequence(v);
    if (seq.empty()) {
      if (cfg.val(v) > 1) {
        report.violations.push_back(
            {"order", "vertex '" + cfg.vertex_name(v) + "' has no successor sequence"});
      }
      continue;
    }
    std::vector<int> counts(cfg.polygon_count(), 0);
    for (int p : seq) ++counts[p];
    bool match = static_cast<int>(seq.size()) == cfg.val(v);
    for (int p = 0; match && p < cfg.polygon_count(); ++p) {
      if (counts[p] != cfg.occ(v, p)) match = false;
    }
    if (!match) {
      report.violations.push_back(
          {"order", "successor sequence of vertex '" + cfg.vertex_name(v) +
                        "' does not match its occurrence counts"});
    }
  }
  return report;
}

VertexClassification classify_vertices(const BrauerConfig& cfg) {
  VertexClassification cls;
  for (int v = 0; v < cfg.vertex_count(); ++v) {
    const int valency = cfg.val(v);
    const int mult = cfg.multiplicity(v);
    if (valency * mult == 1) {
      cls.truncated.push_back(v);
    } else if (valency == 1) {
      cls.loop_only.push_back(v);
    } else if (mult > 1) {
      cls.multi_cycle.push_back(v);
    } else {
      cls.simple_cycle.push_back(v);
    }
  }
  return cls;
}

bool is_reduced(const BrauerConfig& cfg) {
  for (int p = 0; p < cfg.polygon_count(); ++p) {
    auto members = cfg.polygon_members(p);
    int truncated = 0;
    for (int v : members) {
      if (cfg.is_truncated(v)) ++truncated;
    }
    if (truncated == 0) continue;
    if (members.size() != 2 || truncated != 1) return false;
  }
  return true;
}

bool is_connected(const BrauerConfig& cfg) {
  const int n = cfg.vertex_count() + cfg.polygon_count();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::queue<int> frontier;  // vertices are 0..V-1, polygons V..V+P-1
  frontier.push(0);
  seen[0] = true;
  int reached = 1;
  while (!frontier.empty()) {
    int node = frontier.front();
    frontier.pop();
    if (node < cfg.vertex_count()) {
      for (int p = 0; p < cfg.polygon_count(); ++p) {
        int other = cfg.vertex_count() + p;
        if (!seen[other] && cfg.occ(node, p) > 0) {
          seen[other] = true;
          ++reached;
          frontier.push(other);
        }
      }
    } else {
      int p = node - cfg.vertex_count();
      for (int v : cfg.polygon_members(p)) {
        if (!seen[v]) {
          seen[v] = true;
          ++reached;
          frontier.push(v);
        }
      }
    }
  }
  return reached == n;
}

}  // namespace bcc
