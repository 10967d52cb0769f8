#include "charnet/csv.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_map>

#include "charnet/common.hpp"

namespace charnet {

std::vector<std::vector<std::string>> read_csv(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool any = false;  // row has content (fields or separators)

  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
  };
  auto end_row = [&] {
    end_field();
    rows.push_back(std::move(row));
    row.clear();
    any = false;
  };

  char c;
  while (in.get(c)) {
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          field.push_back('"');
          in.get();
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        quoted = true;
        any = true;
        break;
      case ',':
        end_field();
        any = true;
        break;
      case '\r':
        break;
      case '\n':
        if (any || !field.empty() || !row.empty()) end_row();
        break;
      default:
        field.push_back(c);
        any = true;
    }
  }
  if (quoted) throw DataError("unterminated quoted CSV field");
  if (any || !field.empty() || !row.empty()) end_row();
  return rows;
}

std::vector<std::vector<std::string>> read_csv_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path);
  return read_csv(in);
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out.push_back('"');
  return out;
}

namespace {

// Strips a UTF-8 BOM if present and surrounding spaces.
std::string clean(std::string s) {
  if (s.rfind("\xef\xbb\xbf", 0) == 0) s.erase(0, 3);
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

long parse_id(const std::string& raw, const char* what) {
  std::string s = clean(raw);
  if (s.empty()) throw DataError(std::string("empty ") + what + " field");
  errno = 0;
  char* end = nullptr;
  long value = std::strtol(s.c_str(), &end, 10);
  if (errno != 0 || end != s.c_str() + s.size() || value < 0)
    throw DataError(std::string("bad ") + what + " id: '" + raw + "'");
  return value;
}

double parse_weight(const std::string& raw) {
  std::string s = clean(raw);
  errno = 0;
  char* end = nullptr;
  double value = std::strtod(s.c_str(), &end);
  if (s.empty() || errno != 0 || end != s.c_str() + s.size())
    throw DataError("non-numeric weight: '" + raw + "'");
  if (!(value > 0.0)) throw DataError("non-positive weight: '" + raw + "'");
  return value;
}

void require_header(const std::vector<std::string>& row, const std::vector<std::string>& expected,
                    const char* what) {
  bool ok = row.size() >= expected.size();
  for (std::size_t i = 0; ok && i < expected.size(); ++i)
    if (clean(row[i]) != expected[i]) ok = false;
  if (!ok) {
    std::string want;
    for (const auto& f : expected) {
      if (!want.empty()) want += ",";
      want += f;
    }
    throw DataError(std::string("missing ") + what + " header '" + want + "'");
  }
}

Graph build_from_edge_rows(const std::vector<std::vector<std::string>>& rows,
                           const std::unordered_map<long, int>& id_map,
                           std::vector<std::string> labels) {
  GraphBuilder builder(static_cast<int>(labels.size()));
  for (std::size_t v = 0; v < labels.size(); ++v)
    builder.set_label(static_cast<int>(v), std::move(labels[v]));
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() == 1 && clean(row[0]).empty()) continue;
    if (row.size() < 3) throw DataError("edge row " + std::to_string(r) + " needs Source,Target,Weight");
    long src = parse_id(row[0], "Source");
    long dst = parse_id(row[1], "Target");
    auto su = id_map.find(src);
    auto sv = id_map.find(dst);
    if (su == id_map.end()) throw DataError("edge references unknown node id " + std::to_string(src));
    if (sv == id_map.end()) throw DataError("edge references unknown node id " + std::to_string(dst));
    double w = parse_weight(row[2]);
    if (su->second == sv->second)
      throw DataError("self-loop on node id " + std::to_string(src));
    builder.add_edge(su->second, sv->second, w);
  }
  return builder.build();
}

}  // namespace

Graph load_edge_csv(std::istream& nodes, std::istream& edges) {
  auto node_rows = read_csv(nodes);
  if (node_rows.empty()) throw DataError("empty node CSV");
  require_header(node_rows[0], {"Id", "Label"}, "node CSV");

  std::unordered_map<long, int> id_map;
  std::vector<std::string> labels;
  for (std::size_t r = 1; r < node_rows.size(); ++r) {
    const auto& row = node_rows[r];
    if (row.size() == 1 && clean(row[0]).empty()) continue;
    long id = parse_id(row[0], "node");
    if (!id_map.emplace(id, static_cast<int>(labels.size())).second)
      throw DataError("duplicate node id " + std::to_string(id));
    labels.push_back(row.size() > 1 ? row[1] : std::to_string(id));
  }

  auto edge_rows = read_csv(edges);
  if (edge_rows.empty()) throw DataError("empty edge CSV");
  require_header(edge_rows[0], {"Source", "Target", "Weight"}, "edge CSV");
  return build_from_edge_rows(edge_rows, id_map, std::move(labels));
}

Graph load_edge_csv(const std::string& node_path, const std::string& edge_path) {
  std::ifstream nodes(node_path, std::ios::binary);
  if (!nodes) throw DataError("cannot open " + node_path);
  std::ifstream edges(edge_path, std::ios::binary);
  if (!edges) throw DataError("cannot open " + edge_path);
  return load_edge_csv(nodes, edges);
}

Graph load_edges_only(std::istream& edges) {
  auto rows = read_csv(edges);
  if (rows.empty()) throw DataError("empty edge CSV");
  require_header(rows[0], {"Source", "Target", "Weight"}, "edge CSV");
  long max_id = -1;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() == 1 && clean(row[0]).empty()) continue;
    if (row.size() < 3) throw DataError("edge row " + std::to_string(r) + " needs Source,Target,Weight");
    max_id = std::max(max_id, parse_id(row[0], "Source"));
    max_id = std::max(max_id, parse_id(row[1], "Target"));
  }
  std::unordered_map<long, int> id_map;
  std::vector<std::string> labels;
  for (long id = 0; id <= max_id; ++id) {
    id_map.emplace(id, static_cast<int>(id));
    labels.push_back(std::to_string(id));
  }
  return build_from_edge_rows(rows, id_map, std::move(labels));
}

Graph load_edges_only(const std::string& edge_path) {
  std::ifstream edges(edge_path, std::ios::binary);
  if (!edges) throw DataError("cannot open " + edge_path);
  return load_edges_only(edges);
}

std::string node_csv(const Graph& g) {
  std::string out = "Id,Label\n";
  for (int v = 0; v < g.node_count(); ++v) {
    out += std::to_string(v);
    out += ',';
    out += csv_escape(g.label(v));
    out += '\n';
  }
  return out;
}

std::string edge_csv(const Graph& g) {
  std::string out = "Source,Target,Weight\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out += ',';
    out += std::to_string(e.v);
    out += ',';
    out += format_double(e.weight);
    out += '\n';
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw DataError("short write to " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace charnet
