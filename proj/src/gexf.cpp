#include "charnet/gexf.hpp"

#include <cerrno>
#include <cstdlib>
#include <map>
#include <unordered_map>

#include "charnet/common.hpp"

namespace charnet {

namespace {

std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string xml_unescape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size();) {
    if (s[i] != '&') {
      out.push_back(s[i++]);
      continue;
    }
    auto starts = [&](const char* entity) { return s.compare(i, std::string(entity).size(), entity) == 0; };
    if (starts("&amp;")) { out.push_back('&'); i += 5; }
    else if (starts("&lt;")) { out.push_back('<'); i += 4; }
    else if (starts("&gt;")) { out.push_back('>'); i += 4; }
    else if (starts("&quot;")) { out.push_back('"'); i += 6; }
    else if (starts("&apos;")) { out.push_back('\''); i += 6; }
    else throw DataError("unknown XML entity in GEXF");
  }
  return out;
}

// Attributes of a single element tag, e.g. <node id="3" label="Ron"/>.
std::map<std::string, std::string> parse_attributes(const std::string& tag) {
  std::map<std::string, std::string> attrs;
  std::size_t i = 0;
  while (i < tag.size()) {
    while (i < tag.size() && (tag[i] == ' ' || tag[i] == '\t' || tag[i] == '\n' || tag[i] == '\r')) ++i;
    std::size_t eq = tag.find('=', i);
    if (eq == std::string::npos) break;
    std::string name = tag.substr(i, eq - i);
    while (!name.empty() && (name.back() == ' ' || name.back() == '\t')) name.pop_back();
    std::size_t q1 = tag.find('"', eq);
    if (q1 == std::string::npos) throw DataError("malformed GEXF attribute");
    std::size_t q2 = tag.find('"', q1 + 1);
    if (q2 == std::string::npos) throw DataError("malformed GEXF attribute");
    attrs[name] = xml_unescape(tag.substr(q1 + 1, q2 - q1 - 1));
    i = q2 + 1;
  }
  return attrs;
}

long to_long(const std::string& s, const char* what) {
  errno = 0;
  char* end = nullptr;
  long v = std::strtol(s.c_str(), &end, 10);
  if (s.empty() || errno != 0 || end != s.c_str() + s.size() || v < 0)
    throw DataError(std::string("bad GEXF ") + what + ": '" + s + "'");
  return v;
}

}  // namespace

std::string write_gexf(const Graph& g) {
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<gexf xmlns=\"http://www.gexf.net/1.2draft\" version=\"1.2\">\n";
  out += "  <graph mode=\"static\" defaultedgetype=\"undirected\">\n";
  out += "    <nodes>\n";
  for (int v = 0; v < g.node_count(); ++v) {
    out += "      <node id=\"" + std::to_string(v) + "\" label=\"" + xml_escape(g.label(v)) + "\"/>\n";
  }
  out += "    </nodes>\n";
  out += "    <edges>\n";
  std::size_t eid = 0;
  for (const Edge& e : g.edges()) {
    out += "      <edge id=\"" + std::to_string(eid++) + "\" source=\"" + std::to_string(e.u) +
           "\" target=\"" + std::to_string(e.v) + "\" weight=\"" + format_double(e.weight) + "\"/>\n";
  }
  out += "    </edges>\n";
  out += "  </graph>\n";
  out += "</gexf>\n";
  return out;
}

Graph read_gexf(const std::string& text) {
  struct NodeRec {
    long id;
    std::string label;
  };
  std::vector<NodeRec> nodes;
  struct EdgeRec {
    long source, target;
    double weight;
  };
  std::vector<EdgeRec> edges;

  std::size_t pos = 0;
  while (true) {
    std::size_t open = text.find('<', pos);
    if (open == std::string::npos) break;
    std::size_t close = text.find('>', open);
    if (close == std::string::npos) throw DataError("unterminated GEXF tag");
    std::string tag = text.substr(open + 1, close - open - 1);
    pos = close + 1;
    if (!tag.empty() && tag.back() == '/') tag.pop_back();

    if (tag.rfind("node ", 0) == 0 || tag == "node") {
      auto attrs = parse_attributes(tag.substr(4));
      if (!attrs.count("id")) throw DataError("GEXF node without id");
      nodes.push_back({to_long(attrs["id"], "node id"),
                       attrs.count("label") ? attrs["label"] : attrs["id"]});
    } else if (tag.rfind("edge ", 0) == 0) {
      auto attrs = parse_attributes(tag.substr(4));
      if (!attrs.count("source") || !attrs.count("target"))
        throw DataError("GEXF edge without endpoints");
      double w = 1.0;
      if (attrs.count("weight")) {
        errno = 0;
        char* end = nullptr;
        w = std::strtod(attrs["weight"].c_str(), &end);
        if (errno != 0 || end != attrs["weight"].c_str() + attrs["weight"].size())
          throw DataError("bad GEXF edge weight '" + attrs["weight"] + "'");
      }
      edges.push_back({to_long(attrs["source"], "edge source"),
                       to_long(attrs["target"], "edge target"), w});
    }
  }

  std::unordered_map<long, int> id_map;
  GraphBuilder builder(static_cast<int>(nodes.size()));
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!id_map.emplace(nodes[i].id, static_cast<int>(i)).second)
      throw DataError("duplicate GEXF node id " + std::to_string(nodes[i].id));
    builder.set_label(static_cast<int>(i), nodes[i].label);
  }
  for (const EdgeRec& e : edges) {
    auto su = id_map.find(e.source);
    auto sv = id_map.find(e.target);
    if (su == id_map.end() || sv == id_map.end()) throw DataError("GEXF edge references unknown node");
    builder.add_edge(su->second, sv->second, e.weight);
  }
  return builder.build();
}

}  // namespace charnet
