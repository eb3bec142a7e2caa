#include "ontoforge/ontology.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdint>
#include <tuple>

#include <nlohmann/json.hpp>

namespace ontoforge {

namespace {

std::uint64_t fnv1a64(const std::string& data, std::uint64_t hash = 0xcbf29ce484222325ULL) {
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string concept_id(int level, const std::set<std::string>& members,
                       bool outlier_group) {
  std::string key = outlier_group ? "o" : "c";
  key += std::to_string(level);
  for (const std::string& m : members) {
    key += '\x1f';
    key += m;
  }
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a64(key)));
  return buf;
}

void walk(const ClusterNode& node, int level, OntologyGraph& g,
          const std::string& parent_id, int& anon_counter) {
  Concept c;
  c.level = level;
  c.member_terms.insert(node.members.begin(), node.members.end());
  c.id = concept_id(level, c.member_terms, false);
  if (!node.medoid.empty()) {
    c.label = node.medoid;
  } else {
    c.label = "concept-" + std::to_string(anon_counter++);
  }

  if (!parent_id.empty()) {
    g.edges.insert({parent_id, c.id, "unnamed"});
  } else {
    g.root_id = c.id;
  }

  if (node.children.empty()) {
    for (const std::string& term : node.members) {
      // outlier terms of this node attach to the outlier concept below
      bool is_outlier = std::find(node.outliers.begin(), node.outliers.end(),
                                  term) != node.outliers.end();
      if (!is_outlier) {
        g.term_nodes.insert(term);
        g.term_attachment[term] = c.id;
      }
    }
  }

  if (!node.outliers.empty()) {
    Concept o;
    o.level = level + 1;
    o.outlier_group = true;
    o.member_terms.insert(node.outliers.begin(), node.outliers.end());
    o.id = concept_id(o.level, o.member_terms, true);
    o.label = "outliers-of-" + c.id;
    g.edges.insert({c.id, o.id, "unnamed"});
    for (const std::string& term : node.outliers) {
      g.term_nodes.insert(term);
      g.term_attachment[term] = o.id;
    }
    g.concepts[o.id] = std::move(o);
  }

  const std::string own_id = c.id;
  g.concepts[c.id] = std::move(c);
  for (const ClusterNode& child : node.children) {
    walk(child, level + 1, g, own_id, anon_counter);
  }
}

std::string escape_literal(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

bool OntologyGraph::operator==(const OntologyGraph& other) const {
  if (root_id != other.root_id || term_nodes != other.term_nodes ||
      term_attachment != other.term_attachment ||
      concepts.size() != other.concepts.size() ||
      edges.size() != other.edges.size()) {
    return false;
  }
  for (const auto& [id, c] : concepts) {
    auto it = other.concepts.find(id);
    if (it == other.concepts.end()) return false;
    const Concept& o = it->second;
    if (c.label != o.label || c.member_terms != o.member_terms ||
        c.level != o.level || c.outlier_group != o.outlier_group) {
      return false;
    }
  }
  auto ia = edges.begin();
  for (auto ib = other.edges.begin(); ib != other.edges.end(); ++ia, ++ib) {
    if (ia->parent != ib->parent || ia->child != ib->child ||
        ia->relation != ib->relation) {
      return false;
    }
  }
  return true;
}

OntologyGraph assemble_ontology(const ClusterNode& root) {
  if (root.members.empty()) {
    throw Error(ErrorKind::empty_input, "assemble_ontology: empty cluster tree");
  }
  OntologyGraph g;
  int anon_counter = 1;
  walk(root, 0, g, "", anon_counter);
  return g;
}

std::string export_json(const OntologyGraph& g) {
  nlohmann::ordered_json j;
  j["root"] = g.root_id;
  j["concepts"] = nlohmann::ordered_json::array();
  for (const auto& [id, c] : g.concepts) {
    nlohmann::ordered_json jc;
    jc["id"] = id;
    jc["label"] = c.label;
    jc["level"] = c.level;
    jc["outlier_group"] = c.outlier_group;
    jc["members"] = std::vector<std::string>(c.member_terms.begin(),
                                             c.member_terms.end());
    j["concepts"].push_back(std::move(jc));
  }
  j["terms"] = std::vector<std::string>(g.term_nodes.begin(), g.term_nodes.end());
  j["edges"] = nlohmann::ordered_json::array();
  for (const OntologyEdge& e : g.edges) {
    nlohmann::ordered_json je;
    je["parent"] = e.parent;
    je["child"] = e.child;
    je["relation"] = e.relation;
    j["edges"].push_back(std::move(je));
  }
  j["term_attachments"] = nlohmann::ordered_json::array();
  for (const auto& [term, cid] : g.term_attachment) {
    nlohmann::ordered_json ja;
    ja["term"] = term;
    ja["concept"] = cid;
    j["term_attachments"].push_back(std::move(ja));
  }
  return j.dump(2) + "\n";
}

OntologyGraph import_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, std::string("ontology json: ") + e.what());
  }
  OntologyGraph g;
  try {
    g.root_id = j.at("root").get<std::string>();
    for (const auto& jc : j.at("concepts")) {
      Concept c;
      c.id = jc.at("id").get<std::string>();
      c.label = jc.at("label").get<std::string>();
      c.level = jc.at("level").get<int>();
      c.outlier_group = jc.at("outlier_group").get<bool>();
      for (const auto& m : jc.at("members")) {
        c.member_terms.insert(m.get<std::string>());
      }
      g.concepts[c.id] = std::move(c);
    }
    for (const auto& t : j.at("terms")) g.term_nodes.insert(t.get<std::string>());
    for (const auto& je : j.at("edges")) {
      g.edges.insert({je.at("parent").get<std::string>(),
                      je.at("child").get<std::string>(),
                      je.at("relation").get<std::string>()});
    }
    for (const auto& ja : j.at("term_attachments")) {
      g.term_attachment[ja.at("term").get<std::string>()] =
          ja.at("concept").get<std::string>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, std::string("ontology json: ") + e.what());
  }
  return g;
}

std::string export_dot(const OntologyGraph& g) {
  std::string out = "digraph ontology {\n  node [shape=box];\n";
  for (const auto& [id, c] : g.concepts) {
    out += "  \"c_" + id + "\" [label=\"" + escape_literal(c.label) + "\"";
    if (c.outlier_group) out += ", style=dashed";
    out += "];\n";
  }
  for (const OntologyEdge& e : g.edges) {
    out += "  \"c_" + e.parent + "\" -> \"c_" + e.child + "\";\n";
  }
  int t = 0;
  for (const auto& [term, cid] : g.term_attachment) {
    std::string tid = "t_" + std::to_string(t++);
    out += "  \"" + tid + "\" [label=\"" + escape_literal(term) +
           "\", shape=plaintext];\n";
    out += "  \"c_" + cid + "\" -> \"" + tid + "\" [style=dotted];\n";
  }
  out += "}\n";
  return out;
}

std::string export_turtle(const OntologyGraph& g) {
  std::string out =
      "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n"
      "@prefix of: <http://ontoforge.local/schema#> .\n\n";
  for (const auto& [id, c] : g.concepts) {
    out += "of:c_" + id + " a rdfs:Class ;\n    rdfs:label \"" +
           escape_literal(c.label) + "\" .\n";
  }
  out += "\n";
  for (const OntologyEdge& e : g.edges) {
    out += "of:c_" + e.child + " rdfs:subClassOf of:c_" + e.parent + " .\n";
  }
  out += "\n";
  int t = 0;
  for (const auto& [term, cid] : g.term_attachment) {
    out += "of:term_" + std::to_string(t++) + " a of:c_" + cid +
           " ;\n    rdfs:label \"" + escape_literal(term) + "\" .\n";
  }
  return out;
}

}  // namespace ontoforge
