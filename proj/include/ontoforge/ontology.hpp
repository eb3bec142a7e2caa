#ifndef ONTOFORGE_ONTOLOGY_HPP
#define ONTOFORGE_ONTOLOGY_HPP

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "ontoforge/cluster.hpp"

namespace ontoforge {

struct Concept {
  std::string id;  // stable hash of (level, member set)
  std::string label;
  std::set<std::string> member_terms;
  int level = 0;
  bool outlier_group = false;
};

struct OntologyEdge {
  std::string parent;
  std::string child;
  std::string relation = "unnamed";

  bool operator<(const OntologyEdge& other) const {
    return std::tie(parent, child) < std::tie(other.parent, other.child);
  }
};

struct OntologyGraph {
  std::map<std::string, Concept> concepts;  // keyed by id
  std::set<std::string> term_nodes;
  std::set<OntologyEdge> edges;
  std::map<std::string, std::string> term_attachment;  // term -> concept id
  std::string root_id;

  bool operator==(const OntologyGraph& other) const;
};

OntologyGraph assemble_ontology(const ClusterNode& root);

std::string export_json(const OntologyGraph& g);
std::string export_dot(const OntologyGraph& g);
std::string export_turtle(const OntologyGraph& g);

OntologyGraph import_json(const std::string& text);

}  // namespace ontoforge

#endif
