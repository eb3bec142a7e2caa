#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ontoforge/ontology.hpp"

using namespace ontoforge;

namespace {

ClusterNode leaf(int id, std::vector<std::string> members, std::string medoid) {
  ClusterNode n;
  n.id = id;
  n.kind = NodeKind::leaf;
  n.members = std::move(members);
  n.medoid = std::move(medoid);
  return n;
}

ClusterNode two_level_tree() {
  // root -> {inner -> {leaf1, leaf2}, leaf3}, plus an outlier at the root
  ClusterNode root;
  root.id = 0;
  root.kind = NodeKind::internal;
  root.members = {"a", "b", "c", "d", "e", "x"};
  root.medoid = "a";
  root.outliers = {"x"};

  ClusterNode inner;
  inner.id = 1;
  inner.kind = NodeKind::internal;
  inner.members = {"a", "b", "c"};
  inner.medoid = "a";
  inner.children.push_back(leaf(2, {"a", "b"}, "a"));
  inner.children.push_back(leaf(3, {"c"}, "c"));

  root.children.push_back(std::move(inner));
  root.children.push_back(leaf(4, {"d", "e"}, "d"));
  return root;
}

}  // namespace

TEST_CASE("assemble single leaf") {
  auto g = assemble_ontology(leaf(0, {"a", "b"}, "a"));
  CHECK(g.concepts.size() == 1);
  CHECK(g.term_nodes == std::set<std::string>{"a", "b"});
  CHECK(g.edges.empty());
  CHECK(g.concepts.at(g.root_id).label == "a");
  CHECK(g.term_attachment.at("a") == g.root_id);
}

TEST_CASE("assemble root with two children") {
  ClusterNode root;
  root.id = 0;
  root.kind = NodeKind::internal;
  root.members = {"a", "b", "c", "d"};
  root.medoid = "a";
  root.children.push_back(leaf(1, {"a", "b"}, "a"));
  root.children.push_back(leaf(2, {"c", "d"}, "c"));
  auto g = assemble_ontology(root);
  CHECK(g.concepts.size() == 3);
  CHECK(g.edges.size() == 2);
  for (const auto& e : g.edges) {
    CHECK(e.parent == g.root_id);
    CHECK(e.relation == "unnamed");
  }
}

TEST_CASE("two-level generalization keeps concept-under-concept structure") {
  auto g = assemble_ontology(two_level_tree());
  // 5 tree nodes + 1 outlier concept
  CHECK(g.concepts.size() == 6);
  CHECK(g.edges.size() == 5);

  // find the inner concept and check its parent is the root and its
  // children are concepts
  int concept_children_of_root = 0;
  for (const auto& e : g.edges) {
    if (e.parent == g.root_id) ++concept_children_of_root;
  }
  CHECK(concept_children_of_root == 3);  // inner, leaf3, outliers

  // the outlier term x attaches to a flagged concept
  const std::string& outlier_concept = g.term_attachment.at("x");
  CHECK(g.concepts.at(outlier_concept).outlier_group);
  CHECK(g.concepts.at(outlier_concept).label.rfind("outliers-of-", 0) == 0);

  // every term attaches to exactly one leaf or outlier concept
  for (const std::string& t : {"a", "b", "c", "d", "e", "x"}) {
    CHECK(g.term_attachment.count(t) == 1);
  }
}

TEST_CASE("edge count equals concepts minus roots") {
  auto g = assemble_ontology(two_level_tree());
  CHECK(g.edges.size() == g.concepts.size() - 1);
}

TEST_CASE("empty tree is an error") {
  ClusterNode empty;
  CHECK_THROWS_AS(assemble_ontology(empty), Error);
}

TEST_CASE("json export round trips and re-export is byte identical") {
  auto g = assemble_ontology(two_level_tree());
  std::string json = export_json(g);
  OntologyGraph imported = import_json(json);
  CHECK(imported == g);
  CHECK(export_json(imported) == json);
  CHECK_THROWS_AS(import_json("not json"), Error);
}

TEST_CASE("exports are deterministic") {
  auto a = assemble_ontology(two_level_tree());
  auto b = assemble_ontology(two_level_tree());
  CHECK(export_json(a) == export_json(b));
  CHECK(export_dot(a) == export_dot(b));
  CHECK(export_turtle(a) == export_turtle(b));
}

TEST_CASE("dot export shape") {
  ClusterNode root;
  root.id = 0;
  root.kind = NodeKind::internal;
  root.members = {"a", "b", "c", "d"};
  root.medoid = "a";
  root.children.push_back(leaf(1, {"a", "b"}, "a"));
  root.children.push_back(leaf(2, {"c", "d"}, "c"));
  auto g = assemble_ontology(root);
  std::string dot = export_dot(g);
  CHECK(dot.rfind("digraph ontology {", 0) == 0);
  std::size_t arrows = 0;
  for (std::size_t pos = dot.find("->"); pos != std::string::npos;
       pos = dot.find("->", pos + 2)) {
    ++arrows;
  }
  // 2 concept edges + 4 term attachments
  CHECK(arrows == 6);
}

TEST_CASE("turtle export links children and labels terms") {
  auto g = assemble_ontology(two_level_tree());
  std::string ttl = export_turtle(g);
  CHECK(ttl.find("rdfs:subClassOf") != std::string::npos);
  CHECK(ttl.find("a rdfs:Class") != std::string::npos);
  CHECK(ttl.find("rdfs:label \"a\"") != std::string::npos);
  // one subclass triple per edge
  std::size_t count = 0;
  for (std::size_t pos = ttl.find("rdfs:subClassOf"); pos != std::string::npos;
       pos = ttl.find("rdfs:subClassOf", pos + 1)) {
    ++count;
  }
  CHECK(count == g.edges.size());
}
