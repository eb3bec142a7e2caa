#ifndef ONTOFORGE_CLUSTER_HPP
#define ONTOFORGE_CLUSTER_HPP

#include <memory>
#include <string>
#include <vector>

#include "ontoforge/corpus.hpp"

namespace ontoforge {

// Hit counts backing the featureless distance. f(x,y) <= min(f(x),f(y)),
// f(x) <= N.
class HitCountProvider {
 public:
  virtual ~HitCountProvider() = default;
  virtual long long unigram(const std::string& x) const = 0;
  virtual long long pair(const std::string& x, const std::string& y) const = 0;
  virtual long long universe() const = 0;
};

class SnapshotProvider : public HitCountProvider {
 public:
  explicit SnapshotProvider(HitCountSnapshot snapshot)
      : snapshot_(std::move(snapshot)) {}
  long long unigram(const std::string& x) const override;
  long long pair(const std::string& x, const std::string& y) const override;
  long long universe() const override { return snapshot_.N; }

 private:
  HitCountSnapshot snapshot_;
};

// Fallback when no snapshot file is given: document frequencies over the
// domain corpus, N = number of documents.
class DocFrequencyProvider : public HitCountProvider {
 public:
  // phrases matched as contiguous token sequences, head singularized
  DocFrequencyProvider(const std::vector<TokenizedDoc>& docs,
                       const std::vector<std::string>& phrases);
  long long unigram(const std::string& x) const override;
  long long pair(const std::string& x, const std::string& y) const override;
  long long universe() const override { return total_docs_; }

 private:
  long long total_docs_ = 0;
  std::map<std::string, std::vector<int>> doc_sets_;  // phrase -> sorted doc ids
};

struct DistanceMatrix {
  std::vector<std::string> terms;
  std::vector<std::vector<double>> d;  // symmetric, zero diagonal, [0,1]

  double at(std::size_t i, std::size_t j) const { return d[i][j]; }
  std::size_t size() const { return terms.size(); }
};

enum class NodeKind { internal, leaf, outlier };

struct ClusterNode {
  int id = 0;
  NodeKind kind = NodeKind::leaf;
  std::vector<std::string> members;   // sorted
  std::vector<ClusterNode> children;
  std::vector<std::string> outliers;  // sorted
  std::string medoid;                 // set by label_concepts
};

struct TTAParams {
  int max_leaf = 4;
  double theta_split = 0.35;
  double theta_out = 0.75;
  int passes = 3;
  unsigned long long seed = 1;
};

// refinement objective recorded after each ant pass (pass 0 = initial
// assignment); the objective never increases within a node
struct RefineStep {
  int node_id;
  int pass;
  double objective;
};

double ngd_distance(const std::string& x, const std::string& y,
                    const HitCountProvider& provider);

DistanceMatrix build_distance_matrix(const std::vector<std::string>& terms,
                                     const HitCountProvider& provider);

ClusterNode tta_cluster(const DistanceMatrix& matrix, const TTAParams& params,
                        std::vector<RefineStep>* trace = nullptr);

// Step (4) of the node procedure, exposed for testing: moves members whose
// best mean distance to any child is >= theta_out into the outlier set.
void isolate_outliers(ClusterNode& node, const DistanceMatrix& matrix,
                      double theta_out);

// Fills medoid labels: the member minimizing total distance to co-members,
// ties lexicographic.
void label_concepts(ClusterNode& root, const DistanceMatrix& matrix);

std::string cluster_tree_json(const ClusterNode& root);
ClusterNode parse_cluster_tree_json(const std::string& text);

std::string distance_matrix_tsv(const DistanceMatrix& matrix);
DistanceMatrix parse_distance_matrix_tsv(const std::string& text);

}  // namespace ontoforge

#endif
