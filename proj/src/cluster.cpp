#include "ontoforge/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <sstream>
#include <tuple>

#include <nlohmann/json.hpp>

#include "ontoforge/frames.hpp"

namespace ontoforge {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool doc_contains_phrase(const std::vector<std::vector<std::string>>& sentences,
                         const std::vector<std::string>& words) {
  const std::size_t k = words.size();
  if (k == 0) return false;
  for (const auto& sent : sentences) {
    if (sent.size() < k) continue;
    for (std::size_t i = 0; i + k <= sent.size(); ++i) {
      bool match = true;
      for (std::size_t j = 0; j + 1 < k; ++j) {
        if (sent[i + j] != words[j]) {
          match = false;
          break;
        }
      }
      if (!match) continue;
      const std::string& last = sent[i + k - 1];
      if (last == words[k - 1] || singularize(last) == words[k - 1]) return true;
    }
  }
  return false;
}

std::vector<std::string> split_on_spaces(const std::string& phrase) {
  std::vector<std::string> words;
  std::istringstream in(phrase);
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

}  // namespace

long long SnapshotProvider::unigram(const std::string& x) const {
  auto it = snapshot_.unigram.find(x);
  return it == snapshot_.unigram.end() ? 0 : it->second;
}

long long SnapshotProvider::pair(const std::string& x, const std::string& y) const {
  auto key = x <= y ? std::make_pair(x, y) : std::make_pair(y, x);
  auto it = snapshot_.pair.find(key);
  return it == snapshot_.pair.end() ? 0 : it->second;
}

DocFrequencyProvider::DocFrequencyProvider(const std::vector<TokenizedDoc>& docs,
                                           const std::vector<std::string>& phrases)
    : total_docs_(static_cast<long long>(docs.size())) {
  for (const std::string& phrase : phrases) {
    auto words = split_on_spaces(phrase);
    std::vector<int> ids;
    for (std::size_t d = 0; d < docs.size(); ++d) {
      if (doc_contains_phrase(docs[d].sentences, words))
        ids.push_back(static_cast<int>(d));
    }
    doc_sets_[phrase] = std::move(ids);
  }
}

long long DocFrequencyProvider::unigram(const std::string& x) const {
  auto it = doc_sets_.find(x);
  return it == doc_sets_.end() ? 0 : static_cast<long long>(it->second.size());
}

long long DocFrequencyProvider::pair(const std::string& x,
                                     const std::string& y) const {
  auto ix = doc_sets_.find(x);
  auto iy = doc_sets_.find(y);
  if (ix == doc_sets_.end() || iy == doc_sets_.end()) return 0;
  std::vector<int> common;
  std::set_intersection(ix->second.begin(), ix->second.end(), iy->second.begin(),
                        iy->second.end(), std::back_inserter(common));
  return static_cast<long long>(common.size());
}

double ngd_distance(const std::string& x, const std::string& y,
                    const HitCountProvider& provider) {
  long long fx = provider.unigram(x);
  long long fy = provider.unigram(y);
  if (x == y && fx > 0) return 0.0;
  long long fxy = provider.pair(x, y);
  if (fx == 0 || fy == 0 || fxy == 0) return 1.0;
  long long N = provider.universe();
  if (N <= std::max(fx, fy)) {
    throw Error(ErrorKind::provider_inconsistency,
                "ngd: universe N=" + std::to_string(N) +
                    " not larger than hit counts for (" + x + ", " + y + ")");
  }
  double lx = std::log(static_cast<double>(fx));
  double ly = std::log(static_cast<double>(fy));
  double lxy = std::log(static_cast<double>(fxy));
  double ln = std::log(static_cast<double>(N));
  double raw = (std::max(lx, ly) - lxy) / (ln - std::min(lx, ly));
  return std::clamp(raw, 0.0, 1.0);
}

DistanceMatrix build_distance_matrix(const std::vector<std::string>& terms,
                                     const HitCountProvider& provider) {
  for (std::size_t i = 1; i < terms.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (terms[i] == terms[j]) {
        throw Error(ErrorKind::usage, "duplicate term: " + terms[i]);
      }
    }
  }
  DistanceMatrix m;
  m.terms = terms;
  const std::size_t n = terms.size();
  m.d.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      long long fxy = provider.pair(terms[i], terms[j]);
      long long fmin = std::min(provider.unigram(terms[i]), provider.unigram(terms[j]));
      if (fxy > fmin) {
        throw Error(ErrorKind::provider_inconsistency,
                    "pair count exceeds unigram count for (" + terms[i] + ", " +
                        terms[j] + ")");
      }
      double dist = ngd_distance(terms[i], terms[j], provider);
      m.d[i][j] = dist;
      m.d[j][i] = dist;
    }
  }
  return m;
}

namespace {

// Clustering works on index sets into the matrix; strings are attached when
// nodes are materialized.
struct TTAContext {
  const DistanceMatrix& matrix;
  const TTAParams& params;
  std::mt19937_64 rng;
  int next_id = 0;
  std::vector<RefineStep>* trace;
};

double mean_distance(const DistanceMatrix& m, int member,
                     const std::vector<int>& group) {
  double sum = 0.0;
  int count = 0;
  for (int other : group) {
    if (other == member) continue;
    sum += m.d[member][other];
    ++count;
  }
  if (count == 0) return kInf;  // no co-members
  return sum / count;
}

double mean_pairwise(const DistanceMatrix& m, const std::vector<int>& group) {
  double sum = 0.0;
  long long count = 0;
  for (std::size_t i = 0; i < group.size(); ++i) {
    for (std::size_t j = i + 1; j < group.size(); ++j) {
      sum += m.d[group[i]][group[j]];
      ++count;
    }
  }
  return count == 0 ? 0.0 : sum / static_cast<double>(count);
}

// refinement objective: sum of mean distances to own-child co-members;
// singletons contribute zero
double refine_objective(const DistanceMatrix& m,
                        const std::vector<std::vector<int>>& children) {
  double total = 0.0;
  for (const auto& child : children) {
    for (int member : child) {
      double d = mean_distance(m, member, child);
      if (std::isfinite(d)) total += d;
    }
  }
  return total;
}

// Fisher-Yates with the raw engine; std::shuffle is not portable across
// standard libraries and the shuffle order is part of the contract.
void deterministic_shuffle(std::vector<int>& values, std::mt19937_64& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(values[i - 1], values[j]);
  }
}

ClusterNode build_node(TTAContext& ctx, std::vector<int> members) {
  const DistanceMatrix& m = ctx.matrix;
  // member order is lexicographic on the term; every tie-break below
  // (farthest pair, seed assignment) inherits it
  std::sort(members.begin(), members.end(),
            [&](int a, int b) { return m.terms[a] < m.terms[b]; });

  ClusterNode node;
  node.id = ctx.next_id++;
  for (int i : members) node.members.push_back(m.terms[i]);

  if (static_cast<int>(members.size()) <= ctx.params.max_leaf ||
      mean_pairwise(m, members) <= ctx.params.theta_split) {
    node.kind = NodeKind::leaf;
    return node;
  }
  node.kind = NodeKind::internal;

  // seed children with the farthest pair; ties resolve to the
  // lexicographically smallest pair (members are in term order)
  int seed_a = members[0], seed_b = members[1];
  double best = -1.0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      double d = m.d[members[i]][members[j]];
      if (d > best) {
        best = d;
        seed_a = members[i];
        seed_b = members[j];
      }
    }
  }

  std::vector<std::vector<int>> children(2);
  children[0].push_back(seed_a);
  children[1].push_back(seed_b);
  std::vector<int> which(m.size(), -1);
  which[seed_a] = 0;
  which[seed_b] = 1;
  for (int mem : members) {
    if (mem == seed_a || mem == seed_b) continue;
    double da = m.d[mem][seed_a];
    double db = m.d[mem][seed_b];
    int side = da <= db ? 0 : 1;  // ties to the first child
    children[side].push_back(mem);
    which[mem] = side;
  }

  // ant refinement: visit members in seeded-shuffle order, moving each to
  // the child with the smaller mean distance to that child's other members
  if (ctx.trace) {
    ctx.trace->push_back({node.id, 0, refine_objective(m, children)});
  }
  for (int pass = 1; pass <= ctx.params.passes; ++pass) {
    std::vector<int> order = members;
    deterministic_shuffle(order, ctx.rng);
    int moves = 0;
    for (int mem : order) {
      int own = which[mem];
      int other = 1 - own;
      if (children[own].size() <= 1) continue;  // never empty a child
      double d_own = mean_distance(m, mem, children[own]);
      double d_other = mean_distance(m, mem, children[other]);
      if (!(d_other < d_own)) continue;
      double before = refine_objective(m, children);
      auto& src = children[own];
      src.erase(std::find(src.begin(), src.end(), mem));
      children[other].push_back(mem);
      if (refine_objective(m, children) > before) {
        // roll the move back; a move must not worsen the objective
        auto& dst = children[other];
        dst.erase(std::find(dst.begin(), dst.end(), mem));
        children[own].push_back(mem);
        continue;
      }
      which[mem] = other;
      ++moves;
    }
    if (ctx.trace) {
      ctx.trace->push_back({node.id, pass, refine_objective(m, children)});
    }
    if (moves == 0) break;
  }

  // outlier isolation
  std::vector<int> outliers;
  for (int mem : members) {
    double best_mean = kInf;
    for (const auto& child : children) {
      bool inside = std::find(child.begin(), child.end(), mem) != child.end();
      if (inside && child.size() == 1) continue;  // own singleton: no co-members
      best_mean = std::min(best_mean, mean_distance(m, mem, child));
    }
    if (best_mean >= ctx.params.theta_out) outliers.push_back(mem);
  }
  for (int mem : outliers) {
    auto& child = children[which[mem]];
    child.erase(std::find(child.begin(), child.end(), mem));
    which[mem] = -1;
  }
  std::sort(outliers.begin(), outliers.end(),
            [&](int a, int b) { return m.terms[a] < m.terms[b]; });
  for (int i : outliers) node.outliers.push_back(m.terms[i]);

  for (auto& child : children) {
    if (child.empty()) continue;
    node.children.push_back(build_node(ctx, std::move(child)));
  }
  return node;
}

}  // namespace

ClusterNode tta_cluster(const DistanceMatrix& matrix, const TTAParams& params,
                        std::vector<RefineStep>* trace) {
  if (matrix.size() == 0) {
    throw Error(ErrorKind::empty_input, "tta_cluster: empty distance matrix");
  }
  if (!(params.theta_split > 0.0 && params.theta_split < params.theta_out &&
        params.theta_out <= 1.0)) {
    throw Error(ErrorKind::usage,
                "tta_cluster: require 0 < theta_split < theta_out <= 1");
  }
  if (params.max_leaf < 1 || params.passes < 0) {
    throw Error(ErrorKind::usage, "tta_cluster: bad max_leaf or passes");
  }
  TTAContext ctx{matrix, params, std::mt19937_64(params.seed), 0, trace};
  std::vector<int> all(matrix.size());
  for (std::size_t i = 0; i < matrix.size(); ++i) all[i] = static_cast<int>(i);
  return build_node(ctx, std::move(all));
}

void isolate_outliers(ClusterNode& node, const DistanceMatrix& matrix,
                      double theta_out) {
  if (node.children.empty()) {
    throw Error(ErrorKind::usage, "isolate_outliers: node has no children");
  }
  std::map<std::string, int> term_index;
  for (std::size_t i = 0; i < matrix.terms.size(); ++i)
    term_index[matrix.terms[i]] = static_cast<int>(i);

  std::vector<std::string> isolated;
  for (ClusterNode& child : node.children) {
    std::vector<std::string> keep;
    for (const std::string& term : child.members) {
      int mem = term_index.at(term);
      double best_mean = kInf;
      for (const ClusterNode& other : node.children) {
        std::vector<int> group;
        for (const std::string& t : other.members) group.push_back(term_index.at(t));
        bool inside = &other == &child;
        if (inside && group.size() == 1) continue;
        best_mean = std::min(best_mean, mean_distance(matrix, mem, group));
      }
      if (best_mean >= theta_out) {
        isolated.push_back(term);
      } else {
        keep.push_back(term);
      }
    }
    child.members = std::move(keep);
  }
  for (std::string& t : isolated) node.outliers.push_back(std::move(t));
  std::sort(node.outliers.begin(), node.outliers.end());
}

void label_concepts(ClusterNode& root, const DistanceMatrix& matrix) {
  std::map<std::string, int> term_index;
  for (std::size_t i = 0; i < matrix.terms.size(); ++i)
    term_index[matrix.terms[i]] = static_cast<int>(i);

  std::vector<ClusterNode*> stack{&root};
  while (!stack.empty()) {
    ClusterNode* node = stack.back();
    stack.pop_back();
    if (!node->members.empty()) {
      std::string best;
      double best_total = kInf;
      for (const std::string& candidate : node->members) {
        double total = 0.0;
        for (const std::string& other : node->members) {
          if (other == candidate) continue;
          total += matrix.d[term_index.at(candidate)][term_index.at(other)];
        }
        if (total < best_total ||
            (total == best_total && candidate < best)) {
          best_total = total;
          best = candidate;
        }
      }
      node->medoid = best;
    }
    for (ClusterNode& child : node->children) stack.push_back(&child);
  }
}

namespace {

const char* kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::internal: return "internal";
    case NodeKind::leaf: return "leaf";
    case NodeKind::outlier: return "outlier";
  }
  return "?";
}

NodeKind kind_from_string(const std::string& s) {
  if (s == "internal") return NodeKind::internal;
  if (s == "leaf") return NodeKind::leaf;
  if (s == "outlier") return NodeKind::outlier;
  throw Error(ErrorKind::parse, "unknown node kind: " + s);
}

nlohmann::ordered_json node_to_json(const ClusterNode& node) {
  nlohmann::ordered_json j;
  j["id"] = node.id;
  j["kind"] = kind_name(node.kind);
  if (node.medoid.empty()) {
    j["medoid"] = nullptr;
  } else {
    j["medoid"] = node.medoid;
  }
  j["members"] = node.members;
  j["outliers"] = node.outliers;
  j["children"] = nlohmann::ordered_json::array();
  for (const ClusterNode& child : node.children) {
    j["children"].push_back(node_to_json(child));
  }
  return j;
}

ClusterNode node_from_json(const nlohmann::json& j) {
  ClusterNode node;
  node.id = j.at("id").get<int>();
  node.kind = kind_from_string(j.at("kind").get<std::string>());
  if (!j.at("medoid").is_null()) node.medoid = j.at("medoid").get<std::string>();
  node.members = j.at("members").get<std::vector<std::string>>();
  node.outliers = j.at("outliers").get<std::vector<std::string>>();
  for (const auto& child : j.at("children")) {
    node.children.push_back(node_from_json(child));
  }
  return node;
}

}  // namespace

std::string cluster_tree_json(const ClusterNode& root) {
  return node_to_json(root).dump(2) + "\n";
}

ClusterNode parse_cluster_tree_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, std::string("cluster tree: ") + e.what());
  }
  try {
    return node_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, std::string("cluster tree: ") + e.what());
  }
}

std::string distance_matrix_tsv(const DistanceMatrix& matrix) {
  std::string out;
  char buf[64];
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    for (std::size_t j = i; j < matrix.size(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", matrix.d[i][j]);
      out += matrix.terms[i];
      out += '\t';
      out += matrix.terms[j];
      out += '\t';
      out += buf;
      out += '\n';
    }
  }
  return out;
}

DistanceMatrix parse_distance_matrix_tsv(const std::string& text) {
  std::vector<std::string> terms;
  std::map<std::string, std::size_t> index;
  std::vector<std::tuple<std::string, std::string, double>> rows;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto t1 = line.find('\t');
    auto t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
    if (t1 == std::string::npos || t2 == std::string::npos) {
      throw Error(ErrorKind::parse, "distance matrix: expected 3 columns at line " +
                                        std::to_string(lineno));
    }
    std::string a = line.substr(0, t1);
    std::string b = line.substr(t1 + 1, t2 - t1 - 1);
    double d;
    try {
      d = std::stod(line.substr(t2 + 1));
    } catch (const std::exception&) {
      throw Error(ErrorKind::parse, "distance matrix: bad distance at line " +
                                        std::to_string(lineno));
    }
    if (!index.count(a)) {
      index[a] = terms.size();
      terms.push_back(a);
    }
    if (!index.count(b)) {
      index[b] = terms.size();
      terms.push_back(b);
    }
    rows.emplace_back(a, b, d);
  }
  DistanceMatrix m;
  m.terms = terms;
  m.d.assign(terms.size(), std::vector<double>(terms.size(), 0.0));
  for (const auto& [a, b, d] : rows) {
    m.d[index[a]][index[b]] = d;
    m.d[index[b]][index[a]] = d;
  }
  return m;
}

}  // namespace ontoforge
