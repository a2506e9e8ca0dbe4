#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace treewave::syntax {

enum class FeatureKind { categorial, selectional, other };

std::string feature_kind_name(FeatureKind kind);
FeatureKind feature_kind_from_name(const std::string& name);

// Atomic feature. Equality is by (name, kind).
struct Feature {
  std::string name;
  FeatureKind kind = FeatureKind::other;

  friend bool operator==(const Feature&, const Feature&) = default;
  friend auto operator<=>(const Feature&, const Feature&) = default;
};

// A lexical entry: id, feature bundle (exactly one categorial feature,
// whose name is the category), a semantic weight in [0,1], and an
// embedding vector.
class LexicalItem {
 public:
  LexicalItem(std::string id, std::string category, std::vector<Feature> features,
              double weight, std::vector<double> embedding);

  // Convenience: category only; the categorial feature is synthesized.
  LexicalItem(std::string id, std::string category, double weight = 1.0,
              std::vector<double> embedding = {});

  const std::string& id() const { return id_; }
  const std::string& category() const { return category_; }
  const std::vector<Feature>& features() const { return features_; }
  double weight() const { return weight_; }
  const std::vector<double>& embedding() const { return embedding_; }

  friend bool operator==(const LexicalItem&, const LexicalItem&) = default;

 private:
  std::string id_;
  std::string category_;
  std::vector<Feature> features_;  // sorted, deduplicated
  double weight_ = 1.0;
  std::vector<double> embedding_;
};

class SyntacticObject;
using SoPtr = std::shared_ptr<const SyntacticObject>;

// Immutable binary set-tree over lexical items. A node's children are an
// unordered pair: construction normalizes them into canonical order, and
// equality is canonical-form equality, so {a,b} and {b,a} are one value.
class SyntacticObject {
 public:
  static SoPtr leaf(LexicalItem item);
  static SoPtr node(SoPtr a, SoPtr b);  // unlabeled
  // Attach a label without endocentricity checking. label_all() is the
  // validated path; this one exists for decoders, which may legitimately
  // produce ill-formed trees that a later equality check rejects.
  static SoPtr node_with_label(SoPtr a, SoPtr b, std::string label);

  bool is_leaf() const { return item_.has_value(); }
  const LexicalItem& item() const;
  const SoPtr& first() const;   // canonical child order
  const SoPtr& second() const;
  const std::optional<std::string>& label() const { return label_; }

  // Canonical serialized form; the identity used for set membership and
  // tree equality.
  const std::string& canonical() const { return canonical_; }

  nlohmann::json to_json() const;
  static SoPtr from_json(const nlohmann::json& j);

 private:
  SyntacticObject() = default;

  std::optional<LexicalItem> item_;
  SoPtr first_, second_;
  std::optional<std::string> label_;
  std::string canonical_;
};

inline bool equal(const SoPtr& a, const SoPtr& b) {
  return a->canonical() == b->canonical();
}

// The set of syntactic objects available to merge. Insertion-ordered for
// reproducible output; membership is by canonical form.
class Workspace {
 public:
  Workspace() = default;
  explicit Workspace(std::vector<SoPtr> objects);

  const std::vector<SoPtr>& objects() const { return objects_; }
  std::size_t size() const { return objects_.size(); }
  bool contains(const SoPtr& so) const;
  // Returns a new workspace with `so` appended. Throws MergeError on
  // duplicates (workspaces are sets).
  Workspace with(SoPtr so) const;

  // Set equality.
  friend bool operator==(const Workspace& a, const Workspace& b);

 private:
  std::vector<SoPtr> objects_;
};

// MERGE: remove p and q from the workspace, add the fresh unlabeled set
// {p, q}. Throws MergeError if p or q is absent, p equals q, or the formed
// set is already a workspace member (cardinality must drop by exactly 1).
Workspace merge(const Workspace& ws, const SoPtr& p, const SoPtr& q);

inline const std::vector<std::string>& default_precedence() {
  static const std::vector<std::string> order{"N", "V", "A", "P"};
  return order;
}

// Head category of `so`. Leaves label themselves; a leaf merged with a
// phrase projects the leaf's category; leaf-leaf and phrase-phrase merges
// are resolved by the precedence list (both categories must be listed).
// Throws UnlabelableError when no rule applies.
std::string label_of(const SoPtr& so,
                     const std::vector<std::string>& precedence = default_precedence());

// Returns a copy of `so` with every node's label assigned bottom-up.
SoPtr label_all(const SoPtr& so,
                const std::vector<std::string>& precedence = default_precedence());

bool fully_labeled(const SoPtr& so);

// Tree metrics. depth: leaf 0, node 1 + max child depth.
int depth(const SoPtr& so);
int node_count(const SoPtr& so);
int leaf_count(const SoPtr& so);
std::vector<LexicalItem> leaves(const SoPtr& so);

// For each position in `order` (a planar embedding of so's leaves, given
// by id), the number of tree nodes whose rightmost leaf sits at that
// position. Counts sum to node_count(so). Throws OrderMismatchError when
// `order` is not a linearization of `so`.
std::vector<int> node_closures(const SoPtr& so, const std::vector<std::string>& order);

// Deterministic head-initial externalization: head child before non-head
// child at every node. Requires a fully labeled tree.
std::vector<LexicalItem> linearize(const SoPtr& so);

struct DerivationStep {
  SoPtr p, q;
  Workspace result;
};

struct Derivation {
  Workspace initial;
  std::vector<DerivationStep> steps;
};

// Applies the selections in order via merge(), recording each resulting
// workspace.
Derivation derive(Workspace initial, const std::vector<std::pair<SoPtr, SoPtr>>& selections);

// True iff replaying the recorded selections from every intermediate
// workspace reproduces the recorded suffix (the next state depends only on
// the current workspace and the selected pair). Malformed steps yield
// false, never a throw.
bool check_markov(const Derivation& d);

}  // namespace treewave::syntax
