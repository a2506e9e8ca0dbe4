#include "treewave/syntax.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "treewave/errors.hpp"

namespace treewave::syntax {

using nlohmann::json;

std::string feature_kind_name(FeatureKind kind) {
  switch (kind) {
    case FeatureKind::categorial: return "categorial";
    case FeatureKind::selectional: return "selectional";
    case FeatureKind::other: return "other";
  }
  throw FormatError("bad FeatureKind");
}

FeatureKind feature_kind_from_name(const std::string& name) {
  if (name == "categorial") return FeatureKind::categorial;
  if (name == "selectional") return FeatureKind::selectional;
  if (name == "other") return FeatureKind::other;
  throw FormatError("unknown feature kind: " + name);
}

LexicalItem::LexicalItem(std::string id, std::string category, std::vector<Feature> features,
                         double weight, std::vector<double> embedding)
    : id_(std::move(id)),
      category_(std::move(category)),
      features_(std::move(features)),
      weight_(weight),
      embedding_(std::move(embedding)) {
  if (id_.empty()) throw FormatError("lexical item id must be non-empty");
  if (category_.empty()) throw FormatError(id_ + ": category must be non-empty");
  for (const auto& f : features_)
    if (f.name.empty()) throw FormatError(id_ + ": feature name must be non-empty");
  std::sort(features_.begin(), features_.end());
  features_.erase(std::unique(features_.begin(), features_.end()), features_.end());
  int categorial = 0;
  for (const auto& f : features_)
    if (f.kind == FeatureKind::categorial) ++categorial;
  if (categorial == 0) {
    features_.push_back(Feature{category_, FeatureKind::categorial});
    std::sort(features_.begin(), features_.end());
  } else if (categorial > 1) {
    throw FormatError(id_ + ": more than one categorial feature");
  } else {
    auto it = std::find_if(features_.begin(), features_.end(),
                           [](const Feature& f) { return f.kind == FeatureKind::categorial; });
    if (it->name != category_)
      throw FormatError(id_ + ": categorial feature '" + it->name +
                        "' disagrees with category '" + category_ + "'");
  }
  if (!(weight_ >= 0.0 && weight_ <= 1.0))
    throw FormatError(id_ + ": weight must lie in [0,1]");
}

LexicalItem::LexicalItem(std::string id, std::string category, double weight,
                         std::vector<double> embedding)
    : LexicalItem(std::move(id), category, {Feature{category, FeatureKind::categorial}}, weight,
                  std::move(embedding)) {}

static json item_to_json(const LexicalItem& item) {
  json feats = json::array();
  for (const auto& f : item.features())
    feats.push_back({{"name", f.name}, {"kind", feature_kind_name(f.kind)}});
  return json{{"id", item.id()},
              {"category", item.category()},
              {"features", feats},
              {"weight", item.weight()},
              {"embedding", item.embedding()}};
}

static LexicalItem item_from_json(const json& j) {
  std::vector<Feature> feats;
  if (j.contains("features"))
    for (const auto& f : j.at("features"))
      feats.push_back(Feature{f.at("name").get<std::string>(),
                              feature_kind_from_name(f.at("kind").get<std::string>())});
  return LexicalItem(j.at("id").get<std::string>(), j.at("category").get<std::string>(),
                     std::move(feats), j.value("weight", 1.0),
                     j.value("embedding", std::vector<double>{}));
}

SoPtr SyntacticObject::leaf(LexicalItem item) {
  auto so = std::shared_ptr<SyntacticObject>(new SyntacticObject());
  so->item_ = std::move(item);
  so->canonical_ = so->to_json().dump();
  return so;
}

SoPtr SyntacticObject::node(SoPtr a, SoPtr b) {
  if (!a || !b) throw MergeError("node children must be non-null");
  auto so = std::shared_ptr<SyntacticObject>(new SyntacticObject());
  if (b->canonical() < a->canonical()) std::swap(a, b);  // unordered pair, canonical order
  so->first_ = std::move(a);
  so->second_ = std::move(b);
  so->canonical_ = so->to_json().dump();
  return so;
}

SoPtr SyntacticObject::node_with_label(SoPtr a, SoPtr b, std::string label) {
  if (label.empty()) throw UnlabelableError("empty label");
  auto so = std::const_pointer_cast<SyntacticObject>(node(std::move(a), std::move(b)));
  so->label_ = std::move(label);
  so->canonical_ = so->to_json().dump();
  return so;
}

const LexicalItem& SyntacticObject::item() const {
  if (!item_) throw FormatError("item() called on a non-leaf");
  return *item_;
}

const SoPtr& SyntacticObject::first() const {
  if (is_leaf()) throw FormatError("first() called on a leaf");
  return first_;
}

const SoPtr& SyntacticObject::second() const {
  if (is_leaf()) throw FormatError("second() called on a leaf");
  return second_;
}

json SyntacticObject::to_json() const {
  if (is_leaf()) return item_to_json(*item_);
  json j;
  j["label"] = label_ ? json(*label_) : json(nullptr);
  json kids = json::array();
  kids.push_back(first_->to_json());
  kids.push_back(second_->to_json());
  j["children"] = std::move(kids);
  return j;
}

SoPtr SyntacticObject::from_json(const json& j) {
  if (j.contains("children")) {
    const auto& kids = j.at("children");
    if (!kids.is_array() || kids.size() != 2)
      throw FormatError("node must have exactly two children");
    SoPtr a = from_json(kids[0]);
    SoPtr b = from_json(kids[1]);
    if (j.contains("label") && !j.at("label").is_null())
      return node_with_label(std::move(a), std::move(b), j.at("label").get<std::string>());
    return node(std::move(a), std::move(b));
  }
  return leaf(item_from_json(j));
}

Workspace::Workspace(std::vector<SoPtr> objects) {
  for (auto& so : objects) *this = with(std::move(so));
}

bool Workspace::contains(const SoPtr& so) const {
  return std::any_of(objects_.begin(), objects_.end(),
                     [&](const SoPtr& o) { return equal(o, so); });
}

Workspace Workspace::with(SoPtr so) const {
  if (!so) throw MergeError("null object");
  if (contains(so)) throw MergeError("duplicate object in workspace: " + so->canonical());
  Workspace next = *this;
  next.objects_.push_back(std::move(so));
  return next;
}

bool operator==(const Workspace& a, const Workspace& b) {
  if (a.objects_.size() != b.objects_.size()) return false;
  auto keys = [](const Workspace& ws) {
    std::set<std::string> k;
    for (const auto& o : ws.objects_) k.insert(o->canonical());
    return k;
  };
  return keys(a) == keys(b);
}

Workspace merge(const Workspace& ws, const SoPtr& p, const SoPtr& q) {
  if (!p || !q) throw MergeError("merge requires two objects");
  if (equal(p, q)) throw MergeError("cannot merge an object with itself");
  if (!ws.contains(p)) throw MergeError("first operand not in workspace");
  if (!ws.contains(q)) throw MergeError("second operand not in workspace");
  SoPtr formed = SyntacticObject::node(p, q);
  std::vector<SoPtr> rest;
  rest.reserve(ws.size() - 1);
  for (const auto& o : ws.objects())
    if (!equal(o, p) && !equal(o, q)) rest.push_back(o);
  Workspace result(std::move(rest));
  return result.with(std::move(formed));  // throws if the formed set already present
}

static int precedence_rank(const std::string& category, const std::vector<std::string>& order) {
  for (std::size_t i = 0; i < order.size(); ++i)
    if (order[i] == category) return static_cast<int>(i);
  return -1;
}

std::string label_of(const SoPtr& so, const std::vector<std::string>& precedence) {
  if (so->is_leaf()) return so->item().category();
  if (so->label()) return *so->label();
  const SoPtr& a = so->first();
  const SoPtr& b = so->second();
  if (a->is_leaf() != b->is_leaf()) {
    // minimal search: the lexical head projects over the phrase
    return a->is_leaf() ? a->item().category() : b->item().category();
  }
  std::string ca = label_of(a, precedence);
  std::string cb = label_of(b, precedence);
  if (ca == cb) return ca;
  int ra = precedence_rank(ca, precedence);
  int rb = precedence_rank(cb, precedence);
  if (ra < 0 || rb < 0)
    throw UnlabelableError("no precedence between '" + ca + "' and '" + cb + "'");
  return ra < rb ? ca : cb;
}

SoPtr label_all(const SoPtr& so, const std::vector<std::string>& precedence) {
  if (so->is_leaf()) return so;
  SoPtr a = label_all(so->first(), precedence);
  SoPtr b = label_all(so->second(), precedence);
  SoPtr relabeled = SyntacticObject::node(a, b);
  return SyntacticObject::node_with_label(a, b, label_of(relabeled, precedence));
}

bool fully_labeled(const SoPtr& so) {
  if (so->is_leaf()) return true;
  return so->label().has_value() && fully_labeled(so->first()) && fully_labeled(so->second());
}

int depth(const SoPtr& so) {
  if (so->is_leaf()) return 0;
  return 1 + std::max(depth(so->first()), depth(so->second()));
}

int node_count(const SoPtr& so) {
  if (so->is_leaf()) return 1;
  return 1 + node_count(so->first()) + node_count(so->second());
}

int leaf_count(const SoPtr& so) {
  if (so->is_leaf()) return 1;
  return leaf_count(so->first()) + leaf_count(so->second());
}

static void collect_leaves(const SoPtr& so, std::vector<LexicalItem>& out) {
  if (so->is_leaf()) {
    out.push_back(so->item());
    return;
  }
  collect_leaves(so->first(), out);
  collect_leaves(so->second(), out);
}

std::vector<LexicalItem> leaves(const SoPtr& so) {
  std::vector<LexicalItem> out;
  collect_leaves(so, out);
  return out;
}

namespace {

struct Span {
  int lo, hi, nleaves;
};

// Recursively checks that every subtree occupies a contiguous span of the
// given order, recording each node's rightmost position.
Span closure_spans(const SoPtr& so, const std::map<std::string, int>& position,
                   std::vector<int>& counts) {
  if (so->is_leaf()) {
    auto it = position.find(so->item().id());
    if (it == position.end())
      throw OrderMismatchError("leaf '" + so->item().id() + "' missing from order");
    counts[it->second] += 1;
    return Span{it->second, it->second, 1};
  }
  Span a = closure_spans(so->first(), position, counts);
  Span b = closure_spans(so->second(), position, counts);
  Span s{std::min(a.lo, b.lo), std::max(a.hi, b.hi), a.nleaves + b.nleaves};
  if (s.hi - s.lo + 1 != s.nleaves)
    throw OrderMismatchError("order is not a planar embedding of the tree");
  counts[s.hi] += 1;
  return s;
}

}  // namespace

std::vector<int> node_closures(const SoPtr& so, const std::vector<std::string>& order) {
  std::map<std::string, int> position;
  for (std::size_t i = 0; i < order.size(); ++i)
    if (!position.emplace(order[i], static_cast<int>(i)).second)
      throw OrderMismatchError("duplicate leaf id in order: " + order[i]);
  if (static_cast<int>(order.size()) != leaf_count(so))
    throw OrderMismatchError("order length differs from leaf count");
  std::vector<int> counts(order.size(), 0);
  closure_spans(so, position, counts);
  return counts;
}

static void linearize_into(const SoPtr& so, std::vector<LexicalItem>& out) {
  if (so->is_leaf()) {
    out.push_back(so->item());
    return;
  }
  if (!so->label()) throw UnlabelableError("linearize requires a fully labeled tree");
  const SoPtr& a = so->first();
  const SoPtr& b = so->second();
  auto head_cat = [](const SoPtr& c) {
    return c->is_leaf() ? c->item().category() : c->label().value_or("");
  };
  // head child first; ties fall back to canonical child order
  bool a_heads = head_cat(a) == *so->label();
  const SoPtr& head = a_heads ? a : b;
  const SoPtr& rest = a_heads ? b : a;
  linearize_into(head, out);
  linearize_into(rest, out);
}

std::vector<LexicalItem> linearize(const SoPtr& so) {
  std::vector<LexicalItem> out;
  out.reserve(static_cast<std::size_t>(leaf_count(so)));
  linearize_into(so, out);
  return out;
}

Derivation derive(Workspace initial, const std::vector<std::pair<SoPtr, SoPtr>>& selections) {
  Derivation d{std::move(initial), {}};
  const Workspace* current = &d.initial;
  for (const auto& [p, q] : selections) {
    Workspace next = merge(*current, p, q);
    d.steps.push_back(DerivationStep{p, q, std::move(next)});
    current = &d.steps.back().result;
  }
  return d;
}

bool check_markov(const Derivation& d) {
  for (std::size_t start = 0; start <= d.steps.size(); ++start) {
    Workspace ws = start == 0 ? d.initial : d.steps[start - 1].result;
    for (std::size_t j = start; j < d.steps.size(); ++j) {
      try {
        ws = merge(ws, d.steps[j].p, d.steps[j].q);
      } catch (const MergeError&) {
        return false;
      }
      if (!(ws == d.steps[j].result)) return false;
    }
  }
  return true;
}

}  // namespace treewave::syntax
