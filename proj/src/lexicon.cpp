#include "treewave/lexicon.hpp"

#include <cmath>
#include <fstream>

#include "treewave/errors.hpp"
#include "treewave/rng.hpp"

namespace treewave::lexicon {

using nlohmann::json;

Lexicon::Lexicon(int n, std::vector<syntax::LexicalItem> items) : n_(n) {
  if (n <= 0) throw FormatError("embedding dimension must be > 0");
  for (auto& item : items) {
    if (static_cast<int>(item.embedding().size()) != n)
      throw FormatError("item '" + item.id() + "' embedding length " +
                        std::to_string(item.embedding().size()) + " != declared n " +
                        std::to_string(n));
    if (items_.count(item.id())) throw FormatError("duplicate lexicon id: " + item.id());
    auto id = item.id();
    items_.emplace(std::move(id), std::move(item));
  }
}

const syntax::LexicalItem& Lexicon::at(const std::string& id) const {
  auto it = items_.find(id);
  if (it == items_.end()) throw UnknownLeafError("unknown lexicon id: " + id);
  return it->second;
}

json Lexicon::to_json() const {
  json entries = json::object();
  for (const auto& [id, item] : items_) {
    json feats = json::array();
    for (const auto& f : item.features())
      feats.push_back({{"name", f.name}, {"kind", syntax::feature_kind_name(f.kind)}});
    entries[id] = {{"category", item.category()},
                   {"features", feats},
                   {"weight", item.weight()},
                   {"embedding", item.embedding()}};
  }
  return json{{"n", n_}, {"items", entries}};
}

Lexicon Lexicon::from_json(const json& j) {
  const int n = j.at("n").get<int>();
  std::vector<syntax::LexicalItem> items;
  for (const auto& [id, entry] : j.at("items").items()) {
    std::vector<syntax::Feature> feats;
    if (entry.contains("features"))
      for (const auto& f : entry.at("features"))
        feats.push_back(syntax::Feature{
            f.at("name").get<std::string>(),
            syntax::feature_kind_from_name(f.at("kind").get<std::string>())});
    items.emplace_back(id, entry.at("category").get<std::string>(), std::move(feats),
                       entry.value("weight", 1.0),
                       entry.value("embedding", std::vector<double>{}));
  }
  return Lexicon(n, std::move(items));
}

Lexicon Lexicon::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open lexicon: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
  return from_json(j);
}

void Lexicon::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot open for writing: " + path);
  out << to_json().dump(2) << '\n';
}

Projection::Projection(std::vector<std::vector<double>> w_) : w(std::move(w_)) {
  if (w.empty() || w[0].empty()) throw DimensionError("projection must be non-empty");
  for (const auto& row : w) {
    if (row.size() != w[0].size()) throw DimensionError("projection rows must be equal length");
    for (double v : row)
      if (!std::isfinite(v)) throw DimensionError("projection entries must be finite");
  }
  if (w.size() >= w[0].size()) throw DimensionError("projection requires m < n");
}

double sigma_tanh(double v) { return std::tanh(v); }
double sigma_identity(double v) { return v; }

Nonlinearity nonlinearity_by_name(const std::string& name) {
  if (name == "tanh") return sigma_tanh;
  if (name == "identity") return sigma_identity;
  throw FormatError("unknown nonlinearity: " + name);
}

RecurrentReducer::RecurrentReducer(std::vector<std::vector<double>> w_r_,
                                   std::vector<std::vector<double>> w_x_,
                                   std::vector<double> bias_, Nonlinearity sigma_)
    : w_r(std::move(w_r_)), w_x(std::move(w_x_)), bias(std::move(bias_)), sigma(sigma_) {
  const std::size_t m = bias.size();
  if (m == 0) throw DimensionError("reducer state must be non-empty");
  if (w_r.size() != m) throw DimensionError("W_r must be m x m");
  for (const auto& row : w_r)
    if (row.size() != m) throw DimensionError("W_r must be m x m");
  if (w_x.size() != m) throw DimensionError("W_x must have m rows");
  for (const auto& row : w_x)
    if (row.size() != w_x[0].size()) throw DimensionError("W_x rows must be equal length");
  if (!sigma) throw DimensionError("nonlinearity must be set");
}

static std::vector<double> matvec(const std::vector<std::vector<double>>& m,
                                  const std::vector<double>& x) {
  std::vector<double> y(m.size(), 0.0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) acc += m[i][j] * x[j];
    y[i] = acc;
  }
  return y;
}

std::vector<double> compress(const Projection& p, const std::vector<double>& x) {
  if (x.size() != p.cols())
    throw DimensionError("compress: input length " + std::to_string(x.size()) +
                         " != projection columns " + std::to_string(p.cols()));
  return matvec(p.w, x);
}

std::vector<double> reduce_sequence(const RecurrentReducer& r,
                                    const std::vector<std::vector<double>>& xs,
                                    const std::vector<double>& h0) {
  if (h0.size() != r.state_dim()) throw DimensionError("reduce_sequence: bad h0 length");
  std::vector<double> h = h0;
  for (const auto& x : xs) {
    if (x.size() != r.input_dim()) throw DimensionError("reduce_sequence: bad input length");
    std::vector<double> rec = matvec(r.w_r, h);
    std::vector<double> inp = matvec(r.w_x, x);
    for (std::size_t i = 0; i < h.size(); ++i) h[i] = r.sigma(rec[i] + inp[i] + r.bias[i]);
  }
  return h;
}

std::vector<double> compose_embedding(const std::vector<double>& h_left,
                                      const std::vector<double>& h_right,
                                      const RecurrentReducer& r) {
  if (h_left.size() != h_right.size() || h_left.size() != r.state_dim())
    throw DimensionError("compose_embedding: child vectors must both be length m");
  std::vector<double> mean(h_left.size());
  for (std::size_t i = 0; i < mean.size(); ++i) mean[i] = 0.5 * (h_left[i] + h_right[i]);
  std::vector<double> rec = matvec(r.w_r, mean);
  std::vector<double> out(mean.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = r.sigma(rec[i] + r.bias[i]);
  return out;
}

std::vector<double> normalize_weights(const std::vector<double>& raw) {
  if (raw.empty()) throw DegenerateWeightsError("no weights to normalize");
  double total = 0.0;
  for (double w : raw) {
    if (w < 0.0) throw DegenerateWeightsError("weights must be >= 0");
    total += w;
  }
  if (total <= 0.0) throw DegenerateWeightsError("all weights are zero");
  std::vector<double> out(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) out[i] = raw[i] / total;
  return out;
}

std::vector<double> normalize_weights(const Lexicon& lex, const std::vector<std::string>& ids) {
  std::vector<double> raw;
  raw.reserve(ids.size());
  for (const auto& id : ids) raw.push_back(lex.at(id).weight());
  return normalize_weights(raw);
}

std::vector<std::vector<double>> seeded_matrix(std::size_t rows, std::size_t cols,
                                               std::uint64_t seed, double scale) {
  Rng rng(seed);
  std::vector<std::vector<double>> m(rows, std::vector<double>(cols, 0.0));
  for (auto& row : m)
    for (double& v : row) v = scale * (2.0 * rng.uniform() - 1.0);
  return m;
}

}  // namespace treewave::lexicon
