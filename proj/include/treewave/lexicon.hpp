#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "treewave/syntax.hpp"

namespace treewave::lexicon {

// Immutable id -> item table with a fixed embedding dimension n.
class Lexicon {
 public:
  Lexicon(int n, std::vector<syntax::LexicalItem> items);

  int dimension() const { return n_; }
  const std::map<std::string, syntax::LexicalItem>& items() const { return items_; }
  bool contains(const std::string& id) const { return items_.count(id) != 0; }
  const syntax::LexicalItem& at(const std::string& id) const;

  nlohmann::json to_json() const;
  static Lexicon from_json(const nlohmann::json& j);
  static Lexicon load(const std::string& path);
  void save(const std::string& path) const;

 private:
  int n_ = 0;
  std::map<std::string, syntax::LexicalItem> items_;
};

// m x n projection, m < n.
struct Projection {
  std::vector<std::vector<double>> w;

  Projection() = default;
  explicit Projection(std::vector<std::vector<double>> w);

  std::size_t rows() const { return w.size(); }
  std::size_t cols() const { return w.empty() ? 0 : w[0].size(); }
};

using Nonlinearity = double (*)(double);

double sigma_tanh(double v);
double sigma_identity(double v);
Nonlinearity nonlinearity_by_name(const std::string& name);

// h_t = sigma(W_r h_{t-1} + W_x x_t + b).
struct RecurrentReducer {
  std::vector<std::vector<double>> w_r;  // m x m
  std::vector<std::vector<double>> w_x;  // m x n
  std::vector<double> bias;              // length m
  Nonlinearity sigma = sigma_tanh;

  RecurrentReducer() = default;
  RecurrentReducer(std::vector<std::vector<double>> w_r, std::vector<std::vector<double>> w_x,
                   std::vector<double> bias, Nonlinearity sigma = sigma_tanh);

  std::size_t state_dim() const { return bias.size(); }
  std::size_t input_dim() const { return w_x.empty() ? 0 : w_x[0].size(); }
};

// Exact matrix-vector product W x. Throws DimensionError on length mismatch.
std::vector<double> compress(const Projection& p, const std::vector<double>& x);

// Left-to-right fold of the recurrence over the sequence; empty input
// returns h0 unchanged.
std::vector<double> reduce_sequence(const RecurrentReducer& r,
                                    const std::vector<std::vector<double>>& xs,
                                    const std::vector<double>& h0);

// Child-symmetric composition sigma(W_r * (left+right)/2 + b), matching the
// unordered children of syntactic nodes.
std::vector<double> compose_embedding(const std::vector<double>& h_left,
                                      const std::vector<double>& h_right,
                                      const RecurrentReducer& r);

// Rescales the items' raw weights to a distribution summing to 1. Throws
// DegenerateWeightsError when every weight is zero.
std::vector<double> normalize_weights(const Lexicon& lex, const std::vector<std::string>& ids);
std::vector<double> normalize_weights(const std::vector<double>& raw);

// Deterministic dense matrix for seeded setups, entries uniform on
// [-scale, scale].
std::vector<std::vector<double>> seeded_matrix(std::size_t rows, std::size_t cols,
                                               std::uint64_t seed, double scale);

}  // namespace treewave::lexicon
