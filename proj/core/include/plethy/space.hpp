#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace plethy {

/// Sorts wedge factors (exponents of Y in Sym^c E) into a strictly increasing
/// label and returns it with the sign of the sorting permutation, or nullopt
/// when a factor repeats and the wedge vanishes. Throws InvalidArgument when an
/// exponent is outside {0..c}.
std::optional<std::pair<std::vector<int>, int>> wedge_normalize(std::vector<int> factors, int c);

/// Sign of the permutation reversing an R-tuple.
int epsilon(int R);

enum class FactorKind { Sym, Wedge, SymPower, Det };

/// One tensor factor built from the natural module E = <X, Y>:
///   Sym(c)          Sym^c E, basis X^{c-a} Y^a labelled (a)
///   Wedge(R, c)     the R-th exterior power of Sym^c E, labelled by strictly
///                   increasing multi-indices
///   SymPower(m, c)  Sym^m (Sym^c E), labelled by weakly increasing multi-indices
///   Det(p)          det^p, one basis vector with the empty label
class Factor {
 public:
  static Factor sym(int c);
  static Factor wedge(int R, int c);
  static Factor sym_power(int m, int c);
  static Factor det(int p);

  FactorKind kind() const { return data_->kind; }
  /// The c in Sym^c E (0 for Det).
  int degree() const { return data_->c; }
  /// R for Wedge, m for SymPower, 1 for Sym, p for Det.
  int rank() const { return data_->r; }

  std::size_t dim() const { return data_->basis.size(); }
  std::size_t label_length() const;
  const std::vector<int>& label(std::size_t idx) const { return data_->basis[idx]; }
  const std::vector<std::vector<int>>& basis() const { return data_->basis; }
  std::optional<std::size_t> index_of(const std::vector<int>& label) const;

  /// Exponent of q when the basis vector is evaluated at diag(1, q).
  long y_degree(std::size_t idx) const { return data_->y_degree[idx]; }
  /// The scalar matrix a*I acts on this factor by a^scalar_degree().
  long scalar_degree() const;

  std::string description() const;

  friend bool operator==(const Factor& a, const Factor& b) {
    return a.data_->kind == b.data_->kind && a.data_->c == b.data_->c && a.data_->r == b.data_->r;
  }

 private:
  struct Data {
    FactorKind kind;
    int c;
    int r;
    std::vector<std::vector<int>> basis;
    std::vector<long> y_degree;
    std::map<std::vector<int>, std::size_t> index;
  };
  explicit Factor(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  static Factor build(FactorKind kind, int c, int r, std::vector<std::vector<int>> basis);

  std::shared_ptr<const Data> data_;
};

/// A tensor product of factors with its canonical basis.
///
/// Basis vectors are ordered lexicographically by their concatenated label,
/// first factor slowest; a basis index is the mixed-radix number formed by
/// the factor indices. Cheap to copy.
class Space {
 public:
  Space() : Space(std::vector<Factor>{}) {}
  explicit Space(std::vector<Factor> factors);

  static Space tensor(const Space& a, const Space& b);

  const std::vector<Factor>& factors() const { return factors_; }
  std::size_t dim() const { return dim_; }

  std::vector<std::size_t> factor_indices(std::size_t idx) const;
  std::size_t index_from_factors(std::span<const std::size_t> factor_idx) const;
  std::size_t stride(std::size_t factor) const { return strides_[factor]; }

  /// Concatenated label of a basis vector.
  std::vector<int> label(std::size_t idx) const;
  std::optional<std::size_t> index_of(const std::vector<int>& label) const;
  /// Human-readable label: factor labels joined by '|', e.g. "1|0,2,3,6".
  std::string label_string(std::size_t idx) const;

  long y_degree(std::size_t idx) const;
  long scalar_degree() const;
  std::string description() const;

  friend bool operator==(const Space& a, const Space& b) { return a.factors_ == b.factors_; }

 private:
  std::vector<Factor> factors_;
  std::vector<std::size_t> strides_;
  std::size_t dim_ = 1;
};

}  // namespace plethy
