#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "hopfdual/lie.hpp"

namespace oracle {

using namespace hopfdual;

using Word = std::vector<std::size_t>;

// Brute force in the tensor algebra: T_{<=N}(L) modulo the span of
// u (x_j x_i - x_i x_j - [x_j, x_i]) v, reduced onto sorted words.
class TensorOracle {
 public:
  TensorOracle(const LieAlgebra& l, unsigned order) : l_(l), order_(order), field_(l.field) {
    const Scalar one(field_, 1L);
    for (unsigned len = 0; len <= order; ++len) extend(Word{}, len);
    for (std::size_t i = 0; i < words_.size(); ++i) index_[words_[i]] = i;
    const std::size_t n = words_.size();
    for (const auto& u : words_)
      for (const auto& v : words_) {
        if (u.size() + v.size() + 2 > order) continue;
        for (std::size_t i = 0; i < l.dim; ++i)
          for (std::size_t j = i + 1; j < l.dim; ++j) {
            Vector r = zero_vector(field_, n);
            r[index_.at(cat(u, {j, i}, v))] += one;
            r[index_.at(cat(u, {i, j}, v))] -= one;
            for (const auto& [k, c] : l.bracket(j, i)) r[index_.at(cat(u, {k}, v))] -= c;
            columns_.push_back(std::move(r));
          }
      }
    relations_ = columns_.size();
    for (const auto& w : words_)
      if (std::is_sorted(w.begin(), w.end())) {
        sorted_.push_back(w);
        columns_.push_back(unit_vector(field_, n, index_.at(w)));
      }
    // one elimination of [relations | sorted words | I] gives the class of every word
    const std::size_t cols = columns_.size();
    for (std::size_t w = 0; w < n; ++w) columns_.push_back(unit_vector(field_, n, w));
    const RowEchelon e = rref(Matrix::from_columns(field_, columns_, n));
    classes_.assign(n, {});
    for (std::size_t r = 0; r < e.rank; ++r) {
      const std::size_t p = e.pivots[r];
      if (p >= cols) throw std::logic_error("relations and sorted words do not span");
      if (p < relations_) continue;
      for (std::size_t w = 0; w < n; ++w) {
        const Scalar& c = e.reduced(r, cols + w);
        if (!c.is_zero()) classes_[w].emplace(sorted_[p - relations_], c);
      }
    }
  }

  // Coefficients on sorted words of the class of w.
  const std::map<Word, Scalar>& reduce(const Word& w) const { return classes_.at(index_.at(w)); }

 private:
  void extend(Word w, unsigned len) {
    if (w.size() == len) {
      words_.push_back(w);
      return;
    }
    for (std::size_t i = 0; i < l_.dim; ++i) {
      Word x = w;
      x.push_back(i);
      extend(x, len);
    }
  }
  static Word cat(const Word& a, const Word& b, const Word& c) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    out.insert(out.end(), c.begin(), c.end());
    return out;
  }

  const LieAlgebra& l_;
  unsigned order_;
  Field field_;
  std::vector<Word> words_, sorted_;
  std::map<Word, std::size_t> index_;
  std::vector<Vector> columns_;
  std::size_t relations_ = 0;
  std::vector<std::map<Word, Scalar>> classes_;
};

inline Word word_of(const std::vector<unsigned>& e) {
  Word w;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (unsigned k = 0; k < e[i]; ++k) w.push_back(i);
  return w;
}

}  // namespace oracle
