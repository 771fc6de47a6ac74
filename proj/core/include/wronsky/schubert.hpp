#pragma once

// Schubert index combinatorics in G_p(Poly_d): Littlewood-Richardson
// products (by enumeration of LR skew tableaux), intersection numbers,
// duality, and the dictionary between indices, sl_p weights and
// singular-subspace dimensions.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wronsky::schubert {

/// The ambient Grassmannian G_p(Poly_d).
struct Box {
  int p = 0;
  int d = 0;

  int width() const { return d + 1 - p; }        // max index entry
  long dimension() const { return long(p) * width(); }
  friend bool operator==(const Box&, const Box&) = default;
};

/// Weakly decreasing integer vector w with d+1-p >= w_1 >= ... >= w_p >= 0.
struct SchubertIndex {
  std::vector<int> w;
  Box box;

  SchubertIndex() = default;
  SchubertIndex(std::vector<int> entries, Box b);

  int codim() const;                 // |w|
  bool is_special() const;           // (m, 0, ..., 0)
  bool is_zero() const;              // identity class
  friend bool operator==(const SchubertIndex&, const SchubertIndex&) = default;
  friend bool operator<(const SchubertIndex& a, const SchubertIndex& b) {
    return a.w < b.w;
  }
  std::string str() const;
};

struct WeightVector {
  std::vector<int> a;  // p-1 nonnegative entries
  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

struct LevelCounts {
  std::vector<int> k;  // p-1 nonnegative entries
  friend bool operator==(const LevelCounts&, const LevelCounts&) = default;
};

using LrExpansion = std::map<SchubertIndex, long>;

/// sigma_u * sigma_v expanded in the box; terms leaving the box are dropped.
LrExpansion lr_product(const SchubertIndex& u, const SchubertIndex& v);
LrExpansion lr_product(const LrExpansion& u, const SchubertIndex& v);

struct IntersectionCount {
  long value = 0;
  bool codim_match = true;  // false when codims do not fill the dimension
};

/// Coefficient of the top class in the iterated product; 0 with
/// codim_match=false when the codimension bookkeeping cannot close.
IntersectionCount intersection_number(std::span<const SchubertIndex> ws);
IntersectionCount intersection_number(const std::vector<SchubertIndex>& ws);

/// Complementary index: dual_i = width - w_{p+1-i}.
SchubertIndex dual_index(const SchubertIndex& w);

/// a_i = w_i - w_{i+1}.
WeightVector weight_of_index(const SchubertIndex& w);

/// Index with the given weight differences and |w| = total; empty when the
/// box or integrality constraints fail.
std::optional<SchubertIndex> index_of_weight(const WeightVector& a, long total,
                                             Box box);

/// The target weight a(n+1) from the dominant-weight bookkeeping; empty when
/// any pairing is negative (the corresponding intersection is empty).
std::optional<WeightVector> dominant_weight_check(
    std::span<const WeightVector> as, const LevelCounts& k);

/// Multiplicity of the highest-weight module with weight a(n+1) in the
/// tensor product of the modules with weights as[0..n-1], computed as an
/// intersection number in the box.  Never builds representation spaces.
long dim_singular(std::span<const WeightVector> as, const LevelCounts& k,
                  Box box);

}  // namespace wronsky::schubert
