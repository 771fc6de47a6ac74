#include "wronsky/schubert.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace wronsky::schubert {

SchubertIndex::SchubertIndex(std::vector<int> entries, Box b)
    : w(std::move(entries)), box(b) {
  if (int(w.size()) != box.p)
    throw std::domain_error("SchubertIndex: needs exactly p entries");
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i] < 0 || w[i] > box.width())
      throw std::domain_error("SchubertIndex: entry outside the box");
    if (i > 0 && w[i] > w[i - 1])
      throw std::domain_error("SchubertIndex: entries must be weakly decreasing");
  }
}

int SchubertIndex::codim() const {
  return std::accumulate(w.begin(), w.end(), 0);
}

bool SchubertIndex::is_special() const {
  for (size_t i = 1; i < w.size(); ++i)
    if (w[i] != 0) return false;
  return true;
}

bool SchubertIndex::is_zero() const { return codim() == 0; }

std::string SchubertIndex::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  os << ")";
  return os.str();
}

namespace {

// Number of LR skew tableaux of shape outer/inner with the given content:
// semistandard filling whose reverse reading word is a ballot sequence.
// Cells are filled in reverse reading order (each row right-to-left, rows
// top-down) so the ballot condition can be maintained incrementally.
long lr_tableau_count(const std::vector<int>& outer,
                      const std::vector<int>& inner,
                      const std::vector<int>& content) {
  const int p = int(outer.size());
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < p; ++r)
    for (int c = outer[r] - 1; c >= inner[r]; --c) cells.emplace_back(r, c);

  long total_cells = long(cells.size());
  long total_content = std::accumulate(content.begin(), content.end(), 0L);
  if (total_cells != total_content) return 0;
  if (cells.empty()) return 1;

  const int width = *std::max_element(outer.begin(), outer.end());
  std::vector<int> tab(size_t(p) * size_t(width), 0);
  std::vector<int> counts(size_t(p), 0);
  long found = 0;

  auto rec = [&](auto&& self, size_t idx) -> void {
    if (idx == cells.size()) {
      ++found;
      return;
    }
    auto [r, c] = cells[idx];
    for (int v = 1; v <= p; ++v) {
      if (counts[size_t(v - 1)] >= content[size_t(v - 1)]) continue;
      if (v > 1 && counts[size_t(v - 2)] <= counts[size_t(v - 1)]) continue;
      if (c + 1 < outer[r] && v > tab[size_t(r) * size_t(width) + size_t(c + 1)])
        continue;
      if (r > 0 && c >= inner[r - 1] && c < outer[r - 1] &&
          v <= tab[size_t(r - 1) * size_t(width) + size_t(c)])
        continue;
      tab[size_t(r) * size_t(width) + size_t(c)] = v;
      ++counts[size_t(v - 1)];
      self(self, idx + 1);
      --counts[size_t(v - 1)];
      tab[size_t(r) * size_t(width) + size_t(c)] = 0;
    }
  };
  rec(rec, 0);
  return found;
}

// All box indices containing `inner` with the given codimension.
void enumerate_outers(const Box& box, const std::vector<int>& inner,
                      int codim, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(size_t(box.p), 0);
  auto rec = [&](auto&& self, int row, int remaining, int cap) -> void {
    if (row == box.p) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    int lo = inner[size_t(row)];
    for (int v = std::min(cap, remaining + lo); v >= lo; --v) {
      // remaining counts boxes beyond the inner shape
      if (remaining - (v - lo) < 0) continue;
      cur[size_t(row)] = v;
      self(self, row + 1, remaining - (v - lo), v);
    }
  };
  rec(rec, 0, codim, box.width());
}

}  // namespace

LrExpansion lr_product(const SchubertIndex& u, const SchubertIndex& v) {
  if (u.box != v.box)
    throw std::domain_error("lr_product: indices in different boxes");
  LrExpansion out;
  const int target = u.codim() + v.codim();
  if (target > int(u.box.dimension())) return out;
  std::vector<std::vector<int>> outers;
  enumerate_outers(u.box, u.w, v.codim(), outers);
  for (const auto& w : outers) {
    long c = lr_tableau_count(w, u.w, v.w);
    if (c > 0) out[SchubertIndex(w, u.box)] += c;
  }
  return out;
}

LrExpansion lr_product(const LrExpansion& u, const SchubertIndex& v) {
  LrExpansion out;
  for (const auto& [idx, coeff] : u) {
    LrExpansion term = lr_product(idx, v);
    for (const auto& [w, c] : term) out[w] += coeff * c;
  }
  return out;
}

IntersectionCount intersection_number(std::span<const SchubertIndex> ws) {
  if (ws.empty()) throw std::domain_error("intersection_number: empty list");
  const Box box = ws[0].box;
  long codim = 0;
  for (const SchubertIndex& w : ws) {
    if (w.box != box)
      throw std::domain_error("intersection_number: box mismatch");
    codim += w.codim();
  }
  if (codim != box.dimension()) return {0, false};

  LrExpansion acc;
  acc[ws[0]] = 1;
  for (size_t i = 1; i < ws.size(); ++i) acc = lr_product(acc, ws[i]);
  SchubertIndex top(std::vector<int>(size_t(box.p), box.width()), box);
  auto it = acc.find(top);
  return {it == acc.end() ? 0 : it->second, true};
}

IntersectionCount intersection_number(const std::vector<SchubertIndex>& ws) {
  return intersection_number(std::span<const SchubertIndex>(ws));
}

SchubertIndex dual_index(const SchubertIndex& w) {
  std::vector<int> dual(w.w.size());
  for (size_t i = 0; i < w.w.size(); ++i)
    dual[i] = w.box.width() - w.w[w.w.size() - 1 - i];
  return SchubertIndex(std::move(dual), w.box);
}

WeightVector weight_of_index(const SchubertIndex& w) {
  WeightVector a;
  a.a.resize(w.w.size() - 1);
  for (size_t i = 0; i + 1 < w.w.size(); ++i) a.a[i] = w.w[i] - w.w[i + 1];
  return a;
}

std::optional<SchubertIndex> index_of_weight(const WeightVector& a, long total,
                                             Box box) {
  if (int(a.a.size()) != box.p - 1)
    throw std::domain_error("index_of_weight: weight length must be p-1");
  long weighted = 0;
  for (size_t l = 0; l < a.a.size(); ++l) weighted += long(l + 1) * a.a[l];
  long rem = total - weighted;
  if (rem % box.p != 0) return std::nullopt;
  long wp = rem / box.p;
  if (wp < 0) return std::nullopt;
  std::vector<int> w(size_t(box.p));
  w[size_t(box.p) - 1] = int(wp);
  for (size_t i = size_t(box.p) - 1; i-- > 0;)
    w[i] = w[i + 1] + a.a[i];
  if (w[0] > box.width()) return std::nullopt;
  return SchubertIndex(std::move(w), box);
}

std::optional<WeightVector> dominant_weight_check(
    std::span<const WeightVector> as, const LevelCounts& k) {
  const size_t len = k.k.size();
  for (const WeightVector& a : as)
    if (a.a.size() != len)
      throw std::domain_error("dominant_weight_check: length mismatch");
  WeightVector out;
  out.a.resize(len);
  for (size_t l = 0; l < len; ++l) {
    long v = 0;
    for (const WeightVector& a : as) v += a.a[l];
    v -= 2L * k.k[l];
    if (l > 0) v += k.k[l - 1];
    if (l + 1 < len) v += k.k[l + 1];
    if (v < 0) return std::nullopt;
    out.a[l] = int(v);
  }
  return out;
}

long dim_singular(std::span<const WeightVector> as, const LevelCounts& k,
                  Box box) {
  auto target = dominant_weight_check(as, k);
  if (!target) return 0;

  std::vector<SchubertIndex> ws;
  long total_boxes = 0;
  for (const WeightVector& a : as) {
    long t = 0;
    for (size_t l = 0; l < a.a.size(); ++l) t += long(l + 1) * a.a[l];
    auto w = index_of_weight(a, t, box);  // minimal index, w_p = 0
    if (!w) return 0;
    total_boxes += t;
    ws.push_back(*w);
  }
  auto y = index_of_weight(*target, total_boxes, box);
  if (!y) return 0;
  ws.push_back(dual_index(*y));
  return intersection_number(ws).value;
}

}  // namespace wronsky::schubert
