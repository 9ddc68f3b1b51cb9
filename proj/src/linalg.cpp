#include "regcert/linalg.hpp"

#include <algorithm>
#include <unordered_map>

namespace regcert {

template <class K>
SparseRow<K> make_row(std::vector<std::pair<std::uint32_t, K>> entries) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow<K> out;
  for (auto& e : entries) {
    if (!out.empty() && out.back().first == e.first) {
      out.back().second += e.second;
      if (out.back().second.is_zero()) out.pop_back();
    } else if (!e.second.is_zero()) {
      out.push_back(std::move(e));
    }
  }
  return out;
}

namespace {

using ModRow = std::vector<std::pair<std::uint32_t, std::uint64_t>>;

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a);
  while (nr != 0) {
    const std::int64_t q = r / nr;
    t = std::exchange(nt, t - q * nt);
    r = std::exchange(nr, r - q * nr);
  }
  return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(p) : t);
}

// row <- row - c * pivot, both sorted by column.
void axpy_mod(ModRow& row, std::uint64_t c, const ModRow& pivot, std::uint64_t p, ModRow& scratch) {
  scratch.clear();
  std::size_t i = 0, j = 0;
  const std::uint64_t neg = p - c;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      scratch.push_back(row[i++]);
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      scratch.emplace_back(pivot[j].first, neg * pivot[j].second % p);
      ++j;
    } else {
      const std::uint64_t v = (row[i].second + neg * pivot[j].second) % p;
      if (v != 0) scratch.emplace_back(row[i].first, v);
      ++i;
      ++j;
    }
  }
  row.swap(scratch);
}

std::size_t rank_mod(std::vector<ModRow> rows, std::uint64_t p) {
  std::sort(rows.begin(), rows.end(), [](const ModRow& a, const ModRow& b) {
    if (a.empty() || b.empty()) return b.empty() && !a.empty();
    if (a.front().first != b.front().first) return a.front().first < b.front().first;
    return a.size() < b.size();
  });
  std::unordered_map<std::uint32_t, ModRow> pivots;
  ModRow scratch;
  for (auto& row : rows) {
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) break;
      axpy_mod(row, row.front().second, it->second, p, scratch);
    }
    if (row.empty()) continue;
    const std::uint64_t inv = inverse_mod(row.front().second, p);
    for (auto& e : row) e.second = e.second * inv % p;
    pivots.emplace(row.front().first, std::move(row));
  }
  return pivots.size();
}

using IntRow = std::vector<std::pair<std::uint32_t, mpz_class>>;

void remove_content(IntRow& row) {
  mpz_class g = 0;
  for (const auto& e : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
    if (g == 1) return;
  }
  if (row.front().second < 0) g = -g;
  for (auto& e : row) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
}

// row <- a * row - b * pivot where a, b clear the leading entry.
void combine_int(IntRow& row, const IntRow& pivot, IntRow& scratch) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), row.front().second.get_mpz_t(), pivot.front().second.get_mpz_t());
  const mpz_class a = pivot.front().second / g;
  const mpz_class b = row.front().second / g;
  scratch.clear();
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      scratch.emplace_back(row[i].first, a * row[i].second);
      ++i;
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      scratch.emplace_back(pivot[j].first, -b * pivot[j].second);
      ++j;
    } else {
      mpz_class v = a * row[i].second - b * pivot[j].second;
      if (v != 0) scratch.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  row.swap(scratch);
  if (!row.empty()) remove_content(row);
}

std::size_t rank_int(std::vector<IntRow> rows) {
  std::sort(rows.begin(), rows.end(), [](const IntRow& a, const IntRow& b) {
    if (a.empty() || b.empty()) return b.empty() && !a.empty();
    if (a.front().first != b.front().first) return a.front().first < b.front().first;
    return a.size() < b.size();
  });
  std::unordered_map<std::uint32_t, IntRow> pivots;
  IntRow scratch;
  for (auto& row : rows) {
    if (!row.empty()) remove_content(row);
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) break;
      combine_int(row, it->second, scratch);
    }
    if (!row.empty()) pivots.emplace(row.front().first, std::move(row));
  }
  return pivots.size();
}

}  // namespace

template <>
std::size_t sparse_rank<Zp>(std::vector<SparseRow<Zp>> rows) {
  std::uint64_t p = 0;
  std::vector<ModRow> mod;
  mod.reserve(rows.size());
  for (const auto& r : rows) {
    ModRow m;
    m.reserve(r.size());
    for (const auto& [c, v] : r) {
      p = v.modulus();
      m.emplace_back(c, v.residue());
    }
    mod.push_back(std::move(m));
  }
  return p == 0 ? 0 : rank_mod(std::move(mod), p);
}

template <>
std::size_t sparse_rank<Rational>(std::vector<SparseRow<Rational>> rows) {
  std::vector<IntRow> ints;
  ints.reserve(rows.size());
  for (const auto& r : rows) {
    mpz_class den = 1;
    for (const auto& e : r) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), e.second.value().get_den_mpz_t());
    IntRow row;
    row.reserve(r.size());
    for (const auto& [c, v] : r) row.emplace_back(c, v.value().get_num() * (den / v.value().get_den()));
    ints.push_back(std::move(row));
  }
  return rank_int(std::move(ints));
}

template SparseRow<Zp> make_row(std::vector<std::pair<std::uint32_t, Zp>>);
template SparseRow<Rational> make_row(std::vector<std::pair<std::uint32_t, Rational>>);

}  // namespace regcert
