#ifndef OVOID_LINEAR_CODE_HPP
#define OVOID_LINEAR_CODE_HPP

// Linear codes over F_q given by a generator matrix, with exhaustive weight
// enumeration and the puncture / shorten / residual constructions.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "ovoid/base_field.hpp"
#include "ovoid/parallel.hpp"
#include "ovoid/weight_distribution.hpp"

namespace ovoid {

using Row = std::vector<Fq>;

namespace detail {

// Row-reduces in place; returns the pivot column of each surviving row.
// Zero rows are dropped.
inline std::vector<std::size_t> row_reduce(const BaseField& F, std::vector<Row>& rows)
{
  std::vector<std::size_t> pivots;
  if (rows.empty())
    return pivots;
  const std::size_t n = rows[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][col].idx == 0)
      ++sel;
    if (sel == rows.size())
      continue;
    std::swap(rows[r], rows[sel]);
    const Fq s = F.inv(rows[r][col]);
    for (auto& e : rows[r])
      e = F.mul(s, e);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col].idx == 0)
        continue;
      const Fq f = rows[i][col];
      for (std::size_t j = 0; j < n; ++j)
        rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
    }
    pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

} // namespace detail

inline std::size_t rank(const BaseField& F, std::vector<Row> rows)
{
  return detail::row_reduce(F, rows).size();
}

class LinearCode
{
public:
  /// The row space of `rows`; dependent rows are replaced by a reduced basis.
  LinearCode(std::shared_ptr<const BaseField> field, std::size_t length, std::vector<Row> rows)
    : field_(std::move(field)), length_(length)
  {
    for (const auto& r : rows)
      if (r.size() != length_)
        throw std::invalid_argument("generator rows must have the code length");
    if (rank(*field_, rows) == rows.size()) {
      rows_ = std::move(rows);
    } else {
      detail::row_reduce(*field_, rows);
      rows_ = std::move(rows);
    }
  }

  const BaseField& field() const { return *field_; }
  std::shared_ptr<const BaseField> field_ptr() const { return field_; }
  std::size_t length() const { return length_; }
  std::size_t dimension() const { return rows_.size(); }
  const std::vector<Row>& generator() const { return rows_; }

  Row encode(const std::vector<Fq>& message) const
  {
    if (message.size() != rows_.size())
      throw std::invalid_argument("message length must equal the dimension");
    Row c(length_, Fq{0});
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (std::size_t j = 0; j < length_; ++j)
        c[j] = field_->add(c[j], field_->mul(message[i], rows_[i][j]));
    return c;
  }

  bool contains(const Row& c) const
  {
    if (c.size() != length_)
      return false;
    auto rows = rows_;
    rows.push_back(c);
    return rank(*field_, rows) == rows_.size();
  }

  Row column(std::size_t j) const
  {
    Row col(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i)
      col[i] = rows_[i][j];
    return col;
  }

private:
  std::shared_ptr<const BaseField> field_;
  std::size_t length_;
  std::vector<Row> rows_;
};

inline std::size_t hamming_weight(const Row& c)
{
  return static_cast<std::size_t>(std::count_if(c.begin(), c.end(), [](Fq x) { return x.idx != 0; }));
}

/// Default cap on q^k for exhaustive codeword enumeration.
inline constexpr std::uint64_t kDefaultCodewordGuard = std::uint64_t{1} << 26;

namespace detail {

inline std::uint64_t message_count(const LinearCode& code, std::uint64_t guard)
{
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < code.dimension(); ++i) {
    total *= code.field().order();
    if (total > guard)
      throw GuardExceeded("q^k exceeds the codeword guard " + std::to_string(guard));
  }
  return total;
}

} // namespace detail

/// Weight distribution by enumerating every codeword m G.
inline WeightDistribution weight_distribution_exhaustive(const LinearCode& code, unsigned threads = 1,
                                                         std::uint64_t guard = kDefaultCodewordGuard)
{
  detail::message_count(code, guard);
  const auto& F = code.field();
  const auto q = F.order();
  const auto n = code.length();
  const auto k = code.dimension();
  WeightDistribution out;
  out.length = n;
  if (k == 0) {
    out.add(0, 1);
    return out;
  }
  // scaled[i][s * n + j] = s * G[i][j]
  std::vector<std::vector<std::uint16_t>> scaled(k, std::vector<std::uint16_t>(static_cast<std::size_t>(q) * n));
  for (std::size_t i = 0; i < k; ++i)
    for (std::uint32_t s = 0; s < q; ++s)
      for (std::size_t j = 0; j < n; ++j)
        scaled[i][s * n + j] = static_cast<std::uint16_t>(F.mul(Fq{s}, code.generator()[i][j]).idx);

  const unsigned workers = std::max(1u, threads);
  std::vector<std::vector<std::uint64_t>> hist(workers, std::vector<std::uint64_t>(n + 1, 0));
  const auto* add = F.add_table();

  // shard on the value of the first message coordinate
  run_shards(q, workers, [&](std::size_t shard, unsigned worker) {
    std::vector<std::vector<std::uint16_t>> partial(k, std::vector<std::uint16_t>(n));
    std::copy_n(scaled[0].begin() + shard * n, n, partial[0].begin());
    auto& h = hist[worker];
    // explicit recursion on message coordinates 1..k-1
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == k) {
        std::size_t wt = 0;
        for (std::size_t j = 0; j < n; ++j)
          wt += partial[k - 1][j] != 0;
        ++h[wt];
        return;
      }
      for (std::uint32_t s = 0; s < q; ++s) {
        const auto* row = scaled[i].data() + static_cast<std::size_t>(s) * n;
        for (std::size_t j = 0; j < n; ++j)
          partial[i][j] = add[partial[i - 1][j] * q + row[j]];
        self(self, i + 1);
      }
    };
    rec(rec, 1);
  });

  for (std::size_t w = 0; w <= n; ++w) {
    std::uint64_t total = 0;
    for (const auto& h : hist)
      total += h[w];
    if (total > 0)
      out.add(w, mpz_class(std::to_string(total)));
  }
  return out;
}

inline std::size_t min_distance(const LinearCode& code, unsigned threads = 1,
                                std::uint64_t guard = kDefaultCodewordGuard)
{
  const auto d = weight_distribution_exhaustive(code, threads, guard).min_nonzero_weight();
  if (!d)
    throw std::domain_error("the zero code has no minimum distance");
  return *d;
}

namespace detail {

inline std::vector<bool> position_mask(std::size_t n, const std::vector<std::size_t>& positions)
{
  std::vector<bool> mask(n, false);
  for (auto p : positions) {
    if (p >= n)
      throw std::out_of_range("coordinate position " + std::to_string(p) + " out of range");
    mask[p] = true;
  }
  return mask;
}

inline std::vector<Row> delete_columns(const std::vector<Row>& rows, const std::vector<bool>& mask)
{
  std::vector<Row> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    Row nr;
    for (std::size_t j = 0; j < r.size(); ++j)
      if (!mask[j])
        nr.push_back(r[j]);
    out.push_back(std::move(nr));
  }
  return out;
}

inline std::size_t kept(const std::vector<bool>& mask)
{
  return static_cast<std::size_t>(std::count(mask.begin(), mask.end(), false));
}

} // namespace detail

/// Deletes the coordinates in T from every codeword.
inline LinearCode puncture(const LinearCode& code, const std::vector<std::size_t>& T)
{
  const auto mask = detail::position_mask(code.length(), T);
  if (detail::kept(mask) == 0)
    throw std::invalid_argument("cannot puncture every coordinate");
  return LinearCode(code.field_ptr(), detail::kept(mask), detail::delete_columns(code.generator(), mask));
}

/// Keeps the codewords vanishing on T, then deletes T.
inline LinearCode shorten(const LinearCode& code, const std::vector<std::size_t>& T)
{
  const auto mask = detail::position_mask(code.length(), T);
  if (detail::kept(mask) == 0)
    throw std::invalid_argument("cannot shorten on every coordinate");
  const auto& F = code.field();
  auto rows = code.generator();
  std::vector<bool> used(rows.size(), false);
  for (std::size_t col = 0; col < code.length(); ++col) {
    if (!mask[col])
      continue;
    std::size_t piv = 0;
    while (piv < rows.size() && (used[piv] || rows[piv][col].idx == 0))
      ++piv;
    if (piv == rows.size())
      continue;
    used[piv] = true;
    const Fq s = F.inv(rows[piv][col]);
    for (auto& e : rows[piv])
      e = F.mul(s, e);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == piv || rows[i][col].idx == 0)
        continue;
      const Fq f = rows[i][col];
      for (std::size_t j = 0; j < rows[i].size(); ++j)
        rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[piv][j]));
    }
  }
  std::vector<Row> sub;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (!used[i])
      sub.push_back(rows[i]);
  return LinearCode(code.field_ptr(), detail::kept(mask), detail::delete_columns(sub, mask));
}

/// The code restricted to the complement of supp(c), c a nonzero codeword.
inline LinearCode residual(const LinearCode& code, const Row& c)
{
  if (!code.contains(c))
    throw std::invalid_argument("residual: vector is not a codeword");
  if (hamming_weight(c) == 0)
    throw std::invalid_argument("residual: codeword must be nonzero");
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < c.size(); ++j)
    if (c[j].idx != 0)
      support.push_back(j);
  const auto mask = detail::position_mask(code.length(), support);
  return LinearCode(code.field_ptr(), detail::kept(mask), detail::delete_columns(code.generator(), mask));
}

/// Some set of at most s columns of the generator matrix that is linearly
/// dependent, or nullopt if every s columns are independent.
inline std::optional<std::vector<std::size_t>> find_dependent_columns(const LinearCode& code, std::size_t s)
{
  const auto& F = code.field();
  const auto n = code.length();
  std::vector<Row> cols(n);
  for (std::size_t j = 0; j < n; ++j)
    cols[j] = code.column(j);

  // basis of the chosen columns, each normalized at its pivot
  std::vector<std::pair<Row, std::size_t>> basis;
  std::vector<std::size_t> chosen;
  std::optional<std::vector<std::size_t>> found;

  auto reduce = [&](Row v) {
    for (const auto& [b, p] : basis) {
      if (v[p].idx == 0)
        continue;
      const Fq f = v[p];
      for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = F.sub(v[i], F.mul(f, b[i]));
    }
    return v;
  };

  auto dfs = [&](auto&& self, std::size_t from) -> bool {
    for (std::size_t j = from; j < n; ++j) {
      Row v = reduce(cols[j]);
      std::size_t p = 0;
      while (p < v.size() && v[p].idx == 0)
        ++p;
      chosen.push_back(j);
      if (p == v.size()) {
        found = chosen;
        return true;
      }
      if (chosen.size() < s) {
        const Fq inv = F.inv(v[p]);
        for (auto& e : v)
          e = F.mul(inv, e);
        basis.emplace_back(std::move(v), p);
        if (self(self, j + 1))
          return true;
        basis.pop_back();
      }
      chosen.pop_back();
    }
    return false;
  };
  dfs(dfs, 0);
  return found;
}

} // namespace ovoid

#endif
