#include "pathcrystal/energy.hpp"

#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pathcrystal {

namespace {

std::string pair_str(const ElemPair& p) {
  return encode(p.first) + " (x) " + encode(p.second);
}

}  // namespace

std::optional<ElemPair> pair_apply(int i, Dir dir, const ElemPair& p) {
  const auto& [x, y] = p;
  if (dir == Dir::lower_op) {
    if (phi(i, x) > eps(i, y)) {
      auto nx = apply(i, Dir::lower_op, x);
      if (!nx) throw std::logic_error("pair_apply: expected live left lower");
      return ElemPair{*nx, y};
    }
    if (phi(i, y) == 0) return std::nullopt;
    auto ny = apply(i, Dir::lower_op, y);
    if (!ny) throw std::logic_error("pair_apply: expected live right lower");
    return ElemPair{x, *ny};
  }
  if (phi(i, x) >= eps(i, y)) {
    if (eps(i, x) == 0) return std::nullopt;
    auto nx = apply(i, Dir::raise_op, x);
    if (!nx) throw std::logic_error("pair_apply: expected live left raise");
    return ElemPair{*nx, y};
  }
  auto ny = apply(i, Dir::raise_op, y);
  if (!ny) throw std::logic_error("pair_apply: expected live right raise");
  return ElemPair{x, *ny};
}

bool raise_acts_left(int i, const ElemPair& p) {
  return phi(i, p.first) >= eps(i, p.second);
}

RMap::RMap(Crystal b1, Crystal b2, std::map<ElemPair, ElemPair> table)
    : b1_(std::move(b1)), b2_(std::move(b2)), table_(std::move(table)) {}

const ElemPair& RMap::apply(const ElemPair& p) const {
  auto it = table_.find(p);
  if (it == table_.end())
    throw std::out_of_range("RMap: pair not in domain: " + pair_str(p));
  return it->second;
}

nlohmann::json RMap::to_json() const {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [src, dst] : table_)
    entries.push_back({{"from", pair_str(src)}, {"to", pair_str(dst)}});
  return {{"left", b1_.str()}, {"right", b2_.str()}, {"map", entries}};
}

RMap combinatorial_R(const Crystal& b1, const Crystal& b2) {
  if (b1.n() != b2.n())
    throw std::invalid_argument("combinatorial_R: rank mismatch");
  const int n = b1.n();

  std::map<ElemPair, ElemPair> table;
  ElemPair anchor{b1.classical_highest(), b2.classical_highest()};
  ElemPair anchor_img{b2.classical_highest(), b1.classical_highest()};
  table[anchor] = anchor_img;

  std::deque<ElemPair> queue{anchor};
  while (!queue.empty()) {
    ElemPair p = queue.front();
    queue.pop_front();
    const ElemPair& q = table.at(p);
    for (int i = 0; i < n; ++i) {
      for (Dir dir : {Dir::raise_op, Dir::lower_op}) {
        auto p2 = pair_apply(i, dir, p);
        auto q2 = pair_apply(i, dir, q);
        if (p2.has_value() != q2.has_value())
          throw std::runtime_error(
              "combinatorial_R: operator " + std::to_string(i) +
              " lives on only one side of " + pair_str(p));
        if (!p2) continue;
        auto [it, inserted] = table.emplace(*p2, *q2);
        if (!inserted) {
          if (it->second != *q2)
            throw std::runtime_error("combinatorial_R: conflicting images at " +
                                     pair_str(*p2));
        } else {
          queue.push_back(*p2);
        }
      }
    }
  }

  const auto expected =
      static_cast<std::size_t>(b1.size()) * static_cast<std::size_t>(b2.size());
  if (table.size() != expected)
    throw std::runtime_error("combinatorial_R: tensor graph not connected (" +
                             std::to_string(table.size()) + " of " +
                             std::to_string(expected) + " pairs reached)");

  std::set<ElemPair> images;
  for (const auto& [src, dst] : table) {
    images.insert(dst);
    ClWeight ws = weight(src.first);
    ClWeight wd = weight(dst.first);
    const ClWeight ws2 = weight(src.second);
    const ClWeight wd2 = weight(dst.second);
    for (int t = 0; t < n; ++t) ws.content[t] += ws2.content[t];
    for (int t = 0; t < n; ++t) wd.content[t] += wd2.content[t];
    ws.level += ws2.level;
    wd.level += wd2.level;
    if (!(ws == wd))
      throw std::runtime_error("combinatorial_R: weight not preserved at " +
                               pair_str(src));
  }
  if (images.size() != table.size())
    throw std::runtime_error("combinatorial_R: map is not injective");

  return RMap(b1, b2, std::move(table));
}

EnergyTable::EnergyTable(Crystal b1, Crystal b2, ElemPair anchor,
                         std::map<ElemPair, long long> values)
    : b1_(std::move(b1)),
      b2_(std::move(b2)),
      anchor_(std::move(anchor)),
      values_(std::move(values)) {}

long long EnergyTable::at(const ElemPair& p) const {
  auto it = values_.find(p);
  if (it == values_.end())
    throw std::out_of_range("EnergyTable: pair not in domain: " + pair_str(p));
  return it->second;
}

nlohmann::json EnergyTable::to_json() const {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [p, h] : values_)
    entries.push_back({{"pair", pair_str(p)}, {"value", h}});
  return {{"left", b1_.str()}, {"right", b2_.str()}, {"values", entries}};
}

namespace {

// Increment of the energy along the raise edge p -> raise_0(p): +1 when the
// raise acts on the left factor both at p and at its bijection image, -1 when
// it acts on the right in both, 0 in the mixed cases and for every i != 0.
long long zero_edge_step(const RMap& r, const ElemPair& p) {
  const bool left_here = raise_acts_left(0, p);
  const bool left_there = raise_acts_left(0, r.apply(p));
  if (left_here && left_there) return 1;
  if (!left_here && !left_there) return -1;
  return 0;
}

}  // namespace

EnergyTable energy_table(const Crystal& b1, const Crystal& b2, const RMap& r) {
  const int n = b1.n();
  ElemPair anchor{b1.classical_highest(), b2.classical_highest()};

  std::map<ElemPair, long long> values;
  values[anchor] = 0;
  std::deque<ElemPair> queue{anchor};
  while (!queue.empty()) {
    ElemPair p = queue.front();
    queue.pop_front();
    const long long h = values.at(p);
    for (int i = 0; i < n; ++i) {
      for (Dir dir : {Dir::raise_op, Dir::lower_op}) {
        auto p2 = pair_apply(i, dir, p);
        if (!p2) continue;
        long long h2 = h;
        if (i == 0) {
          // The step is attached to the raise edge; for a lower edge the
          // matching raise starts at the endpoint.
          h2 += dir == Dir::raise_op ? zero_edge_step(r, p)
                                     : -zero_edge_step(r, *p2);
        }
        auto [it, inserted] = values.emplace(*p2, h2);
        if (!inserted) {
          if (it->second != h2)
            throw std::runtime_error(
                "energy_table: inconsistent propagation at " + pair_str(*p2));
        } else {
          queue.push_back(*p2);
        }
      }
    }
  }

  const auto expected =
      static_cast<std::size_t>(b1.size()) * static_cast<std::size_t>(b2.size());
  if (values.size() != expected)
    throw std::runtime_error("energy_table: domain not fully covered");
  return EnergyTable(b1, b2, std::move(anchor), std::move(values));
}

const RMap& TableCache::r_map(const Crystal& b1, const Crystal& b2) {
  auto key = std::make_pair(b1, b2);
  auto it = rmaps_.find(key);
  if (it == rmaps_.end())
    it = rmaps_.emplace(key, combinatorial_R(b1, b2)).first;
  return it->second;
}

const EnergyTable& TableCache::table(const Crystal& b1, const Crystal& b2) {
  auto key = std::make_pair(b1, b2);
  auto it = tables_.find(key);
  if (it == tables_.end())
    it = tables_.emplace(key, energy_table(b1, b2, r_map(b1, b2))).first;
  return it->second;
}

long long homogeneous_energy(const TruncatedPath& p,
                             const TruncatedPath& ground,
                             const CrystalElem& beyond, const EnergyTable& t) {
  if (p.body.size() != ground.body.size())
    throw std::invalid_argument("homogeneous_energy: length mismatch");
  if (p.head != ground.head)
    throw std::invalid_argument("homogeneous_energy: head mismatch");
  const int len = static_cast<int>(p.body.size());

  // body[0] is head-adjacent (deepest); position j counts from the right.
  auto factor = [len](const TruncatedPath& path, int j) -> const CrystalElem& {
    return path.body[static_cast<std::size_t>(len - j)];
  };
  long long total = 0;
  for (int j = 1; j <= len; ++j) {
    const CrystalElem& above_p = j == len ? beyond : factor(p, j + 1);
    const CrystalElem& above_g = j == len ? beyond : factor(ground, j + 1);
    total += static_cast<long long>(j) *
             (t.at({above_p, factor(p, j)}) - t.at({above_g, factor(ground, j)}));
  }
  return total;
}

std::vector<std::vector<CrystalElem>> promoted_factors(
    const std::vector<CrystalElem>& body, TableCache& cache) {
  const int m = static_cast<int>(body.size());
  std::vector<std::vector<CrystalElem>> promoted(static_cast<std::size_t>(m));
  for (int j = 1; j <= m; ++j) {
    auto& column = promoted[static_cast<std::size_t>(j - 1)];
    column.assign(static_cast<std::size_t>(j), body[static_cast<std::size_t>(j - 1)]);
    for (int i = j - 1; i >= 1; --i) {
      const CrystalElem& left = body[static_cast<std::size_t>(i - 1)];
      const CrystalElem& right = column[static_cast<std::size_t>(i)];
      const RMap& r = cache.r_map(crystal_of(left), crystal_of(right));
      column[static_cast<std::size_t>(i - 1)] = r.apply({left, right}).first;
    }
  }
  return promoted;
}

long long inhomogeneous_energy_at(const std::vector<CrystalElem>& body, int j,
                                  TableCache& cache) {
  if (j < 1 || j > static_cast<int>(body.size()))
    throw std::invalid_argument("inhomogeneous_energy_at: position out of range");
  auto promoted = promoted_factors(body, cache);
  const auto& column = promoted[static_cast<std::size_t>(j - 1)];
  long long total = 0;
  for (int i = 1; i < j; ++i) {
    const CrystalElem& left = body[static_cast<std::size_t>(i - 1)];
    const CrystalElem& right = column[static_cast<std::size_t>(i)];
    total += cache.table(crystal_of(left), crystal_of(right)).at({left, right});
  }
  return total;
}

long long inhomogeneous_energy(const std::vector<CrystalElem>& body,
                               TableCache& cache) {
  auto promoted = promoted_factors(body, cache);
  long long total = 0;
  const int m = static_cast<int>(body.size());
  for (int j = 2; j <= m; ++j) {
    const auto& column = promoted[static_cast<std::size_t>(j - 1)];
    for (int i = 1; i < j; ++i) {
      const CrystalElem& left = body[static_cast<std::size_t>(i - 1)];
      const CrystalElem& right = column[static_cast<std::size_t>(i)];
      total +=
          cache.table(crystal_of(left), crystal_of(right)).at({left, right});
    }
  }
  return total;
}

}  // namespace pathcrystal
