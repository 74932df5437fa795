#include "pathcrystal/tableau.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pathcrystal {

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto& row = rows_[r];
    if (row.empty()) throw std::invalid_argument("tableau rows must be nonempty");
    if (r > 0 && row.size() > rows_[r - 1].size())
      throw std::invalid_argument("tableau shape must be a partition");
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] < 1) throw std::invalid_argument("tableau entries must be >= 1");
      if (c > 0 && row[c] < row[c - 1])
        throw std::invalid_argument("tableau rows must weakly increase");
      if (r > 0 && row[c] <= rows_[r - 1][c])
        throw std::invalid_argument("tableau columns must strictly increase");
    }
  }
}

Partition Tableau::shape() const {
  std::vector<int> s;
  for (const auto& row : rows_) s.push_back(static_cast<int>(row.size()));
  return Partition(std::move(s));
}

std::vector<int> Tableau::content() const {
  int mx = 0;
  for (const auto& row : rows_)
    for (int v : row) mx = std::max(mx, v);
  std::vector<int> c(mx, 0);
  for (const auto& row : rows_)
    for (int v : row) ++c[v - 1];
  return c;
}

std::vector<int> Tableau::reading_word() const {
  std::vector<int> w;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it)
    w.insert(w.end(), it->begin(), it->end());
  return w;
}

std::string Tableau::str() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) out << ',';
    out << '[';
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (c) out << ',';
      out << rows_[r][c];
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

namespace {

// Backtracking fill in row-major order; emits tableaux in lexicographic order
// of the top-to-bottom row reading.
void fill_ssyt(const std::vector<int>& shape, std::vector<int>& remaining,
               std::vector<std::vector<int>>& rows, std::size_t r, std::size_t c,
               std::vector<Tableau>& out) {
  if (r == shape.size()) {
    out.push_back(Tableau(rows));
    return;
  }
  std::size_t nr = r, nc = c + 1;
  if (nc == static_cast<std::size_t>(shape[r])) {
    nr = r + 1;
    nc = 0;
  }
  int lo = c > 0 ? rows[r][c - 1] : 1;
  if (r > 0 && static_cast<std::size_t>(shape[r - 1]) > c)
    lo = std::max(lo, rows[r - 1][c] + 1);
  for (int v = lo; v <= static_cast<int>(remaining.size()); ++v) {
    if (remaining[v - 1] == 0) continue;
    --remaining[v - 1];
    rows[r][c] = v;
    fill_ssyt(shape, remaining, rows, nr, nc, out);
    ++remaining[v - 1];
  }
}

}  // namespace

std::vector<Tableau> enumerate_ssyt(const Partition& shape,
                                    const std::vector<int>& content) {
  for (int c : content)
    if (c < 0) throw std::invalid_argument("negative content multiplicity");
  int total = std::accumulate(content.begin(), content.end(), 0);
  if (total != shape.size())
    throw std::invalid_argument("content size must match shape size");
  std::vector<Tableau> out;
  if (shape.length() == 0) {
    return out;  // the empty shape has no filling to enumerate
  }
  std::vector<std::vector<int>> rows;
  for (int p : shape.parts()) rows.push_back(std::vector<int>(p, 0));
  std::vector<int> remaining = content;
  fill_ssyt(shape.parts(), remaining, rows, 0, 0, out);
  return out;
}

long long kostka_number(const Partition& shape, const std::vector<int>& content) {
  return static_cast<long long>(enumerate_ssyt(shape, content).size());
}

int charge(const std::vector<int>& word) {
  std::vector<int> w = word;
  {
    int mx = 0;
    for (int v : w) {
      if (v < 1) throw std::invalid_argument("charge: letters must be >= 1");
      mx = std::max(mx, v);
    }
    std::vector<int> cont(mx, 0);
    for (int v : w) ++cont[v - 1];
    for (std::size_t i = 1; i < cont.size(); ++i)
      if (cont[i] > cont[i - 1])
        throw std::invalid_argument("charge: content must be a partition");
    if (!cont.empty() && cont.back() == 0)
      throw std::invalid_argument("charge: content must be a partition");
  }
  int total = 0;
  while (!w.empty()) {
    int top = *std::max_element(w.begin(), w.end());
    std::vector<int> taken;  // positions of the extracted standard subword
    int pos = -1;
    for (int i = static_cast<int>(w.size()) - 1; i >= 0; --i)
      if (w[i] == 1) {
        pos = i;
        break;
      }
    taken.push_back(pos);
    int index = 0;
    for (int v = 2; v <= top; ++v) {
      int next = -1;
      for (int i = pos - 1; i >= 0; --i)
        if (w[i] == v) {
          next = i;
          break;
        }
      if (next < 0) {  // wrap to the right end
        for (int i = static_cast<int>(w.size()) - 1; i > pos; --i)
          if (w[i] == v) {
            next = i;
            break;
          }
        ++index;
      }
      total += index;
      pos = next;
      taken.push_back(pos);
    }
    std::sort(taken.begin(), taken.end());
    for (auto it = taken.rbegin(); it != taken.rend(); ++it)
      w.erase(w.begin() + *it);
  }
  return total;
}

int charge(const Tableau& t) {
  std::vector<int> cont = t.content();
  for (std::size_t i = 1; i < cont.size(); ++i)
    if (cont[i] > cont[i - 1])
      throw std::invalid_argument("charge: tableau content must be a partition");
  return charge(t.reading_word());
}

QPoly kostka_foulkes(const Partition& shape, const Partition& mu) {
  if (shape.size() != mu.size())
    throw std::invalid_argument("kostka_foulkes: |shape| != |mu|");
  QPoly out;
  std::vector<int> content = mu.parts();
  for (const Tableau& t : enumerate_ssyt(shape, content))
    out += QPoly::q_power(charge(t));
  return out;
}

Tableau row_packed_tableau(const Partition& mu, int n) {
  int N = mu.size();
  if (N < 1) throw std::invalid_argument("row_packed_tableau: |mu| must be >= 1");
  if (n < 1) throw std::invalid_argument("row_packed_tableau: rank must be >= 1");
  std::vector<int> letters;
  for (int r = 0; r < mu.length(); ++r)
    letters.insert(letters.end(), mu.parts()[r], r + 1);
  std::vector<std::vector<int>> rows;
  for (int at = 0; at < N; at += n) {
    int len = std::min(n, N - at);
    rows.push_back(std::vector<int>(letters.begin() + at,
                                    letters.begin() + at + len));
  }
  return Tableau(std::move(rows));  // validation rejects non-semistandard fillings
}

SchurExpansion milne(const Partition& mu, int n) {
  SchurExpansion out;
  for (const Partition& lam : partitions_of(mu.size(), n))
    out.add(lam, kostka_foulkes(lam, mu));
  return out;
}

long long schur_dim(const Partition& shape, int n) {
  if (shape.length() > n)
    throw std::invalid_argument("schur_dim: more than n rows");
  if (shape.length() == 0) return 1;
  // Weyl dimension formula for gl_n specialized at 1^n.
  long long num = 1, den = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      num *= shape.part(i) - shape.part(j) + j - i;
      den *= j - i;
    }
  return num / den;
}

}  // namespace pathcrystal
