#include "pathcrystal/partition.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pathcrystal {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

Partition Partition::parse(const std::string& s) {
  std::vector<int> parts;
  std::string tok;
  std::istringstream in(s);
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    parts.push_back(std::stoi(tok));
  }
  return Partition(std::move(parts));
}

int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  if (parts_.empty()) return Partition();
  c.resize(parts_[0], 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[j];
  return Partition(std::move(c));
}

bool Partition::dominates(const Partition& o) const {
  if (size() != o.size())
    throw std::invalid_argument("dominance needs equal sizes");
  int a = 0, b = 0;
  int len = std::max(length(), o.length());
  for (int i = 0; i < len; ++i) {
    a += part(i);
    b += o.part(i);
    if (a < b) return false;
  }
  return true;
}

std::string Partition::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << ',';
    out << parts_[i];
  }
  return out.str();
}

namespace {

void gen_partitions(int remaining, int max_part, int max_length,
                    std::vector<int>& acc, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(acc));
    return;
  }
  if (max_length == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    acc.push_back(p);
    gen_partitions(remaining - p, p, max_length - 1, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int N, int max_length, int max_part) {
  if (N < 0) throw std::invalid_argument("partitions_of: negative size");
  if (max_length < 0) max_length = N;
  if (max_part < 0) max_part = N;
  std::vector<Partition> out;
  std::vector<int> acc;
  gen_partitions(N, max_part, max_length, acc, out);
  return out;
}

}  // namespace pathcrystal
