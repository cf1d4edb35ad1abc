#include "nsag/monomial.hpp"

#include <algorithm>

namespace nsag {

std::string var_name(Var v) {
  if (is_z(v)) return "z" + std::to_string(v);
  return "w" + std::to_string(v - kWOffset);
}

Monomial Monomial::variable(Var v, std::uint32_t exponent) {
  Monomial m;
  if (exponent > 0) {
    m.entries_.emplace_back(v, exponent);
    m.degree_ = exponent;
  }
  return m;
}

Monomial Monomial::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end());
  Monomial m;
  for (const auto& [v, e] : entries) {
    if (e == 0) continue;
    if (!m.entries_.empty() && m.entries_.back().first == v) {
      m.entries_.back().second += e;
    } else {
      m.entries_.emplace_back(v, e);
    }
    m.degree_ += e;
  }
  return m;
}

std::uint32_t Monomial::exponent(Var v) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{v, 0});
  return (it != entries_.end() && it->first == v) ? it->second : 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.entries_.reserve(a.entries_.size() + b.entries_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.entries_.size() && j < b.entries_.size()) {
    if (a.entries_[i].first == b.entries_[j].first) {
      m.entries_.emplace_back(a.entries_[i].first, a.entries_[i].second + b.entries_[j].second);
      ++i;
      ++j;
    } else if (a.entries_[i].first < b.entries_[j].first) {
      m.entries_.push_back(a.entries_[i++]);
    } else {
      m.entries_.push_back(b.entries_[j++]);
    }
  }
  for (; i < a.entries_.size(); ++i) m.entries_.push_back(a.entries_[i]);
  for (; j < b.entries_.size(); ++j) m.entries_.push_back(b.entries_[j]);
  m.degree_ = a.degree_ + b.degree_;
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial m;
  std::size_t j = 0;
  for (const auto& [v, e] : a.entries_) {
    std::uint32_t sub = 0;
    if (j < b.entries_.size() && b.entries_[j].first == v) sub = b.entries_[j++].second;
    if (e > sub) m.entries_.emplace_back(v, e - sub);
  }
  m.degree_ = a.degree_ - b.degree_;
  return m;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  return a.entries_ <=> b.entries_;
}

bool divides(const Monomial& divisor, const Monomial& m) {
  if (divisor.degree() > m.degree()) return false;
  const auto& d = divisor.entries();
  const auto& e = m.entries();
  std::size_t j = 0;
  for (const auto& [v, k] : d) {
    while (j < e.size() && e[j].first < v) ++j;
    if (j == e.size() || e[j].first != v || e[j].second < k) return false;
  }
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Entry> entries;
  const auto& x = a.entries();
  const auto& y = b.entries();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      entries.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      entries.push_back(y[j++]);
    } else {
      entries.emplace_back(x[i].first, std::max(x[i].second, y[j].second));
      ++i;
      ++j;
    }
  }
  return Monomial::from_entries(std::move(entries));
}

bool coprime(const Monomial& a, const Monomial& b) {
  const auto& x = a.entries();
  const auto& y = b.entries();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i].first == y[j].first) return false;
    if (x[i].first < y[j].first) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& [v, e] : m.entries()) {
    if (!out.empty()) out += "*";
    out += var_name(v);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

MonomialOrder MonomialOrder::elimination(std::vector<Var> block) {
  std::sort(block.begin(), block.end());
  block.erase(std::unique(block.begin(), block.end()), block.end());
  return MonomialOrder(Kind::kElimination, std::move(block));
}

namespace {

using Entries = std::vector<Monomial::Entry>;

int compare_grevlex(const Entries& a, std::uint32_t da, const Entries& b, std::uint32_t db) {
  if (da != db) return da < db ? -1 : 1;
  auto i = a.rbegin();
  auto j = b.rbegin();
  while (i != a.rend() && j != b.rend()) {
    if (i->first == j->first) {
      if (i->second != j->second) return i->second < j->second ? 1 : -1;
      ++i;
      ++j;
    } else if (i->first > j->first) {
      // a carries the lowest-ranked variable where they differ.
      return -1;
    } else {
      return 1;
    }
  }
  if (i != a.rend()) return -1;
  if (j != b.rend()) return 1;
  return 0;
}

int compare_lex(const Entries& a, const Entries& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (i->first == j->first) {
      if (i->second != j->second) return i->second < j->second ? -1 : 1;
      ++i;
      ++j;
    } else if (i->first < j->first) {
      return 1;
    } else {
      return -1;
    }
  }
  if (i != a.end()) return 1;
  if (j != b.end()) return -1;
  return 0;
}

void split(const Entries& m, const std::vector<Var>& block, Entries& in, std::uint32_t& din,
           Entries& out, std::uint32_t& dout) {
  din = 0;
  dout = 0;
  for (const auto& e : m) {
    if (std::binary_search(block.begin(), block.end(), e.first)) {
      in.push_back(e);
      din += e.second;
    } else {
      out.push_back(e);
      dout += e.second;
    }
  }
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::kGrevlex:
      return compare_grevlex(a.entries(), a.degree(), b.entries(), b.degree());
    case Kind::kLex:
      return compare_lex(a.entries(), b.entries());
    case Kind::kElimination: {
      Entries ai, ao, bi, bo;
      std::uint32_t dai, dao, dbi, dbo;
      split(a.entries(), block_, ai, dai, ao, dao);
      split(b.entries(), block_, bi, dbi, bo, dbo);
      if (int c = compare_grevlex(ai, dai, bi, dbi); c != 0) return c;
      return compare_grevlex(ao, dao, bo, dbo);
    }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::kGrevlex: return "grevlex";
    case Kind::kLex: return "lex";
    case Kind::kElimination: {
      std::string out = "elimination(";
      for (std::size_t k = 0; k < block_.size(); ++k) {
        if (k > 0) out += ",";
        out += var_name(block_[k]);
      }
      return out + ")";
    }
  }
  return "unknown";
}

}  // namespace nsag
