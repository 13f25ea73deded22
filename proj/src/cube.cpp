#include "zclosure/cube.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <string>

#include "zclosure/error.hpp"

namespace zclosure {
namespace {

std::atomic<int> g_cap{kHardCubeCap};

void require_weight(int n, int w) {
  if (w < 0 || w > n) {
    raise(ErrorKind::InvalidWeight, "weight " + std::to_string(w) + " outside [0, " + std::to_string(n) + "]");
  }
}

}  // namespace

int enumeration_cap() noexcept { return g_cap.load(std::memory_order_relaxed); }

void set_enumeration_cap(int cap) {
  if (cap < 1 || cap > kHardCubeCap) {
    raise(ErrorKind::InvalidArgument,
          "enumeration cap must lie in [1, " + std::to_string(kHardCubeCap) + "], got " + std::to_string(cap));
  }
  g_cap.store(cap, std::memory_order_relaxed);
}

int apply_cap_from_environment() {
  if (const char* raw = std::getenv("ZCLOSURE_CAP_N"); raw != nullptr && *raw != '\0') {
    const std::string_view text(raw);
    int cap = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
      raise(ErrorKind::InvalidArgument, "ZCLOSURE_CAP_N is not an integer: " + std::string(text));
    }
    set_enumeration_cap(cap);
  }
  return enumeration_cap();
}

void require_enumerable(int n, std::string_view what) {
  if (n > enumeration_cap()) {
    raise(ErrorKind::SizeCapExceeded, std::string(what) + " needs n = " + std::to_string(n) +
                                          " but the enumeration cap is " + std::to_string(enumeration_cap()));
  }
}

std::string CubePoint::to_string() const {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if ((bits >> i) & 1u) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

SymmetricSet::SymmetricSet(int n) : n_(n) {
  if (n < 0) raise(ErrorKind::InvalidArgument, "dimension must be nonnegative");
  members_.assign(static_cast<std::size_t>(n) + 1, false);
}

SymmetricSet SymmetricSet::from_weights(int n, std::span<const int> weights) {
  SymmetricSet s(n);
  for (int w : weights) s.insert(w);
  return s;
}

SymmetricSet SymmetricSet::from_weights(int n, std::initializer_list<int> weights) {
  return from_weights(n, std::span<const int>(weights.begin(), weights.size()));
}

SymmetricSet SymmetricSet::interval(int n, int lo, int hi) {
  SymmetricSet s(n);
  for (int w = std::max(lo, 0); w <= std::min(hi, n); ++w) s.members_[w] = true;
  return s;
}

SymmetricSet SymmetricSet::parse(int n, std::string_view text) {
  SymmetricSet s(n);
  std::size_t pos = 0;
  auto trim = [](std::string_view v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
    return v;
  };
  if (trim(text).empty()) return s;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view token = trim(text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos));
    int w = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), w);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      raise(ErrorKind::InvalidArgument, "malformed weight list: '" + std::string(text) + "'");
    }
    s.insert(w);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return s;
}

void SymmetricSet::insert(int w) {
  require_weight(n_, w);
  members_[w] = true;
}

void SymmetricSet::erase(int w) {
  require_weight(n_, w);
  members_[w] = false;
}

std::size_t SymmetricSet::size() const noexcept {
  return static_cast<std::size_t>(std::count(members_.begin(), members_.end(), true));
}

std::vector<int> SymmetricSet::weights() const {
  std::vector<int> out;
  for (int w = 0; w <= n_; ++w) {
    if (members_[w]) out.push_back(w);
  }
  return out;
}

bool SymmetricSet::is_subset_of(const SymmetricSet& other) const {
  for (int w = 0; w <= n_; ++w) {
    if (members_[w] && !other.contains(w)) return false;
  }
  return true;
}

std::string SymmetricSet::to_string() const {
  std::string out;
  for (int w : weights()) {
    if (!out.empty()) out += ',';
    out += std::to_string(w);
  }
  return out;
}

SymmetricSet set_union(const SymmetricSet& a, const SymmetricSet& b) {
  if (a.n() != b.n()) raise(ErrorKind::DimensionMismatch, "union of sets over different n");
  SymmetricSet out = a;
  for (int w : b.weights()) out.insert(w);
  return out;
}

LayerPoints::iterator& LayerPoints::iterator::operator++() {
  if (mask_ == 0) {
    mask_ = end_;
    return *this;
  }
  // Gosper's hack: next larger integer with the same popcount.
  const std::uint64_t c = mask_ & (~mask_ + 1);
  const std::uint64_t r = mask_ + c;
  const std::uint64_t next = (((r ^ mask_) >> 2) / c) | r;
  mask_ = next >= end_ ? end_ : next;
  return *this;
}

LayerPoints::LayerPoints(int n, int i) : n_(n), i_(i), end_(std::uint64_t{1} << n) {}

LayerPoints::iterator LayerPoints::begin() const {
  const std::uint64_t first = (std::uint64_t{1} << i_) - 1;
  return {n_, first, end_};
}

LayerPoints layer_points(int n, int i) {
  require_weight(n, i);
  require_enumerable(n, "layer enumeration");
  return LayerPoints(n, i);
}

std::vector<CubePoint> enumerate_symmetric(const SymmetricSet& e) {
  require_enumerable(e.n(), "symmetric set enumeration");
  std::vector<CubePoint> out;
  out.reserve(static_cast<std::size_t>(symmetric_set_cardinality(e)));
  for (int w : e.weights()) {
    for (CubePoint x : layer_points(e.n(), w)) out.push_back(x);
  }
  return out;
}

std::uint64_t symmetric_set_cardinality(const SymmetricSet& e) {
  std::uint64_t total = 0;
  for (int w : e.weights()) {
    // C(n, w) by the multiplicative formula; exact for n <= 62.
    std::uint64_t c = 1;
    for (int k = 1; k <= w; ++k) c = c * static_cast<std::uint64_t>(e.n() - w + k) / static_cast<std::uint64_t>(k);
    total += c;
  }
  return total;
}

SymmetricSet e_oplus(const SymmetricSet& e, std::uint64_t modulus) {
  if (modulus == 0) raise(ErrorKind::InvalidArgument, "modulus must be positive");
  SymmetricSet out(e.n());
  std::vector<bool> residues;
  const bool small = modulus <= static_cast<std::uint64_t>(e.n()) + 1;
  if (small) residues.assign(modulus, false);
  for (int j : e.weights()) {
    if (small) residues[static_cast<std::size_t>(j) % modulus] = true;
  }
  for (int t = 0; t <= e.n(); ++t) {
    // With modulus > n each residue class meets [0, n] in at most one point.
    if (small ? residues[static_cast<std::size_t>(t) % modulus] : e.contains(t)) out.insert(t);
  }
  return out;
}

SymmetricSet restrict_to_interval(const SymmetricSet& e, int lo, int hi, std::uint64_t modulus) {
  if (lo < 0 || hi > e.n() || lo > hi) {
    raise(ErrorKind::InvalidInterval,
          "interval [" + std::to_string(lo) + ", " + std::to_string(hi) + "] is not inside [0, " + std::to_string(e.n()) + "]");
  }
  if (static_cast<std::uint64_t>(hi - lo + 1) != modulus) {
    raise(ErrorKind::InvalidInterval, "interval length " + std::to_string(hi - lo + 1) +
                                          " differs from modulus " + std::to_string(modulus));
  }
  // I holds exactly one representative of every residue class.
  const SymmetricSet spread = e_oplus(e, modulus);
  SymmetricSet out(e.n());
  for (int j = lo; j <= hi; ++j) {
    if (spread.contains(j)) out.insert(j);
  }
  return out;
}

SymmetricSet translate(const SymmetricSet& e, int k, int new_n) {
  SymmetricSet out(new_n);
  for (int w : e.weights()) out.insert(w + k);
  return out;
}

SymmetricSet reflect(const SymmetricSet& e) {
  SymmetricSet out(e.n());
  for (int w : e.weights()) out.insert(e.n() - w);
  return out;
}

}  // namespace zclosure
