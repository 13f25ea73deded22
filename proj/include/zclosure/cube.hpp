#pragma once

#include <bit>
#include <cstdint>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zclosure {

/// Hard ceiling on the dimension of anything that materializes 2^n data.
inline constexpr int kHardCubeCap = 24;

/// Current enumeration cap (defaults to kHardCubeCap).
int enumeration_cap() noexcept;
/// Lowers or restores the cap; values outside [1, kHardCubeCap] are rejected.
void set_enumeration_cap(int cap);
/// Applies ZCLOSURE_CAP_N if set. Returns the cap now in force.
int apply_cap_from_environment();
/// Throws SizeCapExceeded when n exceeds the current cap.
void require_enumerable(int n, std::string_view what);

/// A point of {0,1}^n. Bit i-1 of `bits` holds the coordinate x_i.
struct CubePoint {
  int n = 0;
  std::uint32_t bits = 0;

  int weight() const noexcept { return std::popcount(bits); }
  /// Coordinates x_1 ... x_n left to right, e.g. "110" is x_1 = x_2 = 1.
  std::string to_string() const;

  friend bool operator==(const CubePoint&, const CubePoint&) = default;
};

/// A subset E of [0, n], standing for the symmetric set of all cube points
/// whose Hamming weight lies in E. Dimension n is not bounded by the
/// enumeration cap; only operations that list points are.
class SymmetricSet {
 public:
  explicit SymmetricSet(int n);

  static SymmetricSet from_weights(int n, std::span<const int> weights);
  static SymmetricSet from_weights(int n, std::initializer_list<int> weights);
  static SymmetricSet interval(int n, int lo, int hi);
  static SymmetricSet full(int n) { return interval(n, 0, n); }
  /// Parses "1,4" (whitespace tolerated, empty string is the empty set).
  static SymmetricSet parse(int n, std::string_view text);

  int n() const noexcept { return n_; }
  bool contains(int w) const noexcept { return w >= 0 && w <= n_ && members_[w]; }
  void insert(int w);
  void erase(int w);
  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }
  std::vector<int> weights() const;
  bool is_subset_of(const SymmetricSet& other) const;
  /// Sorted comma-separated weights.
  std::string to_string() const;

  friend bool operator==(const SymmetricSet&, const SymmetricSet&) = default;

 private:
  int n_;
  std::vector<bool> members_;
};

SymmetricSet set_union(const SymmetricSet& a, const SymmetricSet& b);

/// Points of weight i in increasing mask order (Gosper's successor).
class LayerPoints {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = CubePoint;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(int n, std::uint64_t mask, std::uint64_t end) : n_(n), mask_(mask), end_(end) {}

    CubePoint operator*() const { return {n_, static_cast<std::uint32_t>(mask_)}; }
    iterator& operator++();
    iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.mask_ == b.mask_; }

   private:
    int n_ = 0;
    std::uint64_t mask_ = 0;
    std::uint64_t end_ = 0;
  };

  LayerPoints(int n, int i);

  iterator begin() const;
  iterator end() const { return {n_, end_, end_}; }

 private:
  int n_;
  int i_;
  std::uint64_t end_;
};

/// Throws InvalidWeight for i outside [0, n], SizeCapExceeded for large n.
LayerPoints layer_points(int n, int i);

/// All points of the symmetric set, layer by layer in increasing weight.
std::vector<CubePoint> enumerate_symmetric(const SymmetricSet& e);
std::uint64_t symmetric_set_cardinality(const SymmetricSet& e);

/// All t in [0, n] congruent modulo m to some member of E.
SymmetricSet e_oplus(const SymmetricSet& e, std::uint64_t modulus);

/// E_I for the interval I = [lo, hi] with hi - lo + 1 == modulus: the j in I
/// with j + k*modulus in E for some integer k.
SymmetricSet restrict_to_interval(const SymmetricSet& e, int lo, int hi, std::uint64_t modulus);

/// {w + k : w in E} viewed inside [0, new_n]; members that leave the range
/// raise InvalidWeight.
SymmetricSet translate(const SymmetricSet& e, int k, int new_n);
/// {n - w : w in E}.
SymmetricSet reflect(const SymmetricSet& e);

}  // namespace zclosure
