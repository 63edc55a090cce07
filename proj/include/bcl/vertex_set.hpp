#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace bcl {

/// Subset of {0, ..., n-1} for a fixed host size n, bit-packed.
/// All binary operations require matching host sizes.
class VertexSet {
 public:
  VertexSet() = default;

  explicit VertexSet(int host_size)
      : n_(host_size), words_((host_size + 63) / 64, 0) {
    if (host_size < 0) throw std::invalid_argument("VertexSet: negative host size");
  }

  static VertexSet full(int host_size) {
    VertexSet s(host_size);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  static VertexSet of(int host_size, std::initializer_list<int> vs) {
    VertexSet s(host_size);
    for (int v : vs) s.add(v);
    return s;
  }

  int host_size() const { return n_; }

  bool contains(int v) const {
    return v >= 0 && v < n_ && (words_[v >> 6] >> (v & 63)) & 1;
  }

  void add(int v) {
    check_range(v);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }

  void remove(int v) {
    check_range(v);
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  /// Smallest member, or -1 if empty.
  int first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
    return -1;
  }

  /// Smallest member strictly greater than v, or -1 if none.
  int next(int v) const {
    if (v < -1) v = -1;
    int start = v + 1;
    if (start >= n_) return -1;
    std::size_t i = static_cast<std::size_t>(start) >> 6;
    std::uint64_t w = words_[i] & (~std::uint64_t{0} << (start & 63));
    while (true) {
      if (w) return static_cast<int>(i * 64 + std::countr_zero(w));
      if (++i >= words_.size()) return -1;
      w = words_[i];
    }
  }

  bool intersects(const VertexSet& o) const {
    require_same_host(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  bool subset_of(const VertexSet& o) const {
    require_same_host(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool proper_subset_of(const VertexSet& o) const {
    return subset_of(o) && *this != o;
  }

  VertexSet& operator&=(const VertexSet& o) {
    require_same_host(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    require_same_host(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    require_same_host(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  /// Complement within the host {0..n-1}.
  VertexSet complement() const {
    VertexSet s(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
    s.trim();
    return s;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
    return out;
  }

  /// Members separated by single spaces, e.g. "0 2 5".
  std::string to_string() const {
    std::string out;
    for (int v = first(); v >= 0; v = next(v)) {
      if (!out.empty()) out += ' ';
      out += std::to_string(v);
    }
    return out;
  }

  bool operator==(const VertexSet& o) const {
    return n_ == o.n_ && words_ == o.words_;
  }

  /// Arbitrary strict total order, usable as an ordered-container key.
  bool operator<(const VertexSet& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return words_ < o.words_;
  }

 private:
  void check_range(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("VertexSet: vertex out of range");
  }
  void require_same_host(const VertexSet& o) const {
    if (n_ != o.n_) throw std::invalid_argument("VertexSet: host size mismatch");
  }
  void trim() {
    if (n_ & 63) words_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
    if (n_ == 0) words_.clear();
  }

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Compares two sets as sorted vertex lists (shorter prefix wins ties).
/// This is the order used for canonical biclique-family output.
inline bool lex_less(const VertexSet& a, const VertexSet& b) {
  int x = a.first(), y = b.first();
  while (x >= 0 && y >= 0) {
    if (x != y) return x < y;
    x = a.next(x);
    y = b.next(y);
  }
  return y >= 0;
}

}  // namespace bcl
