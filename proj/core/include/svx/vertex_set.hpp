#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace svx {

/// Subset of the vertices 0..n-1 of a host graph. Bitmask semantics: sets
/// compare and order as the integer formed by their bits (vertex 0 is the
/// least significant). Enumeration code works on raw masks for n <= 64 and
/// wraps the result in a VertexSet; the class itself supports any n.
class VertexSet {
 public:
  VertexSet() : n_(0) {}
  explicit VertexSet(int n) : n_(check_n(n)), w_(words(n)) {}

  static VertexSet from_mask(int n, std::uint64_t mask) {
    VertexSet s(n);
    if (n < 64 && (mask >> n) != 0)
      throw std::out_of_range("VertexSet: mask has bits outside 0..n-1");
    if (!s.w_.empty()) s.w_[0] = mask;
    return s;
  }

  static VertexSet full(int n) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v) s.add(v);
    return s;
  }

  static VertexSet of(int n, std::initializer_list<int> vs) {
    VertexSet s(n);
    for (int v : vs) s.add(v);
    return s;
  }

  int universe() const { return n_; }

  bool contains(int v) const {
    range_check(v);
    return (w_[v >> 6] >> (v & 63)) & 1u;
  }
  void add(int v) {
    range_check(v);
    w_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }
  void remove(int v) {
    range_check(v);
    w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  int count() const {
    int c = 0;
    for (std::uint64_t w : w_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (std::uint64_t w : w_)
      if (w) return false;
    return true;
  }

  std::uint64_t mask() const {
    if (n_ > 64) throw std::out_of_range("VertexSet: universe too large for a 64-bit mask");
    return w_.empty() ? 0 : w_[0];
  }

  VertexSet complement() const {
    VertexSet s(n_);
    for (int v = 0; v < n_; ++v)
      if (!contains(v)) s.add(v);
    return s;
  }

  friend VertexSet operator&(const VertexSet& a, const VertexSet& b) {
    VertexSet s(same_universe(a, b));
    for (size_t i = 0; i < s.w_.size(); ++i) s.w_[i] = a.w_[i] & b.w_[i];
    return s;
  }
  friend VertexSet operator|(const VertexSet& a, const VertexSet& b) {
    VertexSet s(same_universe(a, b));
    for (size_t i = 0; i < s.w_.size(); ++i) s.w_[i] = a.w_[i] | b.w_[i];
    return s;
  }
  /// Set difference a \ b.
  friend VertexSet minus(const VertexSet& a, const VertexSet& b) {
    VertexSet s(same_universe(a, b));
    for (size_t i = 0; i < s.w_.size(); ++i) s.w_[i] = a.w_[i] & ~b.w_[i];
    return s;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }
  friend bool operator!=(const VertexSet& a, const VertexSet& b) { return !(a == b); }
  /// Integer order on the bit pattern; used for deterministic tie-breaks.
  friend bool operator<(const VertexSet& a, const VertexSet& b) {
    same_universe(a, b);
    for (size_t i = a.w_.size(); i-- > 0;)
      if (a.w_[i] != b.w_[i]) return a.w_[i] < b.w_[i];
    return false;
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
      if (contains(v)) out.push_back(v);
    return out;
  }

  std::string str() const {
    std::string s = "{";
    bool first = true;
    for (int v : indices()) {
      if (!first) s += ",";
      s += std::to_string(v);
      first = false;
    }
    return s + "}";
  }

 private:
  static int check_n(int n) {
    if (n < 0) throw std::invalid_argument("VertexSet: negative universe");
    return n;
  }
  static size_t words(int n) { return static_cast<size_t>((n + 63) / 64); }
  static int same_universe(const VertexSet& a, const VertexSet& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("VertexSet: universe mismatch");
    return a.n_;
  }
  void range_check(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("VertexSet: vertex out of range");
  }

  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

/// Subset of the 2n lift vertices, kept as its two halves. Left vertex v of
/// the lift is index v, right vertex u is index n+u.
struct LiftSet {
  VertexSet left;
  VertexSet right;
};

}  // namespace svx
