#ifndef AFCOUNT_ARGSET_HPP
#define AFCOUNT_ARGSET_HPP

#include <cstdint>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace afc {

// Fixed-width bit set over the argument indices of one framework.
// All sets taking part in an operation must share the same universe size.
class ArgSet {
public:
  ArgSet() = default;
  explicit ArgSet(int universe) : nbits_(universe), w_((universe + 63) / 64, 0) {}
  ArgSet(int universe, std::initializer_list<int> bits) : ArgSet(universe) {
    for (int b : bits) set(b);
  }

  int universe() const { return nbits_; }

  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
  void clear() { for (auto& w : w_) w = 0; }

  bool any() const {
    for (auto w : w_) if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  int count() const {
    int c = 0;
    for (auto w : w_) c += __builtin_popcountll(w);
    return c;
  }

  ArgSet& operator|=(const ArgSet& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  ArgSet& operator&=(const ArgSet& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  // set difference: *this \ o
  ArgSet& operator-=(const ArgSet& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend ArgSet operator|(ArgSet a, const ArgSet& b) { return a |= b; }
  friend ArgSet operator&(ArgSet a, const ArgSet& b) { return a &= b; }
  friend ArgSet operator-(ArgSet a, const ArgSet& b) { return a -= b; }

  ArgSet plus(int i) const { ArgSet r = *this; r.set(i); return r; }
  ArgSet minus(int i) const { ArgSet r = *this; r.reset(i); return r; }

  bool subset_of(const ArgSet& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  bool intersects(const ArgSet& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  bool operator==(const ArgSet& o) const { return w_ == o.w_; }
  bool operator!=(const ArgSet& o) const { return w_ != o.w_; }

  // Orders sets by their value as an unsigned integer (bit i has weight 2^i),
  // which is the enumeration order used by the oracle.
  bool operator<(const ArgSet& o) const {
    for (size_t i = w_.size(); i-- > 0;)
      if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
    return false;
  }

  template <typename F>
  void for_each(F f) const {
    for (size_t i = 0; i < w_.size(); ++i) {
      uint64_t w = w_[i];
      while (w) {
        int b = __builtin_ctzll(w);
        f(int(i * 64 + b));
        w &= w - 1;
      }
    }
  }

  std::vector<int> bits() const {
    std::vector<int> r;
    for_each([&](int i) { r.push_back(i); });
    return r;
  }

  size_t hash() const {
    size_t h = 0xcbf29ce484222325ull;
    for (auto w : w_) h = (h ^ w) * 0x100000001b3ull;
    return h;
  }

private:
  int nbits_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace afc

template <>
struct std::hash<afc::ArgSet> {
  size_t operator()(const afc::ArgSet& s) const { return s.hash(); }
};

#endif
