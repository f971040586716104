#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace skewbrace {

// Elements of every finite structure are dense indices 0..n-1; 0 is the identity.
using Elem = int;

// Subset of 0..universe-1 stored as a bitmask. Iteration and elements() are
// always in increasing order.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  ElementSet(std::size_t universe, std::initializer_list<Elem> elems) : ElementSet(universe) {
    for (Elem e : elems) insert(e);
  }
  ElementSet(std::size_t universe, std::span<const Elem> elems) : ElementSet(universe) {
    for (Elem e : elems) insert(e);
  }

  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<Elem>(i));
    return s;
  }
  static ElementSet zero(std::size_t universe) { return ElementSet(universe, {0}); }

  std::size_t universe() const { return universe_; }

  bool contains(Elem e) const {
    return (words_[static_cast<std::size_t>(e) >> 6] >> (static_cast<std::size_t>(e) & 63)) & 1U;
  }
  // Returns true when e was not yet present.
  bool insert(Elem e) {
    auto& w = words_[static_cast<std::size_t>(e) >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (static_cast<std::size_t>(e) & 63);
    if (w & bit) return false;
    w |= bit;
    return true;
  }
  void erase(Elem e) {
    words_[static_cast<std::size_t>(e) >> 6] &= ~(std::uint64_t{1} << (static_cast<std::size_t>(e) & 63));
  }

  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const { return size() == 0; }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        const int bit = std::countr_zero(w);
        f(static_cast<Elem>(wi * 64 + static_cast<std::size_t>(bit)));
        w &= w - 1;
      }
    }
  }

  std::vector<Elem> elements() const {
    std::vector<Elem> out;
    out.reserve(size());
    for_each([&](Elem e) { out.push_back(e); });
    return out;
  }

  bool is_subset_of(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  ElementSet operator&(const ElementSet& o) const {
    ElementSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }
  ElementSet operator|(const ElementSet& o) const {
    ElementSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] |= o.words_[i];
    return r;
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  std::span<const std::uint64_t> words() const { return words_; }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// Order used for every sorted listing: size first, then lexicographic on the
// increasing element lists.
inline bool size_lex_less(const ElementSet& a, const ElementSet& b) {
  const auto sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  return a.elements() < b.elements();
}

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const {
    std::size_t h = s.universe();
    for (auto w : s.words()) h = h * 0x9E3779B97F4A7C15ULL ^ (w + (h << 6) + (h >> 2));
    return h;
  }
};

std::ostream& operator<<(std::ostream& os, const ElementSet& s);

}  // namespace skewbrace
