#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

#include "cardmetric/error.hpp"

namespace cardmetric {

/// A self-map of an indexed finite vertex set (the elements of a group, or
/// the vertices of a table or digraph), stored as its image array. Equality
/// is pointwise; the flags are informational.
struct GroupMap {
  std::vector<std::size_t> image;
  bool bijective = false;
  bool homomorphism = false;

  GroupMap() = default;
  explicit GroupMap(std::vector<std::size_t> img, bool is_hom = false)
      : image(std::move(img)), bijective(check_bijective(image)), homomorphism(is_hom) {}

  static GroupMap identity(std::size_t n) {
    std::vector<std::size_t> img(n);
    std::iota(img.begin(), img.end(), std::size_t{0});
    return GroupMap(std::move(img), true);
  }

  std::size_t size() const { return image.size(); }
  std::size_t operator()(std::size_t x) const { return image[x]; }

  /// x ↦ outer(inner(x)).
  friend GroupMap after(const GroupMap& outer, const GroupMap& inner) {
    if (outer.size() != inner.size()) throw DimensionMismatch("map sizes differ");
    std::vector<std::size_t> img(inner.size());
    for (std::size_t x = 0; x < img.size(); ++x) img[x] = outer.image[inner.image[x]];
    return GroupMap(std::move(img), outer.homomorphism && inner.homomorphism);
  }

  GroupMap inverse() const {
    if (!bijective) throw Error("map is not bijective");
    std::vector<std::size_t> img(size());
    for (std::size_t x = 0; x < size(); ++x) img[image[x]] = x;
    return GroupMap(std::move(img), homomorphism);
  }

  friend bool operator==(const GroupMap& a, const GroupMap& b) { return a.image == b.image; }
  friend bool operator<(const GroupMap& a, const GroupMap& b) { return a.image < b.image; }

  static bool check_bijective(const std::vector<std::size_t>& img) {
    std::vector<bool> hit(img.size(), false);
    for (auto y : img) {
      if (y >= img.size() || hit[y]) return false;
      hit[y] = true;
    }
    return true;
  }
};

}  // namespace cardmetric
