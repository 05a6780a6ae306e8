#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/container_hash/hash.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "cardmetric/error.hpp"

namespace cardmetric {

using Integer = boost::multiprecision::cpp_int;

/// Bijection of {0, ..., n-1} stored as its image array.
class Permutation {
 public:
  using point_type = std::uint32_t;

  Permutation() = default;

  /// Identity of the given degree.
  explicit Permutation(std::size_t degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), point_type{0});
  }

  /// Throws Error unless `images` is a bijection on {0..n-1}.
  explicit Permutation(std::vector<point_type> images)
      : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (auto p : images_) {
      if (p >= images_.size() || seen[p])
        throw Error("image array is not a bijection");
      seen[p] = true;
    }
  }

  std::size_t degree() const { return images_.size(); }
  point_type operator[](std::size_t x) const { return images_[x]; }
  const std::vector<point_type>& images() const { return images_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  /// Apply `*this` first, then `rhs`.
  Permutation then(const Permutation& rhs) const {
    if (rhs.degree() != degree())
      throw BackendMismatch("permutation degrees differ");
    Permutation out;
    out.images_.resize(degree());
    for (std::size_t i = 0; i < degree(); ++i) out.images_[i] = rhs.images_[images_[i]];
    return out;
  }

  Permutation inverse() const {
    Permutation out;
    out.images_.resize(degree());
    for (std::size_t i = 0; i < degree(); ++i)
      out.images_[images_[i]] = static_cast<point_type>(i);
    return out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.images_ < b.images_;
  }

 private:
  std::vector<point_type> images_;
};

/// Point of the integer lattice ℤ^k with exact coordinates.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t rank) : coords_(rank) {}
  explicit LatticeVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}
  LatticeVector(std::initializer_list<long long> coords) {
    for (auto c : coords) coords_.emplace_back(c);
  }

  std::size_t rank() const { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Integer>& coords() const { return coords_; }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(),
                       [](const Integer& c) { return c == 0; });
  }

  LatticeVector operator+(const LatticeVector& rhs) const {
    if (rhs.rank() != rank()) throw BackendMismatch("lattice ranks differ");
    LatticeVector out(*this);
    for (std::size_t i = 0; i < rank(); ++i) out.coords_[i] += rhs.coords_[i];
    return out;
  }

  LatticeVector operator-() const {
    LatticeVector out(*this);
    for (auto& c : out.coords_) c = -c;
    return out;
  }

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  friend bool operator<(const LatticeVector& a, const LatticeVector& b) {
    return a.coords_ < b.coords_;
  }

 private:
  std::vector<Integer> coords_;
};

enum class Backend { permutation, free_abelian };

/// A group element: either a permutation or a lattice vector. Which group
/// it belongs to is decided by the GeneratedGroup that interprets it.
class Element {
 public:
  Element() : payload_(Permutation{}) {}
  Element(Permutation p) : payload_(std::move(p)) {}
  Element(LatticeVector v) : payload_(std::move(v)) {}

  Backend backend() const {
    return payload_.index() == 0 ? Backend::permutation : Backend::free_abelian;
  }
  bool is_permutation() const { return payload_.index() == 0; }

  const Permutation& permutation() const {
    if (auto* p = std::get_if<Permutation>(&payload_)) return *p;
    throw BackendMismatch("element is not a permutation");
  }

  const LatticeVector& vector() const {
    if (auto* v = std::get_if<LatticeVector>(&payload_)) return *v;
    throw BackendMismatch("element is not a lattice vector");
  }

  /// Degree for permutations, rank for vectors.
  std::size_t dimension() const {
    return is_permutation() ? permutation().degree() : vector().rank();
  }

  bool is_identity() const {
    return is_permutation() ? permutation().is_identity() : vector().is_zero();
  }

  friend bool operator==(const Element&, const Element&) = default;
  friend bool operator<(const Element& a, const Element& b) {
    return a.payload_ < b.payload_;
  }

 private:
  std::variant<Permutation, LatticeVector> payload_;
};

/// Group operation on bare elements: permutations compose left factor
/// first, vectors add.
inline Element multiply(const Element& a, const Element& b) {
  if (a.backend() != b.backend()) throw BackendMismatch("element backends differ");
  if (a.is_permutation()) return a.permutation().then(b.permutation());
  return a.vector() + b.vector();
}

inline Element invert(const Element& a) {
  if (a.is_permutation()) return a.permutation().inverse();
  return -a.vector();
}

}  // namespace cardmetric

template <>
struct std::hash<cardmetric::Permutation> {
  std::size_t operator()(const cardmetric::Permutation& p) const {
    return boost::hash_range(p.images().begin(), p.images().end());
  }
};

template <>
struct std::hash<cardmetric::LatticeVector> {
  std::size_t operator()(const cardmetric::LatticeVector& v) const {
    std::size_t seed = v.rank();
    for (const auto& c : v.coords()) boost::hash_combine(seed, boost::multiprecision::hash_value(c));
    return seed;
  }
};

template <>
struct std::hash<cardmetric::Element> {
  std::size_t operator()(const cardmetric::Element& e) const {
    return e.is_permutation() ? std::hash<cardmetric::Permutation>{}(e.permutation())
                              : ~std::hash<cardmetric::LatticeVector>{}(e.vector());
  }
};
