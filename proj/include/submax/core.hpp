#pragma once

#include <map>
#include <vector>

#include "submax/errors.hpp"
#include "submax/mask.hpp"
#include "submax/rational.hpp"

namespace submax {

// Per-element vector over the (dummy-augmented) ground set; coordinates are
// exact rationals in [0,1].
class MarginalVec {
 public:
  MarginalVec() = default;
  explicit MarginalVec(int n) : v_(static_cast<size_t>(n), Rat(0)) {}

  int size() const { return static_cast<int>(v_.size()); }
  const Rat& operator[](ElementId u) const { return v_[u]; }

  void set(ElementId u, const Rat& p) {
    contract_check(rat_in_unit(p), "marginal coordinate outside [0,1]");
    v_[u] = p;
  }

  Rat sum() const;
  Rat sum_over(const SubsetMask& a) const;
  Rat max_coord() const;  // infinity norm (coordinates are non-negative)
  bool integral() const;
  SubsetMask ones() const;
  SubsetMask fractional() const;

  // Coordinate-wise probabilistic sum: 1 - (1-a)(1-b).
  MarginalVec psum(const MarginalVec& o) const;

  friend bool operator==(const MarginalVec& a, const MarginalVec& b) { return a.v_ == b.v_; }

 private:
  std::vector<Rat> v_;
};

// Sparse vector indexed by subsets of the ground set: only nonzero
// coordinates are stored and the empty set is never a key. Stored values lie
// in (0,1]. supp() counts stored entries, ff() the strictly fractional ones.
class SparseExtVec {
 public:
  using Map = std::map<SubsetMask, Rat>;

  static SparseExtVec zero() { return SparseExtVec(); }

  // One coordinate set to 1; the empty set yields the zero vector.
  static SparseExtVec indicator(const SubsetMask& s);

  Rat get(const SubsetMask& s) const;

  // Assigning zero erases the entry; assigning to the empty-set key is a
  // no-op (that coordinate never affects values or marginals).
  void set(const SubsetMask& s, const Rat& p);

  // Coordinate A forced to 1, all others unchanged.
  SparseExtVec join_indicator(const SubsetMask& a) const;

  // Coordinate-wise probabilistic sum; entries with identical keys coalesce.
  SparseExtVec psum(const SparseExtVec& z) const;

  // marg_u = 1 - prod_{S contains u} (1 - y_S).
  MarginalVec marginals(int n_total) const;

  int supp() const { return supp_; }
  int ff() const { return ff_; }

  const Map& entries() const { return e_; }
  bool is_zero() const { return e_.empty(); }
  bool integral() const { return ff_ == 0; }

  // Union of keys with value exactly 1.
  SubsetMask integral_union() const;

  friend bool operator==(const SparseExtVec& a, const SparseExtVec& b) { return a.e_ == b.e_; }

 private:
  Map e_;
  int supp_ = 0;
  int ff_ = 0;
};

// Building blocks used by every algorithm.
SparseExtVec indicator(const SubsetMask& s);
SparseExtVec join_indicator(const SparseExtVec& y, const SubsetMask& a);
SparseExtVec psum(const SparseExtVec& y, const SparseExtVec& z);
MarginalVec marginals(const SparseExtVec& y, int n_total);

}  // namespace submax
