#include "submax/core.hpp"

namespace submax {

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  for (char c : s) {
    if (!(c == '-' || c == '/' || (c >= '0' && c <= '9')))
      throw std::invalid_argument("bad rational literal: " + s);
  }
  Rat q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

Rat rat_pow(const Rat& base, unsigned long e) {
  Rat out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
  out.canonicalize();
  return out;
}

Rat MarginalVec::sum() const {
  Rat s(0);
  for (const Rat& q : v_) s += q;
  return s;
}

Rat MarginalVec::sum_over(const SubsetMask& a) const {
  Rat s(0);
  a.for_each([&](ElementId u) { s += v_[u]; });
  return s;
}

Rat MarginalVec::max_coord() const {
  Rat m(0);
  for (const Rat& q : v_)
    if (q > m) m = q;
  return m;
}

bool MarginalVec::integral() const {
  for (const Rat& q : v_)
    if (q != 0 && q != 1) return false;
  return true;
}

SubsetMask MarginalVec::ones() const {
  SubsetMask m;
  for (size_t u = 0; u < v_.size(); ++u)
    if (v_[u] == 1) m.set(static_cast<ElementId>(u));
  return m;
}

SubsetMask MarginalVec::fractional() const {
  SubsetMask m;
  for (size_t u = 0; u < v_.size(); ++u)
    if (v_[u] != 0 && v_[u] != 1) m.set(static_cast<ElementId>(u));
  return m;
}

MarginalVec MarginalVec::psum(const MarginalVec& o) const {
  contract_check(size() == o.size(), "psum of marginal vectors of different length");
  MarginalVec out(size());
  for (int u = 0; u < size(); ++u) {
    Rat q = 1 - (1 - v_[u]) * (1 - o.v_[u]);
    out.set(static_cast<ElementId>(u), q);
  }
  return out;
}

SparseExtVec SparseExtVec::indicator(const SubsetMask& s) {
  SparseExtVec y;
  y.set(s, Rat(1));
  return y;
}

Rat SparseExtVec::get(const SubsetMask& s) const {
  auto it = e_.find(s);
  return it == e_.end() ? Rat(0) : it->second;
}

void SparseExtVec::set(const SubsetMask& s, const Rat& p) {
  contract_check(rat_in_unit(p), "extended coordinate outside [0,1]");
  auto it = e_.find(s);
  if (it != e_.end()) {
    supp_--;
    if (it->second != 1) ff_--;
    e_.erase(it);
  }
  if (s.empty() || p == 0) return;
  e_.emplace(s, p);
  supp_++;
  if (p != 1) ff_++;
}

SparseExtVec SparseExtVec::join_indicator(const SubsetMask& a) const {
  SparseExtVec out = *this;
  out.set(a, Rat(1));
  return out;
}

SparseExtVec SparseExtVec::psum(const SparseExtVec& z) const {
  SparseExtVec out = *this;
  for (const auto& [s, p] : z.e_) {
    Rat prev = out.get(s);
    out.set(s, 1 - (1 - prev) * (1 - p));
  }
  return out;
}

MarginalVec SparseExtVec::marginals(int n_total) const {
  // Track the complement product per element; most keys touch few elements.
  std::vector<Rat> prod(static_cast<size_t>(n_total), Rat(1));
  for (const auto& [s, p] : e_) {
    const Rat q = 1 - p;
    s.for_each([&](ElementId u) {
      contract_check(static_cast<int>(u) < n_total, "key element outside ground set");
      prod[u] *= q;
    });
  }
  MarginalVec out(n_total);
  for (int u = 0; u < n_total; ++u) out.set(static_cast<ElementId>(u), 1 - prod[u]);
  return out;
}

SubsetMask SparseExtVec::integral_union() const {
  SubsetMask m;
  for (const auto& [s, p] : e_)
    if (p == 1) m |= s;
  return m;
}

SparseExtVec indicator(const SubsetMask& s) { return SparseExtVec::indicator(s); }
SparseExtVec join_indicator(const SparseExtVec& y, const SubsetMask& a) {
  return y.join_indicator(a);
}
SparseExtVec psum(const SparseExtVec& y, const SparseExtVec& z) { return y.psum(z); }
MarginalVec marginals(const SparseExtVec& y, int n_total) { return y.marginals(n_total); }

}  // namespace submax
