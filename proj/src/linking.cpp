#include "skein/linking.hpp"

#include <numeric>
#include <stdexcept>

namespace skein {

RhsData RhsData::sphere() { return RhsData{{}, Mat<Frac>(0, 0)}; }

i64 RhsData::annihilator() const {
  i64 r = 1;
  for (i64 n : torsion) r = std::lcm(r, n);
  return r;
}

void RhsData::validate() const {
  const i64 k = static_cast<i64>(torsion.size());
  for (i64 n : torsion)
    if (n < 3 || n % 2 == 0)
      throw std::invalid_argument("RhsData.torsion: orders must be odd integers >= 3, got " + std::to_string(n));
  if (lf.rows() != k || lf.cols() != k)
    throw std::invalid_argument("RhsData.lf: expected a " + std::to_string(k) + "x" + std::to_string(k) + " matrix");
  const i64 r = annihilator();
  for (i64 i = 0; i < k; ++i) {
    for (i64 j = 0; j < k; ++j) {
      Frac f = lf(i, j);
      if (!(f == lf(j, i))) throw std::invalid_argument("RhsData.lf: matrix must be symmetric");
      if (f.num < 0 || f.num >= f.den)
        throw std::invalid_argument("RhsData.lf[" + std::to_string(i) + "][" + std::to_string(j) +
                                    "]: value must lie in [0,1)");
      if (f.den % 2 == 0 || r % f.den != 0)
        throw std::invalid_argument("RhsData.lf[" + std::to_string(i) + "][" + std::to_string(j) +
                                    "]: denominator must be odd and divide r = " + std::to_string(r));
      if (torsion[i] % f.den != 0 || torsion[j] % f.den != 0)
        throw std::invalid_argument("RhsData.lf[" + std::to_string(i) + "][" + std::to_string(j) +
                                    "]: n_i*lf and n_j*lf must vanish mod Z");
    }
  }
}

Mat<QuarterFrac> lift_linking_form(const RhsData& data) {
  data.validate();
  const i64 k = static_cast<i64>(data.torsion.size());
  Mat<QuarterFrac> out(k, k);
  for (i64 i = 0; i < k; ++i) {
    for (i64 j = 0; j < k; ++j) {
      Frac f = data.lf(i, j);
      // l odd, so l is its own inverse mod 4; delta = -k*l mod 4
      i64 delta = ((-(f.num % 4) * (f.den % 4)) % 4 + 4) % 4;
      out(i, j) = QuarterFrac(f.num + delta * f.den, f.den);
    }
  }
  return out;
}

QuarterFrac lf_hat(const Mat<QuarterFrac>& lift, const std::vector<i64>& a, const std::vector<i64>& b) {
  if (static_cast<i64>(a.size()) != lift.rows() || static_cast<i64>(b.size()) != lift.rows())
    throw std::invalid_argument("lf_hat: class length does not match torsion rank");
  QuarterFrac total(0, 1);
  for (i64 i = 0; i < lift.rows(); ++i)
    for (i64 j = 0; j < lift.cols(); ++j)
      total = total + (a[i] * b[j]) * lift(i, j);
  return total;
}

Frac lf_value(const RhsData& data, const std::vector<i64>& a, const std::vector<i64>& b) {
  Frac total(0);
  for (i64 i = 0; i < data.lf.rows(); ++i)
    for (i64 j = 0; j < data.lf.cols(); ++j)
      total = total + Frac(a[i] * b[j]) * data.lf(i, j);
  return total.mod_one();
}

void validate_homlink(const RhsData& data, const HomLink& link) {
  data.validate();
  const i64 k = static_cast<i64>(data.torsion.size());
  const i64 n = static_cast<i64>(link.components.size());
  if (link.lk.rows() != n || link.lk.cols() != n)
    throw std::invalid_argument("HomLink.lk: expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  const i64 r = data.annihilator();
  for (i64 i = 0; i < n; ++i) {
    const auto& comp = link.components[i];
    if (static_cast<i64>(comp.hom_class.size()) != k)
      throw std::invalid_argument("HomLink.components[" + std::to_string(i) + "].class: expected " +
                                  std::to_string(k) + " residues");
    for (i64 t = 0; t < k; ++t)
      if (comp.hom_class[t] < 0 || comp.hom_class[t] >= data.torsion[t])
        throw std::invalid_argument("HomLink.components[" + std::to_string(i) + "].class: residue out of range");
    if (r % comp.frame.den != 0)
      throw std::invalid_argument("HomLink.components[" + std::to_string(i) + "].frame: denominator must divide r");
    if (!(comp.frame.mod_one() == lf_value(data, comp.hom_class, comp.hom_class)))
      throw std::invalid_argument("HomLink.components[" + std::to_string(i) +
                                  "].frame: incompatible with the linking form mod Z");
  }
  for (i64 i = 0; i < n; ++i) {
    for (i64 j = 0; j < n; ++j) {
      Frac v = link.lk(i, j);
      if (!(v == link.lk(j, i))) throw std::invalid_argument("HomLink.lk: matrix must be symmetric");
      if (i == j) {
        if (!(v == Frac(0))) throw std::invalid_argument("HomLink.lk: diagonal must be zero (frames carry it)");
        continue;
      }
      if (r % v.den != 0)
        throw std::invalid_argument("HomLink.lk[" + std::to_string(i) + "][" + std::to_string(j) +
                                    "]: denominator must divide r");
      if (!(v.mod_one() == lf_value(data, link.components[i].hom_class, link.components[j].hom_class)))
        throw std::invalid_argument("HomLink.lk[" + std::to_string(i) + "][" + std::to_string(j) +
                                    "]: incompatible with the linking form mod Z");
    }
  }
}

Z4 d_case1(const RhsData& data, const HomLink& link, int i, int j) {
  if (i == j) throw std::invalid_argument("d_case1: components must be distinct");
  validate_homlink(data, link);
  Mat<QuarterFrac> lift = lift_linking_form(data);
  QuarterFrac v = lf_hat(lift, link.components[i].hom_class, link.components[j].hom_class) -
                  QuarterFrac(link.lk(i, j));
  return v.as_z4();
}

Z4 D_case1(const RhsData& data, const HomLink& link, int i) {
  validate_homlink(data, link);
  Mat<QuarterFrac> lift = lift_linking_form(data);
  QuarterFrac v = lf_hat(lift, link.components[i].hom_class, link.components[i].hom_class) -
                  QuarterFrac(link.components[i].frame);
  return v.as_z4();
}

Z4 split_d(const RhsData& data, const HomLink& link, std::uint32_t splitting) {
  validate_homlink(data, link);
  const int n = static_cast<int>(link.components.size());
  if (n > 31) throw std::invalid_argument("split_d: too many components");
  Mat<QuarterFrac> lift = lift_linking_form(data);

  // Doubled link: copies 2i and 2i+1 of component i, both in class [K_i].
  // Parallel copies of distinct components link like the originals; the two
  // copies of one component link by its frame.
  auto doubled_lk = [&](int a, int b) -> Frac {
    int ca = a >> 1, cb = b >> 1;
    if (ca != cb) return link.lk(ca, cb);
    if ((a & 1) != (b & 1)) return link.components[ca].frame;
    return Frac(0);
  };

  // Bit i of the mask picks which copy of component i joins boundary_+.
  std::vector<int> plus, minus;
  for (int i = 0; i < n; ++i) {
    int bit = static_cast<int>((splitting >> i) & 1u);
    plus.push_back(2 * i + bit);
    minus.push_back(2 * i + (1 - bit));
  }

  const size_t k = data.torsion.size();
  std::vector<i64> cls_plus(k, 0), cls_minus(k, 0);
  for (int a : plus)
    for (size_t t = 0; t < k; ++t) cls_plus[t] += link.components[a >> 1].hom_class[t];
  for (int b : minus)
    for (size_t t = 0; t < k; ++t) cls_minus[t] += link.components[b >> 1].hom_class[t];

  QuarterFrac value = lf_hat(lift, cls_plus, cls_minus);
  Frac lk_sum(0);
  for (int a : plus)
    for (int b : minus) lk_sum = lk_sum + doubled_lk(a, b);
  return (value - QuarterFrac(lk_sum)).as_z4();
}

}  // namespace skein
