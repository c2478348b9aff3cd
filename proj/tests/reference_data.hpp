#pragma once

// Hand-entered matrices and closed-form states shared by the unit suites and
// the acceptance binary. Nothing here is computed by the library.

#include <initializer_list>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "spinlab/entanglement.hpp"

namespace refdata {

using namespace spinlab;
using oracle::exact;
using oracle::I;
using oracle::q;
using oracle::sqrt2;
using oracle::sqrt6;

// Hand-written spin-1, spin-2 and spin-1/2 matrices, independent of the ladder
// construction.
inline ExactMatrix photon(int a) {
  const QuadExt r = ef_inv(sqrt2());
  const QuadExt z;
  if (a == 1) return exact(3, {z, r, z, r, z, r, z, r, z});
  if (a == 2) {
    const QuadExt c = I() * r;
    return exact(3, {z, -c, z, c, z, -c, z, c, z});
  }
  return exact(3, {1, z, z, z, z, z, z, z, -1});
}

inline ExactMatrix graviton(int a) {
  const QuadExt h = sqrt6() * q(1, 2);
  const QuadExt z;
  if (a == 1)
    return exact(5, {z, 1, z, z, z,  //
                     1, z, h, z, z,  //
                     z, h, z, h, z,  //
                     z, z, h, z, 1,  //
                     z, z, z, 1, z});
  if (a == 2) {
    ExactMatrix inner = exact(5, {z, -1, z,  z,  z,   //
                                  1, z,  -h, z,  z,   //
                                  z, h,  z,  -h, z,   //
                                  z, z,  h,  z,  -1,  //
                                  z, z,  z,  1,  z});
    return I() * inner;
  }
  return exact(5, {2, z, z, z, z,  //
                   z, 1, z, z, z,  //
                   z, z, z, z, z,  //
                   z, z, z, -1, z,  //
                   z, z, z, z, -2});
}

inline ExactMatrix electron(int a) {
  const QuadExt h = q(1, 2);
  const QuadExt z;
  if (a == 1) return exact(2, {z, h, h, z});
  if (a == 2) return exact(2, {z, -(I() * h), I() * h, z});
  return exact(2, {h, z, z, -h});
}

using ExactVector = std::vector<QuadExt>;

inline ExactVector kron_exact(const ExactVector& a, const ExactVector& b) {
  ExactVector out;
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x * y);
  return out;
}

inline ExactVector unit(std::size_t n, std::initializer_list<std::pair<std::size_t, long>> entries) {
  ExactVector v(n);
  for (const auto& [k, x] : entries) v[k] = x;
  return v;
}

inline QuadExt norm2(const ExactVector& v) {
  QuadExt s;
  for (const auto& x : v) s += x * ef_conj(x);
  return s;
}

inline QuadExt inner_exact(const ExactVector& a, const ExactVector& b) {
  QuadExt s;
  for (std::size_t k = 0; k < a.size(); ++k) s += ef_conj(a[k]) * b[k];
  return s;
}

struct Term {
  QuadExt scale;
  ExactVector left;
  ExactVector right;
};

// Closed-form three-term decompositions of sqrt(24 (2 -/+ sqrt3)) w, one per
// cut, each as (scale, left, right) with the left factors in cut-sorted order.
inline std::vector<std::vector<Term>> known_decompositions(SqrtThreeBranch branch) {
  const QuadExt t = QuadExt::radical(QuadExt::kSqrt3, branch == SqrtThreeBranch::Plus ? 1 : -1);
  const QuadExt one_i = QuadExt(1) + I();
  const QuadExt a_i = (QuadExt(2) - t) * I();

  std::vector<Term> pair_graviton{
      {1, unit(9, {{0, 1}, {8, 1}}), ExactVector{0, 1, 0, -a_i, 0}},
      {1, unit(9, {{2, 1}, {6, 1}}), ExactVector{0, a_i, 0, -1, 0}},
      {(QuadExt(1) - t) * one_i, unit(9, {{4, 1}}), ExactVector{-1, 0, 0, 0, 1}},
  };
  std::vector<Term> first_photon{
      {1, ExactVector{0, (t - QuadExt(1)) * one_i, 0}, unit(15, {{1, 1}, {13, -1}})},
      {1, ExactVector{1, 0, a_i}, unit(15, {{3, 1}, {11, -1}})},
      {1, ExactVector{a_i, 0, 1}, unit(15, {{5, 1}, {9, -1}})},
  };
  std::vector<Term> second_photon{
      {1, unit(15, {{1, 1}, {13, -1}}), ExactVector{1, 0, a_i}},
      {1, unit(15, {{3, 1}, {11, -1}}), ExactVector{-a_i, 0, -1}},
      {1, unit(15, {{5, 1}, {9, -1}}), ExactVector{0, (t - QuadExt(1)) * one_i, 0}},
  };
  return {pair_graviton, first_photon, second_photon};
}

}  // namespace refdata
