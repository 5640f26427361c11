#ifndef CRYSTAL_DETAIL_EIGEN_TRAITS_HPP
#define CRYSTAL_DETAIL_EIGEN_TRAITS_HPP

#include <Eigen/Core>

namespace Eigen {

template <>
struct NumTraits<crystal::Zp> : GenericNumTraits<crystal::Zp> {
  using Real = crystal::Zp;
  using NonInteger = crystal::Zp;
  using Nested = crystal::Zp;
  using Literal = crystal::Zp;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 2,
  };
  // Only consulted when a matrix is streamed; elements print exactly.
  static int digits10() { return 0; }
};

template <>
struct NumTraits<crystal::Fq> : GenericNumTraits<crystal::Fq> {
  using Real = crystal::Fq;
  using NonInteger = crystal::Fq;
  using Nested = crystal::Fq;
  using Literal = crystal::Fq;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 8,
    MulCost = 32,
  };
  // Only consulted when a matrix is streamed; elements print exactly.
  static int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // CRYSTAL_DETAIL_EIGEN_TRAITS_HPP
