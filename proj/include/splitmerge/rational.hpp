#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <string>

namespace splitmerge {

using Integer = mpz_class;
using Rational = mpq_class;

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

inline Rational rational_abs(const Rational& q) {
  Rational r;
  mpq_abs(r.get_mpq_t(), q.get_mpq_t());
  return r;
}

// q^k for k >= 0, exact.
inline Rational rational_pow(const Rational& q, unsigned long k) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), k);
  mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), k);
  r.canonicalize();
  return r;
}

inline std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace splitmerge

namespace Eigen {

// mpq_class as an Eigen scalar, so kernels and distributions can live in
// dense Eigen types while staying exact.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen
