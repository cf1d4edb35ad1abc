#pragma once

#include <cstddef>
#include <vector>

#include "nsag/groebner.hpp"

namespace nsag {

// rows x cols matrix of polynomials, read as a map K[z]^cols -> K[z]^rows.
template <class K>
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  // Throws kInvalidArgument when rows differ in length.
  static PolyMatrix from_rows(const std::vector<std::vector<Poly<K>>>& rows, std::size_t cols_if_empty = 0);
  static PolyMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Poly<K>& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Poly<K>& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  std::vector<PolyVector<K>> columns() const;
  bool is_zero() const;

  // Throws kInvalidArgument on a dimension mismatch.
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) { return multiply(a, b); }

 private:
  static PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b);

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Poly<K>> entries_;
};

using StdMatrix = PolyMatrix<GaussianRational>;
using ExtMatrix = PolyMatrix<LCNumber>;

ExtMatrix extend(const StdMatrix& m);

struct FlatnessWitness {
  SyzygyBasis<GaussianRational> basis;
  // x = sum r_i * basis.generators[i].
  std::vector<ExtPoly> r;
};

// Expresses an extended solution x of sum a_i x_i = 0 through the standard
// solution module. Throws kNotASolution, kInvalidArgument on length mismatch.
FlatnessWitness flatness_witness(const std::vector<StdPoly>& a, const std::vector<ExtPoly>& x);

struct KernelExtensionReport {
  std::vector<PolyVector<GaussianRational>> standard_kernel;
  std::vector<PolyVector<LCNumber>> extended_kernel;
  bool standard_in_extended = false;
  bool extended_in_standard = false;
  bool pass = false;
};

KernelExtensionReport kernel_extension_check(const StdMatrix& A);

struct ExactnessReport {
  bool standard_exact = false;
  bool extended_exact = false;
  bool agree = false;
};

// Is im A = ker B, over both domains. Throws kNotAComplex unless B*A = 0,
// kInvalidArgument when B.cols != A.rows.
ExactnessReport exactness_transfer_check(const StdMatrix& A, const StdMatrix& B);

struct TensorIsoReport {
  // Generators of the extended module are images of standard generators.
  bool surjective = true;
  KernelExtensionReport kernel;
  // Cofactors writing each extended kernel generator through the standard ones.
  std::vector<std::vector<ExtPoly>> witnesses;
  bool pass = false;
};

// M = coker P.
TensorIsoReport tensor_iso_check(const StdMatrix& P);

}  // namespace nsag
