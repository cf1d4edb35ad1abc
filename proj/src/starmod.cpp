#include "nsag/starmod.hpp"

#include "nsag/errors.hpp"
#include "nsag/polyring.hpp"

namespace nsag {

template <class K>
PolyMatrix<K> PolyMatrix<K>::from_rows(const std::vector<std::vector<Poly<K>>>& rows, std::size_t cols_if_empty) {
  const std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
  PolyMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw AlgebraError(ErrorCode::kInvalidArgument, "matrix rows differ in length");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

template <class K>
PolyMatrix<K> PolyMatrix<K>::identity(std::size_t n) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Poly<K>::constant(K(1));
  return m;
}

template <class K>
std::vector<PolyVector<K>> PolyMatrix<K>::columns() const {
  std::vector<PolyVector<K>> out(cols_, PolyVector<K>(rows_));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[j][i] = at(i, j);
  }
  return out;
}

template <class K>
bool PolyMatrix<K>::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

template <class K>
PolyMatrix<K> PolyMatrix<K>::multiply(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw AlgebraError(ErrorCode::kInvalidArgument, "matrix dimensions do not match");
  PolyMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      Poly<K> s;
      for (std::size_t k = 0; k < a.cols_; ++k) s += a.at(i, k) * b.at(k, j);
      m.at(i, j) = std::move(s);
    }
  }
  return m;
}

template class PolyMatrix<GaussianRational>;
template class PolyMatrix<LCNumber>;

ExtMatrix extend(const StdMatrix& m) {
  ExtMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = extend(m.at(i, j));
  }
  return out;
}

namespace {

std::vector<PolyVector<LCNumber>> extend_all(const std::vector<PolyVector<GaussianRational>>& vs) {
  std::vector<PolyVector<LCNumber>> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(extend(v));
  return out;
}

template <class K>
bool all_members(const std::vector<PolyVector<K>>& vs, const std::vector<PolyVector<K>>& gens, std::size_t rank) {
  if (vs.empty()) return true;
  const auto basis = module_basis(gens, rank);
  for (const auto& v : vs) {
    if (!module_member(v, basis)) return false;
  }
  return true;
}

}  // namespace

FlatnessWitness flatness_witness(const std::vector<StdPoly>& a, const std::vector<ExtPoly>& x) {
  if (a.size() != x.size()) throw AlgebraError(ErrorCode::kInvalidArgument, "equation and solution differ in length");
  ExtPoly lhs;
  for (std::size_t i = 0; i < a.size(); ++i) lhs += extend(a[i]) * x[i];
  if (!lhs.is_zero()) throw AlgebraError(ErrorCode::kNotASolution, "sum a_i x_i = " + format_poly(lhs));
  FlatnessWitness out{syzygy_basis(a), {}};
  const auto combo = express_in(x, extend_all(out.basis.generators));
  if (!combo || !(combo->scale == LCNumber(1))) {
    throw AlgebraError(ErrorCode::kInvalidArgument, "solution is not a combination of standard syzygies");
  }
  out.r = combo->cofactors;
  return out;
}

KernelExtensionReport kernel_extension_check(const StdMatrix& A) {
  KernelExtensionReport r;
  r.standard_kernel = kernel_generators(A.columns(), A.rows());
  r.extended_kernel = kernel_generators(extend(A).columns(), A.rows());
  const auto lifted = extend_all(r.standard_kernel);
  r.standard_in_extended = all_members(lifted, r.extended_kernel, A.cols());
  r.extended_in_standard = all_members(r.extended_kernel, lifted, A.cols());
  r.pass = r.standard_in_extended && r.extended_in_standard;
  return r;
}

namespace {

template <class K>
bool is_exact(const PolyMatrix<K>& A, const PolyMatrix<K>& B) {
  const auto ker = kernel_generators(B.columns(), B.rows());
  return all_members(ker, A.columns(), A.rows());
}

}  // namespace

ExactnessReport exactness_transfer_check(const StdMatrix& A, const StdMatrix& B) {
  if (B.cols() != A.rows()) throw AlgebraError(ErrorCode::kInvalidArgument, "B.cols must equal A.rows");
  if (!(B * A).is_zero()) throw AlgebraError(ErrorCode::kNotAComplex, "B*A is not zero");
  ExactnessReport r;
  r.standard_exact = is_exact(A, B);
  r.extended_exact = is_exact(extend(A), extend(B));
  r.agree = r.standard_exact == r.extended_exact;
  return r;
}

TensorIsoReport tensor_iso_check(const StdMatrix& P) {
  TensorIsoReport r;
  r.kernel = kernel_extension_check(P);
  const auto lifted = extend_all(r.kernel.standard_kernel);
  bool found = true;
  for (const auto& v : r.kernel.extended_kernel) {
    const auto combo = express_in(v, lifted);
    if (!combo) {
      found = false;
      r.witnesses.emplace_back();
      continue;
    }
    found = found && combo->scale == LCNumber(1);
    r.witnesses.push_back(combo->cofactors);
  }
  r.pass = r.surjective && r.kernel.pass && found;
  return r;
}

}  // namespace nsag
