#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

// Truncated single-site (and two-site) boson number bases and dense matrix
// representations of the ladder operators and the HP square-root factor.

namespace tafm {

using Complex = std::complex<double>;

/// Truncated boson number basis {|0>, ..., |D-1>} per site, one or two sites.
/// The physical subspace is the set of states with every site occupation at
/// most 2S; identities of the HP representation hold exactly there.
class FockSpace {
 public:
  FockSpace(double spin, int dim, int n_sites = 1)
      : spin_(spin), dim_(dim), n_sites_(n_sites) {
    const double two_s = 2.0 * spin;
    if (!(spin > 0.0) || two_s != std::round(two_s))
      throw std::invalid_argument("FockSpace: spin must be a positive half-integer");
    if (dim < 2) throw std::invalid_argument("FockSpace: dim must be at least 2");
    if (n_sites < 1 || n_sites > 2)
      throw std::invalid_argument("FockSpace: n_sites must be 1 or 2");
  }

  double spin() const { return spin_; }
  int two_s() const { return static_cast<int>(std::llround(2.0 * spin_)); }
  int dim() const { return dim_; }
  int n_sites() const { return n_sites_; }
  int total_dim() const { return n_sites_ == 1 ? dim_ : dim_ * dim_; }

  /// Occupation of `site` encoded in basis state `index`; site 0 is the slow index.
  int occupation(int index, int site) const {
    if (site < 0 || site >= n_sites_)
      throw std::out_of_range("FockSpace: site index out of range");
    if (n_sites_ == 1) return index;
    return site == 0 ? index / dim_ : index % dim_;
  }

  bool is_physical(int index) const {
    for (int s = 0; s < n_sites_; ++s)
      if (occupation(index, s) > two_s()) return false;
    return true;
  }

  std::vector<int> physical_indices() const {
    std::vector<int> idx;
    for (int i = 0; i < total_dim(); ++i)
      if (is_physical(i)) idx.push_back(i);
    return idx;
  }

  friend bool operator==(const FockSpace&, const FockSpace&) = default;

 private:
  double spin_;
  int dim_;
  int n_sites_;
};

/// Dense complex matrix representation of an operator on a FockSpace.
/// Arithmetic is defined only between operators on the same space.
class OperatorMatrix {
 public:
  OperatorMatrix(FockSpace space, Eigen::MatrixXcd m)
      : space_(space), m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() != space_.total_dim())
      throw std::invalid_argument("OperatorMatrix: matrix does not match the space dimension");
  }

  static OperatorMatrix zero(const FockSpace& space) {
    return {space, Eigen::MatrixXcd::Zero(space.total_dim(), space.total_dim())};
  }

  static OperatorMatrix identity(const FockSpace& space) {
    return {space, Eigen::MatrixXcd::Identity(space.total_dim(), space.total_dim())};
  }

  const FockSpace& space() const { return space_; }
  const Eigen::MatrixXcd& matrix() const { return m_; }
  Complex operator()(int i, int j) const { return m_(i, j); }

  OperatorMatrix adjoint() const { return {space_, m_.adjoint()}; }

  friend OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b) {
    require_same_space(a, b);
    return {a.space_, a.m_ + b.m_};
  }
  friend OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) {
    require_same_space(a, b);
    return {a.space_, a.m_ - b.m_};
  }
  friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
    require_same_space(a, b);
    return {a.space_, a.m_ * b.m_};
  }
  friend OperatorMatrix operator*(Complex s, const OperatorMatrix& a) {
    return {a.space_, s * a.m_};
  }
  friend OperatorMatrix operator*(double s, const OperatorMatrix& a) {
    return {a.space_, s * a.m_};
  }
  OperatorMatrix operator-() const { return {space_, -m_}; }

 private:
  static void require_same_space(const OperatorMatrix& a, const OperatorMatrix& b) {
    if (!(a.space_ == b.space_))
      throw std::invalid_argument("OperatorMatrix: operands live on different spaces");
  }

  FockSpace space_;
  Eigen::MatrixXcd m_;
};

inline double max_abs(const Eigen::MatrixXcd& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}
inline double max_abs(const OperatorMatrix& op) { return max_abs(op.matrix()); }

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

namespace detail {

inline Eigen::MatrixXcd single_site_annihilator(int dim) {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

inline Eigen::MatrixXcd single_site_hp_root(double spin, int dim) {
  // sqrt(max(2S - n, 0)); the clamp confines truncation artifacts to n > 2S
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (int n = 0; n < dim; ++n)
    m(n, n) = std::sqrt(std::max(2.0 * spin - n, 0.0));
  return m;
}

inline Eigen::MatrixXcd embed(const FockSpace& space, int site, const Eigen::MatrixXcd& m) {
  if (site < 0 || site >= space.n_sites())
    throw std::out_of_range("embed: site index out of range");
  if (space.n_sites() == 1) return m;
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(space.dim(), space.dim());
  return site == 0 ? kron(m, id) : kron(id, m);
}

}  // namespace detail

/// a|n> = sqrt(n)|n-1> on `site`, identity on the other site.
inline OperatorMatrix annihilator(const FockSpace& space, int site) {
  return {space, detail::embed(space, site, detail::single_site_annihilator(space.dim()))};
}

inline OperatorMatrix creator(const FockSpace& space, int site) {
  return annihilator(space, site).adjoint();
}

inline OperatorMatrix number_op(const FockSpace& space, int site) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(space.dim(), space.dim());
  for (int n = 0; n < space.dim(); ++n) m(n, n) = static_cast<double>(n);
  return {space, detail::embed(space, site, m)};
}

/// Diagonal sqrt(max(2S - n, 0)) on `site`.
inline OperatorMatrix hp_root(const FockSpace& space, int site) {
  return {space, detail::embed(space, site, detail::single_site_hp_root(space.spin(), space.dim()))};
}

/// Compression of an operator to the physical subspace (occupations <= 2S).
inline Eigen::MatrixXcd physical_block(const OperatorMatrix& op) {
  const std::vector<int> idx = op.space().physical_indices();
  Eigen::MatrixXcd out(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j)
      out(i, j) = op.matrix()(idx[i], idx[j]);
  return out;
}

/// Max-abs-entry difference of two operators on the physical subspace.
inline double physical_deviation(const OperatorMatrix& a, const OperatorMatrix& b) {
  return max_abs(physical_block(a - b));
}

/// Max-abs-entry distance from the identity on the physical subspace.
inline double physical_identity_deviation(const OperatorMatrix& a) {
  const Eigen::MatrixXcd blk = physical_block(a);
  return max_abs(blk - Eigen::MatrixXcd::Identity(blk.rows(), blk.cols()));
}

}  // namespace tafm
