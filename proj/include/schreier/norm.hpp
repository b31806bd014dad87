#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "schreier/family.hpp"
#include "schreier/rational.hpp"
#include "schreier/sparse_vec.hpp"

namespace schreier {

/// Family and damping constant of a Tsirelson-type norm ||.||_{F,c}.
struct NormParams {
  Family family;
  Rational c;

  /// Throws DomainError unless 0 < c < 1.
  static NormParams make(Family family, Rational c);
  /// T_{alpha,c}: the Schreier family S_alpha with parameter c.
  static NormParams tsirelson(const Ordinal& alpha, Rational c = Rational(1, 2));

  /// Stable key text, e.g. `schreier(1)@1/2`.
  std::string key() const;
};

/// One node of a partition tree. A leaf evaluates to |x_leaf|; an internal
/// node evaluates to c times the sum of its children, whose blocks (each
/// joined with its anchor) form an admissible decomposition.
struct CertNode {
  FinSet block;                 // support indices of x covered by this node
  Index anchor = 0;             // minimum of the admissible set; 0 at the root
  Rational value;
  std::optional<Index> leaf;
  std::vector<CertNode> children;

  std::size_t depth() const;
};

using PartitionCert = CertNode;

struct NormResult {
  Rational value;
  PartitionCert cert;
};

struct NormOptions {
  Index support_cap = 64;  // largest admissible index in supp(x)
};

/// The least norm satisfying
///   ||x|| = max(||x||_inf, c * sup sum_i ||A_i x||),  (A_i) F-admissible,
/// computed exactly. Blocks are reduced to intervals of supp(x) (enlarging a
/// block up to the next minimum never lowers the sum) and the dynamic
/// programme runs over (position, residual family of chosen minima).
/// Spreading families place every minimum on a support point; other
/// families try every integer in the gap before the block.
/// Throws BudgetExceeded when supp(x) leaves [1..support_cap].
NormResult norm(const NormParams& params, const SparseVec& x, const NormOptions& opts = {});

inline Rational norm_value(const NormParams& params, const SparseVec& x, const NormOptions& opts = {}) {
  return norm(params, x, opts).value;
}

class CertificateError : public std::runtime_error {
 public:
  CertificateError(const std::string& path, const std::string& what)
      : std::runtime_error("certificate node " + path + ": " + what), path_(path) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// Re-evaluates `cert` bottom-up, checking admissibility of every internal
/// node with is_admissible. Returns the certified value (a lower bound for
/// the norm); throws CertificateError at the first invalid node.
Rational verify_certificate(const NormParams& params, const SparseVec& x, const PartitionCert& cert);

}  // namespace schreier
