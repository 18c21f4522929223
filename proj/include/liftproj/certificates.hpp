#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "liftproj/cylinders.hpp"
#include "liftproj/matrices.hpp"
#include "liftproj/moments.hpp"
#include "liftproj/polytopes.hpp"

namespace liftproj {

/// Lifted matrix over the cylinder family A_k witnessing membership in the
/// level-k semidefinite strengthening of the Sherali-Adams relaxation.
struct SaPlusCertificate {
  int n = 0;
  int k = 0;
  IndexFamily family;
  SymMatrix Y;
};

/// Lifted matrix over A_{k+1}^+ together with the exact inequality system
/// its localizers are built from.
struct LasCertificate {
  int n = 0;
  int k = 0;
  IndexFamily family;
  SymMatrix Y;
  LinearDescription desc;
};

struct ConditionRecord {
  std::string name;
  bool pass = true;
  double worst = 0.0;     // largest violation magnitude observed
  std::string offender;   // index tuple of the worst violation
};

struct CertificateReport {
  bool pass = false;
  std::vector<ConditionRecord> conditions;

  const ConditionRecord* find(const std::string& name) const;
  std::vector<std::string> failed_names() const;
  /// Name of the condition with the largest violation among failures.
  std::string worst_failure() const;
};

CertificateReport check_sa_plus(const SaPlusCertificate& cert, const LinearDescription& desc,
                                double tol = kPsdTol);

/// Level-(n-1) certificate projecting to (1 - rho/(n rho + 1 - rho)) e.
SaPlusCertificate build_sa_plus_prop3(int n, double rho);

/// Level-k certificate from the affine moment ansatz, assembled by the
/// inclusion-exclusion congruence; projects to
/// ((n-k+(k-1)rho)/(n-k+k rho)) e.
SaPlusCertificate build_sa_plus_thm13(int n, double rho, int k);

CertificateReport check_las(const LasCertificate& cert, double tol = kPsdTol);

/// Y = M_n(bernoulli(theta)) over the chipped description.
LasCertificate build_las_chipped(int n, double theta, double rho);

/// Y = M_{k+1}(bernoulli(1/2)) over the cropped description.
LasCertificate build_las_cropped(int n, int k, double rho);

/// Certificate transport along a hypercube automorphism: index relabeling
/// for coordinate swaps, inclusion-exclusion congruence for flips.
LasCertificate transport_las(const LasCertificate& cert, const Automorphism& g);

/// Projected point (Y[F, 1|1], ..., Y[F, n|1]).
std::vector<double> projected_point(const SaPlusCertificate& cert);
std::vector<double> projected_point(const LasCertificate& cert);

/// Copy of x with entries in I set to 1 and entries in J set to 0.
std::vector<double> xij(std::span<const double> x, SubsetId I, SubsetId J);

/// Indices with 0 < x_i < 1.
SubsetId support_fractional(std::span<const double> x);

/// Sufficient membership test for the level-k relaxation: checks x^I_J in P
/// for every disjoint I, J inside the fractional support with |I|+|J| <= k.
bool sa_plus_sufficient(const LinearDescription& desc, std::span<const double> x, int k);

/// max{theta : theta*e is in the level-k integral-on-k-subsets relaxation}
/// for the chipped hypercube, by exact 2-D hull geometry.
double tilde_ls_max_symmetric(int n, double rho, int k);

/// Disjunctive-LP membership oracle.  With the shortcut (valid only for a
/// coordinate-symmetric description and x proportional to e) a single
/// index set is tested.
bool tilde_ls_membership_lp(const LinearDescription& desc, std::span<const double> x, int k,
                            bool symmetric_shortcut = false);

struct Obstruction {
  SubsetId members = 0;
  int source_ineq = 0;     // index into the description's inequality list
  bool small_branch = true;  // |O| <= k+1; otherwise |O| >= |supp(a)|-(k+1)
};

/// Exhaustive scan of the non-box cut system (which must be nonnegative
/// with positive right-hand sides in the <= orientation).
std::vector<Obstruction> enumerate_obstructions(const LinearDescription& desc, int k);

/// Appends the cut sum_{i in O} x_i <= |O|-1 for every obstruction.
LinearDescription refined_polytope(const LinearDescription& desc, int k);

// Closed-form rank statements.
int sa_plus_rank_upper(int n, double rho);   // n - ceil(rho) + 1
int sa_plus_rank_lower(int n, double rho);   // 1 + max{k : k < n(ceil(rho)-rho)/ceil(rho)}
int tilde_ls_rank(int n, double rho);        // n for non-integer rho in (0, n-1)

struct BzBound {
  double rho_star = 0.0;
  int rank_lower = 0;
};
/// Parameter choice certifying the floor((sqrt(n)+1)/2) lower bound for
/// non-square n >= 5.
BzBound bz_lower(int n);

/// rho + k/2: the cropped hypercube after k rounds keeps its family shape.
double sa_plus_iterate_cropped(int n, double rho, int k);
/// Rank implied by the iteration formula (n for rho in (0, 1/2]).
int sa_plus_rank_cropped(int n, double rho);

// Certificate file format: `operator level n`, one `ones zeros` line per
// family element, then the dense matrix CSV.
void write_certificate(std::ostream& os, const SaPlusCertificate& cert);
void write_certificate(std::ostream& os, const LasCertificate& cert);

struct StoredCertificate {
  std::string op;  // "sa-plus" or "las"
  int k = 0;
  int n = 0;
  SymMatrix Y;
};
StoredCertificate read_certificate(std::istream& is);

}  // namespace liftproj
