#ifndef MIFTAH_MODEL_HPP_
#define MIFTAH_MODEL_HPP_

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "miftah/features.hpp"

namespace miftah {

// Ordered selection of features by canonical index (0 = x1 .. 7 = x8).
// The order is kept: it fixes the model's coordinate layout and the
// ANOVA accumulation order.
struct FeatureMask {
  std::vector<int> order;

  static FeatureMask all();
  // Parses "x5,x6,x2"; unknown or duplicate names are format errors.
  static FeatureMask parse(std::string_view spec);

  int dim() const { return static_cast<int>(order.size()); }
};

// Two-class linear discriminant with a shared, regularized pooled
// covariance. The serialized fields are the first block; the w_/c_
// caches are recomputed from them by finalize().
struct LdaModel {
  std::vector<std::string> feature_names;  // model coordinate order
  std::array<bool, kFeatureCount> mask{};  // membership per x1..x8
  std::vector<double> mu_yes;
  std::vector<double> mu_no;
  std::vector<double> pooled_cov;  // d*d row-major, unregularized
  double prior_yes = 0.0;
  double prior_no = 0.0;
  double epsilon = 1e-6;

  std::vector<double> cov_inv;  // inverse of the regularized covariance
  std::vector<double> w_yes, w_no;  // C^-1 mu_i
  double c_yes = 0.0, c_no = 0.0;   // -mu_i' C^-1 mu_i / 2 + ln p_i

  int dim() const { return static_cast<int>(feature_names.size()); }

  // Regularizes the pooled covariance, inverts it, and fills the
  // discriminant caches. Throws Error{kSingular} naming the offending
  // feature(s) when the regularized covariance is not positive
  // definite.
  void finalize();

  bool operator==(const LdaModel&) const = default;
};

struct TrainOptions {
  FeatureMask mask = FeatureMask::all();
  double epsilon = 1e-6;
};

// Fits class means, the pooled within-class covariance
// (sum of within-class squared deviations / (N - 2)), and priors from
// labeled vectors. Summation order is fixed, so training is
// deterministic. Throws Error{kDegenerate} when either class has fewer
// than 2 samples.
LdaModel train_lda(const std::vector<FeatureVector>& vectors,
                   const TrainOptions& options = {});

struct Discriminants {
  double f_yes = 0.0;
  double f_no = 0.0;
};

// f_i = mu_i' C^-1 x - mu_i' C^-1 mu_i / 2 + ln p_i for both classes.
// x must have the model's dimension.
Discriminants discriminant(const LdaModel& model, std::span<const double> x);

// True ("yes") iff f_yes > f_no; an exact tie classifies as no.
bool classify(const LdaModel& model, std::span<const double> x);

// Ranking margin f_yes - f_no; classify(x) == yes iff score(x) > 0.
double score(const LdaModel& model, std::span<const double> x);

// Projects the eight computed features onto the model's coordinates.
std::vector<double> project_features(const LdaModel& model,
                                     const FeatureVector& vector);

// Per-feature R^2 of an intercept-plus-one-regressor least-squares fit
// of the 0/1 label. A zero-variance feature scores 0. Requires >= 3
// labeled samples with both classes present.
std::array<double, kFeatureCount> anova_single(
    const std::vector<FeatureVector>& vectors);

struct AnovaPrefix {
  std::vector<std::string> features;
  double r2 = 0.0;
  bool rank_deficient = false;
};

// Multiple-regression R^2 for every prefix of the inclusion order,
// computed by incremental orthogonalization so the sequence is
// non-decreasing by construction. A linearly dependent column
// contributes nothing and flags the prefix.
std::vector<AnovaPrefix> anova_accumulated(
    const std::vector<FeatureVector>& vectors, const FeatureMask& order);

struct AnovaReport {
  std::array<double, kFeatureCount> single_r2{};
  std::vector<AnovaPrefix> accumulated;
};

AnovaReport anova_report(const std::vector<FeatureVector>& vectors,
                         const FeatureMask& order);

// Default accumulation order x5, x6, x2, x1, x4, x8.
FeatureMask default_anova_order();

// Versioned line-oriented text format, tag "miftah-lda/1". Reals are
// written with 17 significant digits so parameters round-trip exactly.
void save_model(const LdaModel& model, const std::string& path);
LdaModel load_model(const std::string& path);

}  // namespace miftah

#endif  // MIFTAH_MODEL_HPP_
