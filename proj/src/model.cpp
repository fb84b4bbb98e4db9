#include "miftah/model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "miftah/errors.hpp"

namespace miftah {
namespace {

// Relative threshold below which an orthogonalized regressor column is
// treated as linearly dependent.
constexpr double kRankTolerance = 1e-12;

std::string format_real(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

// Cholesky factorization of a symmetric matrix, lower triangle.
// Returns the failing pivot index, or -1 on success.
int cholesky(std::vector<double>& a, int d) {
  for (int j = 0; j < d; ++j) {
    double pivot = a[j * d + j];
    for (int k = 0; k < j; ++k) pivot -= a[j * d + k] * a[j * d + k];
    if (!(pivot > 0.0) || !std::isfinite(pivot)) return j;
    double root = std::sqrt(pivot);
    a[j * d + j] = root;
    for (int i = j + 1; i < d; ++i) {
      double v = a[i * d + j];
      for (int k = 0; k < j; ++k) v -= a[i * d + k] * a[j * d + k];
      a[i * d + j] = v / root;
    }
  }
  return -1;
}

// Inverse of an SPD matrix from its Cholesky factor: A^-1 = L^-T L^-1.
// Both triangles are filled from the same sums, so the result is
// bitwise symmetric.
std::vector<double> spd_inverse_from_cholesky(const std::vector<double>& l,
                                              int d) {
  // M = L^-1 by forward substitution, column by column.
  std::vector<double> m(static_cast<std::size_t>(d) * d, 0.0);
  for (int col = 0; col < d; ++col) {
    for (int i = col; i < d; ++i) {
      double v = i == col ? 1.0 : 0.0;
      for (int k = col; k < i; ++k) v -= l[i * d + k] * m[k * d + col];
      m[i * d + col] = v / l[i * d + i];
    }
  }
  std::vector<double> inv(static_cast<std::size_t>(d) * d, 0.0);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j <= i; ++j) {
      double v = 0.0;
      for (int k = i; k < d; ++k) v += m[k * d + i] * m[k * d + j];
      inv[i * d + j] = v;
      inv[j * d + i] = v;
    }
  }
  return inv;
}

std::vector<double> matvec(const std::vector<double>& a, int d,
                           std::span<const double> x) {
  std::vector<double> y(d, 0.0);
  for (int i = 0; i < d; ++i) {
    double sum = 0.0;
    for (int j = 0; j < d; ++j) sum += a[i * d + j] * x[j];
    y[i] = sum;
  }
  return y;
}

bool label_of(const FeatureVector& v) {
  if (!v.is_key.has_value()) {
    throw Error(ErrorKind::kFormat, "feature vector without Is-Key label");
  }
  return *v.is_key;
}

void center(std::vector<double>& column) {
  double mean = 0.0;
  for (double v : column) mean += v;
  mean /= static_cast<double>(column.size());
  for (double& v : column) v -= mean;
}

std::vector<double> feature_column(const std::vector<FeatureVector>& vectors,
                                   int feature) {
  std::vector<double> column;
  column.reserve(vectors.size());
  for (const FeatureVector& v : vectors) column.push_back(v.as_array()[feature]);
  return column;
}

void require_two_classes(const std::vector<FeatureVector>& vectors,
                         std::size_t min_samples) {
  if (vectors.size() < min_samples) {
    throw Error(ErrorKind::kDegenerate,
                "degenerate training set: fewer than " +
                    std::to_string(min_samples) + " labeled samples");
  }
  bool any_yes = false;
  bool any_no = false;
  for (const FeatureVector& v : vectors) {
    (label_of(v) ? any_yes : any_no) = true;
  }
  if (!any_yes || !any_no) {
    throw Error(ErrorKind::kDegenerate,
                "degenerate training set: a class is absent");
  }
}

}  // namespace

FeatureMask FeatureMask::all() {
  FeatureMask mask;
  mask.order = {0, 1, 2, 3, 4, 5, 6, 7};
  return mask;
}

FeatureMask FeatureMask::parse(std::string_view spec) {
  FeatureMask mask;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t comma = spec.find(',', start);
    std::size_t end = comma == std::string_view::npos ? spec.size() : comma;
    std::string_view name = spec.substr(start, end - start);
    while (!name.empty() && name.front() == ' ') name.remove_prefix(1);
    while (!name.empty() && name.back() == ' ') name.remove_suffix(1);
    if (!name.empty()) {
      auto it = std::find(kFeatureNames.begin(), kFeatureNames.end(), name);
      if (it == kFeatureNames.end()) {
        throw Error(ErrorKind::kFormat,
                    "unknown feature name \"" + std::string(name) + "\"");
      }
      int index = static_cast<int>(it - kFeatureNames.begin());
      if (std::find(mask.order.begin(), mask.order.end(), index) !=
          mask.order.end()) {
        throw Error(ErrorKind::kFormat,
                    "duplicate feature name \"" + std::string(name) + "\"");
      }
      mask.order.push_back(index);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (mask.order.empty()) {
    throw Error(ErrorKind::kFormat, "empty feature mask");
  }
  return mask;
}

void LdaModel::finalize() {
  const int d = dim();
  std::vector<double> regularized = pooled_cov;
  double trace = 0.0;
  for (int i = 0; i < d; ++i) trace += pooled_cov[i * d + i];
  const double ridge = epsilon * trace / static_cast<double>(d);
  for (int i = 0; i < d; ++i) regularized[i * d + i] += ridge;

  std::vector<double> factor = regularized;
  int failed = cholesky(factor, d);
  if (failed >= 0) {
    // Name every feature with a vanishing regularized variance, or the
    // failing pivot if the diagonal itself looks fine.
    std::string names;
    for (int i = 0; i < d; ++i) {
      if (regularized[i * d + i] <= 0.0) {
        if (!names.empty()) names += ", ";
        names += feature_names[i];
      }
    }
    if (names.empty()) names = feature_names[failed];
    throw Error(ErrorKind::kSingular, "singular covariance (" + names + ")");
  }
  cov_inv = spd_inverse_from_cholesky(factor, d);

  w_yes = matvec(cov_inv, d, mu_yes);
  w_no = matvec(cov_inv, d, mu_no);
  c_yes = -0.5 * dot(mu_yes, w_yes) + std::log(prior_yes);
  c_no = -0.5 * dot(mu_no, w_no) + std::log(prior_no);
}

LdaModel train_lda(const std::vector<FeatureVector>& vectors,
                   const TrainOptions& options) {
  const int d = options.mask.dim();
  std::size_t n_yes = 0;
  std::size_t n_no = 0;
  for (const FeatureVector& v : vectors) {
    (label_of(v) ? n_yes : n_no) += 1;
  }
  if (n_yes < 2 || n_no < 2) {
    throw Error(ErrorKind::kDegenerate,
                "degenerate training set: need at least 2 samples per class "
                "(yes=" +
                    std::to_string(n_yes) + ", no=" + std::to_string(n_no) +
                    ")");
  }

  LdaModel model;
  for (int f : options.mask.order) {
    model.feature_names.emplace_back(kFeatureNames[f]);
    model.mask[f] = true;
  }
  model.epsilon = options.epsilon;

  auto masked = [&](const FeatureVector& v) {
    std::vector<double> x(d);
    auto full = v.as_array();
    for (int i = 0; i < d; ++i) x[i] = full[options.mask.order[i]];
    return x;
  };

  model.mu_yes.assign(d, 0.0);
  model.mu_no.assign(d, 0.0);
  for (const FeatureVector& v : vectors) {
    std::vector<double> x = masked(v);
    std::vector<double>& mu = *v.is_key ? model.mu_yes : model.mu_no;
    for (int i = 0; i < d; ++i) mu[i] += x[i];
  }
  for (int i = 0; i < d; ++i) {
    model.mu_yes[i] /= static_cast<double>(n_yes);
    model.mu_no[i] /= static_cast<double>(n_no);
  }

  model.pooled_cov.assign(static_cast<std::size_t>(d) * d, 0.0);
  for (const FeatureVector& v : vectors) {
    std::vector<double> x = masked(v);
    const std::vector<double>& mu = *v.is_key ? model.mu_yes : model.mu_no;
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        model.pooled_cov[i * d + j] += (x[i] - mu[i]) * (x[j] - mu[j]);
      }
    }
  }
  const double denom = static_cast<double>(n_yes + n_no - 2);
  for (double& v : model.pooled_cov) v /= denom;

  const double total = static_cast<double>(n_yes + n_no);
  model.prior_yes = static_cast<double>(n_yes) / total;
  model.prior_no = static_cast<double>(n_no) / total;

  model.finalize();
  return model;
}

Discriminants discriminant(const LdaModel& model, std::span<const double> x) {
  if (static_cast<int>(x.size()) != model.dim()) {
    throw Error(ErrorKind::kDimension,
                "feature vector has dimension " + std::to_string(x.size()) +
                    ", model expects " + std::to_string(model.dim()));
  }
  return {dot(model.w_yes, x) + model.c_yes, dot(model.w_no, x) + model.c_no};
}

bool classify(const LdaModel& model, std::span<const double> x) {
  Discriminants f = discriminant(model, x);
  return f.f_yes > f.f_no;
}

double score(const LdaModel& model, std::span<const double> x) {
  Discriminants f = discriminant(model, x);
  return f.f_yes - f.f_no;
}

std::vector<double> project_features(const LdaModel& model,
                                     const FeatureVector& vector) {
  auto full = vector.as_array();
  std::vector<double> x;
  x.reserve(model.feature_names.size());
  for (const std::string& name : model.feature_names) {
    auto it = std::find(kFeatureNames.begin(), kFeatureNames.end(), name);
    x.push_back(full[it - kFeatureNames.begin()]);
  }
  return x;
}

std::array<double, kFeatureCount> anova_single(
    const std::vector<FeatureVector>& vectors) {
  require_two_classes(vectors, 3);
  const auto n = static_cast<double>(vectors.size());

  std::vector<double> y;
  y.reserve(vectors.size());
  for (const FeatureVector& v : vectors) y.push_back(label_of(v) ? 1.0 : 0.0);
  double mean_y = 0.0;
  for (double v : y) mean_y += v;
  mean_y /= n;
  double ss_tot = 0.0;
  for (double v : y) ss_tot += (v - mean_y) * (v - mean_y);

  std::array<double, kFeatureCount> r2{};
  for (int f = 0; f < kFeatureCount; ++f) {
    std::vector<double> x = feature_column(vectors, f);
    double mean_x = 0.0;
    for (double v : x) mean_x += v;
    mean_x /= n;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      sxx += (x[i] - mean_x) * (x[i] - mean_x);
      sxy += (x[i] - mean_x) * (y[i] - mean_y);
    }
    if (sxx <= 0.0) {
      r2[f] = 0.0;
      continue;
    }
    const double slope = sxy / sxx;
    const double intercept = mean_y - slope * mean_x;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      double residual = y[i] - (intercept + slope * x[i]);
      ss_res += residual * residual;
    }
    r2[f] = std::clamp(1.0 - ss_res / ss_tot, 0.0, 1.0);
  }
  return r2;
}

std::vector<AnovaPrefix> anova_accumulated(
    const std::vector<FeatureVector>& vectors, const FeatureMask& order) {
  require_two_classes(vectors, 3);

  std::vector<double> y;
  y.reserve(vectors.size());
  for (const FeatureVector& v : vectors) y.push_back(label_of(v) ? 1.0 : 0.0);
  center(y);
  double ss_tot = dot(y, y);

  std::vector<AnovaPrefix> result;
  std::vector<std::vector<double>> basis;
  std::vector<std::string> names_so_far;
  double explained = 0.0;
  bool deficient_so_far = false;

  for (int f : order.order) {
    names_so_far.emplace_back(kFeatureNames[f]);
    std::vector<double> column = feature_column(vectors, f);
    center(column);
    const double norm0 = dot(column, column);

    // Two orthogonalization passes keep the basis orthogonal enough for
    // the explained-share sums even with near-collinear inputs.
    for (int pass = 0; pass < 2; ++pass) {
      for (const std::vector<double>& q : basis) {
        const double coeff = dot(q, column) / dot(q, q);
        for (std::size_t i = 0; i < column.size(); ++i) {
          column[i] -= coeff * q[i];
        }
      }
    }

    const double norm = dot(column, column);
    if (norm0 <= 0.0 || norm <= kRankTolerance * kRankTolerance * norm0) {
      deficient_so_far = true;  // dependent column adds no new direction
    } else {
      const double projection = dot(column, y);
      explained += projection * projection / norm;
      basis.push_back(std::move(column));
    }

    AnovaPrefix prefix;
    prefix.features = names_so_far;
    prefix.r2 = std::clamp(explained / ss_tot, 0.0, 1.0);
    prefix.rank_deficient = deficient_so_far;
    result.push_back(std::move(prefix));
  }
  return result;
}

AnovaReport anova_report(const std::vector<FeatureVector>& vectors,
                         const FeatureMask& order) {
  AnovaReport report;
  report.single_r2 = anova_single(vectors);
  report.accumulated = anova_accumulated(vectors, order);
  return report;
}

FeatureMask default_anova_order() { return FeatureMask::parse("x5,x6,x2,x1,x4,x8"); }

namespace {

std::vector<double> parse_reals(std::istringstream& stream, int count,
                                const char* what) {
  std::vector<double> values;
  values.reserve(count);
  std::string token;
  while (static_cast<int>(values.size()) < count && stream >> token) {
    char* end = nullptr;
    double value = std::strtod(token.c_str(), &end);
    if (end == nullptr || *end != '\0' || !std::isfinite(value)) {
      throw Error(ErrorKind::kModelFormat,
                  std::string("corrupt model: bad number in ") + what);
    }
    values.push_back(value);
  }
  if (static_cast<int>(values.size()) != count) {
    throw Error(ErrorKind::kModelFormat,
                std::string("corrupt model: truncated ") + what);
  }
  return values;
}

// Reads "key<TAB>payload" and returns the payload.
std::string expect_line(std::istream& in, std::string_view key) {
  std::string line;
  if (!std::getline(in, line)) {
    throw Error(ErrorKind::kModelFormat,
                "corrupt model: missing \"" + std::string(key) + "\" line");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::size_t tab = line.find('\t');
  if (tab == std::string::npos || line.substr(0, tab) != key) {
    throw Error(ErrorKind::kModelFormat,
                "corrupt model: expected \"" + std::string(key) + "\" line");
  }
  return line.substr(tab + 1);
}

}  // namespace

void save_model(const LdaModel& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorKind::kIo, "cannot write model file: " + path);
  }
  const int d = model.dim();
  out << "miftah-lda/1\n";
  out << "features\t";
  for (int i = 0; i < d; ++i) {
    if (i > 0) out << ' ';
    out << model.feature_names[i];
  }
  out << "\nmask\t";
  for (int i = 0; i < kFeatureCount; ++i) {
    if (i > 0) out << ' ';
    out << (model.mask[i] ? 1 : 0);
  }
  out << "\nepsilon\t" << format_real(model.epsilon);
  out << "\npriors\t" << format_real(model.prior_yes) << ' '
      << format_real(model.prior_no);
  out << "\nmean_yes\t";
  for (int i = 0; i < d; ++i) {
    if (i > 0) out << ' ';
    out << format_real(model.mu_yes[i]);
  }
  out << "\nmean_no\t";
  for (int i = 0; i < d; ++i) {
    if (i > 0) out << ' ';
    out << format_real(model.mu_no[i]);
  }
  out << "\ncovariance\t" << d << '\n';
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (j > 0) out << ' ';
      out << format_real(model.pooled_cov[i * d + j]);
    }
    out << '\n';
  }
  out << "end\n";
  if (!out.flush()) {
    throw Error(ErrorKind::kIo, "I/O failure while writing " + path);
  }
}

LdaModel load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::kIo, "cannot open model file: " + path);
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw Error(ErrorKind::kModelFormat, "corrupt model: empty file");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "miftah-lda/1") {
    throw Error(ErrorKind::kModelFormat,
                "unsupported model version \"" + line + "\"");
  }

  LdaModel model;

  {
    std::istringstream names(expect_line(in, "features"));
    std::string name;
    while (names >> name) {
      if (std::find(kFeatureNames.begin(), kFeatureNames.end(), name) ==
          kFeatureNames.end()) {
        throw Error(ErrorKind::kModelFormat,
                    "corrupt model: unknown feature \"" + name + "\"");
      }
      model.feature_names.push_back(name);
    }
    if (model.feature_names.empty()) {
      throw Error(ErrorKind::kModelFormat, "corrupt model: no features");
    }
  }
  const int d = model.dim();

  {
    std::istringstream mask_line(expect_line(in, "mask"));
    int bits = 0;
    int bit;
    while (mask_line >> bit && bits < kFeatureCount) {
      if (bit != 0 && bit != 1) {
        throw Error(ErrorKind::kModelFormat, "corrupt model: bad mask bit");
      }
      model.mask[bits++] = bit == 1;
    }
    if (bits != kFeatureCount) {
      throw Error(ErrorKind::kModelFormat, "corrupt model: truncated mask");
    }
    // The mask must select exactly the named features.
    for (int i = 0; i < kFeatureCount; ++i) {
      bool named =
          std::find(model.feature_names.begin(), model.feature_names.end(),
                    kFeatureNames[i]) != model.feature_names.end();
      if (named != model.mask[i]) {
        throw Error(ErrorKind::kModelFormat,
                    "corrupt model: mask disagrees with feature list");
      }
    }
  }

  {
    std::istringstream eps(expect_line(in, "epsilon"));
    auto values = parse_reals(eps, 1, "epsilon");
    if (values[0] < 0.0) {
      throw Error(ErrorKind::kModelFormat, "corrupt model: negative epsilon");
    }
    model.epsilon = values[0];
  }
  {
    std::istringstream priors(expect_line(in, "priors"));
    auto values = parse_reals(priors, 2, "priors");
    if (!(values[0] > 0.0) || !(values[1] > 0.0) ||
        std::abs(values[0] + values[1] - 1.0) > 1e-9) {
      throw Error(ErrorKind::kModelFormat, "corrupt model: bad priors");
    }
    model.prior_yes = values[0];
    model.prior_no = values[1];
  }
  {
    std::istringstream mean(expect_line(in, "mean_yes"));
    model.mu_yes = parse_reals(mean, d, "mean_yes");
  }
  {
    std::istringstream mean(expect_line(in, "mean_no"));
    model.mu_no = parse_reals(mean, d, "mean_no");
  }
  {
    std::istringstream header(expect_line(in, "covariance"));
    int stated = -1;
    if (!(header >> stated) || stated != d) {
      throw Error(ErrorKind::kModelFormat,
                  "corrupt model: covariance dimension mismatch");
    }
    model.pooled_cov.reserve(static_cast<std::size_t>(d) * d);
    for (int i = 0; i < d; ++i) {
      if (!std::getline(in, line)) {
        throw Error(ErrorKind::kModelFormat,
                    "corrupt model: truncated covariance");
      }
      std::istringstream row(line);
      auto values = parse_reals(row, d, "covariance row");
      model.pooled_cov.insert(model.pooled_cov.end(), values.begin(),
                              values.end());
    }
  }
  if (!std::getline(in, line) || (line != "end" && line != "end\r")) {
    throw Error(ErrorKind::kModelFormat, "corrupt model: missing end marker");
  }

  model.finalize();
  return model;
}

}  // namespace miftah
