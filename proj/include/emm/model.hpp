#ifndef EMM_MODEL_HPP
#define EMM_MODEL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "emm/corpus.hpp"
#include "emm/mat.hpp"

namespace emm {

enum class TrainMode { mle, max_margin };

std::string to_string(TrainMode mode);
TrainMode train_mode_from_string(const std::string& s);

struct ModelParams {
    Vec lambda;                 // C exponential rates
    Mat mu;                     // C x D variational Dirichlet parameters
    Vec w;                      // C tag weights
    double eta = 1.0;           // exchangeable Dirichlet smoothing
    std::pair<double, double> chi = {1.0, 1.0};
    TrainMode mode = TrainMode::mle;

    int num_tags() const { return static_cast<int>(lambda.size()); }
    int num_features() const { return static_cast<int>(mu.cols); }
    void validate() const;
};

// Per-example posterior: Gamma(shape гamma_c, scale rho_c) over theta_c and a
// responsibility row per instance.
struct VariationalState {
    Vec gamma;
    Vec rho;
    Mat phi;  // M x C, rows on the simplex
};

struct TrainConfig {
    double nu1 = 1.0;
    double nu2 = 10.0;
    TrainMode mode = TrainMode::mle;
    int em_max_iters = 50;
    int estep_max_iters = 100;
    int newton_max_iters = 100;
    int cutting_plane_max_rounds = 100;
    double elbo_rel_tol = 1e-6;
    double newton_tol = 1e-10;
    double violation_eps = 1e-3;
    std::uint64_t seed = 0;
    int threads = 1;
    double eta0 = 1.0;
    std::pair<double, double> chi = {1.0, 1.0};

    void validate() const;
};

// E[log beta_cd] under Dir(mu_c) = psi(mu_cd) - psi(sum_d mu_cd)
double expected_log_beta(const ModelParams& params, int c, int d);

// Precomputed E[log beta] stored transposed (D x C) so per-feature class
// columns are contiguous for the kernels. Point-beta variant takes plain logs
// instead of the variational expectation (used against the exact oracle).
struct EStepContext {
    const ModelParams* params = nullptr;
    Mat elog_beta_t;  // D x C
};

EStepContext make_context(const ModelParams& params);
EStepContext make_context_point_beta(const ModelParams& params, const Mat& beta);

// One example's contribution to the bound: theta prior, instance-tag and
// feature expectations, entropies, optional label energy and margin-dual
// energy. Excludes the corpus-level beta terms.
double per_example_bound(const EStepContext& ctx, const Example& ex, const VariationalState& st,
                         const double* y_row, const double* delta_row);

// Corpus-level Dirichlet prior + entropy terms for q(beta | mu).
double beta_prior_bound(const ModelParams& params);

// Full bound over the corpus; delta may be null (then no dual energy) and
// labeled examples contribute the label energy as given by their label sets.
double elbo(const ModelParams& params, const Corpus& corpus,
            const std::vector<VariationalState>& states, const Mat* delta, bool include_beta_prior);

void write_checkpoint(const ModelParams& params, const std::string& path);
ModelParams read_checkpoint(const std::string& path);

// y indicator row for an example (length C)
Vec label_row(const Example& ex, int num_tags);

} // namespace emm

#endif
