#include "csecs/fock_oracle.hpp"

#include "csecs/errors.hpp"
#include "csecs/quadrature.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <string>

namespace csecs {

namespace {

constexpr int kMinNMax = 4;
constexpr int kDefaultNMax = 40;

// Poisson(x) mass above n_max, summed in log domain until the terms are negligible.
double poisson_tail(double x, int n_max) {
    if (x == 0.0) return 0.0;
    const double ln_x = std::log(x);
    double sum = 0.0;
    for (int k = n_max + 1;; ++k) {
        const double term = std::exp(-x + k * ln_x - ln_factorial(k));
        sum += term;
        if (k > x && term <= 1e-20 * sum) break;
        if (term == 0.0 && k > x) break;
    }
    return sum;
}

std::string format_double(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

}  // namespace

void TruncationConfig::validate() const {
    if (n_max < kMinNMax) {
        throw InvalidParams("Fock cutoff n_max must be at least " + std::to_string(kMinNMax));
    }
    if (!(tail_tol > 0.0)) throw InvalidParams("tail_tol must be positive");
}

TruncationConfig TruncationConfig::for_amplitude(cplx alpha) {
    TruncationConfig cfg;
    if (const char* env = std::getenv("CSECS_NMAX"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const long value = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || value < kMinNMax || value > 100000) {
            throw InvalidParams(std::string("CSECS_NMAX must be an integer >= 4, got '") + env + "'");
        }
        cfg.n_max = static_cast<int>(value);
        return cfg;
    }
    const double a = std::abs(alpha);
    cfg.n_max = std::max(kDefaultNMax, static_cast<int>(std::ceil(a * a + 8.0 * a + 20.0)));
    return cfg;
}

double FockVector::tail_fraction() const {
    const double total = norm_squared();
    if (total == 0.0 || coeffs.size() == 0) return 0.0;
    return std::norm(coeffs(coeffs.size() - 1)) / total;
}

double TwoModeFockState::tail_fraction() const {
    const double total = norm_squared();
    if (total == 0.0) return 0.0;
    const Eigen::Index rows = coeffs.rows();
    const Eigen::Index cols = coeffs.cols();
    double edge = coeffs.row(rows - 1).squaredNorm() + coeffs.col(cols - 1).squaredNorm() -
                  std::norm(coeffs(rows - 1, cols - 1));
    return edge / total;
}

FockVector coherent_vector(cplx alpha, const TruncationConfig& cfg, int headroom) {
    cfg.validate();
    if (headroom < 0) throw InvalidParams("headroom must be non-negative");
    const double x = std::norm(alpha);
    const double tail = poisson_tail(x, cfg.n_max);
    if (tail > cfg.tail_tol) {
        throw TruncationError("coherent state |alpha|^2 = " + format_double(x) +
                              " leaves tail mass " + format_double(tail) + " beyond n_max = " +
                              std::to_string(cfg.n_max));
    }
    FockVector v;
    v.coeffs = Eigen::VectorXcd::Zero(cfg.n_max + 1 + headroom);
    if (x == 0.0) {
        v.coeffs(0) = 1.0;
        return v;
    }
    const double ln_abs = 0.5 * std::log(x);
    const cplx unit = alpha / std::sqrt(x);
    cplx phase(1.0, 0.0);
    for (int k = 0; k <= cfg.n_max; ++k) {
        v.coeffs(k) = std::exp(-0.5 * x + k * ln_abs - 0.5 * ln_factorial(k)) * phase;
        phase *= unit;
    }
    return v;
}

FockVector apply_superposition_op(const FockVector& v, double t, double r, int order) {
    if (order < 0) throw InvalidParams("operation order must be non-negative");
    FockVector cur = v;
    const Eigen::Index size = cur.coeffs.size();
    for (int step = 0; step < order; ++step) {
        if (r != 0.0 && cur.coeffs(size - 1) != cplx(0.0, 0.0)) {
            throw HeadroomError("creation step " + std::to_string(step + 1) + " of " +
                                std::to_string(order) + " would clip at cutoff " +
                                std::to_string(size - 1));
        }
        Eigen::VectorXcd next = Eigen::VectorXcd::Zero(size);
        for (Eigen::Index k = 0; k < size; ++k) {
            cplx acc(0.0, 0.0);
            if (k > 0) acc += r * std::sqrt(static_cast<double>(k)) * cur.coeffs(k - 1);
            if (k + 1 < size) acc += t * std::sqrt(static_cast<double>(k + 1)) * cur.coeffs(k + 1);
            next(k) = acc;
        }
        cur.coeffs = std::move(next);
    }
    return cur;
}

namespace {

struct OperatedPair {
    FockVector plus;   // X |α⟩
    FockVector minus;  // X |−α⟩
};

OperatedPair operated_pair(cplx alpha, double t, double r, int order, const TruncationConfig& cfg) {
    return {apply_superposition_op(coherent_vector(alpha, cfg, order), t, r, order),
            apply_superposition_op(coherent_vector(-alpha, cfg, order), t, r, order)};
}

}  // namespace

TwoModeFockState build_cs_eecs(const CsEcsParams& params, const TruncationConfig& cfg) {
    params.validate();
    const OperatedPair a = operated_pair(params.alpha, params.t_a, params.r_a, params.m, cfg);
    const OperatedPair b = operated_pair(params.alpha, params.t_b, params.r_b, params.n, cfg);

    TwoModeFockState s;
    s.coeffs = a.plus.coeffs * b.plus.coeffs.transpose() +
               parity_sign(params.parity) * (a.minus.coeffs * b.minus.coeffs.transpose());
    s.pre_norm_squared = s.coeffs.squaredNorm();
    if (!(std::sqrt(s.pre_norm_squared) >= 1e-150)) {
        throw DegenerateState("operated superposition has zero norm (" +
                              std::string(to_string(params.parity)) + " parity)");
    }
    s.coeffs /= std::sqrt(s.pre_norm_squared);
    return s;
}

OverlapQuartet oracle_overlaps(const CsEcsParams& params, const TruncationConfig& cfg) {
    params.validate();
    const OperatedPair a = operated_pair(params.alpha, params.t_a, params.r_a, params.m, cfg);
    const OperatedPair b = operated_pair(params.alpha, params.t_b, params.r_b, params.n, cfg);
    OverlapQuartet q;
    q.a1 = a.plus.coeffs.squaredNorm();
    q.a2 = a.minus.coeffs.dot(a.plus.coeffs).real();  // Eigen's dot conjugates the left side
    q.b1 = b.plus.coeffs.squaredNorm();
    q.b2 = b.minus.coeffs.dot(b.plus.coeffs).real();
    return q;
}

ModeMoments mode_moments(const TwoModeFockState& s) {
    const Eigen::MatrixXcd& c = s.coeffs;
    const Eigen::Index rows = c.rows();
    const Eigen::Index cols = c.cols();
    ModeMoments out;
    for (Eigen::Index j = 0; j < rows; ++j) {
        for (Eigen::Index k = 0; k < cols; ++k) {
            const double p = std::norm(c(j, k));
            out.n_a += static_cast<double>(j) * p;
            out.n_b += static_cast<double>(k) * p;
            if (j > 0 && k > 0) {
                const double w = std::sqrt(static_cast<double>(j) * static_cast<double>(k));
                out.ab += std::conj(c(j - 1, k - 1)) * w * c(j, k);
            }
            if (j + 1 < rows && k + 1 < cols) {
                const double w = std::sqrt(static_cast<double>(j + 1) * static_cast<double>(k + 1));
                out.adbd += std::conj(c(j + 1, k + 1)) * w * c(j, k);
            }
        }
    }
    if (std::abs(out.adbd - std::conj(out.ab)) > 1e-10 * std::max(1.0, std::abs(out.ab))) {
        throw Error("mode_moments: <a^dag b^dag> is not the conjugate of <ab>");
    }
    return out;
}

Eigen::MatrixXcd pair_annihilate(const TwoModeFockState& s) {
    const Eigen::MatrixXcd& c = s.coeffs;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(c.rows(), c.cols());
    for (Eigen::Index j = 0; j + 1 < c.rows(); ++j) {
        for (Eigen::Index k = 0; k + 1 < c.cols(); ++k) {
            out(j, k) = std::sqrt(static_cast<double>((j + 1) * (k + 1))) * c(j + 1, k + 1);
        }
    }
    return out;
}

Eigen::MatrixXcd reduced_density_a(const TwoModeFockState& s) {
    return s.coeffs * s.coeffs.adjoint();
}

double concurrence_oracle(const TwoModeFockState& s) {
    const Eigen::MatrixXcd rho = reduced_density_a(s);
    const double purity = rho.squaredNorm();  // Tr ρ² for Hermitian ρ
    return std::sqrt(std::max(0.0, 2.0 * (1.0 - purity)));
}

cplx displacement_element(int row, int col, cplx eta) {
    if (row < 0 || col < 0) throw InvalidParams("displacement_element: negative index");
    const double x = std::norm(eta);
    const int lo = std::min(row, col);
    const int diff = std::abs(row - col);
    if (x == 0.0) return diff == 0 ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
    const double magnitude = std::exp(0.5 * (ln_factorial(lo) - ln_factorial(lo + diff)) +
                                      0.5 * diff * std::log(x) - 0.5 * x) *
                             assoc_laguerre(lo, diff, x);
    const cplx unit = eta / std::sqrt(x);
    const cplx phase = row >= col ? std::pow(unit, diff) : std::pow(-std::conj(unit), diff);
    return magnitude * phase;
}

Eigen::MatrixXcd displacement_matrix(cplx eta, int dim) {
    if (dim < 1) throw InvalidParams("displacement_matrix: dimension must be positive");
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(dim, dim);
    const double x = std::norm(eta);
    const double modulus = std::sqrt(x);
    const cplx unit = modulus > 0.0 ? eta / modulus : cplx(1.0, 0.0);
    const cplx unit_up = -std::conj(unit);

    // Band `diff`: entries (k + diff, k) below the diagonal and (k, k + diff)
    // above. Both share sqrt(k!/(k+diff)!) |η|^diff e^{-x/2} L_k^diff(x).
    double band_start = std::exp(-0.5 * x);  // |η|^diff / sqrt(diff!) e^{-x/2}
    cplx phase_down(1.0, 0.0);
    cplx phase_up(1.0, 0.0);
    for (int diff = 0; diff < dim; ++diff) {
        if (diff > 0) {
            band_start *= modulus / std::sqrt(static_cast<double>(diff));
            phase_down *= unit;
            phase_up *= unit_up;
        }
        if (band_start == 0.0) break;
        double weight = band_start;
        double lag_prev = 0.0;
        double lag = 1.0;
        for (int k = 0; k + diff < dim; ++k) {
            if (k == 1) {
                lag_prev = 1.0;
                lag = 1.0 + diff - x;
            } else if (k > 1) {
                const double next =
                    ((2.0 * (k - 1) + 1.0 + diff - x) * lag - (k - 1.0 + diff) * lag_prev) / k;
                lag_prev = lag;
                lag = next;
            }
            if (k > 0) weight *= std::sqrt(static_cast<double>(k) / (k + diff));
            const double value = weight * lag;
            d(k + diff, k) = value * phase_down;
            if (diff > 0) d(k, k + diff) = value * phase_up;
        }
    }
    return d;
}

cplx char_function(const TwoModeFockState& s, cplx eta, cplx gamma) {
    const Eigen::MatrixXcd& c = s.coeffs;
    const Eigen::MatrixXcd da = displacement_matrix(eta, static_cast<int>(c.rows()));
    const Eigen::MatrixXcd db = displacement_matrix(gamma, static_cast<int>(c.cols()));
    const Eigen::MatrixXcd displaced = da * c * db.transpose();
    const double total = s.norm_squared();
    const double lost = 1.0 - displaced.squaredNorm() / total;
    if (lost > 1e-8) {
        throw TruncationError("displaced state loses " + format_double(lost) +
                              " of its mass beyond the Fock cutoff");
    }
    return c.conjugate().cwiseProduct(displaced).sum();
}

namespace {

// |ψ⟩ = Σ_p σ_p |u_p⟩|w_p⟩ with rank-many terms kept.
struct SchmidtFactors {
    Eigen::VectorXd sigma;
    Eigen::MatrixXcd u;  // mode a vectors as columns
    Eigen::MatrixXcd w;  // mode b vectors as columns
};

SchmidtFactors schmidt_factors(const TwoModeFockState& s) {
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(s.coeffs, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd& sv = svd.singularValues();
    Eigen::Index rank = 0;
    while (rank < sv.size() && sv(rank) > 1e-14 * sv(0)) ++rank;
    SchmidtFactors f;
    f.sigma = sv.head(rank);
    f.u = svd.matrixU().leftCols(rank);
    f.w = svd.matrixV().leftCols(rank).conjugate();
    return f;
}

cplx factored_char_function(const SchmidtFactors& f, cplx eta, cplx gamma) {
    const Eigen::MatrixXcd da = displacement_matrix(eta, static_cast<int>(f.u.rows()));
    const Eigen::MatrixXcd db = displacement_matrix(gamma, static_cast<int>(f.w.rows()));
    const Eigen::MatrixXcd ga = f.u.adjoint() * (da * f.u);
    const Eigen::MatrixXcd gb = f.w.adjoint() * (db * f.w);
    const Eigen::MatrixXd weights = f.sigma * f.sigma.transpose();
    return (weights.cast<cplx>().cwiseProduct(ga).cwiseProduct(gb)).sum();
}

cplx fidelity_at_order(const SchmidtFactors& f, int order) {
    const GaussHermiteRule& rule = gauss_hermite(order);
    cplx sum(0.0, 0.0);
    for (int i = 0; i < order; ++i) {
        for (int j = 0; j < order; ++j) {
            const cplx z(rule.nodes[i], rule.nodes[j]);
            sum += rule.weights[i] * rule.weights[j] * factored_char_function(f, -std::conj(z), -z);
        }
    }
    return sum / std::numbers::pi;
}

}  // namespace

double fidelity_by_quadrature(const TwoModeFockState& s, int quad_order) {
    if (quad_order < 20) throw InvalidParams("fidelity_by_quadrature: quad_order must be >= 20");
    const SchmidtFactors f = schmidt_factors(s);
    const cplx coarse = fidelity_at_order(f, quad_order);
    const cplx fine = fidelity_at_order(f, 2 * quad_order);
    if (std::abs(fine - coarse) > 1e-6) {
        throw ConvergenceError("quadrature did not converge: orders " + std::to_string(quad_order) +
                               " and " + std::to_string(2 * quad_order) + " differ by " +
                               format_double(std::abs(fine - coarse)));
    }
    if (std::abs(fine.imag()) > 1e-8) {
        throw Error("fidelity_by_quadrature: imaginary residue " + format_double(fine.imag()));
    }
    return fine.real();
}

}  // namespace csecs
