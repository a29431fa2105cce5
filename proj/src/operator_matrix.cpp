#include "itw/operator_matrix.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <functional>

namespace itw {

PartitionBasis PartitionBasis::build(const Partition& top, int nvars) {
    if (top.length() > nvars)
        throw DomainError("partition basis: top partition longer than variable count");
    PartitionBasis basis;
    basis.top = top;
    basis.nvars = nvars;
    basis.members = down_set(top, nvars);
    return basis;
}

int PartitionBasis::index_of(const Partition& p) const {
    auto it = std::lower_bound(members.begin(), members.end(), p, weight_revlex_less);
    if (it == members.end() || !(*it == p)) return -1;
    return static_cast<int>(it - members.begin());
}

namespace {

// shared assembly: off-diagonal entries (kappa -> kappa_(i)) plus a diagonal
GeneratorMatrix assemble_generator(const Partition& top, int n, const JackTable& table,
                                   MatrixKind kind,
                                   const std::function<double(const Partition&, int)>& off_coeff,
                                   const std::function<double(const Partition&)>& diag) {
    GeneratorMatrix gm;
    gm.basis = PartitionBasis::build(top, n);
    gm.kind = kind;
    const int size = gm.basis.size();
    gm.entries = Eigen::MatrixXd::Zero(size, size);
    const double theta = table.theta();
    for (int r = 0; r < size; ++r) {
        const Partition& kappa = gm.basis.members[static_cast<size_t>(r)];
        gm.entries(r, r) = diag(kappa);
        if (kappa.empty()) continue;
        const std::vector<double>& bins = table.binomials(kappa);
        const double norm_kappa = jack_norm_at_ones(kappa, n, theta);
        for (int i = 1; i <= kappa.length(); ++i) {
            auto low = kappa.decremented(i);
            if (!low || bins[static_cast<size_t>(i - 1)] == 0.0) continue;
            int c = gm.basis.index_of(*low);
            if (c < 0)
                throw NumericalError("down-set not closed under part decrement");
            double ratio = norm_kappa / jack_norm_at_ones(*low, n, theta);
            gm.entries(r, c) += bins[static_cast<size_t>(i - 1)] * off_coeff(kappa, i) * ratio;
        }
    }
    return gm;
}

} // namespace

GeneratorMatrix laguerre_generator_matrix(const Partition& top, const ModelParams& params,
                                          const JackTable& table) {
    const double theta = table.theta();
    const int n = params.n;
    return assemble_generator(
        top, n, table, MatrixKind::laguerre,
        [&](const Partition& kappa, int i) {
            return 2.0 * (kappa.part(i) - 1 + (n - i) * theta) + theta * params.d;
        },
        [](const Partition&) { return 0.0; });
}

GeneratorMatrix jacobi_generator_matrix(const Partition& top, const ModelParams& params,
                                        const JackTable& table) {
    const double theta = table.theta();
    const int n = params.n;
    return assemble_generator(
        top, n, table, MatrixKind::jacobi,
        [&](const Partition& kappa, int i) {
            return 2.0 * (kappa.part(i) - 1 + (n - i) * theta) + 2.0 * theta * params.a;
        },
        [&](const Partition& kappa) {
            return -2.0 * eval_eigenvalue(kappa, n, theta) -
                   2.0 * theta * (params.a + params.b) * static_cast<double>(kappa.weight());
        });
}

double kernel_eigenvalue(const Partition& lambda, int n, double theta) {
    if (lambda.length() > n)
        throw DomainError("kernel eigenvalue: partition longer than the lower level");
    double log_acc = std::lgamma((n + 1) * theta) - std::lgamma(theta);
    for (int i = 1; i <= n; ++i) {
        double ki = lambda.part(i);
        log_acc += std::lgamma((n + 1 - i) * theta + ki) - std::lgamma((n + 2 - i) * theta + ki);
    }
    return std::exp(log_acc);
}

GeneratorMatrix kernel_matrix(const Partition& top, int n, double theta) {
    GeneratorMatrix gm;
    gm.basis = PartitionBasis::build(top, n);
    gm.kind = MatrixKind::kernel;
    const int size = gm.basis.size();
    gm.entries = Eigen::MatrixXd::Zero(size, size);
    for (int r = 0; r < size; ++r)
        gm.entries(r, r) = kernel_eigenvalue(gm.basis.members[static_cast<size_t>(r)], n, theta);
    return gm;
}

namespace {

struct IntertwiningTriple {
    GeneratorMatrix m1; // kernel diagonal at level n
    GeneratorMatrix m2; // n-variable generator
    GeneratorMatrix m3; // (n+1)-variable generator, shifted parameters
};

IntertwiningTriple build_triple(const Partition& top, const ModelParams& params, Family family,
                                double upper_shift) {
    if (params.theta < 0.5)
        throw DomainError("intertwining checks require beta >= 1 (theta >= 1/2)");
    const JackTable& table = shared_jack_table(params.theta);
    ModelParams upper = params;
    upper.n = params.n + 1;
    if (family == Family::laguerre) {
        if (params.d < 2.0)
            throw DomainError("Laguerre intertwining requires d >= 2");
        upper.d = params.d - 2.0 + upper_shift;
    } else {
        if (params.a < 1.0 || params.b < 1.0)
            throw DomainError("Jacobi intertwining requires a, b >= 1");
        upper.a = params.a - 1.0 + upper_shift;
        upper.b = params.b - 1.0;
    }
    IntertwiningTriple triple;
    triple.m1 = kernel_matrix(top, params.n, params.theta);
    if (family == Family::laguerre) {
        triple.m2 = laguerre_generator_matrix(top, params, table);
        triple.m3 = laguerre_generator_matrix(top, upper, table);
    } else {
        triple.m2 = jacobi_generator_matrix(top, params, table);
        triple.m3 = jacobi_generator_matrix(top, upper, table);
    }
    return triple;
}

double scaled_max_norm_diff(const Eigen::MatrixXd& lhs, const Eigen::MatrixXd& rhs) {
    double scale = std::max({1.0, lhs.cwiseAbs().maxCoeff(), rhs.cwiseAbs().maxCoeff()});
    return (lhs - rhs).cwiseAbs().maxCoeff() / scale;
}

} // namespace

double check_generator_intertwining(const Partition& top, const ModelParams& params,
                                    Family family, double upper_shift) {
    auto triple = build_triple(top, params, family, upper_shift);
    Eigen::MatrixXd lhs = triple.m1.entries * triple.m3.entries;
    Eigen::MatrixXd rhs = triple.m2.entries * triple.m1.entries;
    return scaled_max_norm_diff(lhs, rhs);
}

GeneratorMatrix semigroup_matrix(const GeneratorMatrix& gen, double t) {
    if (t < 0) throw DomainError("semigroup time must be nonnegative");
    GeneratorMatrix out;
    out.basis = gen.basis;
    out.kind = gen.kind;
    const auto size = gen.entries.rows();
    if (gen.kind == MatrixKind::laguerre) {
        // strictly lower triangular, hence nilpotent: the Taylor series
        // terminates and all terms are nonnegative, so the sum is exact up
        // to rounding even for large t * ||M||
        Eigen::MatrixXd term = Eigen::MatrixXd::Identity(size, size);
        Eigen::MatrixXd sum = term;
        for (Eigen::Index k = 1; k <= size; ++k) {
            term = (t / static_cast<double>(k)) * (gen.entries * term).eval();
            sum += term;
            if (term.cwiseAbs().maxCoeff() == 0.0) break;
        }
        out.entries = sum;
        return out;
    }
    Eigen::MatrixXd scaled = t * gen.entries;
    out.entries = scaled.exp();
    return out;
}

double check_semigroup_intertwining(const Partition& top, const ModelParams& params,
                                    Family family, double t, double upper_shift) {
    auto triple = build_triple(top, params, family, upper_shift);
    GeneratorMatrix e3 = semigroup_matrix(triple.m3, t);
    GeneratorMatrix e2 = semigroup_matrix(triple.m2, t);
    Eigen::MatrixXd lhs = triple.m1.entries * e3.entries;
    Eigen::MatrixXd rhs = e2.entries * triple.m1.entries;
    return scaled_max_norm_diff(lhs, rhs);
}

double exact_moment(const std::vector<double>& x, const Partition& top,
                    const ModelParams& params, Family family, double t) {
    if (static_cast<int>(x.size()) != params.n)
        throw DomainError("exact_moment: point dimension must equal n");
    if (!std::is_sorted(x.begin(), x.end()))
        throw DomainError("exact_moment: start point must be ordered");
    const JackTable& table = shared_jack_table(params.theta);
    GeneratorMatrix gen = (family == Family::laguerre)
                              ? laguerre_generator_matrix(top, params, table)
                              : jacobi_generator_matrix(top, params, table);
    GeneratorMatrix sg = semigroup_matrix(gen, t);
    Eigen::VectorXd values(sg.basis.size());
    for (int i = 0; i < sg.basis.size(); ++i)
        values(i) = sym_eval(table.expansion(sg.basis.members[static_cast<size_t>(i)], params.n), x);
    int row = sg.basis.index_of(top);
    return sg.entries.row(row).dot(values);
}

double check_dyson_commutator(int nvars, double theta,
                              const std::vector<SymmetricPoly<double>>& sample_polys) {
    double worst = 0;
    for (const auto& p : sample_polys) {
        if (p.nvars != nvars)
            throw DomainError("sample polynomial has wrong variable count");
        SymmetricPoly<double> lhs = apply_b1_b2_commutator(p, theta);
        SymmetricPoly<double> rhs = apply_dyson_generator(p, theta);
        lhs -= rhs;
        worst = std::max(worst, to_double(lhs.max_abs_coeff()));
    }
    return worst;
}

} // namespace itw
