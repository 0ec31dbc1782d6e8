#include "waring/oracle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "waring/apolarity.hpp"

namespace waring {

namespace {

using cd = std::complex<double>;

// Coordinate indices of P^n inside the degree-d forms (c_1 removed).
std::vector<int> kept_indices(int d) {
    std::vector<int> idx{0};
    for (int i = 2; i <= d; ++i) idx.push_back(i);
    return idx;
}

template <class C>
C from_double(double x) {
    if constexpr (std::is_same_v<C, cd>)
        return cd(x, 0);
    else
        return C(BigFloat(x));
}

/// l_O((a u + b t)^d) and its derivative along (da, db).
template <class C>
void curve_point(const C& a, const C& b, const C& da, const C& db, int d, std::vector<C>& v, std::vector<C>& dv) {
    std::vector<C> ap(static_cast<std::size_t>(d + 1)), bp(static_cast<std::size_t>(d + 1));
    ap[0] = bp[0] = from_double<C>(1);
    for (int k = 1; k <= d; ++k) {
        ap[static_cast<std::size_t>(k)] = ap[static_cast<std::size_t>(k - 1)] * a;
        bp[static_cast<std::size_t>(k)] = bp[static_cast<std::size_t>(k - 1)] * b;
    }
    v.clear();
    dv.clear();
    for (int i : kept_indices(d)) {
        const C bin = from_double<C>(static_cast<double>(binomial(static_cast<unsigned>(d), static_cast<unsigned>(i)).get_d()));
        const auto ui = static_cast<std::size_t>(i), ri = static_cast<std::size_t>(d - i);
        v.push_back(bin * ap[ri] * bp[ui]);
        C deriv = from_double<C>(0);
        if (i < d) deriv = deriv + from_double<C>(d - i) * ap[ri - 1] * bp[ui] * da;
        if (i > 0) deriv = deriv + from_double<C>(i) * ap[ri] * bp[ui - 1] * db;
        dv.push_back(bin * deriv);
    }
}

struct Chart {
    double c = 1, s = 0;
    template <class C>
    void point(const C& t, C& a, C& b, C& da, C& db) const {
        const C cc = from_double<C>(c), ss = from_double<C>(s);
        a = cc - ss * t;
        b = ss + cc * t;
        da = from_double<C>(-s);
        db = cc;
    }
};

// ---- double stage ----------------------------------------------------------

struct DoubleState {
    Eigen::VectorXcd t, alpha;
};

// Variable projection: the scalars are eliminated by least squares and
// Levenberg-Marquardt runs on the parameters alone, with Kaufman's Jacobian
// -P_perp (d v_j / d t_j) alpha_j. Optional fixed columns join the span
// without parameters of their own.
struct VarPro {
    const std::vector<Chart>& charts;
    const Eigen::VectorXcd& p;
    int d;
    const Eigen::MatrixXcd* fixed = nullptr;

    double eval(const Eigen::VectorXcd& t, Eigen::VectorXcd& alpha, Eigen::VectorXcd& res, Eigen::MatrixXcd* jac) const {
        const int r = static_cast<int>(charts.size());
        const Eigen::Index m = p.size(), nf = fixed ? fixed->cols() : 0;
        Eigen::MatrixXcd v(m, r + nf), dv(m, r);
        std::vector<cd> col, dcol;
        for (int j = 0; j < r; ++j) {
            cd a, b, da, db;
            charts[static_cast<std::size_t>(j)].point(t(j), a, b, da, db);
            curve_point(a, b, da, db, d, col, dcol);
            for (Eigen::Index k = 0; k < m; ++k) {
                v(k, j) = col[static_cast<std::size_t>(k)];
                dv(k, j) = dcol[static_cast<std::size_t>(k)];
            }
        }
        if (nf > 0) v.rightCols(nf) = *fixed;
        const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(v);
        const Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(m, r + nf);
        alpha = v.colPivHouseholderQr().solve(p);
        res = p - q * (q.adjoint() * p);
        if (jac) {
            jac->resize(m, r);
            for (int j = 0; j < r; ++j) {
                const Eigen::VectorXcd g = dv.col(j) * alpha(j);
                jac->col(j) = -(g - q * (q.adjoint() * g));
            }
        }
        return res.norm();
    }
};

double levenberg_marquardt(const std::vector<Chart>& charts, DoubleState& x, const Eigen::VectorXcd& p, int d,
                           const Eigen::MatrixXcd* fixed = nullptr) {
    const VarPro vp{charts, p, d, fixed};
    Eigen::MatrixXcd jac;
    Eigen::VectorXcd res;
    double cost = vp.eval(x.t, x.alpha, res, &jac), mu = 1e-3;
    for (int iter = 0; iter < 400 && cost > 1e-14; ++iter) {
        Eigen::MatrixXcd normal = jac.adjoint() * jac;
        const Eigen::VectorXcd g = jac.adjoint() * res;
        for (Eigen::Index k = 0; k < normal.rows(); ++k) normal(k, k) += mu * (1.0 + std::abs(normal(k, k)));
        const Eigen::VectorXcd step = normal.ldlt().solve(-g);
        const Eigen::VectorXcd t2 = x.t + step;
        Eigen::VectorXcd alpha2, res2;
        Eigen::MatrixXcd jac2;
        const double cost2 = vp.eval(t2, alpha2, res2, &jac2);
        if (std::isfinite(cost2) && cost2 < cost) {
            x.t = t2;
            x.alpha = alpha2;
            res = res2;
            jac = jac2;
            cost = cost2;
            mu = std::max(mu / 3, 1e-15);
        } else {
            mu *= 4;
            if (mu > 1e10) break;
        }
    }
    return cost;
}

// ---- multiprecision stage ----------------------------------------------------

using CVec = std::vector<BigComplex>;
using CMat = std::vector<CVec>;  // row-major

BigFloat norm(const CVec& v) {
    BigFloat s = 0;
    for (const auto& z : v) s += z.re * z.re + z.im * z.im;
    return sqrt(s);
}

/// Square complex system by Gaussian elimination with partial pivoting.
std::optional<CVec> solve_square(CMat m, CVec rhs) {
    const std::size_t k = rhs.size();
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t best = col;
        for (std::size_t i = col + 1; i < k; ++i)
            if (abs(m[i][col]) > abs(m[best][col])) best = i;
        std::swap(m[best], m[col]);
        std::swap(rhs[best], rhs[col]);
        if (abs(m[col][col]) == 0) return std::nullopt;
        for (std::size_t i = col + 1; i < k; ++i) {
            const BigComplex factor = m[i][col] / m[col][col];
            for (std::size_t j = col; j < k; ++j) m[i][j] = m[i][j] - factor * m[col][j];
            rhs[i] = rhs[i] - factor * rhs[col];
        }
    }
    CVec x(k);
    for (std::size_t i = k; i-- > 0;) {
        BigComplex acc = rhs[i];
        for (std::size_t j = i + 1; j < k; ++j) acc = acc - m[i][j] * x[j];
        x[i] = acc / m[i][i];
    }
    return x;
}

/// Least-squares (or minimum-norm) solution of J x = rhs.
std::optional<CVec> solve_lsq(const CMat& jac, const CVec& rhs) {
    const std::size_t m = jac.size(), k = jac.front().size();
    if (m >= k) {
        CMat normal(k, CVec(k));
        CVec g(k);
        for (std::size_t a = 0; a < k; ++a) {
            for (std::size_t b = 0; b < k; ++b)
                for (std::size_t i = 0; i < m; ++i) normal[a][b] = normal[a][b] + jac[i][a].conj() * jac[i][b];
            for (std::size_t i = 0; i < m; ++i) g[a] = g[a] + jac[i][a].conj() * rhs[i];
        }
        return solve_square(std::move(normal), std::move(g));
    }
    CMat gram(m, CVec(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t j = 0; j < k; ++j) gram[a][b] = gram[a][b] + jac[a][j] * jac[b][j].conj();
    auto y = solve_square(std::move(gram), rhs);
    if (!y) return std::nullopt;
    CVec x(k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < m; ++i) x[j] = x[j] + jac[i][j].conj() * (*y)[i];
    return x;
}

struct BigState {
    CVec t, alpha;
};

BigComplex to_big(const cd& z) { return BigComplex(BigFloat(z.real()), BigFloat(z.imag())); }

}  // namespace

BigFloat default_tolerance(int precision_bits) { return pow2(16 - precision_bits / 2); }

BigFloat parameter_distance(const BigComplex& a, const BigComplex& b, const BigComplex& a2, const BigComplex& b2) {
    const BigFloat n1 = sqrt(a.re * a.re + a.im * a.im + b.re * b.re + b.im * b.im);
    const BigFloat n2 = sqrt(a2.re * a2.re + a2.im * a2.im + b2.re * b2.re + b2.im * b2.im);
    return abs(a * b2 - b * a2) / (n1 * n2);
}

std::optional<SpanWitness> xrank_upper_search(const ProjectedPoint& p, const SearchConfig& cfg) {
    const int n = p.n, d = n + 1, r = cfg.r;
    if (r < 1 || r > n) throw RangeError("search size r must lie in [1, n]");
    if (cfg.starts < 1) throw RangeError("at least one start is required");
    if (cfg.precision_bits < 64) throw RangeError("precision must be at least 64 bits");
    PrecisionScope scope(cfg.precision_bits + 32);
    const BigFloat tol = cfg.tolerance ? BigFloat(*cfg.tolerance) : default_tolerance(cfg.precision_bits);
    if (tol < pow2(-(cfg.precision_bits / 2))) throw RangeError("tolerance below 2^(-precision/2)");

    // Scale P so that its largest coordinate is 1.
    Rational big = 0;
    for (const auto& c : p.coords) big = std::max(big, Rational(abs(c)));
    CVec target;
    for (std::size_t k = 0; k < p.coords.size(); ++k) {
        const Rational scaled = p.coords[k] / big;
        target.emplace_back(to_bigfloat(scaled));
    }
    const BigFloat target_norm = norm(target);

    // The search runs on the image of P under t -> s t (which fixes X and O),
    // with s equalising the first and last nonzero coordinates; parameters
    // (a:b) found there correspond to (a : b/s) for P.
    const auto idx = kept_indices(d);
    std::size_t lo = 0, hi = target.size() - 1;
    while (target[lo].re == 0) ++lo;
    while (target[hi].re == 0) --hi;
    double s = 1;
    if (lo < hi)
        s = std::exp((std::log(std::abs(p.coords[lo].get_d())) - std::log(std::abs(p.coords[hi].get_d()))) /
                     (idx[hi] - idx[lo]));
    if (!std::isfinite(s) || s <= 0) s = 1;
    const BigFloat s_big(s);
    CVec work;
    BigFloat work_max = 0;
    for (std::size_t k = 0; k < target.size(); ++k) {
        work.emplace_back(target[k].re * pow(s_big, idx[k]));
        work_max = std::max(work_max, BigFloat(abs(work.back().re)));
    }
    Eigen::VectorXcd work_d(static_cast<Eigen::Index>(work.size()));
    for (std::size_t k = 0; k < work.size(); ++k) {
        work[k].re /= work_max;
        work_d(static_cast<Eigen::Index>(k)) = cd(static_cast<double>(work[k].re), 0);
    }

    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> angle(0, M_PI);
    std::normal_distribution<double> gauss(0, 1);
    const auto fresh = [&](std::vector<Chart>& charts, Eigen::VectorXcd& t, bool complex_start) {
        for (std::size_t j = 0; j < charts.size(); ++j) {
            const double phi = angle(rng);
            charts[j] = Chart{std::cos(phi), std::sin(phi)};
            const double re = gauss(rng), im = gauss(rng);
            t(static_cast<Eigen::Index>(j)) = cd(re, complex_start ? 0.5 * im : 0.0);
        }
    };

    // Curve points of the current parameters as the columns of a matrix.
    const auto columns = [&](const std::vector<Chart>& charts, const CVec& t) {
        CMat basis(work.size(), CVec(charts.size()));
        CVec v, dv;
        for (std::size_t j = 0; j < charts.size(); ++j) {
            BigComplex a, b, da, db;
            charts[j].point(t[j], a, b, da, db);
            curve_point(a, b, da, db, d, v, dv);
            for (std::size_t k = 0; k < work.size(); ++k) basis[k][j] = v[k];
        }
        return basis;
    };

    // Variable projection Levenberg-Marquardt on the parameters, the scalars
    // eliminated by least squares; returns the residual norm.
    const auto project_out = [&](const std::vector<Chart>& charts, const CVec& t, CVec& alpha, CVec& res,
                                 CMat* jac) {
        const std::size_t m = work.size(), k = charts.size();
        CMat v(m, CVec(k)), dv(m, CVec(k));
        CVec col, dcol;
        for (std::size_t j = 0; j < k; ++j) {
            BigComplex a, b, da, db;
            charts[j].point(t[j], a, b, da, db);
            curve_point(a, b, da, db, d, col, dcol);
            for (std::size_t i = 0; i < m; ++i) {
                v[i][j] = col[i];
                dv[i][j] = dcol[i];
            }
        }
        // P_perp g = g - V (V^H V)^{-1} V^H g.
        CMat gram(k, CVec(k));
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b)
                for (std::size_t i = 0; i < m; ++i) gram[a][b] = gram[a][b] + v[i][a].conj() * v[i][b];
        const auto perp = [&](const CVec& g, CVec* coef) -> std::optional<CVec> {
            CVec rhs(k);
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t i = 0; i < m; ++i) rhs[a] = rhs[a] + v[i][a].conj() * g[i];
            auto c = solve_square(gram, std::move(rhs));
            if (!c) return std::nullopt;
            CVec out = g;
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t a = 0; a < k; ++a) out[i] = out[i] - v[i][a] * (*c)[a];
            if (coef) *coef = std::move(*c);
            return out;
        };
        auto r0 = perp(work, &alpha);
        if (!r0) return false;
        res = std::move(*r0);
        if (jac) {
            jac->assign(m, CVec(k));
            for (std::size_t j = 0; j < k; ++j) {
                CVec g(m);
                for (std::size_t i = 0; i < m; ++i) g[i] = dv[i][j] * alpha[j];
                auto pg = perp(g, nullptr);
                if (!pg) return false;
                for (std::size_t i = 0; i < m; ++i) (*jac)[i][j] = -(*pg)[i];
            }
        }
        return true;
    };

    const auto polish = [&](const std::vector<Chart>& charts, BigState& x) {
        const std::size_t k = charts.size();
        CMat jac;
        CVec f;
        if (!project_out(charts, x.t, x.alpha, f, &jac)) return BigFloat(1);
        BigFloat res = norm(f), mu = BigFloat("1e-6");
        for (int iter = 0; iter < 200 && res > tol * pow2(-8); ++iter) {
            CMat normal(k, CVec(k));
            CVec g(k);
            for (std::size_t a = 0; a < k; ++a) {
                for (std::size_t b = 0; b < k; ++b)
                    for (std::size_t i = 0; i < f.size(); ++i) normal[a][b] = normal[a][b] + jac[i][a].conj() * jac[i][b];
                for (std::size_t i = 0; i < f.size(); ++i) g[a] = g[a] - jac[i][a].conj() * f[i];
            }
            for (std::size_t a = 0; a < k; ++a) normal[a][a].re += mu * (1 + abs(normal[a][a]));
            const auto step = solve_square(std::move(normal), std::move(g));
            if (!step) break;
            CVec t2 = x.t, alpha2;
            for (std::size_t j = 0; j < k; ++j) t2[j] = t2[j] + (*step)[j];
            CMat jac2;
            CVec f2;
            if (project_out(charts, t2, alpha2, f2, &jac2) && norm(f2) < res) {
                x.t = std::move(t2);
                x.alpha = std::move(alpha2);
                f = std::move(f2);
                jac = std::move(jac2);
                res = norm(f);
                mu = std::max(BigFloat(mu / 5), pow2(-cfg.precision_bits));
            } else {
                mu *= 4;
                if (mu > 1e12) break;
            }
        }
        return res;
    };

    // Maps parameters back to P and checks the residual and distinctness.
    const auto accept = [&](const std::vector<Chart>& charts, const BigState& x, int start) -> std::optional<SpanWitness> {
        SpanWitness w;
        w.start = start;
        w.target = p;
        CMat basis(target.size(), CVec(static_cast<std::size_t>(r)));
        CVec v, dv;
        for (int j = 0; j < r; ++j) {
            BigComplex a, b, da, db;
            charts[static_cast<std::size_t>(j)].point(x.t[static_cast<std::size_t>(j)], a, b, da, db);
            b = b / BigComplex(s_big);
            const BigFloat scale = sqrt(a.re * a.re + a.im * a.im + b.re * b.re + b.im * b.im);
            w.a.push_back(a / BigComplex(scale));
            w.b.push_back(b / BigComplex(scale));
            curve_point(a, b, da, db, d, v, dv);
            for (std::size_t k = 0; k < target.size(); ++k) basis[k][static_cast<std::size_t>(j)] = v[k];
        }
        // Orthogonal projection of P onto the span of the curve points.
        const auto coef = solve_lsq(basis, target);
        if (!coef) return std::nullopt;
        CVec proj_res = target;
        for (std::size_t k = 0; k < target.size(); ++k)
            for (int j = 0; j < r; ++j)
                proj_res[k] = proj_res[k] - basis[k][static_cast<std::size_t>(j)] * (*coef)[static_cast<std::size_t>(j)];
        w.residual = norm(proj_res) / target_norm;
        w.scalars = *coef;
        if (!(w.residual < tol)) return std::nullopt;
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j)
                if (parameter_distance(w.a[static_cast<std::size_t>(i)], w.b[static_cast<std::size_t>(i)],
                                       w.a[static_cast<std::size_t>(j)], w.b[static_cast<std::size_t>(j)]) < 1e-8)
                    return std::nullopt;
        return w;
    };

    for (int start = 0; start < cfg.starts; ++start) {
        std::vector<Chart> charts(static_cast<std::size_t>(r));
        DoubleState xd;
        xd.t.resize(r);
        fresh(charts, xd.t, start % 2 == 1);
        const double cost = levenberg_marquardt(charts, xd, work_d, d);
        if (!std::isfinite(cost) || cost > 1e-6) continue;

        BigState x;
        for (int j = 0; j < r; ++j) x.t.push_back(to_big(xd.t(j)));
        BigFloat best = polish(charts, x);
        if (auto w = accept(charts, x, start)) return w;

        // Components far below double resolution are invisible to the first
        // stage. Keep the dominant points, fit the rest against the residual
        // computed in multiprecision, polish everything jointly, and repeat
        // from any improvement.
        for (int round = 0; round < 4 * r; ++round) {
            const CMat basis = columns(charts, x.t);
            const auto coef = solve_lsq(basis, work);
            if (!coef) break;
            std::vector<std::pair<BigFloat, int>> weight;
            for (int j = 0; j < r; ++j) {
                BigFloat col = 0;
                for (const auto& row : basis) col += abs(row[static_cast<std::size_t>(j)]) * abs(row[static_cast<std::size_t>(j)]);
                weight.emplace_back(abs((*coef)[static_cast<std::size_t>(j)]) * sqrt(col), j);
            }
            std::sort(weight.begin(), weight.end(), [](const auto& u, const auto& v) { return u.first > v.first; });
            // Points to refit: the closest pair first (merging points mimic a
            // tangent direction with large cancelling scalars), then the k
            // weakest contributions.
            std::vector<std::vector<int>> drops;
            if (r >= 2) {
                std::vector<BigComplex> pa(static_cast<std::size_t>(r)), pb(static_cast<std::size_t>(r));
                for (int j = 0; j < r; ++j) {
                    BigComplex da, db;
                    charts[static_cast<std::size_t>(j)].point(x.t[static_cast<std::size_t>(j)], pa[static_cast<std::size_t>(j)],
                                                              pb[static_cast<std::size_t>(j)], da, db);
                }
                int ci = 0, cj = 1;
                BigFloat closest = 2;
                for (int i = 0; i < r; ++i)
                    for (int j = i + 1; j < r; ++j) {
                        const BigFloat dist = parameter_distance(pa[static_cast<std::size_t>(i)], pb[static_cast<std::size_t>(i)],
                                                                 pa[static_cast<std::size_t>(j)], pb[static_cast<std::size_t>(j)]);
                        if (dist < closest) {
                            closest = dist;
                            ci = i;
                            cj = j;
                        }
                    }
                if (closest < 1e-2) drops = {{ci}, {cj}, {ci, cj}};
            }
            for (int k = 1; k < r; ++k) {
                std::vector<int> drop;
                for (int i = r - k; i < r; ++i) drop.push_back(weight[static_cast<std::size_t>(i)].second);
                drops.push_back(std::move(drop));
            }
            bool improved = false;
            for (std::size_t di = 0; di < drops.size() && !improved; ++di) {
                const int k = static_cast<int>(drops[di].size());
                if (k >= r) continue;
                const int kept = r - k;
                std::vector<Chart> kept_charts;
                CVec kept_t;
                for (int j = 0; j < r; ++j) {
                    if (std::find(drops[di].begin(), drops[di].end(), j) != drops[di].end()) continue;
                    kept_charts.push_back(charts[static_cast<std::size_t>(j)]);
                    kept_t.push_back(x.t[static_cast<std::size_t>(j)]);
                }
                const CMat kb = columns(kept_charts, kept_t);
                const auto kc = solve_lsq(kb, work);
                if (!kc) continue;
                CVec resid = work;
                BigFloat resid_max = 0;
                for (std::size_t row = 0; row < work.size(); ++row) {
                    for (int i = 0; i < kept; ++i)
                        resid[row] = resid[row] - kb[row][static_cast<std::size_t>(i)] * (*kc)[static_cast<std::size_t>(i)];
                    resid_max = std::max(resid_max, BigFloat(abs(resid[row])));
                }
                if (resid_max == 0) continue;
                Eigen::VectorXcd resid_d(static_cast<Eigen::Index>(work.size()));
                Eigen::MatrixXcd fixed(static_cast<Eigen::Index>(work.size()), kept);
                for (int i = 0; i < kept; ++i) {
                    BigFloat col = 0;
                    for (const auto& row : kb) col = std::max(col, BigFloat(abs(row[static_cast<std::size_t>(i)])));
                    for (std::size_t row = 0; row < work.size(); ++row) {
                        const BigComplex z = kb[row][static_cast<std::size_t>(i)] / BigComplex(col);
                        fixed(static_cast<Eigen::Index>(row), i) = cd(static_cast<double>(z.re), static_cast<double>(z.im));
                    }
                }
                for (std::size_t row = 0; row < work.size(); ++row) {
                    const BigComplex z = resid[row] / BigComplex(resid_max);
                    resid_d(static_cast<Eigen::Index>(row)) = cd(static_cast<double>(z.re), static_cast<double>(z.im));
                }
                for (int attempt = 0; attempt < 4 && !improved; ++attempt) {
                    std::vector<Chart> extra(static_cast<std::size_t>(k));
                    DoubleState xe;
                    xe.t.resize(k);
                    fresh(extra, xe.t, attempt % 2 == 1);
                    const double c2 = levenberg_marquardt(extra, xe, resid_d, d, &fixed);
                    if (!std::isfinite(c2) || c2 > 1e-6 * resid_d.norm()) continue;
                    std::vector<Chart> all = kept_charts;
                    BigState y;
                    y.t = kept_t;
                    for (int j = 0; j < k; ++j) {
                        all.push_back(extra[static_cast<std::size_t>(j)]);
                        y.t.push_back(to_big(xe.t(j)));
                    }
                    const BigFloat res = polish(all, y);
                    if (auto w = accept(all, y, start)) return w;
                    if (res < best * BigFloat("0.5")) {
                        best = res;
                        charts = std::move(all);
                        x = std::move(y);
                        improved = true;
                    }
                }
            }
            if (!improved) break;
        }
    }
    return std::nullopt;
}

bool parameters_match(const SpanWitness& w, const std::vector<NumericRoot>& points, double radius) {
    if (w.a.size() != points.size()) return false;
    std::vector<bool> used(points.size(), false);
    for (std::size_t i = 0; i < w.a.size(); ++i) {
        bool found = false;
        for (std::size_t j = 0; j < points.size() && !found; ++j) {
            if (used[j]) continue;
            if (parameter_distance(w.a[i], w.b[i], points[j].a, points[j].b) < radius) used[j] = found = true;
        }
        if (!found) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

SecantProbe secant_dimension_probe(int s, int n, std::uint64_t seed) {
    if (n < 1) throw RangeError("n must be positive");
    if (s < 1 || s > n) throw RangeError("secant index s must lie in [1, n]");
    const int d = n + 1;
    const auto idx = kept_indices(d);
    std::mt19937_64 rng(seed);
    // The generic rank is the maximum over sample points; three confirmed
    // samples guard against an unlucky special point.
    SecantProbe out;
    int confirmed = 0;
    for (int attempt = 1; attempt <= 12 && confirmed < 3; ++attempt) {
        out.attempts = attempt;
        std::vector<Rational> ts;
        while (static_cast<int>(ts.size()) < s) {
            Rational t(static_cast<long>(rng() % 13) - 6, static_cast<long>(1 + rng() % 4));
            t.canonicalize();
            if (is_zero(t) || std::find(ts.begin(), ts.end(), t) != ts.end()) continue;
            ts.push_back(t);
        }
        // Columns: the curve point at (1:t_i) and alpha_i times its t-derivative.
        std::vector<std::vector<Rational>> cols;
        for (const Rational& t : ts) {
            Rational alpha(static_cast<long>(1 + rng() % 7), static_cast<long>(1 + rng() % 3));
            alpha.canonicalize();
            std::vector<Rational> v, dv;
            for (int i : idx) {
                const Rational bin(binomial(static_cast<unsigned>(d), static_cast<unsigned>(i)));
                Rational pw = 1;
                for (int k = 0; k < i - 1; ++k) pw *= t;
                v.push_back(bin * (i == 0 ? Rational(1) : pw * t));
                dv.push_back(i == 0 ? Rational(0) : alpha * bin * Rational(i) * pw);
            }
            cols.push_back(v);
            cols.push_back(dv);
        }
        const int exact = static_cast<int>(rank(Matrix<Rational>::from_columns(cols, idx.size())));

        Eigen::MatrixXd md(static_cast<Eigen::Index>(idx.size()), static_cast<Eigen::Index>(cols.size()));
        for (std::size_t j = 0; j < cols.size(); ++j) {
            double nrm = 0;
            for (const auto& q : cols[j]) nrm += q.get_d() * q.get_d();
            nrm = std::sqrt(nrm);
            for (std::size_t k = 0; k < idx.size(); ++k)
                md(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) = cols[j][k].get_d() / nrm;
        }
        const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXd>(md).singularValues();
        int numeric = 0;
        for (Eigen::Index k = 0; k < sv.size(); ++k)
            if (sv(k) > 1e-9 * sv(0)) ++numeric;
        if (numeric != exact) continue;
        ++confirmed;
        if (exact > out.exact_rank) out.exact_rank = out.numeric_rank = exact;
    }
    if (confirmed == 3) {
        out.dimension = std::min(out.exact_rank - 1, n);
        return out;
    }
    throw RetryExhausted("secant probe: exact and numeric Jacobian ranks disagree on every sample");
}

// ---------------------------------------------------------------------------

std::vector<BinaryForm> fuzz_forms(int degree, int samples, std::uint64_t seed) {
    if (degree < 2) throw RangeError("dichotomy fuzz needs degree >= 2");
    std::mt19937_64 rng(seed);
    auto small = [&](int bound) { return static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound; };
    std::vector<BinaryForm> out;
    for (int i = 0; i <= degree && static_cast<int>(out.size()) < samples; ++i) out.push_back(BinaryForm::monomial(degree, i));
    if (static_cast<int>(out.size()) < samples) out.push_back(linear_power(Rational(1), Rational(1), degree));
    for (int k = static_cast<int>(out.size()); k < samples; ++k) {
        if (k % 2 == 0) {
            std::vector<Rational> c(static_cast<std::size_t>(degree + 1));
            bool any = false;
            for (auto& v : c) {
                if (rng() % 5 < 2) continue;
                v = Rational(small(9));
                any = any || !is_zero(v);
            }
            if (!any) c.back() = 1;
            out.emplace_back(std::move(c));
            continue;
        }
        const int terms = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>((degree + 2) / 2));
        BinaryForm f = BinaryForm::zero(degree);
        for (int j = 0; j < terms; ++j)
            f = f + Rational(small(5)) * linear_power(Rational(small(3)), Rational(small(3)), degree);
        out.push_back(f.is_zero() ? BinaryForm::monomial(degree, 0) : f);
    }
    return out;
}

DichotomyReport dichotomy_fuzz(int degree, int samples, std::uint64_t seed) {
    DichotomyReport rep;
    rep.degree = degree;
    rep.samples = samples;
    const auto forms = fuzz_forms(degree, samples, seed);
    std::mt19937_64 rng(seed ^ 0x5DEECE66DULL);
    auto small = [&](int bound) { return static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound; };

    for (int k = 0; k < samples; ++k) {
        const BinaryForm& f = forms[static_cast<std::size_t>(k)];
        const RankCertificate cert = rank(f);
        const int w = cert.border_rank, r = cert.rank;
        bool ok = (r == w || r == degree + 2 - w) && w <= r;
        if (ok && cert.kind == WitnessKind::SquareFree) ok = is_square_free(cert.apolar_form) && in_span(f, cert.apolar_form);
        if (ok && cert.kind == WitnessKind::NonReduced && r <= degree) {
            // The upper value is realised: a random apolar form of degree d + 2 - w is square-free.
            const auto basis = kernel_basis(catalecticant(f, r));
            bool found = false;
            for (int trial = 0; trial < 20 && !found; ++trial) {
                BinaryForm g = BinaryForm::zero(r);
                for (const auto& b : basis) g = g + Rational(small(50)) * b;
                found = !g.is_zero() && is_square_free(g);
            }
            ok = found;
        }
        ++rep.checked;
        ++rep.rank_histogram[r];
        if (!ok) {
            ++rep.violations;
            rep.counterexample = render_form(f);
            break;
        }
    }
    return rep;
}

}  // namespace waring
