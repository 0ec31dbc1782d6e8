#include "waring/projection.hpp"

#include <algorithm>
#include <random>

#include "waring/roots.hpp"

namespace waring {

ProjectionFrame::ProjectionFrame(int n_) : n(n_) {
    if (n < 3) throw RangeError("the projection frame needs n >= 3");
}

ProjectedPoint::ProjectedPoint(int n_, std::vector<Rational> coords_) : n(n_), coords(std::move(coords_)) {
    if (n < 1) throw RangeError("projected points need n >= 1");
    if (static_cast<int>(coords.size()) != n + 1)
        throw RangeError("a point of P^" + std::to_string(n) + " needs " + std::to_string(n + 1) + " coordinates");
    if (std::all_of(coords.begin(), coords.end(), [](const Rational& q) { return is_zero(q); }))
        throw ZeroFormError("the zero vector is not a point");
}

const Rational& ProjectedPoint::coefficient(int i) const {
    if (i == 1 || i < 0 || i > n + 1) throw RangeError("slot " + std::to_string(i) + " is not a projected coordinate");
    return coords[static_cast<std::size_t>(i == 0 ? 0 : i - 1)];
}

bool same_point(const ProjectedPoint& a, const ProjectedPoint& b) {
    if (a.n != b.n) return false;
    return proportional(BinaryForm(a.coords), BinaryForm(b.coords));
}

ProjectedPoint project(const BinaryForm& f) {
    if (f.is_zero()) throw ZeroFormError("projecting the zero form");
    const int d = f.degree();
    if (d < 2) throw RangeError("projection needs degree at least 2");
    std::vector<Rational> coords;
    for (int i = 0; i <= d; ++i)
        if (i != 1) coords.push_back(f[static_cast<std::size_t>(i)]);
    if (std::all_of(coords.begin(), coords.end(), [](const Rational& q) { return is_zero(q); }))
        throw CenterOfProjection("the form is proportional to u^n t, the centre of projection");
    return ProjectedPoint(d - 1, std::move(coords));
}

BinaryForm lift(const ProjectedPoint& p, const Rational& lambda) {
    std::vector<Rational> c;
    c.reserve(p.coords.size() + 1);
    c.push_back(p.coords[0]);
    c.push_back(lambda);
    c.insert(c.end(), p.coords.begin() + 1, p.coords.end());
    return BinaryForm(std::move(c));
}

BasicBinaryForm<NfElement> lift(const ProjectedPoint& p, const NfElement& lambda) {
    std::vector<NfElement> c;
    c.reserve(p.coords.size() + 1);
    c.emplace_back(p.coords[0]);
    c.push_back(lambda);
    for (std::size_t i = 1; i < p.coords.size(); ++i) c.emplace_back(p.coords[i]);
    return BasicBinaryForm<NfElement>(std::move(c));
}

ProjectedPoint cusp_curve_point(const P1Point& t, int n) {
    return project(linear_power(t.a(), t.b(), n + 1));
}

// ---------------------------------------------------------------------------

namespace {

UPoly<Rational> content_free(const UPoly<Rational>& p) {
    Integer den = 1;
    for (const auto& v : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    std::vector<Integer> ic;
    for (const auto& v : p.coeffs()) ic.push_back(v.get_num() * (den / v.get_den()));
    Integer g = 0;
    for (const auto& v : ic) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (sgn(ic.back()) < 0) g = -g;
    std::vector<Rational> out;
    for (const auto& v : ic) out.emplace_back(v / g);
    return UPoly<Rational>(std::move(out));
}

}  // namespace

AlgebraicNumber AlgebraicNumber::rational(const Rational& q) {
    AlgebraicNumber a;
    a.minpoly = content_free(UPoly<Rational>(std::vector<Rational>{-q, 1}));
    a.approximation = BigComplex(to_bigfloat(q));
    return a;
}

Rational AlgebraicNumber::rational_value() const {
    if (!is_rational()) throw RangeError("not a rational number");
    return -minpoly.coeff(0) / minpoly.coeff(1);
}

NfElement AlgebraicNumber::to_element() const {
    if (is_rational()) return NfElement(rational_value());
    return NfElement::generator(std::make_shared<const NumberField>(minpoly));
}

std::string AlgebraicNumber::to_string() const {
    if (is_rational()) return waring::to_string(rational_value());
    std::string out = "root of";
    for (int i = degree(); i >= 0; --i) out += " " + waring::to_string(minpoly.coeff(i));
    return out + " near " + to_decimal(approximation, 20);
}

std::vector<AlgebraicNumber> algebraic_roots(const UPoly<Rational>& irreducible, int precision_bits) {
    const UPoly<Rational> mp = content_free(irreducible);
    if (mp.degree() < 1) throw RangeError("constant polynomials have no roots");
    if (mp.degree() == 1) return {AlgebraicNumber::rational(-mp.coeff(0) / mp.coeff(1))};
    PrecisionScope scope(precision_bits + 32);
    std::vector<BigComplex> c;
    for (const auto& v : mp.coeffs()) c.emplace_back(to_bigfloat(v));
    const CertifiedRoots cr = certified_roots(c, precision_bits);
    std::vector<AlgebraicNumber> out;
    for (std::size_t i = 0; i < cr.values.size(); ++i) {
        AlgebraicNumber a;
        a.minpoly = mp;
        a.approximation = cr.values[i];
        a.radius = cr.radii[i];
        out.push_back(std::move(a));
    }
    std::sort(out.begin(), out.end(), [](const AlgebraicNumber& x, const AlgebraicNumber& y) {
        if (x.approximation.re != y.approximation.re) return x.approximation.re > y.approximation.re;
        return x.approximation.im > y.approximation.im;
    });
    return out;
}

// ---------------------------------------------------------------------------

namespace {

// Degree <= 2 in lambda, so three exact evaluations decide "for all lambda".
const Rational kProbe[3] = {Rational(0), Rational(1), Rational(-1)};

bool kernel_for_all_lambda(const ProjectedPoint& p, int r) {
    const int d = p.n + 1;
    if (d - r + 1 < r + 1) return true;
    for (const auto& lam : kProbe)
        if (rank(catalecticant(lift(p, lam), r).matrix) == static_cast<std::size_t>(r + 1)) return false;
    return true;
}

Matrix<Rational> rows_of(const Matrix<Rational>& m, const std::vector<std::size_t>& rows) {
    Matrix<Rational> out(rows.size(), m.cols());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(rows[i], j);
    return out;
}

}  // namespace

SpecialLambdas special_lambdas(const ProjectedPoint& p, int r, int precision_bits) {
    const int d = p.n + 1;
    if (r < 1 || r > d) throw RangeError("level " + std::to_string(r) + " outside [1, " + std::to_string(d) + "]");
    SpecialLambdas out;
    if (kernel_for_all_lambda(p, r)) {
        out.all_lambda = true;
        return out;
    }

    // gcd of the maximal minors, each interpolated from its values at 0, 1, -1.
    const Matrix<Rational> m[3] = {catalecticant(lift(p, kProbe[0]), r).matrix,
                                   catalecticant(lift(p, kProbe[1]), r).matrix,
                                   catalecticant(lift(p, kProbe[2]), r).matrix};
    const std::size_t rows = m[0].rows(), k = m[0].cols();
    // Subsets are enumerated from the bottom rows up: minors avoiding rows 0
    // and 1 are constants and end the search as soon as one is nonzero.
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    UPoly<Rational> g;
    while (true) {
        std::vector<std::size_t> sel(k);
        for (std::size_t i = 0; i < k; ++i) sel[i] = rows - 1 - pick[k - 1 - i];
        Rational v[3];
        for (int s = 0; s < 3; ++s) v[s] = determinant(rows_of(m[s], sel));
        const UPoly<Rational> minor(std::vector<Rational>{v[0], (v[1] - v[2]) / 2, (v[1] + v[2]) / 2 - v[0]});
        g = g.is_zero() ? minor : (minor.is_zero() ? g : gcd(g, minor));
        if (!g.is_zero() && g.degree() == 0) break;

        std::size_t i = k;
        while (i > 0 && pick[i - 1] == rows - k + (i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (g.is_zero()) throw RangeError("minor gcd vanished although a full-rank probe exists");  // unreachable
    out.minor_gcd = monic(g);
    if (out.minor_gcd.degree() <= 0) return out;

    for (const auto& [part, mult] : squarefree_parts(out.minor_gcd)) {
        UPoly<Rational> rest = part;
        for (const Rational& q : rational_roots(part)) {
            out.values.push_back(AlgebraicNumber::rational(q));
            rest = divmod(rest, UPoly<Rational>(std::vector<Rational>{-q, 1})).first;
        }
        if (rest.degree() >= 1) out.values.push_back(algebraic_roots(rest, precision_bits).front());
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

struct Evaluated {
    LambdaEvaluation summary;
    std::optional<RankCertificate> rational_cert;
    std::optional<BasicRankCertificate<NfElement>> field_cert;
};

Evaluated evaluate_at(const ProjectedPoint& p, const AlgebraicNumber& lambda, bool generic) {
    Evaluated e;
    e.summary.lambda = lambda;
    e.summary.generic = generic;
    if (lambda.is_rational()) {
        e.rational_cert = rank(lift(p, lambda.rational_value()));
        e.summary.border_rank = e.rational_cert->border_rank;
        e.summary.rank = e.rational_cert->rank;
    } else {
        e.field_cert = rank_certificate(lift(p, lambda.to_element()));
        e.summary.border_rank = e.field_cert->border_rank;
        e.summary.rank = e.field_cert->rank;
    }
    return e;
}

Rational random_lambda(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 1000000);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

}  // namespace

XRankResult x_rank(const ProjectedPoint& p, const XRankOptions& options) {
    XRankResult out;

    int w_gen = 1;
    while (!kernel_for_all_lambda(p, w_gen)) ++w_gen;
    out.generic_level = w_gen;

    std::vector<Evaluated> evals;
    SpecialLambdas special;
    // Rank drops at lower levels imply a drop at level w_gen - 1 (kernels form
    // an ideal), so that level lists every special lambda.
    if (w_gen >= 2) special = special_lambdas(p, w_gen - 1, options.precision_bits);
    for (const auto& lam : special.values) {
        if (lam.degree() > options.nf_degree_bound) {
            out.incomplete = true;
            out.unexplored.push_back(lam);
            continue;
        }
        evals.push_back(evaluate_at(p, lam, false));
    }

    std::mt19937_64 rng(options.seed);
    std::optional<std::pair<int, int>> previous;
    for (int draw = 0; draw < 12; ++draw) {
        const Rational lam = random_lambda(rng);
        if (!special.minor_gcd.is_zero() && is_zero(special.minor_gcd(lam))) continue;
        evals.push_back(evaluate_at(p, AlgebraicNumber::rational(lam), true));
        const std::pair<int, int> cert{evals.back().summary.border_rank, evals.back().summary.rank};
        if (previous && *previous == cert) break;
        previous = cert;
    }
    if (evals.empty()) throw RetryExhausted("no fibre point could be evaluated");

    std::size_t best = 0;
    for (std::size_t i = 1; i < evals.size(); ++i)
        if (evals[i].summary.rank < evals[best].summary.rank) best = i;
    for (const auto& e : evals) out.examined.push_back(e.summary);

    const Evaluated& w = evals[best];
    out.value = w.summary.rank;
    out.witness_lambda = w.summary.lambda;
    out.witness_generic = w.summary.generic;
    out.border_rank = w.summary.border_rank;
    out.fiber_rank = w.summary.rank;
    if (w.rational_cert) {
        const auto& c = *w.rational_cert;
        out.kernel_dimension = c.kernel_dimension;
        out.kind = c.kind;
        out.rational_apolar_form = c.apolar_form;
        for (const auto& v : c.apolar_form.coeffs()) out.apolar_form.push_back(to_string(v));
        if (c.kind == WitnessKind::SquareFree) {
            const RationalSplit split = split_rational_points(c.apolar_form);
            for (const auto& [pt, mult] : split.points) out.witness_points.push_back(pt);
            out.witness_splits = split.remainder.degree() == 0;
        }
    } else {
        const auto& c = *w.field_cert;
        out.kernel_dimension = c.kernel_dimension;
        out.kind = c.kind;
        for (const auto& v : c.apolar_form.coeffs()) out.apolar_form.push_back(v.to_string("theta"));
    }
    return out;
}

}  // namespace waring
