#include "dgkernel/division.hpp"

#include <algorithm>
#include <sstream>

namespace dgk {

namespace {

// ---- small dense polynomial helpers (coefficients low to high) ----

using Poly = std::vector<Scalar>;

Poly poly_trim(Poly p)
{
    while (!p.empty() && p.back().is_zero())
        p.pop_back();
    return p;
}

int poly_deg(const Poly& p)
{
    return static_cast<int>(p.size()) - 1;
}

Scalar poly_eval(const Field& f, const Poly& p, const Scalar& x)
{
    Scalar acc = Scalar::zero(f);
    for (std::size_t i = p.size(); i-- > 0;)
        acc = acc * x + p[i];
    return acc;
}

// division with remainder by a monic-leading divisor; returns (q, r)
std::pair<Poly, Poly> poly_divmod(const Field& f, Poly num, const Poly& den)
{
    Poly q(num.size(), Scalar::zero(f));
    const int dd = poly_deg(den);
    while (poly_deg(num) >= dd && dd >= 0) {
        const int shift = poly_deg(num) - dd;
        const Scalar c = num.back() / den.back();
        q[shift] = c;
        for (int i = 0; i <= dd; ++i)
            num[shift + i] -= c * den[i];
        num = poly_trim(std::move(num));
    }
    return {poly_trim(std::move(q)), num};
}

// all integer divisors of |n| with both signs, n != 0
std::vector<BigInt> divisors_of(const BigInt& n)
{
    BigInt a = n < 0 ? BigInt(-n) : n;
    std::vector<BigInt> out;
    for (BigInt d = 1; d * d <= a; ++d)
        if (a % d == 0) {
            out.push_back(d);
            out.push_back(-d);
            if (d * d != a) {
                out.push_back(a / d);
                out.push_back(-(a / d));
            }
        }
    return out;
}

FactorResult factor_over_prime_field(const Field& f, const Poly& monic)
{
    FactorResult out;
    const int n = poly_deg(monic);
    const std::int64_t p = f.characteristic();
    for (int d = 1; d <= n / 2; ++d) {
        // enumerate monic candidates of degree d
        std::vector<std::int64_t> digits(d, 0);
        while (true) {
            Poly cand(d + 1, Scalar::zero(f));
            cand[d] = Scalar::one(f);
            for (int i = 0; i < d; ++i)
                cand[i] = Scalar::from_int(f, digits[i]);
            auto [q, r] = poly_divmod(f, monic, cand);
            if (r.empty()) {
                out.irreducible = false;
                out.factor = cand;
                return out;
            }
            int pos = d - 1;
            while (pos >= 0 && digits[pos] == p - 1)
                digits[pos--] = 0;
            if (pos < 0)
                break;
            ++digits[pos];
        }
    }
    out.irreducible = true;
    return out;
}

FactorResult factor_over_rationals(const Field& f, const Poly& monic)
{
    FactorResult out;
    const int n = poly_deg(monic);
    // clear denominators: primitive integer polynomial with the same roots
    BigInt lcm_den = 1;
    for (const Scalar& c : monic) {
        const BigInt den = boost::multiprecision::denominator(c.rational());
        lcm_den = lcm_den / boost::multiprecision::gcd(lcm_den, den) * den;
    }
    std::vector<BigInt> F(n + 1);
    for (int i = 0; i <= n; ++i) {
        const BigRat scaled = monic[i].rational() * BigRat(lcm_den);
        F[i] = boost::multiprecision::numerator(scaled);
    }
    BigInt content = 0;
    for (const BigInt& c : F)
        content = boost::multiprecision::gcd(content, c);
    if (content > 1)
        for (BigInt& c : F)
            c /= content;

    auto eval_int = [&](const BigInt& x) {
        BigInt acc = 0;
        for (int i = n; i >= 0; --i)
            acc = acc * x + F[i];
        return acc;
    };

    // integer (hence rational, by monicity up to lead) roots first
    for (int d = 1; d <= n / 2; ++d) {
        // evaluation points 0, 1, -1, 2, -2, ...
        std::vector<BigInt> points;
        for (int i = 0; static_cast<int>(points.size()) <= d; ++i) {
            points.push_back(i == 0 ? BigInt(0) : BigInt((i + 1) / 2 * ((i % 2) ? 1 : -1)));
        }
        std::vector<BigInt> values;
        bool root_found = false;
        BigInt root;
        for (const BigInt& x : points) {
            BigInt v = eval_int(x);
            if (v == 0) {
                root = x;
                root_found = true;
                break;
            }
            values.push_back(v);
        }
        if (root_found) {
            out.irreducible = false;
            out.factor = {Scalar::from_big(f, -root, 1), Scalar::one(f)};
            return out;
        }
        if (d == 1) {
            // degree-1 factors of a monic rational polynomial are (x - r) for a
            // rational root; with the primitive form, roots are p/q with
            // q | lead(F), p | F(0)
            const BigInt lead = F[n];
            const BigInt cst = F[0];
            if (cst == 0) {
                out.irreducible = false;
                out.factor = {Scalar::zero(f), Scalar::one(f)};
                return out;
            }
            for (const BigInt& p : divisors_of(cst))
                for (const BigInt& q : divisors_of(lead)) {
                    if (q < 0)
                        continue;
                    const Scalar r = Scalar::from_big(f, p, q);
                    if (poly_eval(f, monic, r).is_zero()) {
                        out.irreducible = false;
                        out.factor = {-r, Scalar::one(f)};
                        return out;
                    }
                }
            continue;
        }
        // Kronecker: interpolate candidate degree-d factors through divisor tuples
        std::vector<std::vector<BigInt>> divs;
        std::size_t combos = 1;
        for (const BigInt& v : values) {
            divs.push_back(divisors_of(v));
            combos *= divs.back().size();
            if (combos > 2'000'000)
                throw std::invalid_argument(
                    "factor_polynomial: Kronecker search too large for this input");
        }
        std::vector<std::size_t> pick(values.size(), 0);
        while (true) {
            // Lagrange interpolation through (points[i], divs[i][pick[i]])
            Poly cand(1, Scalar::zero(f));
            cand.reserve(d + 1);
            {
                std::vector<Scalar> xs, ys;
                for (std::size_t i = 0; i <= static_cast<std::size_t>(d); ++i) {
                    xs.push_back(Scalar::from_big(f, points[i], 1));
                    ys.push_back(Scalar::from_big(f, divs[i][pick[i]], 1));
                }
                // Newton form
                std::vector<Scalar> coef = ys;
                for (std::size_t j = 1; j < xs.size(); ++j)
                    for (std::size_t i = xs.size(); i-- > j;)
                        coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
                Poly acc = {coef.back()};
                for (std::size_t i = xs.size() - 1; i-- > 0;) {
                    // acc = acc * (x - xs[i]) + coef[i]
                    Poly next(acc.size() + 1, Scalar::zero(f));
                    for (std::size_t k = 0; k < acc.size(); ++k) {
                        next[k + 1] += acc[k];
                        next[k] -= acc[k] * xs[i];
                    }
                    next[0] += coef[i];
                    acc = poly_trim(std::move(next));
                }
                cand = acc;
            }
            if (poly_deg(cand) == d) {
                auto [q, r] = poly_divmod(f, monic, cand);
                if (r.empty() && poly_deg(q) == n - d) {
                    // normalize to monic
                    Poly monic_factor = cand;
                    const Scalar lead = monic_factor.back();
                    for (Scalar& c : monic_factor)
                        c = c / lead;
                    out.irreducible = false;
                    out.factor = monic_factor;
                    return out;
                }
            }
            std::size_t i = 0;
            while (i < pick.size() && pick[i] + 1 == divs[i].size())
                pick[i++] = 0;
            if (i == pick.size())
                break;
            ++pick[i];
        }
    }
    out.irreducible = true;
    return out;
}

bool differential_is_zero(const DGAlgebra& a)
{
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (!is_zero_vec(a.diff_entry(i)))
            return false;
    return true;
}

bool is_plain_commutative(const DGAlgebra& a)
{
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (a.mul_entry(i, j) != a.mul_entry(j, i))
                return false;
    return true;
}

bool is_graded_commutative(const DGAlgebra& a)
{
    const Field& f = a.field();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            const bool neg = (a.degree_of(i) % 2 != 0) && (a.degree_of(j) % 2 != 0);
            Vec rhs = a.mul_entry(j, i);
            if (neg)
                rhs = scale_vec(-Scalar::one(f), rhs);
            if (a.mul_entry(i, j) != rhs)
                return false;
        }
    return true;
}

// does u have a two-sided inverse? (finite-dimensional: one side suffices, but
// both are solved per the definition)
bool is_invertible(const DGAlgebra& g, const Vec& u, int deg)
{
    GradedMap left = g.mult_map(u, deg, Side::left);
    GradedMap right = g.mult_map(u, deg, Side::right);
    const Vec unit0 = g.component(g.unit(), 0);
    auto lv = solve_affine(left, 0, unit0);
    auto rv = solve_affine(right, 0, unit0);
    return lv.has_value() && rv.has_value();
}

} // namespace

std::vector<Scalar> minimal_polynomial(const DGAlgebra& g, const Vec& u)
{
    const Field& f = g.field();
    std::vector<Vec> powers = {g.unit()};
    Vec cur = g.unit();
    while (true) {
        Matrix rows = Matrix::from_rows(f, powers, g.dim());
        cur = g.multiply(cur, u);
        auto c = coordinates_in_rows(row_space(rows), cur);
        if (c) {
            // express in the power basis (solve against the raw powers)
            auto cc = coordinates_in_rows(rows, cur);
            if (!cc)
                throw std::logic_error("minimal_polynomial: inconsistent span");
            Poly p(powers.size() + 1, Scalar::zero(f));
            for (std::size_t i = 0; i < powers.size(); ++i)
                p[i] = -(*cc)[i];
            p.back() = Scalar::one(f);
            return p;
        }
        powers.push_back(cur);
        if (powers.size() > g.dim() + 1)
            throw std::logic_error("minimal_polynomial: no dependence found");
    }
}

FactorResult factor_polynomial(const Field& f, const std::vector<Scalar>& monic_poly)
{
    if (monic_poly.size() < 2 || !monic_poly.back().is_one())
        throw std::invalid_argument("factor_polynomial: expected a monic polynomial");
    if (monic_poly.size() == 2) {
        FactorResult r;
        r.irreducible = true;
        return r;
    }
    return f.is_prime_field() ? factor_over_prime_field(f, monic_poly)
                              : factor_over_rationals(f, monic_poly);
}

AcyclicityVerdict is_acyclic(const DGAlgebra& a)
{
    AcyclicityVerdict out;
    auto s = solve_affine(a.differential_map(), 0, a.component(a.unit(), 0));
    if (s) {
        out.acyclic = true;
        out.witness_y = a.embed_component(-1, s->particular);
        return out;
    }
    out.acyclic = false;
    HomologyAlgebra h = homology_algebra(a);
    for (const auto& [deg, dim] : h.algebra.space().dims())
        out.homology_dims[deg] = dim;
    return out;
}

AcyclicityVerdict is_acyclic(const TwistedLaurentDGA& l, LaurentElement* witness_out,
                             int window_lo, int window_hi)
{
    AcyclicityVerdict out;
    auto y = l.solve_d_equals(l.one(), 0);
    if (y && !y->is_zero()) {
        out.acyclic = true;
        if (witness_out)
            *witness_out = *y;
        return out;
    }
    out.acyclic = false;
    for (int deg = window_lo; deg <= window_hi; ++deg)
        if (l.degree_dim(deg) > 0 && l.homology_dim(deg) > 0)
            out.homology_dims[deg] = l.homology_dim(deg);
    return out;
}

Report acyclic_decomposition(const DGAlgebra& a, const Vec& y)
{
    Report rep("acyclic_decomposition");
    rep.inputs["algebra"] = a.label();
    if (a.differentiate(y) != a.unit()) {
        rep.fail("witness_invalid");
        return rep;
    }
    KernelImage ki = kernel_and_image(a.differential_map());
    const GradedSubspace& c = ki.kernel;

    std::map<int, std::vector<Vec>> right_vecs, left_vecs;
    for (int deg : c.support()) {
        const Matrix rows = c.basis(deg);
        for (std::size_t r = 0; r < rows.rows(); ++r) {
            const Vec cv = a.embed_component(deg, rows.row(r));
            const Vec cy = a.multiply(cv, y);
            const Vec yc = a.multiply(y, cv);
            for (const auto& [dd, comp] : a.decompose(cy))
                right_vecs[dd].push_back(comp);
            for (const auto& [dd, comp] : a.decompose(yc))
                left_vecs[dd].push_back(comp);
        }
    }
    GradedSubspace cy = GradedSubspace::span(a.field(), a.space(), right_vecs);
    GradedSubspace yc = GradedSubspace::span(a.field(), a.space(), left_vecs);

    for (const auto& [name, other] : {std::pair<std::string, const GradedSubspace*>{"ker+ker*y", &cy},
                                      {"ker+y*ker", &yc}}) {
        GradedSubspace sum = subspace_sum(c, *other);
        GradedSubspace inter = subspace_intersect(c, *other);
        for (int deg : a.space().support()) {
            if (sum.dim(deg) != a.space().dim(deg)) {
                rep.fail("span_failure_" + name);
                rep.witnesses["degree"] = deg;
                return rep;
            }
        }
        if (inter.total_dim() != 0) {
            rep.fail("directness_failure_" + name);
            return rep;
        }
    }
    Json dims;
    dims["cycles"] = c.dims().to_string();
    dims["cycles_times_y"] = cy.dims().to_string();
    dims["y_times_cycles"] = yc.dims().to_string();
    rep.certificates["decomposition"] = dims;
    rep.verdict = "decomposition_verified";
    return rep;
}

SkewPresentationResult skew_presentation(const DGAlgebra& a, const Vec& y)
{
    if (a.differentiate(y) != a.unit())
        throw std::invalid_argument("skew_presentation: y is not an acyclicity witness");
    auto ydeg = a.homogeneous_degree(y);
    if (!ydeg || *ydeg != -1)
        throw std::invalid_argument("skew_presentation: witness must be homogeneous of degree -1");
    const Field& f = a.field();
    SkewPresentationResult out;
    out.y = y;
    out.cycles = cycles_algebra(a);
    const Subalgebra& c = out.cycles;
    const std::size_t m = c.algebra.dim();

    auto cycle_coords = [&](const Vec& host_vec) -> Vec {
        Vec coords = zero_vec(f, m);
        for (const auto& [deg, comp] : a.decompose(host_vec)) {
            auto cc = coordinates_in_rows(c.span.basis(deg), comp);
            if (!cc)
                throw std::logic_error("skew_presentation: expected a cycle");
            std::size_t base = 0;
            for (std::size_t i = 0; i < m; ++i)
                if (c.algebra.degree_of(i) == deg)
                    coords[i] = (*cc)[base++];
        }
        return coords;
    };

    // D(a) = -(-1)^{|a|} d(y a y) on the cycles basis (lands in cycles: an image of d)
    for (std::size_t i = 0; i < m; ++i) {
        const Vec& ci = c.basis_global[i];
        Vec dyay = a.differentiate(a.multiply(a.multiply(y, ci), y));
        Scalar sign = c.algebra.degree_of(i) % 2 == 0 ? -Scalar::one(f) : Scalar::one(f);
        out.derivation.push_back(cycle_coords(scale_vec(sign, dyay)));
    }
    const Vec ysq = cycle_coords(a.multiply(y, y)); // y^2 is a cycle

    // presentation basis: cycles c_i, then c_i X (degree |c_i| - 1)
    std::vector<BasisVector> basis;
    for (std::size_t i = 0; i < m; ++i)
        basis.push_back({"a" + std::to_string(i), c.algebra.degree_of(i)});
    for (std::size_t i = 0; i < m; ++i)
        basis.push_back({"a" + std::to_string(i) + "X", c.algebra.degree_of(i) - 1});
    const std::size_t n = 2 * m;

    auto embed = [&](const Vec& plain, const Vec& xpart) {
        Vec v = zero_vec(f, n);
        for (std::size_t i = 0; i < m; ++i) {
            v[i] = plain[i];
            v[m + i] = xpart[i];
        }
        return v;
    };
    auto cyc_mul = [&](const Vec& u, const Vec& v) { return c.algebra.multiply(u, v); };
    auto apply_D = [&](const Vec& u) {
        Vec r = zero_vec(f, m);
        for (std::size_t i = 0; i < m; ++i)
            if (!u[i].is_zero())
                r = add_vec(r, scale_vec(u[i], out.derivation[i]));
        return r;
    };

    std::vector<std::vector<Vec>> mul(n, std::vector<Vec>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const bool ix = i >= m, jx = j >= m;
            const std::size_t bi = ix ? i - m : i;
            const std::size_t bj = jx ? j - m : j;
            Vec ci = c.algebra.basis_element(bi);
            Vec cj = c.algebra.basis_element(bj);
            const int degj = c.algebra.degree_of(bj);
            const Scalar sgn = degj % 2 == 0 ? Scalar::one(f) : -Scalar::one(f);
            if (!ix && !jx) {
                mul[i][j] = embed(cyc_mul(ci, cj), zero_vec(f, m));
            } else if (!ix && jx) {
                mul[i][j] = embed(zero_vec(f, m), cyc_mul(ci, cj));
            } else if (ix && !jx) {
                // (a X)(b) = (-1)^{|b|} (a b) X + a D(b)
                mul[i][j] = embed(cyc_mul(ci, apply_D(cj)), scale_vec(sgn, cyc_mul(ci, cj)));
            } else {
                // (a X)(b X) = (-1)^{|b|} (a b) y^2 + (a D(b)) X
                mul[i][j] = embed(scale_vec(sgn, cyc_mul(cyc_mul(ci, cj), ysq)),
                                  cyc_mul(ci, apply_D(cj)));
            }
        }
    std::vector<Vec> diff(n, zero_vec(f, n));
    for (std::size_t i = 0; i < m; ++i) {
        // d(a X) = (-1)^{|a|} a
        const Scalar sgn =
            c.algebra.degree_of(i) % 2 == 0 ? Scalar::one(f) : -Scalar::one(f);
        Vec v = zero_vec(f, n);
        v[i] = sgn;
        diff[m + i] = v;
    }
    Vec unit = embed(c.algebra.unit(), zero_vec(f, m));
    out.presentation = DGAlgebra(f, basis, unit, mul, diff,
                                 "skew(" + (a.label().empty() ? "A" : a.label()) + ")");

    // Phi: a_i -> c_i, a_i X -> c_i y
    for (std::size_t i = 0; i < m; ++i)
        out.phi_images.push_back(c.basis_global[i]);
    for (std::size_t i = 0; i < m; ++i)
        out.phi_images.push_back(a.multiply(c.basis_global[i], y));

    out.verification = Report("skew_presentation");
    out.verification.inputs["algebra"] = a.label();
    Report pv = validate_dga(out.presentation);
    if (pv.verdict != "valid")
        throw std::logic_error("skew_presentation: presentation fails the dg-algebra axioms");
    if (!is_dg_isomorphism(out.presentation, a, out.phi_images))
        throw std::logic_error("skew_presentation: Phi is not a dg-isomorphism");
    out.verification.verdict = "isomorphism_verified";
    out.verification.note("ker(d)[X;D]/(X^2 - y^2) ~ A via Phi(X) = y");
    return out;
}

GrDivisionVerdict is_gr_division(const DGAlgebra& g, std::uint64_t budget)
{
    if (!differential_is_zero(g))
        throw std::invalid_argument("is_gr_division: input must carry the zero differential");
    GrDivisionVerdict out;
    if (g.dim() == 0) {
        out.division = false;
        out.method = "empty";
        return out;
    }
    const Field& f = g.field();

    if (f.is_prime_field()) {
        out.method = "enumeration";
        std::uint64_t used = 0;
        for (int deg : g.space().support()) {
            bool done = false;
            for_each_projective_rep(f, g.space().dim(deg), [&](const Vec& rep) {
                if (++used > budget)
                    throw BudgetExceeded("is_gr_division: budget exhausted");
                if (!is_invertible(g, g.embed_component(deg, rep), deg)) {
                    out.division = false;
                    out.witness_degree = deg;
                    out.witness_component = rep;
                    done = true;
                    return false;
                }
                return true;
            });
            if (done)
                return out;
        }
        out.division = true;
        return out;
    }

    // rationals from here on
    if (g.dim() == 1) {
        out.division = true;
        out.method = "dimension_one";
        return out;
    }
    const auto sup = g.space().support();
    if (sup.size() != 1 || sup[0] != 0) {
        // a finite-dimensional graded algebra with support off degree 0 has
        // nilpotent homogeneous elements
        int wd = 0;
        for (int d : sup)
            if (d != 0) {
                wd = d;
                break;
            }
        out.division = false;
        out.method = "nonzero_degree_nilpotent";
        out.witness_degree = wd;
        out.witness_component = zero_vec(f, g.space().dim(wd));
        out.witness_component[0] = Scalar::one(f);
        if (is_invertible(g, g.embed_component(wd, out.witness_component), wd))
            throw std::logic_error("is_gr_division: nilpotent element with an inverse");
        return out;
    }
    if (!is_plain_commutative(g))
        throw std::invalid_argument(
            "is_gr_division over Q: noncommutative degree-0 algebras are outside the supported "
            "shapes; use verify_gr_inverse_certificate");

    // minimal-polynomial route: find a primitive element or a zero divisor
    out.method = "minimal_polynomial";
    const int n = static_cast<int>(g.dim());
    std::vector<Vec> candidates;
    for (std::size_t i = 0; i < g.dim(); ++i)
        candidates.push_back(g.basis_element(i));
    for (long long cc = 1; cc <= 2 * n * n * n + 1; ++cc) {
        Vec v = g.zero();
        Scalar power = Scalar::one(f);
        const Scalar cs = Scalar::from_int(f, cc);
        for (std::size_t i = 0; i < g.dim(); ++i) {
            v = add_vec(v, scale_vec(power, g.basis_element(i)));
            power *= cs;
        }
        candidates.push_back(v);
    }
    for (const Vec& u : candidates) {
        Poly mp = minimal_polynomial(g, u);
        if (poly_deg(mp) < 1)
            continue;
        FactorResult fr = factor_polynomial(f, mp);
        if (!fr.irreducible) {
            // u(theta) v(theta) = 0 with both nonzero: a zero divisor
            Vec w = g.zero();
            Vec pw = g.unit();
            for (std::size_t i = 0; i < fr.factor.size(); ++i) {
                w = add_vec(w, scale_vec(fr.factor[i], pw));
                pw = g.multiply(pw, u);
            }
            if (is_zero_vec(w))
                throw std::logic_error("is_gr_division: zero factor evaluation");
            out.division = false;
            out.witness_degree = 0;
            out.witness_component = g.component(w, 0);
            out.detail = "zero divisor from a reducible minimal polynomial";
            return out;
        }
        if (poly_deg(mp) == n) {
            out.division = true;
            out.detail = "monogenic with irreducible minimal polynomial";
            return out;
        }
    }
    throw std::invalid_argument("is_gr_division over Q: no primitive element found among the "
                                "sampled candidates; unsupported instance");
}

Report verify_gr_inverse_certificate(const DGAlgebra& g, const std::vector<Vec>& elements,
                                     const std::vector<Vec>& inverses)
{
    Report rep("verify_gr_inverse_certificate");
    if (elements.size() != inverses.size()) {
        rep.fail("length_mismatch");
        return rep;
    }
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (g.multiply(elements[i], inverses[i]) != g.unit() ||
            g.multiply(inverses[i], elements[i]) != g.unit()) {
            rep.fail("not_an_inverse");
            rep.witnesses["index"] = i;
            return rep;
        }
    }
    rep.verdict = "certificate_verified";
    return rep;
}

RegularityVerdict regularity_condition(const DGAlgebra& g)
{
    RegularityVerdict out;
    out.status = RegularityStatus::holds_finite_dimensional;
    out.justification = "finite-dimensional over a field: one-sided regular homogeneous elements "
                        "act bijectively, hence are regular on both sides";
    if (is_graded_commutative(g))
        out.justification += "; also graded-commutative";
    return out;
}

RegularityVerdict regularity_condition(const TwistedLaurentDGA& l)
{
    RegularityVerdict out;
    // commutative when R0 is commutative and sigma = id
    const bool sigma_id = l.sigma() == Matrix::identity(l.field(), l.r0().dim());
    if (sigma_id && is_plain_commutative(l.r0())) {
        out.status = RegularityStatus::holds_graded_commutative;
        out.justification = "commutative Laurent ring (R0 commutative, sigma = id)";
        return out;
    }
    // structural: R0 a division algebra makes every nonzero homogeneous r X^k
    // regular on both sides
    try {
        GrDivisionVerdict r0d = is_gr_division(l.r0());
        if (r0d.division) {
            out.status = RegularityStatus::holds_structural_laurent;
            out.justification = "R0 is a division algebra and sigma is invertible: all nonzero "
                                "homogeneous elements are two-sided regular";
            return out;
        }
    } catch (const std::invalid_argument&) {
        // fall through to undecided
    }
    out.status = RegularityStatus::undecided;
    out.justification = "no supported route";
    return out;
}

DgDivisionVerdict is_dg_division(const DGAlgebra& a, std::uint64_t budget)
{
    DgDivisionVerdict out;
    out.report = Report("is_dg_division");
    out.report.inputs["algebra"] = a.label();
    Subalgebra cyc = cycles_algebra(a);
    out.regularity = regularity_condition(cyc.algebra);
    if (!out.regularity.holds())
        throw std::invalid_argument("is_dg_division: regularity condition undecided");
    out.report.certificates["regularity"] = out.regularity.justification;

    out.cycles_verdict = is_gr_division(cyc.algebra, budget);
    Json theorem_cert;
    theorem_cert["method"] = out.cycles_verdict.method;
    theorem_cert["cycles_gr_division"] = out.cycles_verdict.division;
    if (!out.cycles_verdict.division && !out.cycles_verdict.witness_component.empty()) {
        Json wit = Json::array();
        for (const auto& s : out.cycles_verdict.witness_component)
            wit.push_back(s.to_string());
        theorem_cert["witness_degree"] = out.cycles_verdict.witness_degree;
        theorem_cert["witness"] = wit;
    }
    out.report.certificates["cycles_criterion"] = theorem_cert;

    if (a.field().is_prime_field()) {
        OneSidedVerdict left = only_trivial_dg_ideals(a, Side::left, budget);
        OneSidedVerdict right = only_trivial_dg_ideals(a, Side::right, budget);
        out.direct_path_ran = true;
        out.direct_path_result = left.trivial_only && right.trivial_only;
        Json direct;
        direct["left_ideals_trivial"] = left.trivial_only;
        direct["right_ideals_trivial"] = right.trivial_only;
        out.report.certificates["ideal_enumeration"] = direct;
        if (out.direct_path_result != out.cycles_verdict.division)
            throw TheoremViolation(
                "is_dg_division: the ideal-enumeration and cycles-criterion paths disagree");
    } else {
        out.report.note("over Q: theorem path only (ideal enumeration needs a prime field)");
    }
    out.division = out.cycles_verdict.division;
    out.report.verdict = out.division ? "dg_division" : "not_dg_division";
    return out;
}

DgDivisionVerdict is_dg_division(const TwistedLaurentDGA& l, std::uint64_t budget)
{
    DgDivisionVerdict out;
    out.report = Report("is_dg_division");
    out.report.inputs["laurent"] = l.label();
    out.regularity = regularity_condition(l);
    if (!out.regularity.holds())
        throw std::invalid_argument("is_dg_division: regularity condition undecided for this "
                                    "twisted Laurent ring");
    out.report.certificates["regularity"] = out.regularity.justification;

    out.cycles_verdict.method = "laurent_structural";
    if (l.differential_is_zero()) {
        GrDivisionVerdict r0d = is_gr_division(l.r0(), budget);
        out.cycles_verdict.division = r0d.division;
        if (!r0d.division) {
            out.cycles_verdict.witness_degree = 0;
            out.cycles_verdict.witness_component = r0d.witness_component;
        }
        out.report.note("d = 0: cycles are the whole ring R0[X,X^-1;sigma]; gr-division iff R0 "
                        "is a division algebra");
    } else {
        if (l.r0().dim() != 1)
            throw std::invalid_argument("is_dg_division: nonzero differential supported only for "
                                        "R0 = K");
        // cycles pattern has period two: d(X^2) = 0 makes d(X^{k+2}) = X^2 d(X^k)
        if (!l.differentiate(l.x_power(2)).is_zero() || !l.differentiate(l.one()).is_zero())
            throw std::logic_error("is_dg_division: unexpected cycle pattern");
        const bool x_cycle = l.differentiate(l.x_power(1)).is_zero();
        if (x_cycle)
            throw std::logic_error("is_dg_division: d(X) = 0 with nonzero differential data");
        out.cycles_verdict.division = true;
        out.report.note("cycles = K[X^2, X^-2], a commutative Laurent ring over the base field");
    }
    out.division = out.cycles_verdict.division;
    Json theorem_cert;
    theorem_cert["method"] = out.cycles_verdict.method;
    theorem_cert["cycles_gr_division"] = out.cycles_verdict.division;
    out.report.certificates["cycles_criterion"] = theorem_cert;
    out.report.verdict = out.division ? "dg_division" : "not_dg_division";
    return out;
}

DivisionClassification classify_dg_division(const DGAlgebra& a, std::uint64_t budget)
{
    DgDivisionVerdict dv = is_dg_division(a, budget);
    if (!dv.division)
        throw std::invalid_argument("classify_dg_division: input is not a dg-division algebra");
    DivisionClassification out;
    out.report = Report("classify_dg_division");
    out.report.inputs["algebra"] = a.label();
    if (differential_is_zero(a)) {
        out.differential_case = DivisionClassification::Case::zero_differential;
    } else {
        AcyclicityVerdict av = is_acyclic(a);
        if (!av.acyclic)
            throw TheoremViolation("classify_dg_division: neither d = 0 nor acyclic");
        out.differential_case = DivisionClassification::Case::acyclic;
        out.witness_y = av.witness_y;
    }
    // finite-dimensional gr-division cycles are concentrated in degree 0
    Subalgebra cyc = cycles_algebra(a);
    const auto sup = cyc.algebra.space().support();
    if (sup.size() != 1 || sup[0] != 0)
        throw TheoremViolation("classify_dg_division: finite-dimensional cycles with support "
                               "outside degree 0");
    out.cycles_shape = DivisionClassification::Shape::degree_zero_division;
    out.report.verdict = out.differential_case == DivisionClassification::Case::zero_differential
                             ? "zero_differential"
                             : "acyclic";
    out.report.certificates["cycles_shape"] = "degree_zero_division";
    return out;
}

DivisionClassification classify_dg_division(const TwistedLaurentDGA& l, std::uint64_t budget)
{
    DgDivisionVerdict dv = is_dg_division(l, budget);
    if (!dv.division)
        throw std::invalid_argument("classify_dg_division: input is not a dg-division algebra");
    DivisionClassification out;
    out.report = Report("classify_dg_division");
    out.report.inputs["laurent"] = l.label();
    const int g = l.gen_degree();
    if (l.differential_is_zero()) {
        out.differential_case = DivisionClassification::Case::zero_differential;
        out.cycles_shape = DivisionClassification::Shape::twisted_laurent;
        out.generator_power = g > 0 ? 1 : -1;
        out.generator_degree = g > 0 ? g : -g;
        const Matrix id = Matrix::identity(l.field(), l.r0().dim());
        out.sigma_is_identity = l.sigma() == id;
        out.report.verdict = "zero_differential";
    } else {
        AcyclicityVerdict av = is_acyclic(l);
        if (!av.acyclic)
            throw TheoremViolation("classify_dg_division: neither d = 0 nor acyclic");
        out.differential_case = DivisionClassification::Case::acyclic;
        out.cycles_shape = DivisionClassification::Shape::twisted_laurent;
        out.generator_power = g > 0 ? 2 : -2;
        out.generator_degree = 2 * (g > 0 ? g : -g);
        out.sigma_is_identity = true; // R0 = K
        out.report.verdict = "acyclic";
    }
    // verify the generator: invertible cycle with T r = sigma'(r) T
    const LaurentElement t = l.x_power(out.generator_power);
    if (!l.differentiate(t).is_zero())
        throw TheoremViolation("classify_dg_division: chosen generator is not a cycle");
    if (l.multiply(t, l.x_power(-out.generator_power)) != l.one())
        throw std::logic_error("classify_dg_division: generator is not invertible");
    for (std::size_t i = 0; i < l.r0().dim(); ++i) {
        const Vec r = l.r0().basis_element(i);
        LaurentElement lhs = l.multiply(t, l.from_r0(r));
        LaurentElement rhs =
            l.multiply(l.from_r0(l.sigma_power_apply(out.generator_power, r)), t);
        if (lhs != rhs)
            throw std::logic_error("classify_dg_division: twist relation fails for the generator");
    }
    out.report.certificates["cycles_shape"] = "twisted_laurent";
    out.report.certificates["generator_power"] = out.generator_power;
    out.report.certificates["generator_degree"] = out.generator_degree;
    out.report.certificates["sigma_identity"] = out.sigma_is_identity;
    return out;
}

Report homology_of_division(const DGAlgebra& a, std::uint64_t budget)
{
    DivisionClassification c = classify_dg_division(a, budget);
    Report rep("homology_of_division");
    rep.inputs["algebra"] = a.label();
    if (c.differential_case == DivisionClassification::Case::acyclic) {
        HomologyAlgebra h = homology_algebra(a);
        if (h.algebra.dim() != 0)
            throw TheoremViolation("homology_of_division: acyclic algebra with nonzero homology");
        rep.verdict = "homology_zero";
    } else {
        KernelImage ki = kernel_and_image(a.differential_map());
        if (ki.kernel.total_dim() != static_cast<int>(a.dim()))
            throw TheoremViolation("homology_of_division: d = 0 but ker(d) != A");
        GrDivisionVerdict gr = is_gr_division(a, budget);
        if (!gr.division)
            throw TheoremViolation("homology_of_division: H = A is not gr-division");
        rep.verdict = "homology_is_whole_algebra_gr_division";
    }
    return rep;
}

Report homology_of_division(const TwistedLaurentDGA& l, std::uint64_t budget)
{
    DivisionClassification c = classify_dg_division(l, budget);
    Report rep("homology_of_division");
    rep.inputs["laurent"] = l.label();
    if (c.differential_case == DivisionClassification::Case::acyclic) {
        for (int deg = -4; deg <= 4; ++deg)
            if (l.degree_dim(deg) > 0 && l.homology_dim(deg) != 0)
                throw TheoremViolation("homology_of_division: nonzero homology in the window");
        rep.verdict = "homology_zero";
        rep.note("verified on the window [-4, 4]");
    } else {
        rep.verdict = "homology_is_whole_algebra_gr_division";
        rep.note("d = 0: H = A = R0[X,X^-1;sigma] with R0 a division algebra");
    }
    return rep;
}

Report graded_center_division_check(const DGAlgebra& a, std::uint64_t budget)
{
    Report rep("graded_center_division_check");
    rep.inputs["algebra"] = a.label();

    // the hypothesis: a certified dg-simple algebra
    if (a.field().is_prime_field()) {
        AlgebraSimplicityVerdict sv = is_dg_simple_algebra(a, budget);
        if (!sv.simple)
            throw std::invalid_argument("graded_center_division_check: input is not dg-simple");
        rep.certificates["simplicity"] = "ideal_enumeration";
    } else {
        DgDivisionVerdict dv = is_dg_division(a, budget);
        if (!dv.division)
            throw UnsupportedField("graded_center_division_check over Q: dg-simplicity is only "
                                   "certified through the dg-division route");
        rep.certificates["simplicity"] = "via_dg_division";
    }

    CentralSubalgebra z = graded_center(a);
    if (z.certification.alarm)
        throw TheoremViolation("graded_center_division_check: center certification alarm");
    rep.certificates["center_dims"] = z.sub.algebra.space().to_string();

    DgDivisionVerdict zdiv = is_dg_division(z.sub.algebra, budget);
    if (!zdiv.division)
        throw TheoremViolation("graded_center_division_check: the graded center of a dg-simple "
                               "algebra must be dg-division");
    rep.certificates["center_dg_division"] = true;

    Subalgebra zc = cycles_algebra(z.sub.algebra);
    if (a.field().characteristic() != 2) {
        for (int deg : zc.algebra.space().support())
            if (deg % 2 != 0)
                throw TheoremViolation("graded_center_division_check: center cycles in odd degree "
                                       "over characteristic != 2");
        rep.certificates["center_cycles_even_support"] = true;
    }
    const auto sup = zc.algebra.space().support();
    rep.certificates["center_cycles_shape"] =
        (sup.size() == 1 && sup[0] == 0) ? "degree_zero_field" : "laurent";
    rep.verdict = "center_certified_dg_division";
    return rep;
}

} // namespace dgk
