#include "dgkernel/laurent.hpp"

#include <sstream>

namespace dgk {

LaurentElement LaurentElement::term(int power, Vec r0_coords)
{
    LaurentElement e;
    if (!is_zero_vec(r0_coords))
        e.terms_[power] = std::move(r0_coords);
    return e;
}

Vec LaurentElement::coeff(int power, std::size_t r0_dim, const Field& f) const
{
    auto it = terms_.find(power);
    return it == terms_.end() ? zero_vec(f, r0_dim) : it->second;
}

void LaurentElement::prune()
{
    for (auto it = terms_.begin(); it != terms_.end();)
        it = is_zero_vec(it->second) ? terms_.erase(it) : std::next(it);
}

LaurentElement LaurentElement::operator+(const LaurentElement& o) const
{
    LaurentElement r = *this;
    for (const auto& [k, v] : o.terms_) {
        auto it = r.terms_.find(k);
        if (it == r.terms_.end())
            r.terms_[k] = v;
        else
            it->second = add_vec(it->second, v);
    }
    r.prune();
    return r;
}

LaurentElement LaurentElement::operator-(const LaurentElement& o) const
{
    LaurentElement r = *this;
    for (const auto& [k, v] : o.terms_) {
        auto it = r.terms_.find(k);
        if (it == r.terms_.end())
            r.terms_[k] = scale_vec(-Scalar::one(v[0].field()), v);
        else
            it->second = sub_vec(it->second, v);
    }
    r.prune();
    return r;
}

LaurentElement LaurentElement::scaled(const Scalar& c) const
{
    LaurentElement r;
    for (const auto& [k, v] : terms_)
        r.terms_[k] = scale_vec(c, v);
    r.prune();
    return r;
}

TwistedLaurentDGA::TwistedLaurentDGA(DGAlgebra r0, Matrix sigma, int gen_degree, LaurentElement dx,
                                     std::vector<LaurentElement> dr0, std::string label)
    : r0_(std::move(r0)), sigma_(std::move(sigma)), gen_degree_(gen_degree), dx_(std::move(dx)),
      dr0_(std::move(dr0)), label_(std::move(label))
{
    if (gen_degree_ == 0)
        throw std::invalid_argument("TwistedLaurentDGA: deg X must be nonzero");
    for (int d : r0_.space().support())
        if (d != 0)
            throw std::invalid_argument("TwistedLaurentDGA: R0 must be concentrated in degree 0");
    for (std::size_t i = 0; i < r0_.dim(); ++i)
        if (!is_zero_vec(r0_.diff_entry(i)))
            throw std::invalid_argument("TwistedLaurentDGA: R0 must carry the zero differential");
    if (sigma_.rows() != r0_.dim() || sigma_.cols() != r0_.dim())
        throw std::invalid_argument("TwistedLaurentDGA: sigma shape mismatch");
    // invert sigma
    Matrix aug = sigma_.hstack(Matrix::identity(field(), r0_.dim()));
    RrefResult rr = rref(aug);
    if (rr.rank != r0_.dim())
        throw std::invalid_argument("TwistedLaurentDGA: sigma is not invertible");
    sigma_inv_ = rr.rref.submatrix(0, r0_.dim(), r0_.dim(), r0_.dim());
    if (dr0_.empty())
        dr0_.assign(r0_.dim(), LaurentElement());
    if (dr0_.size() != r0_.dim())
        throw std::invalid_argument("TwistedLaurentDGA: d|R0 table size mismatch");
    // degree constraints on the generating differentials
    for (const auto& [k, v] : dx_.terms())
        if (k * gen_degree_ != gen_degree_ + 1)
            throw std::invalid_argument("TwistedLaurentDGA: d(X) must be homogeneous of degree deg X + 1");
    for (const auto& e : dr0_)
        for (const auto& [k, v] : e.terms())
            if (k * gen_degree_ != 1)
                throw std::invalid_argument("TwistedLaurentDGA: d|R0 must land in degree 1");
}

bool TwistedLaurentDGA::differential_is_zero() const
{
    if (!dx_.is_zero())
        return false;
    for (const auto& e : dr0_)
        if (!e.is_zero())
            return false;
    return true;
}

LaurentElement TwistedLaurentDGA::one() const
{
    return LaurentElement::term(0, r0_.unit());
}

LaurentElement TwistedLaurentDGA::x_power(int k) const
{
    return LaurentElement::term(k, r0_.unit());
}

LaurentElement TwistedLaurentDGA::from_r0(const Vec& coords) const
{
    return LaurentElement::term(0, coords);
}

Vec TwistedLaurentDGA::sigma_power_apply(int a, const Vec& coords) const
{
    Vec r = coords;
    const Matrix& m = a >= 0 ? sigma_ : sigma_inv_;
    for (int i = 0; i < (a >= 0 ? a : -a); ++i)
        r = m.apply(r);
    return r;
}

LaurentElement TwistedLaurentDGA::multiply(const LaurentElement& a, const LaurentElement& b) const
{
    // (r X^p)(s X^q) = r sigma^p(s) X^{p+q}
    LaurentElement out;
    for (const auto& [p, r] : a.terms())
        for (const auto& [q, s] : b.terms()) {
            Vec coeff = r0_.multiply(r, sigma_power_apply(p, s));
            out = out + LaurentElement::term(p + q, std::move(coeff));
        }
    return out;
}

const LaurentElement& TwistedLaurentDGA::d_of_power(int k) const
{
    auto it = dpow_cache_.find(k);
    if (it != dpow_cache_.end())
        return it->second;
    LaurentElement result;
    const Scalar sign_g =
        gen_degree_ % 2 == 0 ? Scalar::one(field()) : -Scalar::one(field());
    if (k == 0) {
        result = LaurentElement();
    } else if (k > 0) {
        // d(X^k) = d(X) X^{k-1} + (-1)^g X d(X^{k-1})
        result = multiply(dx_, x_power(k - 1)) +
                 multiply(x_power(1), d_of_power(k - 1)).scaled(sign_g);
    } else if (k == -1) {
        // 0 = d(X X^{-1}) forces d(X^{-1}) = -(-1)^g X^{-1} d(X) X^{-1}
        result = multiply(multiply(x_power(-1), dx_), x_power(-1)).scaled(-sign_g);
    } else {
        // d(X^k) = d(X^{-1}) X^{k+1} + (-1)^g X^{-1} d(X^{k+1})
        result = multiply(d_of_power(-1), x_power(k + 1)) +
                 multiply(x_power(-1), d_of_power(k + 1)).scaled(sign_g);
    }
    return dpow_cache_.emplace(k, std::move(result)).first->second;
}

LaurentElement TwistedLaurentDGA::differentiate(const LaurentElement& a) const
{
    LaurentElement out;
    for (const auto& [k, r] : a.terms()) {
        // d(r X^k) = d(r) X^k + r d(X^k); |r| = 0
        LaurentElement dr;
        for (std::size_t i = 0; i < r0_.dim(); ++i)
            if (!r[i].is_zero())
                dr = dr + dr0_[i].scaled(r[i]);
        out = out + multiply(dr, x_power(k));
        out = out + multiply(from_r0(r), d_of_power(k));
    }
    return out;
}

std::optional<int> TwistedLaurentDGA::degree_of(const LaurentElement& a) const
{
    std::optional<int> deg;
    for (const auto& [k, v] : a.terms()) {
        const int d = k * gen_degree_;
        if (deg && *deg != d)
            return std::nullopt;
        deg = d;
    }
    return deg;
}

int TwistedLaurentDGA::degree_dim(int degree) const
{
    if (degree % gen_degree_ != 0)
        return 0;
    return static_cast<int>(r0_.dim());
}

std::vector<LaurentElement> TwistedLaurentDGA::degree_basis(int degree) const
{
    std::vector<LaurentElement> out;
    if (degree % gen_degree_ != 0)
        return out;
    const int k = degree / gen_degree_;
    for (std::size_t i = 0; i < r0_.dim(); ++i)
        out.push_back(LaurentElement::term(k, r0_.basis_element(i)));
    return out;
}

std::optional<Vec> TwistedLaurentDGA::degree_coords(const LaurentElement& a, int degree) const
{
    Vec coords = zero_vec(field(), degree_dim(degree));
    for (const auto& [k, v] : a.terms()) {
        if (k * gen_degree_ != degree)
            return std::nullopt;
        coords = v;
    }
    return coords;
}

Matrix TwistedLaurentDGA::degree_block_of_d(int degree) const
{
    const int n = degree_dim(degree);
    const int m = degree_dim(degree + 1);
    Matrix block(field(), m, n);
    if (n == 0 || m == 0)
        return block;
    const int k = degree / gen_degree_;
    for (int c = 0; c < n; ++c) {
        LaurentElement d = differentiate(LaurentElement::term(k, r0_.basis_element(c)));
        auto coords = degree_coords(d, degree + 1);
        if (!coords)
            throw std::logic_error("TwistedLaurentDGA: differential is not homogeneous of degree +1");
        for (int r = 0; r < m; ++r)
            block.at(r, c) = (*coords)[r];
    }
    return block;
}

std::optional<LaurentElement> TwistedLaurentDGA::solve_d_equals(const LaurentElement& target,
                                                                int target_degree) const
{
    const int src_deg = target_degree - 1;
    const int n = degree_dim(src_deg);
    Vec t = zero_vec(field(), degree_dim(target_degree));
    if (!target.is_zero()) {
        auto coords = degree_coords(target, target_degree);
        if (!coords)
            throw std::invalid_argument("solve_d_equals: target not homogeneous of the stated degree");
        t = *coords;
    }
    if (n == 0)
        return is_zero_vec(t) ? std::optional<LaurentElement>(LaurentElement()) : std::nullopt;
    auto s = solve(degree_block_of_d(src_deg), t);
    if (!s)
        return std::nullopt;
    const int k = src_deg / gen_degree_;
    LaurentElement y = LaurentElement::term(k, s->particular);
    if (differentiate(y) != target && !(target.is_zero() && differentiate(y).is_zero()))
        throw std::logic_error("solve_d_equals: verification failed");
    return y;
}

int TwistedLaurentDGA::cycles_dim(int degree) const
{
    const Matrix b = degree_block_of_d(degree);
    if (b.cols() == 0)
        return 0;
    return static_cast<int>(b.cols() - rank(b));
}

int TwistedLaurentDGA::boundaries_dim(int degree) const
{
    return static_cast<int>(rank(degree_block_of_d(degree - 1)));
}

int TwistedLaurentDGA::homology_dim(int degree) const
{
    return cycles_dim(degree) - boundaries_dim(degree);
}

std::vector<LaurentElement> TwistedLaurentDGA::cycles_basis(int degree) const
{
    std::vector<LaurentElement> out;
    if (degree_dim(degree) == 0)
        return out;
    const int k = degree / gen_degree_;
    for (const Vec& v : nullspace(degree_block_of_d(degree)))
        out.push_back(LaurentElement::term(k, v));
    return out;
}

std::string TwistedLaurentDGA::element_to_string(const LaurentElement& a) const
{
    if (a.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : a.terms()) {
        os << (first ? "" : " + ") << "(" << r0_.element_to_string(v) << ")*X^" << k;
        first = false;
    }
    return os.str();
}

LaurentElement LaurentWindow::element_of(std::size_t index) const
{
    const Entry& e = entries.at(index);
    return LaurentElement::term(e.power, ring.r0().basis_element(e.r0_index));
}

std::optional<std::size_t> LaurentWindow::index_of_name(const std::string& name) const
{
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (entries[i].name == name)
            return i;
    return std::nullopt;
}

LaurentWindow laurent_window(const TwistedLaurentDGA& ring, int lo, int hi)
{
    if (hi - lo < 2)
        throw std::invalid_argument("laurent_window: window too small (need hi - lo >= 2)");
    LaurentWindow w;
    w.ring = ring;
    w.lo = lo;
    w.hi = hi;
    std::map<int, int> dims;
    for (int deg = lo; deg <= hi; ++deg) {
        if (deg % ring.gen_degree() != 0)
            continue;
        const int k = deg / ring.gen_degree();
        for (std::size_t i = 0; i < ring.r0().dim(); ++i) {
            std::string nm = ring.r0().basis()[i].name + "*X^" + std::to_string(k);
            w.entries.push_back({k, i, deg, nm});
            ++dims[deg];
        }
    }
    w.space = GradedSpace(dims);
    return w;
}

Report LaurentWindow::validate() const
{
    Report rep("validate_laurent_window");
    rep.inputs["laurent"] = ring.label();
    rep.inputs["window"] = std::to_string(lo) + ".." + std::to_string(hi);
    Json failures = Json::array();
    auto record = [&](const std::string& axiom, const Json& witness) {
        failures.push_back(Json{{"axiom", axiom}, {"witness", witness}});
    };

    // sigma is a unital algebra automorphism
    const DGAlgebra& r0 = ring.r0();
    if (ring.sigma().apply(r0.unit()) != r0.unit())
        record("sigma_unital", Json::object());
    for (std::size_t i = 0; i < r0.dim(); ++i)
        for (std::size_t j = 0; j < r0.dim(); ++j) {
            Vec lhs = ring.sigma().apply(r0.mul_entry(i, j));
            Vec rhs = r0.multiply(ring.sigma().apply(r0.basis_element(i)),
                                  ring.sigma().apply(r0.basis_element(j)));
            if (lhs != rhs)
                record("sigma_multiplicative", Json{{"i", i}, {"j", j}});
        }

    // unit axioms on window basis elements
    const LaurentElement one = ring.one();
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const LaurentElement e = element_of(i);
        if (ring.multiply(one, e) != e || ring.multiply(e, one) != e)
            record("unit", Json{{"i", i}});
    }

    // X r = sigma(r) X on the R0 basis
    for (std::size_t i = 0; i < r0.dim(); ++i) {
        LaurentElement lhs = ring.multiply(ring.x_power(1), ring.from_r0(r0.basis_element(i)));
        LaurentElement rhs = ring.multiply(
            ring.from_r0(ring.sigma().apply(r0.basis_element(i))), ring.x_power(1));
        if (lhs != rhs)
            record("twist_relation", Json{{"i", i}});
    }

    // associativity on window triples (symbolic products, never truncated)
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (std::size_t j = 0; j < entries.size(); ++j)
            for (std::size_t k = 0; k < entries.size(); ++k) {
                LaurentElement lhs =
                    ring.multiply(ring.multiply(element_of(i), element_of(j)), element_of(k));
                LaurentElement rhs =
                    ring.multiply(element_of(i), ring.multiply(element_of(j), element_of(k)));
                if (lhs != rhs) {
                    record("associativity", Json{{"i", i}, {"j", j}, {"k", k}});
                    goto assoc_done;
                }
            }
assoc_done:;

    // d raises degree by one, d^2 = 0, Leibniz on window pairs
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const LaurentElement e = element_of(i);
        const LaurentElement de = ring.differentiate(e);
        if (!de.is_zero()) {
            auto deg = ring.degree_of(de);
            if (!deg || *deg != entries[i].degree + 1)
                record("diff_shift_plus_one", Json{{"i", i}});
        }
        if (!ring.differentiate(de).is_zero())
            record("diff_squared_zero", Json{{"i", i}});
    }
    if (!ring.differentiate(ring.one()).is_zero())
        record("diff_of_unit", Json::object());
    const Scalar minus_one = -Scalar::one(ring.field());
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (std::size_t j = 0; j < entries.size(); ++j) {
            const LaurentElement a = element_of(i), b = element_of(j);
            LaurentElement lhs = ring.differentiate(ring.multiply(a, b));
            LaurentElement rhs = ring.multiply(ring.differentiate(a), b);
            LaurentElement second = ring.multiply(a, ring.differentiate(b));
            if (entries[i].degree % 2 != 0)
                second = second.scaled(minus_one);
            rhs = rhs + second;
            if (lhs != rhs)
                record("leibniz", Json{{"i", i}, {"j", j}});
        }

    rep.certificates["failures"] = failures;
    rep.verdict = failures.empty() ? "valid" : "invalid";
    rep.note("axioms sampled on the window basis; products computed symbolically");
    return rep;
}

Json LaurentWindow::graded_summary() const
{
    Json per_degree = Json::array();
    for (int deg = lo; deg <= hi; ++deg) {
        if (ring.degree_dim(deg) == 0)
            continue;
        Json d;
        d["degree"] = deg;
        d["dim"] = ring.degree_dim(deg);
        d["cycles"] = ring.cycles_dim(deg);
        d["boundaries"] = ring.boundaries_dim(deg);
        d["homology"] = ring.homology_dim(deg);
        d["trusted"] = degree_trusted(deg);
        per_degree.push_back(d);
    }
    return per_degree;
}

} // namespace dgk
